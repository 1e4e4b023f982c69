import networkx as nx
import pytest
from hypothesis import given, settings

from eccentree.enumeration import free_trees
from eccentree.errors import HasCycle
from eccentree.formats import (
    FormatError,
    from_graph6,
    read_edgelist,
    read_edgelists,
    read_tree_file,
    to_graph6,
    write_edgelist,
)
from eccentree.tree import path, star

from strategies import prufer_trees


def test_edgelist_roundtrip_and_sorting():
    text = "# a path\n4\n2 3\n0 1\n\n1 2  # middle edge\n"
    t = read_edgelist(text)
    assert t == path(4)
    assert write_edgelist(t) == "4\n0 1\n1 2\n2 3\n"


def test_edgelist_errors():
    with pytest.raises(FormatError):
        read_edgelist("")
    with pytest.raises(FormatError):
        read_edgelist("3\n0 1 2\n1 2\n")
    with pytest.raises(FormatError):
        read_edgelist("three\n")
    with pytest.raises(HasCycle):
        read_edgelist("3\n0 1\n1 2\n2 0\n")


def test_several_edgelists():
    text = write_edgelist(path(3)) + "\n" + write_edgelist(star(4))
    assert list(read_edgelists(text)) == [path(3), star(4)]


def test_graph6_known_strings():
    # reference strings produced by networkx
    assert to_graph6(path(4)) == nx.to_graph6_bytes(nx.path_graph(4), header=False).decode().strip()
    assert from_graph6(">>graph6<<" + to_graph6(star(5))) == star(5)


def test_graph6_matches_networkx_exhaustive():
    for n in range(2, 10):
        for t in free_trees(n):
            g = nx.Graph()
            g.add_nodes_from(range(t.n))
            g.add_edges_from(t.edges())
            assert to_graph6(t) == nx.to_graph6_bytes(g, header=False).decode().strip()


@settings(max_examples=200, deadline=None)
@given(prufer_trees(80))
def test_graph6_roundtrip(t):
    # n up to 80 exercises the long size prefix
    assert from_graph6(to_graph6(t)) == t
    assert read_edgelist(write_edgelist(t)) == t


def test_sniffing():
    assert read_tree_file("5\n0 1\n1 2\n2 3\n3 4\n") == path(5)
    assert read_tree_file(to_graph6(path(5)) + "\n") == path(5)


def test_bad_graph6():
    with pytest.raises(FormatError):
        from_graph6("C")
    with pytest.raises(FormatError):
        from_graph6("C\x01x")
