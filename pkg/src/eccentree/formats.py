"""Text formats for trees: the plain edge list and graph6."""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import HasCycle, TreeError
from .tree import Tree, validate_tree

GRAPH6_HEADER = ">>graph6<<"


class FormatError(TreeError):
    pass


def write_edgelist(t: Tree) -> str:
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(lines) + "\n"


def read_edgelist(text: str) -> Tree:
    """Parse ``n`` followed by one ``u v`` pair per line; ``#`` lines are comments."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise FormatError("empty edge list")
    try:
        n = int(rows[0])
        edges = []
        for row in rows[1:]:
            parts = row.split()
            if len(parts) != 2:
                raise FormatError(f"expected 'u v', got {row!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return validate_tree(n, edges)


def read_edgelists(text: str) -> Iterator[Tree]:
    """Several edge lists separated by blank lines."""
    block: list[str] = []
    for raw in text.splitlines() + [""]:
        if raw.split("#", 1)[0].strip():
            block.append(raw)
        elif block:
            yield read_edgelist("\n".join(block))
            block = []


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if data[1] != 126:
        k, start = 3, 1
    else:
        k, start = 6, 2
    n = 0
    for c in data[start : start + k]:
        n = (n << 6) | (c - 63)
    return n, start + k


def to_graph6(t: Tree) -> str:
    """graph6 string without header: upper triangle in column order, 6 bits per char."""
    n = t.n
    bits = []
    for j in range(1, n):
        adj = t.adjacency[j]
        for i in range(j):
            bits.append(1 if i in adj else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(n) + "".join(body)


def from_graph6(line: str) -> Tree:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise FormatError("empty graph6 string")
    data = s.encode("ascii")
    if any(c < 63 or c > 126 for c in data):
        raise FormatError(f"invalid graph6 character in {line!r}")
    n, pos = _decode_n(data)
    need = n * (n - 1) // 2
    if (len(data) - pos) * 6 < need:
        raise FormatError(f"graph6 body too short for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = data[pos + k // 6] - 63
            if (c >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if n == 0:
        raise HasCycle("graph6 string encodes the empty graph")
    return validate_tree(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Tree]:
    for line in lines:
        if line.strip():
            yield from_graph6(line)


def read_tree_file(text: str) -> Tree:
    """Sniff the format: graph6 if the first meaningful line is not an integer."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.isdigit():
            return read_edgelist(text)
        return from_graph6(line)
    raise FormatError("no tree found in input")
