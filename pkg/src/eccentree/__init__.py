"""Exact eccentricity-based invariants, grafting rewrites and extremal searches on trees."""
from .enumeration import canonical_code, count_free_trees, free_trees, is_isomorphic
from .errors import TreeError
from .families import FamilySpec, closed_form
from .formats import from_graph6, read_edgelist, to_graph6, write_edgelist
from .harness import extremal_search, fuzz_transforms, report_emit, verify_theorem
from .invariants import InvariantKind, all_invariants, compute_invariant, ree
from .parameters import ParamClass
from .tree import Tree, diametral_path, eccentricity_profile, validate_tree

__all__ = [
    "FamilySpec",
    "InvariantKind",
    "ParamClass",
    "Tree",
    "TreeError",
    "all_invariants",
    "canonical_code",
    "closed_form",
    "compute_invariant",
    "count_free_trees",
    "diametral_path",
    "eccentricity_profile",
    "extremal_search",
    "free_trees",
    "from_graph6",
    "fuzz_transforms",
    "is_isomorphic",
    "read_edgelist",
    "ree",
    "report_emit",
    "to_graph6",
    "validate_tree",
    "verify_theorem",
    "write_edgelist",
]
