"""Numerical semigroup tree enumeration via the RGD bit-chain encoding."""

from ._sgtree import (
    boundary_subtree_counts,
    children,
    count_all,
    count_genus,
    list_genus,
    node_info,
    pseudo_grandchildren,
    verify,
)

__all__ = [
    "boundary_subtree_counts",
    "children",
    "count_all",
    "count_genus",
    "list_genus",
    "node_info",
    "pseudo_grandchildren",
    "verify",
]
