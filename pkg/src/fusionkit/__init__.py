"""Fusion systems, linking systems, and localities of small permutation groups."""

from .grp import FiniteGroup, GroupHom, Perm, Subgroup, load_group_file

__all__ = [
    "FiniteGroup",
    "GroupHom",
    "Perm",
    "Subgroup",
    "load_group_file",
]
