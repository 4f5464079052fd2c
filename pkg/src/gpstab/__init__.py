"""Generalized Petersen graphs, their canonical double covers, and stability checks."""
from .graphs import GpParams, Graph, ParameterError, double_cover, make_dgp, make_gp
from .perms import Perm, PermGroup
from .search import automorphism_group

__all__ = [
    "GpParams", "Graph", "ParameterError", "double_cover", "make_dgp", "make_gp",
    "Perm", "PermGroup", "automorphism_group",
]
