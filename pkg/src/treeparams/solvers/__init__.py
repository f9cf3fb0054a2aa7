"""Exact solvers for alpha, chi, treewidth and the tree-parameters."""

from .brute import brute_force_tree_parameter, treewidth_elimination_dp
from .measures import MeasureCache
from .separators import PmcCatalog
from .treeparam import (
    ParameterValue,
    chromatic_number,
    max_stable_set,
    tree_alpha,
    tree_chi,
    tree_parameter,
    tree_tw,
    treewidth,
)

__all__ = [
    "ParameterValue",
    "PmcCatalog",
    "MeasureCache",
    "max_stable_set",
    "chromatic_number",
    "treewidth",
    "tree_parameter",
    "tree_alpha",
    "tree_chi",
    "tree_tw",
    "brute_force_tree_parameter",
    "treewidth_elimination_dp",
]
