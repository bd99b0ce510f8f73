"""Zeroth-order general Randic index on k-generalized quasi trees."""

from .bounds import Bound, PartitionProblem, TheoremCase, bound_value, f_delta, lemma7_extremal, tree_extremal_classes
from .constructions import FamilySpec, bullet_family, degree23_family, join_family, standard_graph
from .graph import DegreeMultiset, Graph, GraphError, bullet, degree_multiset, join, make_graph
from .graph6 import Graph6Error, decode, encode
from .indices import general_randic_edge, zeroth_order_general_randic
from .kernels import BACKEND
from .quasitree import QuasiClassification, is_member, tree_deletion_number

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Bound",
    "DegreeMultiset",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "GraphError",
    "PartitionProblem",
    "QuasiClassification",
    "TheoremCase",
    "bound_value",
    "bullet",
    "bullet_family",
    "decode",
    "degree23_family",
    "degree_multiset",
    "encode",
    "f_delta",
    "general_randic_edge",
    "is_member",
    "join",
    "join_family",
    "lemma7_extremal",
    "make_graph",
    "standard_graph",
    "tree_deletion_number",
    "tree_extremal_classes",
    "zeroth_order_general_randic",
]
