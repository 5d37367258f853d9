"""Irreducible components of Shi varieties of affine Weyl groups."""
from .components import (ComponentPoset, build_poset, count_oracle, enumerate_admitted_bfs,
                         enumerate_admitted_filter, join, meet)
from .phirep import diamond_action, phi_rep
from .rootsys import RootSystem, build_root_system
from .shi import is_admissible, is_admitted, is_alcove_vector, lambda_extract
from .weyl import AffineElement, affine_generator, from_word, shi_vector

__version__ = "0.1.0"

__all__ = ["ComponentPoset", "build_poset", "count_oracle", "enumerate_admitted_bfs",
           "enumerate_admitted_filter", "join", "meet", "diamond_action", "phi_rep",
           "RootSystem", "build_root_system", "is_admissible", "is_admitted",
           "is_alcove_vector", "lambda_extract", "AffineElement", "affine_generator",
           "from_word", "shi_vector"]
