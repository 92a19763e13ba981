"""q-characters of snake modules, their F-polynomials, and the matching cluster variables."""

from .cartan import CartanData, Vertex, cartan_data, membership
from .characters import (
    check_real,
    denominator,
    f_polynomial,
    g_vector,
    q_character,
    truncated_q_character,
)
from .cluster import c1_quiver, initial_seed, is_factorial_c1, mutate, partner_sets, verify_snake_variable
from .kernel import count_closed_subsets, infer_submodule_poset, kernel_data, support_quiver
from .laurent import LaurentPoly, Monomial, parse_laurent
from .paths import Path, enumerate_nonoverlapping, enumerate_paths
from .snakes import SnakeParams, SnakeSpec, expand_params, is_snake, position, prime_decompose

__version__ = "0.1.0"

__all__ = [
    "CartanData", "Vertex", "cartan_data", "membership",
    "check_real", "denominator", "f_polynomial", "g_vector", "q_character", "truncated_q_character",
    "c1_quiver", "initial_seed", "is_factorial_c1", "mutate", "partner_sets", "verify_snake_variable",
    "count_closed_subsets", "infer_submodule_poset", "kernel_data", "support_quiver",
    "LaurentPoly", "Monomial", "parse_laurent",
    "Path", "enumerate_nonoverlapping", "enumerate_paths",
    "SnakeParams", "SnakeSpec", "expand_params", "is_snake", "position", "prime_decompose",
]
