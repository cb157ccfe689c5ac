"""Supersingular isogeny graph toolkit.

Constructs the supersingular ell-isogeny graphs Lambda_p(ell) for primes
p = 1 mod 12 and ell in {2, 3, 5, 7}, computes their loop and multi-edge
statistics by several independent routes (direct enumeration, Brandt
matrix recurrences, Hurwitz class-number trace formulas), and derives
congruence conditions on p equivalent to structural graph properties.
"""

from .arith import DomainError, Fp2, Fp2Element, PolyFp2, is_prime, kronecker
from .classnum import (
    class_number,
    decompose,
    hurwitz,
    hurwitz_modified,
    is_fundamental,
)
from .brandt import (
    BrandtMatrix,
    TheoremViolation,
    brandt_coprime_product,
    brandt_prime_power,
    sigma_coprime,
    trace_formula,
    vertex_count,
)
from .ssgraph import (
    SUPPORTED_ELLS,
    IsogenyGraph,
    build_graph,
    find_supersingular_seed,
    neighbors,
)
from .analytics import (
    BirouteReport,
    GraphStats,
    biroute,
    biroute_bound,
    biroute_bound_closed,
    edit_distance,
    graph_stats,
    intersection_number,
)
from .congruence import (
    CongruenceClassSet,
    GraphProperty,
    derive_congruences,
    discriminant_set,
    find_first_prime,
    holds_by_trace,
)
from .export import GraphCache, graph_from_dict, graph_to_dict, to_dot
from .kernels import BACKEND

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "BirouteReport",
    "BrandtMatrix",
    "CongruenceClassSet",
    "DomainError",
    "Fp2",
    "Fp2Element",
    "GraphCache",
    "GraphProperty",
    "GraphStats",
    "IsogenyGraph",
    "PolyFp2",
    "SUPPORTED_ELLS",
    "TheoremViolation",
    "biroute",
    "biroute_bound",
    "biroute_bound_closed",
    "brandt_coprime_product",
    "brandt_prime_power",
    "build_graph",
    "class_number",
    "decompose",
    "derive_congruences",
    "discriminant_set",
    "edit_distance",
    "find_first_prime",
    "find_supersingular_seed",
    "graph_from_dict",
    "graph_stats",
    "graph_to_dict",
    "holds_by_trace",
    "hurwitz",
    "hurwitz_modified",
    "intersection_number",
    "is_fundamental",
    "is_prime",
    "kronecker",
    "neighbors",
    "sigma_coprime",
    "to_dot",
    "trace_formula",
    "vertex_count",
]
