"""Exact valuation computations on lattices over the Laurent-series field."""

from .apartment import (
    Apartment,
    ApartmentPoint,
    AssignmentResult,
    apartment_multi_f,
    apartment_witness,
    common_apartment,
    kuhn_munkres,
)
from .closecase import (
    QuiverMultiplicities,
    SubspaceTriple,
    build_network,
    close_witness,
    decompose,
    extract_triple,
    max_flow,
    min_formula,
)
from .detval import multi_f, multi_f_detail, star_cost
from .harness import (
    ConjectureReport,
    NetworkShape,
    asymptotic_check,
    positivity_check,
    scale_config,
    sl4_network_cost,
    two_node_cost,
    verify_star,
)
from .lattices import Lattice, SingularMatrixError
from .metric import binary_f, distance, dominance_leq, relative_invariants
from .representatives import (
    konig_linear_value,
    konig_linear_witness,
    konig_set_max,
    moshonkin_check,
    multiset_g,
)
from .scalars import GF, RATIONAL, BaseField, LaurentPoly, ValuedScalar
from .subspaces import Subspace

__all__ = [
    "Apartment",
    "ApartmentPoint",
    "AssignmentResult",
    "BaseField",
    "ConjectureReport",
    "GF",
    "Lattice",
    "LaurentPoly",
    "NetworkShape",
    "QuiverMultiplicities",
    "RATIONAL",
    "SingularMatrixError",
    "Subspace",
    "SubspaceTriple",
    "ValuedScalar",
    "apartment_multi_f",
    "apartment_witness",
    "asymptotic_check",
    "binary_f",
    "build_network",
    "close_witness",
    "common_apartment",
    "decompose",
    "distance",
    "dominance_leq",
    "extract_triple",
    "konig_linear_value",
    "konig_linear_witness",
    "konig_set_max",
    "kuhn_munkres",
    "max_flow",
    "min_formula",
    "moshonkin_check",
    "multi_f",
    "multi_f_detail",
    "multiset_g",
    "positivity_check",
    "relative_invariants",
    "scale_config",
    "sl4_network_cost",
    "star_cost",
    "two_node_cost",
    "verify_star",
]
