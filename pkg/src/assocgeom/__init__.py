"""Associative geometries on Grassmannians of F^n, with exact arithmetic over GF(p) and Q."""

from .charts import Chart
from .finite import FiniteGeometry, axiom_verifier
from .gamma import gamma_bruteforce, gamma_extended, gamma_operator, pi_extended, pi_operator
from .grassmannian import Subspace, enumerate_subspaces, is_transversal, projector
from .linalg import GF, QQ, Field, Matrix
from .pairs import AssocPair, Algebra, extract_algebra, extract_pair, geometry_from_pair, hom_pair
from .relations import LinearRelation, compose, pullback, pushforward
from .torsors import TorsorContext, verify_torsor

__all__ = [
    "Algebra",
    "AssocPair",
    "Chart",
    "Field",
    "FiniteGeometry",
    "GF",
    "LinearRelation",
    "Matrix",
    "QQ",
    "Subspace",
    "TorsorContext",
    "axiom_verifier",
    "compose",
    "enumerate_subspaces",
    "extract_algebra",
    "extract_pair",
    "gamma_bruteforce",
    "gamma_extended",
    "gamma_operator",
    "geometry_from_pair",
    "hom_pair",
    "is_transversal",
    "pi_extended",
    "pi_operator",
    "projector",
    "pullback",
    "pushforward",
    "verify_torsor",
]
