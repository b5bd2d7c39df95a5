"""Exact computations for blowups of Grassmannians along Schubert varieties."""

from .classify import BlowupSpec, ClassificationReport, classify
from .cohomology import CohomClass
from .gw import two_point
from .mirror import build_chain, build_f_tor, jacobi_ideal_isomorphism, verify_theorem62
from .poly import IdealBasis, LaurentPoly, RationalFn, groebner, normal_form
from .quantum import QClass, gen_Rb, gen_Rsigma, presentation, qmul
from .schubert import BoxSpec, SchubertExpr, sigma
from .weyl import CurveDegree, ParabolicSpec, Permutation

__version__ = "0.1.0"

__all__ = [
    "BlowupSpec",
    "ClassificationReport",
    "classify",
    "CohomClass",
    "two_point",
    "build_chain",
    "build_f_tor",
    "jacobi_ideal_isomorphism",
    "verify_theorem62",
    "IdealBasis",
    "LaurentPoly",
    "RationalFn",
    "groebner",
    "normal_form",
    "QClass",
    "gen_Rb",
    "gen_Rsigma",
    "presentation",
    "qmul",
    "BoxSpec",
    "SchubertExpr",
    "sigma",
    "CurveDegree",
    "ParabolicSpec",
    "Permutation",
]
