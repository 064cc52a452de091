"""High-precision verification of q-gamma product identities.

Subpackages split by concern: exact number theory and polynomials
(:mod:`qprod.numtheory`), Dirichlet characters with exact root-of-unity
values (:mod:`qprod.characters`), arbitrary-precision special functions
(:mod:`qprod.qfunc`), two-sided identity evaluators (:mod:`qprod.products`),
comparison and reporting (:mod:`qprod.verify`), and the ``qprod`` command
line (:mod:`qprod.cli`).
"""

from .characters import DirichletCharacter, enumerate_characters, legendre_character
from .numtheory import (
    cyclotomic,
    mobius,
    psi_by_definition,
    psi_reduced,
    radical,
    totient,
)
from .products import IDENTITY_IDS, EvalInfo, IdentitySpec, eval_lhs, eval_rhs
from .qfunc import (
    Precision,
    SingularArgumentError,
    gamma_classical,
    qgamma,
    qpochhammer,
)
from .verify import VerificationReport, compare, default_suite, run_identity, run_suite

__version__ = "0.1.0"

__all__ = [
    "DirichletCharacter",
    "EvalInfo",
    "IDENTITY_IDS",
    "IdentitySpec",
    "Precision",
    "SingularArgumentError",
    "VerificationReport",
    "compare",
    "cyclotomic",
    "default_suite",
    "enumerate_characters",
    "eval_lhs",
    "eval_rhs",
    "gamma_classical",
    "legendre_character",
    "mobius",
    "psi_by_definition",
    "psi_reduced",
    "qgamma",
    "qpochhammer",
    "radical",
    "run_identity",
    "run_suite",
    "totient",
]
