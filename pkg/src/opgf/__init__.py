"""Exact verification of Rainville-type generating functions for the
classical monic orthogonal polynomials.

The package is layered: exact scalars and polynomials (:mod:`exact_arith`),
truncated power series (:mod:`fps`), the polynomial families
(:mod:`families`), the generating-function machinery (:mod:`rainville`) and
the identity catalog with its batch driver (:mod:`identities`, :mod:`verify`).
"""

from .exact_arith import Poly, Rational, as_rational, poch, poly_derivative, poly_eval
from .fps import Series, erfi_kernel, hypergeometric_series, series_compose, series_exp, series_log, series_powq
from .families import FamilySpec, family_sequence, hypergeometric_oracle
from .rainville import akn_table, compute_S_R, expand_gf, verify_corollaries, verify_prop1, verify_prop2, verify_prop3
from .identities import REGISTRY, alpha_builders, registry_list
from .verify import Report, run_all, verify_identity

__version__ = "0.1.0"
