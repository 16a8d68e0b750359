"""Local solubility of bidegree (2,2) curves in P^1 x P^1.

Exact deciders over Q_p and R, finite-field censuses of factorization
types, the closed-form local density rho(p) checked three independent
ways, and the Euler product over primes.
"""

from .census import CensusReport, run_census
from .densities import (
    CaseDensityTable,
    bq_constants,
    build_case_table,
    prime_product,
    prime_product_interval,
    rho_assembled,
    rho_closed,
)
from .els import ELSResult, SingularDiscriminantZero, els_decide, els_rate
from .ffclassify import FactorType, factorization_type, has_smooth_point, points_on_curve
from .fields import field, quadratic_extension
from .gbq import (
    GenBinaryQuartic,
    decide_gbq,
    decide_gbq_ints,
    discriminant,
    phi,
    phi_derivative_rank,
    phi_ints,
)
from .mc import MCEstimate, global_constant, mc_conditional, mc_real_density, mc_rho
from .padic import AllZeroForm, PadicApprox, ZpForm, normalize, valuation_grid
from .pvineq import InequalityInstance, inequality_holds, scan
from .realsol import real_soluble
from .solver import Verdict, Witness, certify_witness, decide_qp, decide_qp_ints

__version__ = "0.1.0"

__all__ = [
    "AllZeroForm", "CaseDensityTable", "CensusReport", "ELSResult",
    "FactorType", "GenBinaryQuartic", "InequalityInstance", "MCEstimate",
    "PadicApprox", "SingularDiscriminantZero", "Verdict", "Witness", "ZpForm",
    "bq_constants", "build_case_table", "certify_witness", "decide_gbq",
    "decide_gbq_ints", "decide_qp", "decide_qp_ints", "discriminant",
    "els_decide", "els_rate", "factorization_type", "field",
    "global_constant", "has_smooth_point", "inequality_holds",
    "mc_conditional", "mc_real_density", "mc_rho", "normalize", "phi",
    "phi_derivative_rank", "phi_ints", "points_on_curve", "prime_product",
    "prime_product_interval", "quadratic_extension", "real_soluble",
    "rho_assembled", "rho_closed", "run_census", "scan", "valuation_grid",
]
