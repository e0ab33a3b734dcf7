"""Coefficients of binary, ternary and reciprocal cyclotomic polynomials, and
verified counter-examples to Beiter's bound A(pqr) <= (p+1)/2."""

from .beiter import (
    BetaClass,
    Certificate,
    IntervalQ,
    VerificationResult,
    beiter_sets,
    beta_class,
    construct,
    construct_minus,
    construct_plus,
    duke_beta,
    find_beta_window,
    in_b_minus,
    in_b_plus,
    interval_minus,
    interval_plus,
    least_admissible_q,
    lehmer,
    max_b_element,
    moller,
    mp_lower_bound,
    q_threshold,
    verify_certificate,
    yves_beta,
)
from .binary import RhoSigma, binary_coeff, binary_table, rho_sigma
from .dense import (
    CoeffVec,
    PeriodicSeries,
    ReciprocalPrediction,
    cyclotomic_poly,
    exact_divide,
    height_of,
    reciprocal_block,
    reciprocal_height_predicate,
)
from .errors import (
    CongruenceViolated,
    ConditionViolated,
    CycloError,
    InvalidInput,
    NoIntegerInInterval,
    NotCoprime,
    NotSquarefree,
    RNotPrime,
    SearchLimitExceeded,
    TooLarge,
)
from .kaplan import (
    HeightReport,
    OddPrimeTriple,
    f_value,
    kaplan_vector,
    ternary_coeff,
    ternary_height,
    transport_neg,
    transport_same,
)
from .numtheory import Factorization, factorize, find_prime_in_ap, is_prime, mod_inverse

__version__ = "0.1.0"
