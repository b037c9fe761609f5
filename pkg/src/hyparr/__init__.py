"""Exact tools for integer hyperplane arrangements and their reductions mod p."""

from .arrangement import (
    Arrangement,
    ArrangementError,
    DuplicateHyperplane,
    ModularArrangement,
    NotCentral,
    NotEssential,
    NotGood,
    bar_index_set,
    build,
    cone,
    frak_index_set,
    from_matrix,
    from_polynomial,
    load,
    reduce,
)
from .enumpoly import coboundary, coboundary_from_counts, count_complement, point_histogram, tutte
from .intmat import IntMatrix, hnf, snf
from .lattice import build_lattice, characteristic_polynomial, comb_equivalent
from .polyring import DEGREVLEX, LEX, Poly, parse_poly, parse_product
from .primescan import (
    jacobian_lucky_excluded,
    k_lucky_excluded,
    nongood_primes,
    prime_report,
    rho0,
    theorem77_check,
)
from .strong_gb import strong_groebner

__version__ = "0.1.0"
