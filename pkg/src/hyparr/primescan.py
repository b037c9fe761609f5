"""Which primes preserve the combinatorics of an arrangement.

Three independent descriptions of the bad primes of a central essential
arrangement are computed here:

* non-good primes, from gcds of 2x2 minors of column pairs;
* non-(sigma, k)-lucky primes, from leading coefficients of minimal strong
  Groebner bases of the linear ideals of codimension-k tuples;
* the prime support of the lcm-period rho0, from Smith normal forms of all
  column submatrices with at most l columns.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arrangement import (
    Arrangement,
    NotCentral,
    NotEssential,
    _minors2_gcd,
    nongood_pairs,
)
from .intmat import rank_rational, snf
from .polyring import LEX, Poly, TermOrder, partial_derivative
from .strong_gb import DEFAULT_DEGREE_CAP, GBBudgetExceeded, prime_factors, strong_groebner


def _require_central(a: Arrangement) -> None:
    if not a.is_central:
        raise NotCentral("prime scans need a central arrangement; cone it first")


def nongood_primes(a: Arrangement) -> set[int]:
    _require_central(a)
    out: set[int] = set()
    cols = [r[:-1] for r in a.rows]
    for u, v in itertools.combinations(cols, 2):
        out |= prime_factors(_minors2_gcd(u, v))
    return out


def is_good(a: Arrangement, p: int) -> bool:
    return not nongood_pairs(a, p)


def codim_tuples(a: Arrangement, k: int) -> list[tuple[int, ...]]:
    """Strictly increasing k-tuples whose hyperplanes meet in codimension k."""
    return [t for t in itertools.combinations(range(a.n), k)
            if rank_rational(a.matrix.select_columns(t)) == k]


def _tuple_primes(args) -> tuple[tuple[int, ...], set[int]]:
    forms, t, order, degree_cap = args
    try:
        basis = strong_groebner(forms, order, degree_cap=degree_cap)
    except GBBudgetExceeded as exc:
        raise GBBudgetExceeded(f"tuple {t}: {exc}") from None
    return t, basis.excluded_primes()


def lucky_excluded_by_tuple(a: Arrangement, k: int, order: TermOrder = LEX, *,
                            degree_cap: int = DEFAULT_DEGREE_CAP,
                            workers: int = 1) -> dict[tuple[int, ...], set[int]]:
    """Non-lucky primes of each codimension-k linear ideal."""
    _require_central(a)
    if not 1 <= k <= max(a.l, 1):
        raise ValueError(f"k={k} outside 1..{a.l}")
    jobs = [([a.forms[i] for i in t], t, order, degree_cap) for t in codim_tuples(a, k)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_tuple_primes, jobs))
    else:
        results = [_tuple_primes(j) for j in jobs]
    return dict(results)


def k_lucky_excluded(a: Arrangement, k: int, order: TermOrder = LEX, **kwargs) -> set[int]:
    """Primes that are not (sigma, k)-lucky."""
    out: set[int] = set()
    for primes in lucky_excluded_by_tuple(a, k, order, **kwargs).values():
        out |= primes
    return out


def largest_invariant_factors(a: Arrangement) -> dict[tuple[int, ...], int]:
    """e(J) for every nonempty J with |J| <= l."""
    _require_central(a)
    out = {}
    for k in range(1, a.l + 1):
        for t in itertools.combinations(range(a.n), k):
            out[t] = snf(a.matrix.select_columns(t)).largest
    return out


def rho0(a: Arrangement) -> int:
    """lcm-period: lcm of the largest invariant factors of all C_J, |J| <= l."""
    return math.lcm(1, *largest_invariant_factors(a).values())


@dataclass
class PrimeReport:
    nongood: set[int]
    nonlucky_by_k: dict[int, set[int]]
    rho0: int
    l: int
    rho0_primes: set[int] = field(init=False)

    def __post_init__(self):
        self.rho0_primes = prime_factors(self.rho0)

    def equivalent(self, p: int) -> bool:
        """Good and (sigma, l)-lucky."""
        return p not in self.nongood and p not in self.nonlucky_by_k[self.l]

    def to_json(self) -> dict:
        return {
            "nongood": sorted(self.nongood),
            "nonlucky": {str(k): sorted(v) for k, v in sorted(self.nonlucky_by_k.items())},
            "rho0": self.rho0,
            "rho0_primes": sorted(self.rho0_primes),
            "equivalent_iff_coprime_to": self.rho0,
        }


def prime_report(a: Arrangement, order: TermOrder = LEX, ks: Iterable[int] | None = None, **kwargs) -> PrimeReport:
    _require_central(a)
    if not a.is_essential():
        raise NotEssential("prime report needs an essential arrangement")
    ks = sorted(set(ks) | {a.l}) if ks is not None else list(range(1, a.l + 1))
    lucky = {k: k_lucky_excluded(a, k, order, **kwargs) for k in ks}
    return PrimeReport(nongood_primes(a), lucky, rho0(a), a.l)


@dataclass(frozen=True)
class PeriodComparison:
    left: frozenset[int]
    right: frozenset[int]

    @property
    def holds(self) -> bool:
        return self.left == self.right

    @property
    def discrepancies(self) -> list[int]:
        return sorted(self.left ^ self.right)

    def __bool__(self) -> bool:
        return self.holds


def theorem77_check(a: Arrangement, order: TermOrder = LEX, **kwargs) -> PeriodComparison:
    """Compare non-good or non-(sigma,l)-lucky primes with the primes of rho0."""
    _require_central(a)
    if not a.is_essential():
        raise NotEssential("the period comparison needs an essential arrangement")
    left = nongood_primes(a) | k_lucky_excluded(a, a.l, order, **kwargs)
    right = prime_factors(rho0(a))
    return PeriodComparison(frozenset(left), frozenset(right))


def jacobian_generators(a: Arrangement, include_q: bool = False) -> list[Poly]:
    q = a.defining_polynomial()
    gens = [partial_derivative(q, i) for i in range(a.l)]
    if include_q:
        gens.append(q)
    return gens


def jacobian_lucky_excluded(a: Arrangement, order: TermOrder = LEX, *, include_q: bool = False,
                            degree_cap: int = DEFAULT_DEGREE_CAP) -> set[int]:
    """Primes that are not sigma-lucky for the integer Jacobian ideal."""
    _require_central(a)
    gens = jacobian_generators(a, include_q)
    if not any(gens):
        return set()
    return strong_groebner(gens, order, degree_cap=degree_cap).excluded_primes()


@dataclass(frozen=True)
class PairLuckiness:
    pair: tuple[int, int]
    proportional_mod_p: bool
    lucky: bool


@dataclass(frozen=True)
class PairReport:
    p: int
    pairs: tuple[PairLuckiness, ...]

    @property
    def holds(self) -> bool:
        """Every pair proportional mod p is non-lucky."""
        return all(not pr.lucky for pr in self.pairs if pr.proportional_mod_p)

    @property
    def converse_counterexamples(self) -> list[tuple[int, int]]:
        """Non-lucky pairs that are nevertheless not proportional mod p."""
        return [pr.pair for pr in self.pairs if not pr.lucky and not pr.proportional_mod_p]

    def __bool__(self) -> bool:
        return self.holds


def lemma61_check(a: Arrangement, p: int, order: TermOrder = LEX) -> PairReport:
    """Check that mod-p proportional pairs are never sigma-lucky."""
    _require_central(a)
    cols = [r[:-1] for r in a.rows]
    out = []
    for i, j in itertools.combinations(range(a.n), 2):
        prop = _minors2_gcd(cols[i], cols[j]) % p == 0
        excluded = strong_groebner([a.forms[i], a.forms[j]], order).excluded_primes()
        out.append(PairLuckiness((i, j), prop, p not in excluded))
    return PairReport(p, tuple(out))


def primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, math.isqrt(p) + 1))]


@dataclass(frozen=True)
class MainTheoremRow:
    p: int
    combinatorial: bool
    good_and_lucky: bool
    coprime_to_rho0: bool

    @property
    def consistent(self) -> bool:
        return self.combinatorial == self.good_and_lucky == self.coprime_to_rho0


def main_theorem_rows(a: Arrangement, primes: Sequence[int], order: TermOrder = LEX) -> list[MainTheoremRow]:
    """The three predicates per prime, each from its own code path."""
    from .arrangement import reduce
    from .lattice import comb_equivalent

    ng = nongood_primes(a)
    nl = k_lucky_excluded(a, a.l, order)
    r0 = rho0(a)
    rows = []
    for p in primes:
        comb = bool(comb_equivalent(a, reduce(a, p, check_good=False)))
        rows.append(MainTheoremRow(p, comb, p not in ng and p not in nl, r0 % p != 0))
    return rows
