"""Tutte and coboundary polynomials, point counts and the finite field method.

Bivariate polynomials are :class:`~hyparr.polyring.Poly` objects in two
variables ``(x, y)``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .arrangement import Arrangement, ArrangementError, NotEssential, _HyperplaneSystem
from .lattice import DEFAULT_SUBSET_CAP, CharPoly, LatticeBudgetExceeded
from .polyring import LEX, Poly, TermOrder

DEFAULT_POINT_BUDGET = 10**8

BivariatePoly = Poly

X = Poly.variable(0, 2)
Y = Poly.variable(1, 2)
ONE = Poly.constant(1, 2)


class PointBudgetExceeded(RuntimeError):
    pass


class InterpolationError(ArrangementError):
    pass


def bivariate_coefficients(p: Poly) -> dict[tuple[int, int], int]:
    return {(m[0], m[1]): c for m, c in p.terms.items()}


def bivariate_json(p: Poly) -> dict[str, int]:
    return {f"{i},{j}": c for (i, j), c in sorted(bivariate_coefficients(p).items())}


def _subset_statistics(a: _HyperplaneSystem, subset_cap: int) -> Counter:
    """Counter of (rank, size) over central subsets, empty subset included."""
    if a.n > subset_cap:
        raise LatticeBudgetExceeded(f"{a.n} hyperplanes exceed the subset cap of {subset_cap}")
    stats: Counter = Counter()
    for k in range(a.n + 1):
        for sub in itertools.combinations(range(a.n), k):
            if not a.is_central and not a.is_consistent(sub):
                continue
            stats[(a.rank_of(sub), k)] += 1
    return stats


def tutte(a: _HyperplaneSystem, subset_cap: int = DEFAULT_SUBSET_CAP) -> Poly:
    """Tutte polynomial by subset expansion over central subsets."""
    rk = a.total_rank()
    out = Poly.zero(2)
    for (r, k), mult in _subset_statistics(a, subset_cap).items():
        out = out + (X - 1) ** (rk - r) * (Y - 1) ** (k - r) * mult
    return out


def coboundary(a: _HyperplaneSystem, subset_cap: int = DEFAULT_SUBSET_CAP) -> Poly:
    """Coboundary polynomial by subset expansion over central subsets."""
    rk = a.total_rank()
    out = Poly.zero(2)
    for (r, k), mult in _subset_statistics(a, subset_cap).items():
        out = out + X ** (rk - r) * (Y - 1) ** k * mult
    return out


def coboundary_from_tutte(t: Poly, rank: int) -> Poly:
    """(y-1)^rank * T((x+y-1)/(y-1), y), expanded without denominators."""
    out = Poly.zero(2)
    for (i, j), c in bivariate_coefficients(t).items():
        if i > rank:
            raise ValueError("x-degree of the Tutte polynomial exceeds the rank")
        out = out + (X + Y - 1) ** i * (Y - 1) ** (rank - i) * Y ** j * c
    return out


def _divide_by_y_minus_one(p: Poly) -> Poly:
    # synthetic division in y, coefficientwise in x
    by_x: dict[int, dict[int, int]] = {}
    for (i, j), c in bivariate_coefficients(p).items():
        by_x.setdefault(i, {})[j] = c
    out = {}
    for i, col in by_x.items():
        deg = max(col)
        coeffs = [col.get(j, 0) for j in range(deg + 1)]
        quot = [0] * deg
        carry = 0
        for j in range(deg, 0, -1):
            carry = coeffs[j] + carry
            quot[j - 1] = carry
        if coeffs[0] + carry != 0:
            raise ValueError("polynomial is not divisible by (y - 1)")
        for j, c in enumerate(quot):
            if c:
                out[(i, j)] = c
    return Poly(out, 2)


def tutte_from_coboundary(cb: Poly, rank: int) -> Poly:
    """chi_bar((x-1)(y-1), y) / (y-1)^rank, with exact division."""
    num = Poly.zero(2)
    for (i, j), c in bivariate_coefficients(cb).items():
        num = num + ((X - 1) * (Y - 1)) ** i * Y ** j * c
    for _ in range(rank):
        num = _divide_by_y_minus_one(num)
    return num


def char_from_tutte(a: _HyperplaneSystem, t: Poly | None = None) -> CharPoly:
    """(-1)^rk t^(l-rk) T(1-t, 0)."""
    if t is None:
        t = tutte(a)
    rk = a.total_rank()
    coeffs = [0] * (a.l + 1)
    for (i, j), c in bivariate_coefficients(t).items():
        if j:
            continue
        # (1 - t)^i = sum_k C(i,k) (-t)^k
        for k in range(i + 1):
            coeffs[a.l - rk + k] += (-1) ** rk * c * comb(i, k) * (-1) ** k
    return CharPoly(tuple(coeffs))


def _form_columns(a: _HyperplaneSystem) -> tuple[list[list[int]], list[int]]:
    coeffs = [list(r[:-1]) for r in a.rows]
    consts = [r[-1] for r in a.rows]
    return coeffs, consts


def point_histogram(a: _HyperplaneSystem, q: int, budget: int = DEFAULT_POINT_BUDGET) -> list[int]:
    """Entry h counts points of (Z/qZ)^l lying on exactly h hyperplanes."""
    if q < 1:
        raise ValueError("modulus must be positive")
    l, n = a.l, a.n
    if q ** l > budget:
        raise PointBudgetExceeded(f"{q}^{l} points exceed the budget of {budget}")
    coeffs, consts = _form_columns(a)
    hist = np.zeros(n + 1, dtype=np.int64)
    if l == 0:
        hist[sum(1 for c in consts if c % q == 0)] += 1
        return hist.tolist()
    # vectorize over the trailing coordinates, loop over the leading ones
    inner = 1
    while inner < l and q ** (inner + 1) <= 2_000_000:
        inner += 1
    outer = l - inner
    grids = np.indices((q,) * inner, dtype=np.int64).reshape(inner, -1)
    inner_vals = [(np.array([c % q for c in coeffs[i][outer:]], dtype=np.int64) @ grids) % q for i in range(n)]
    for point in itertools.product(range(q), repeat=outer):
        on = np.zeros(grids.shape[1], dtype=np.int64)
        for i in range(n):
            off = (sum(c * x for c, x in zip(coeffs[i][:outer], point)) + consts[i]) % q
            on += (inner_vals[i] + off) % q == 0
        hist += np.bincount(on, minlength=n + 1)
    return hist.tolist()


def count_complement(a: _HyperplaneSystem, q: int, budget: int = DEFAULT_POINT_BUDGET) -> int:
    """Points of (Z/qZ)^l on no hyperplane."""
    return point_histogram(a, q, budget)[0]


def _lagrange(xs: Sequence[int], ys: Sequence) -> list[Fraction]:
    """Coefficients (lowest first) of the interpolating polynomial."""
    k = len(xs)
    out = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d in range(k):
            out[d] += Fraction(yi) * basis[d] / denom
    return out


def coboundary_from_counts(a: Arrangement, primes: Sequence[int], order: TermOrder = LEX,
                           *, verify: bool = True, budget: int = DEFAULT_POINT_BUDGET) -> Poly:
    """Reconstruct the coboundary polynomial from point histograms over F_p.

    Every prime must be good and (sigma, l)-lucky; the histogram over F_p^l
    gives chi_bar(p, t), and interpolation in the first argument recovers
    chi_bar(x, t).
    """
    from .primescan import prime_report

    if not a.is_central:
        raise ArrangementError("the finite field method needs a central arrangement")
    if not a.is_essential():
        raise NotEssential("the finite field method needs an essential arrangement")
    primes = list(primes)
    if len(set(primes)) != len(primes) or len(primes) < a.l + 1:
        raise InterpolationError(f"need at least {a.l + 1} distinct primes, got {primes}")
    if verify:
        report = prime_report(a, order, ks=(a.l,))
        bad = [p for p in primes if not report.equivalent(p)]
        if bad:
            raise InterpolationError(f"primes {bad} are not good and (sigma,{a.l})-lucky")
    hists = [point_histogram(a, p, budget) for p in primes]
    out = {}
    for h in range(a.n + 1):
        coeffs = _lagrange(primes, [hist[h] for hist in hists])
        for i, c in enumerate(coeffs):
            if c.denominator != 1:
                raise InterpolationError(f"non-integer coefficient {c} at x^{i} t^{h}")
            if c:
                out[(i, h)] = int(c)
    return Poly(out, 2)


@dataclass(frozen=True)
class MonicFit:
    """Monic polynomial through the first ``degree`` samples, checked on the rest."""

    coefficients: tuple[Fraction, ...]
    samples: tuple[tuple[int, int], ...]
    residuals: tuple[Fraction, ...]

    @property
    def exact(self) -> bool:
        return all(r == 0 for r in self.residuals) and all(c.denominator == 1 for c in self.coefficients)


def fit_monic(samples: Sequence[tuple[int, int]], degree: int) -> MonicFit:
    """Fit q^degree + lower terms exactly through the first ``degree`` points
    and report residuals on all of them."""
    samples = list(samples)
    if len(samples) < degree:
        raise ValueError(f"need at least {degree} samples")
    xs = [q for q, _ in samples[:degree]]
    ys = [v - q ** degree for q, v in samples[:degree]]
    low = _lagrange(xs, ys) if degree else []
    coeffs = tuple(low) + (Fraction(1),)

    def value(q):
        return sum(c * q ** k for k, c in enumerate(coeffs))

    residuals = tuple(Fraction(v) - value(q) for q, v in samples)
    return MonicFit(coeffs, tuple(samples), residuals)


def quasi_polynomial_fits(a: _HyperplaneSystem, period: int, samples_per_class: int,
                          qmin: int, qmax: int, budget: int = DEFAULT_POINT_BUDGET) -> dict[int, MonicFit]:
    """For each residue class mod ``period``, fit the complement counts at the
    smallest ``samples_per_class`` moduli in ``[qmin, qmax]``."""
    fits = {}
    for r in range(period):
        qs = [q for q in range(qmin, qmax + 1) if q % period == r][:samples_per_class]
        if len(qs) < samples_per_class:
            raise ValueError(f"residue class {r} has only {len(qs)} moduli in [{qmin}, {qmax}]")
        fits[r] = fit_monic([(q, count_complement(a, q, budget)) for q in qs], a.l)
    return fits
