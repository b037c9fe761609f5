"""Strong Groebner bases over the integers.

Buchberger completion with S-polynomials and gcd (G-)polynomials, strong
reduction by exact divisibility of leading monomials (coefficient included),
then minimalization and tail reduction.  The primes dividing the leading
coefficients of a minimal strong basis are the primes that are *not* lucky
for the ideal.
"""

from __future__ import annotations

import collections
import heapq
import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

from .polyring import (
    LEX,
    Monomial,
    Poly,
    TermOrder,
    leading,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)

log = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 40


class GBBudgetExceeded(RuntimeError):
    """Raised when completion produces a polynomial above the degree cap."""


@dataclass
class StrongBasis:
    generators: list[Poly]
    order: TermOrder
    cofactors: list[list[Poly]] | None = field(default=None, repr=False)

    @property
    def leading_ledger(self) -> list[tuple[int, Monomial]]:
        out = []
        for g in self.generators:
            ld = leading(g, self.order)
            out.append((ld.lc, ld.lt))
        return out

    @property
    def leading_coefficients(self) -> list[int]:
        return [lc for lc, _ in self.leading_ledger]

    def excluded_primes(self) -> set[int]:
        primes: set[int] = set()
        for lc in self.leading_coefficients:
            primes |= prime_factors(lc)
        return primes

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def prime_factors(n: int) -> set[int]:
    """Prime divisors of ``|n|`` by trial division."""
    n = abs(n)
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.add(n)
    return out


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(d, s, t)`` with ``d = gcd(a, b) = s*a + t*b``, ``d >= 0``.

    Among all valid pairs the cofactor ``s`` has minimal absolute value, with
    ``s*a >= 0`` on ties.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    d = old_r
    if d < 0:
        d, old_s = -d, -old_s
    if d == 0:
        return 0, 0, 0
    if b == 0:
        return d, old_s, 0
    # s ranges over old_s + k * (b/d); choose the representative of least |s|
    step = abs(b // d)
    s0 = old_s % step
    cands = [s0, s0 - step]
    s0 = min(cands, key=lambda v: (abs(v), -(v * a >= 0)))
    t0 = (d - s0 * a) // b
    return d, s0, t0


def _lead(terms: dict, key) -> Monomial:
    return max(terms, key=key)


def _sub_scaled(acc: dict, g: dict, c: int, shift: Monomial) -> None:
    # acc -= c * shift * g
    for m, v in g.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        nv = acc.get(mm, 0) - c * v
        if nv:
            acc[mm] = nv
        else:
            acc.pop(mm, None)


def strong_reduce(f: Poly, basis: Sequence[Poly], order: TermOrder = LEX) -> Poly:
    """Fully reduce ``f`` by strong (coefficient-exact) division."""
    r, _ = _reduce(f, basis, order)
    return r


def _reduce(f: Poly, basis: Sequence[Poly], order: TermOrder,
            leads: Sequence[tuple[Monomial, int]] | None = None,
            track: list[Poly] | None = None,
            basis_cofactors: Sequence[list[Poly]] | None = None):
    key = order.key
    if leads is None:
        leads = [(leading(g, order).lt, leading(g, order).lc) for g in basis]
    p = dict(f.terms)
    rem: dict[Monomial, int] = {}
    cof = list(track) if track is not None else None
    while p:
        m = _lead(p, key)
        c = p[m]
        for k, (lt, lc) in enumerate(leads):
            if c % lc == 0 and monomial_divides(lt, m):
                q = c // lc
                shift = monomial_quotient(m, lt)
                _sub_scaled(p, basis[k].terms, q, shift)
                if cof is not None:
                    for i, h in enumerate(basis_cofactors[k]):
                        if h:
                            cof[i] = cof[i] - h.mul_term(q, shift)
                break
        else:
            rem[m] = c
            del p[m]
    return Poly(rem, f.nvars), cof


def s_polynomial(f: Poly, g: Poly, order: TermOrder = LEX) -> Poly:
    """S-polynomial: cancel leading monomials against their lcm."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    lf, lg = leading(f, order), leading(g, order)
    c = abs(lf.lc * lg.lc) // math.gcd(lf.lc, lg.lc)
    u = monomial_lcm(lf.lt, lg.lt)
    return f.mul_term(c // lf.lc, monomial_quotient(u, lf.lt)) - g.mul_term(c // lg.lc, monomial_quotient(u, lg.lt))


def g_polynomial(f: Poly, g: Poly, order: TermOrder = LEX) -> Poly:
    """G-polynomial: Bezout combination whose leading monomial is gcd(lc)*lcm(lt)."""
    if not f or not g:
        raise ValueError("G-polynomial of a zero polynomial")
    lf, lg = leading(f, order), leading(g, order)
    _, a, b = ext_gcd(lf.lc, lg.lc)
    u = monomial_lcm(lf.lt, lg.lt)
    return f.mul_term(a, monomial_quotient(u, lf.lt)) + g.mul_term(b, monomial_quotient(u, lg.lt))


def _pair_polys(f: Poly, g: Poly, lf, lg, cf=None, cg=None):
    """S- and (when needed) G-polynomial of a pair, with optional cofactors."""
    out = []
    u = monomial_lcm(lf[0], lg[0])
    sf, sg = monomial_quotient(u, lf[0]), monomial_quotient(u, lg[0])
    a, b = lf[1], lg[1]
    c = abs(a * b) // math.gcd(a, b)
    spoly = f.mul_term(c // a, sf) - g.mul_term(c // b, sg)
    scof = None
    if cf is not None:
        scof = [x.mul_term(c // a, sf) - y.mul_term(c // b, sg) for x, y in zip(cf, cg)]
    out.append((spoly, scof))
    if a % b and b % a:
        _, s, t = ext_gcd(a, b)
        gpoly = f.mul_term(s, sf) + g.mul_term(t, sg)
        gcof = None
        if cf is not None:
            gcof = [x.mul_term(s, sf) + y.mul_term(t, sg) for x, y in zip(cf, cg)]
        out.append((gpoly, gcof))
    return out


def strong_groebner(gens: Sequence[Poly], order: TermOrder = LEX, *,
                    degree_cap: int = DEFAULT_DEGREE_CAP,
                    strategy: str = "normal",
                    track_cofactors: bool = False) -> StrongBasis:
    """Minimal strong Groebner basis of the ideal generated by ``gens``.

    ``strategy`` picks the next critical pair: ``"normal"`` takes the pair with
    the smallest lcm of leading terms, ``"fifo"`` takes pairs in creation order.
    With ``track_cofactors`` the result carries, for every generator, the list
    of polynomial multipliers expressing it in terms of ``gens``.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("strong Groebner basis of the zero ideal")
    nvars = gens[0].nvars
    if any(g.nvars != nvars or g.modulus is not None for g in gens):
        raise ValueError("generators must be integer polynomials in a common ring")
    if strategy not in ("normal", "fifo"):
        raise ValueError(f"unknown pair strategy {strategy!r}")
    key = order.key

    basis: list[Poly] = []
    leads: list[tuple[Monomial, int]] = []
    cofs: list[list[Poly]] | None = [] if track_cofactors else None
    pairs: list = [] if strategy == "normal" else collections.deque()
    serial = itertools.count()

    def add(h: Poly, hc):
        ld = leading(h, order)
        if ld.lc < 0:
            h = -h
            ld = leading(h, order)
            if hc is not None:
                hc = [-x for x in hc]
        if h.degree() > degree_cap:
            raise GBBudgetExceeded(
                f"basis element of degree {h.degree()} exceeds degree cap {degree_cap}")
        idx = len(basis)
        basis.append(h)
        leads.append((ld.lt, ld.lc))
        if cofs is not None:
            cofs.append(hc)
        for i in range(idx):
            (ti, ci), (tj, cj) = leads[i], leads[idx]
            # product criterion is only sound for unit leading coefficients
            if ci == 1 and cj == 1 and not any(a and b for a, b in zip(ti, tj)):
                continue
            if strategy == "normal":
                heapq.heappush(pairs, (key(monomial_lcm(ti, tj)), next(serial), i, idx))
            else:
                pairs.append((next(serial), i, idx))

    for i, g in enumerate(gens):
        hc = None
        if track_cofactors:
            hc = [Poly.constant(int(i == j), nvars) for j in range(len(gens))]
        add(g, hc)

    while pairs:
        if strategy == "normal":
            *_, i, j = heapq.heappop(pairs)
        else:
            *_, i, j = pairs.popleft()
        cf = cofs[i] if cofs is not None else None
        cg = cofs[j] if cofs is not None else None
        for poly, pc in _pair_polys(basis[i], basis[j], leads[i], leads[j], cf, cg):
            if not poly:
                continue
            r, rc = _reduce(poly, basis, order, leads, pc, cofs)
            if r:
                add(r, rc)

    log.debug("completion finished with %d elements", len(basis))
    kept = _minimalize(leads)
    gens_out = [basis[k] for k in kept]
    cof_out = [cofs[k] for k in kept] if cofs is not None else None
    gens_out, cof_out = _tail_reduce(gens_out, order, cof_out)
    ordering = sorted(range(len(gens_out)), key=lambda k: key(leading(gens_out[k], order).lt), reverse=True)
    gens_out = [gens_out[k] for k in ordering]
    if cof_out is not None:
        cof_out = [cof_out[k] for k in ordering]
    return StrongBasis(gens_out, order, cof_out)


def _strongly_divides(a: tuple[Monomial, int], b: tuple[Monomial, int]) -> bool:
    return b[1] % a[1] == 0 and monomial_divides(a[0], b[0])


def _minimalize(leads: list[tuple[Monomial, int]]) -> list[int]:
    kept = []
    for i, li in enumerate(leads):
        redundant = False
        for j, lj in enumerate(leads):
            if j == i or not _strongly_divides(lj, li):
                continue
            if lj != li or j < i:
                redundant = True
                break
        if not redundant:
            kept.append(i)
    return kept


def _tail_reduce(gens: list[Poly], order: TermOrder, cofs):
    out = list(gens)
    for i, g in enumerate(out):
        others = [h for k, h in enumerate(out) if k != i]
        ld = leading(g, order)
        lead_poly = Poly({ld.lt: ld.lc}, g.nvars)
        tail = g - lead_poly
        if not tail:
            continue
        if cofs is not None:
            other_cofs = [c for k, c in enumerate(cofs) if k != i]
            r, rc = _reduce(tail, others, order, None, cofs[i], other_cofs)
            cofs[i] = rc
        else:
            r = strong_reduce(tail, others, order)
        out[i] = lead_poly + r
    return out, cofs


def lucky_excluded_primes(gens: Sequence[Poly], order: TermOrder = LEX, **kwargs) -> set[int]:
    """Primes dividing some leading coefficient of the minimal strong basis."""
    return strong_groebner(gens, order, **kwargs).excluded_primes()


def ideal_membership(f: Poly, gens: Sequence[Poly], order: TermOrder = LEX) -> bool:
    if not f:
        return True
    basis = strong_groebner(gens, order)
    return not strong_reduce(f, basis.generators, order)


def verify_strong_basis(basis: StrongBasis, inputs: Sequence[Poly] | None = None) -> list[str]:
    """Re-check completion and generation after the fact.

    Returns a list of human-readable failures (empty when the basis passes):
    every pairwise S- and G-polynomial must strongly reduce to zero, leading
    monomials must be pairwise non-dividing, and every input must reduce to
    zero.  When cofactors are present they must reproduce each generator.
    """
    order = basis.order
    g = basis.generators
    failures = []
    ledger = basis.leading_ledger
    for i in range(len(g)):
        if ledger[i][0] <= 0:
            failures.append(f"generator {i} has non-positive leading coefficient")
        for j in range(len(g)):
            if i != j and _strongly_divides((ledger[j][1], ledger[j][0]), (ledger[i][1], ledger[i][0])):
                failures.append(f"leading monomial of {j} divides that of {i}")
        for j in range(i + 1, len(g)):
            if strong_reduce(s_polynomial(g[i], g[j], order), g, order):
                failures.append(f"S-polynomial ({i},{j}) does not reduce to zero")
            if strong_reduce(g_polynomial(g[i], g[j], order), g, order):
                failures.append(f"G-polynomial ({i},{j}) does not reduce to zero")
    for k, f in enumerate(inputs or ()):
        if strong_reduce(f, g, order):
            failures.append(f"input {k} is not reduced to zero")
    if basis.cofactors is not None and inputs is not None:
        for k, (gk, ck) in enumerate(zip(g, basis.cofactors)):
            total = Poly.zero(gk.nvars)
            for h, f in zip(ck, inputs):
                total = total + h * f
            if total != gk:
                failures.append(f"cofactors of generator {k} do not reproduce it")
    return failures
