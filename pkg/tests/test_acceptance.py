"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line which is printed in the pytest terminal
summary (and directly when this file is run as a script).  Time limits are
wall-clock seconds.
"""

import itertools
import math
import random
import time
from contextlib import contextmanager

from hyparr import arrangement as arr
from hyparr.checks import random_corpus
from hyparr.enumpoly import (
    char_from_tutte,
    coboundary,
    coboundary_from_counts,
    coboundary_from_tutte,
    count_complement,
    point_histogram,
    quasi_polynomial_fits,
    tutte,
    tutte_from_coboundary,
)
from hyparr.intmat import IntMatrix, det, snf
from hyparr.lattice import characteristic_polynomial, comb_equivalent
from hyparr.polyring import LEX, Poly, format_poly, parse_poly, reduce_mod_p
from hyparr.primescan import (
    codim_tuples,
    jacobian_generators,
    jacobian_lucky_excluded,
    k_lucky_excluded,
    lemma61_check,
    nongood_primes,
    primes_up_to,
    rho0,
    theorem77_check,
)
from hyparr.strong_gb import prime_factors, strong_groebner, verify_strong_basis

XYZ = ["x", "y", "z"]
Q5 = "x*y*z*(x+y)*(x+2*y+z)"
Q6 = "x*y*(x+y)*(x+3*y+z)"
Q7 = "z*(4*x+z)*(2*x+y)*(6*x+y+3*z)*(8*x+2*y+5*z)"

# pinned limits
LIMIT_GB_PAIR = 1.0
LIMIT_JACOBIAN = 60.0
LIMIT_SECOND_PAIR = 5.0
LIMIT_PERIOD = 10.0
LIMIT_MAIN_SUITE = 300.0
LIMIT_FFMETHOD = 30.0
LIMIT_QUASI = 120.0
MAIN_SUITE_SIZE = 50
MAIN_SUITE_PRIMES = primes_up_to(50)
FF_PRIMES = [3, 5, 7, 11]
QUASI_SAMPLES = 5
QUASI_RANGE = (17, 120)
SNF_ORACLE_MATRICES = 200

RESULTS: list[str] = []


@contextmanager
def criterion(label: str, limit: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS.append(f"FAIL  {label}: {type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        RESULTS.append(f"FAIL  {label}: {elapsed:.2f}s exceeds {limit:.0f}s")
        raise AssertionError(f"{label} took {elapsed:.2f}s (limit {limit}s)")
    RESULTS.append(f"PASS  {label} ({elapsed:.2f}s)")


def A(text):
    return arr.from_polynomial(text, XYZ)


def test_c1_pair_ideal_golden():
    with criterion("1 pair ideal basis {x+y, 2y+z}, excluded {2}, converse counterexample", LIMIT_GB_PAIR):
        a1, a2 = parse_poly("x+y", XYZ), parse_poly("x+3*y+z", XYZ)
        basis = strong_groebner([a1, a2], LEX)
        assert [format_poly(g, XYZ) for g in basis] == ["x + y", "2*y + z"]
        assert basis.excluded_primes() == {2}
        assert format_poly(reduce_mod_p(a1, 2), XYZ) == "x + y"
        assert format_poly(reduce_mod_p(a2, 2), XYZ) == "x + y + z"
        res = lemma61_check(arr.build([a1, a2], 3, XYZ), 2)
        assert res.converse_counterexamples == [(0, 1)]


def test_c2_jacobian_example_luckiness():
    a = A(Q5)
    with criterion("2a (sigma,3)-lucky exclusions of xyz(x+y)(x+2y+z) = {2}"):
        assert k_lucky_excluded(a, 3) == {2}
    with criterion("2b Jacobian ideal exclusions = {2,3,5} (lex)", LIMIT_JACOBIAN):
        assert jacobian_lucky_excluded(a, LEX) == {2, 3, 5}


def test_c3_second_pair_example():
    with criterion("3 xy(x+y)(x+3y+z): (sigma,2) exclusions {2,3}, all primes good", LIMIT_SECOND_PAIR):
        a = A(Q6)
        assert k_lucky_excluded(a, 2) == {2, 3}
        assert nongood_primes(a) == set()


def test_c4_period_example():
    with criterion("4 period example: nongood {2}, rho0 = 16, prime sets agree", LIMIT_PERIOD):
        a = A(Q7)
        ng = nongood_primes(a)
        nl = k_lucky_excluded(a, a.l)
        r0 = rho0(a)
        assert ng == {2}
        assert nl <= {2}
        assert ng | nl == prime_factors(r0)
        assert r0 == 16
        assert theorem77_check(a).holds


def test_c5_main_theorem_suite():
    with criterion(f"5 main theorem on {MAIN_SUITE_SIZE} random arrangements, p <= 50", LIMIT_MAIN_SUITE):
        corpus = random_corpus(seed=0, count=MAIN_SUITE_SIZE)
        assert len(corpus) >= 50
        discrepancies = []
        for a in corpus:
            assert a.central and a.is_essential() and a.l <= 3 and a.n <= 6
            assert all(-5 <= c <= 5 for col in a.matrix.columns() for c in col)
            ng = nongood_primes(a)
            nl = k_lucky_excluded(a, a.l)
            r0 = rho0(a)
            for p in MAIN_SUITE_PRIMES:
                comb = bool(comb_equivalent(a, arr.reduce(a, p, check_good=False)))
                gl = p not in ng and p not in nl
                cop = r0 % p != 0
                if not comb == gl == cop:
                    discrepancies.append((a, p, comb, gl, cop))
        assert discrepancies == []


def test_c6_finite_field_method():
    with criterion("6 histograms give coboundary; interpolation over {3,5,7,11} exact", LIMIT_FFMETHOD):
        a = A(Q5)
        cb = coboundary(a)
        for p in FF_PRIMES:
            hist = point_histogram(a, p)
            for h, v in enumerate(hist):
                assert v == sum(c * p ** i for (i, j), c in cb.terms.items() if j == h)
        assert coboundary_from_counts(a, FF_PRIMES) == cb
        chi = characteristic_polynomial(a)
        for p in FF_PRIMES:
            assert chi(p) == count_complement(a, p)


def test_c7_polynomial_identities():
    with criterion("7 chi via lattice = chi via Tutte; coboundary/Tutte round trips"):
        corpus = [A(q) for q in (Q5, Q6, Q7, "x*y*z", "(x-y)*(x-z)*(y-z)")]
        corpus += [arr.from_polynomial("x*(x-1)*y*(x+y-3)", ["x", "y"])]
        corpus += random_corpus(seed=0, count=MAIN_SUITE_SIZE)
        for a in corpus:
            t, cb, rk = tutte(a), coboundary(a), a.total_rank()
            assert characteristic_polynomial(a) == char_from_tutte(a, t), a
            assert coboundary_from_tutte(t, rk) == cb, a
            assert tutte_from_coboundary(cb, rk) == t, a


def test_c8_quasi_polynomial():
    with criterion("8 complement counts fit one monic cubic per class mod 16", LIMIT_QUASI):
        a = A(Q7)
        assert rho0(a) == 16
        fits = quasi_polynomial_fits(a, 16, QUASI_SAMPLES, *QUASI_RANGE)
        assert len(fits) == 16
        for r, fit in fits.items():
            assert len(fit.samples) == QUASI_SAMPLES
            assert all(q % 16 == r and QUASI_RANGE[0] <= q <= QUASI_RANGE[1] for q, _ in fit.samples)
            assert fit.exact, (r, fit.residuals)


def _minor_gcd_factors(m):
    d, prev = [], 1
    for k in range(1, min(m.shape) + 1):
        g = 0
        for ri in itertools.combinations(range(m.rows), k):
            for ci in itertools.combinations(range(m.cols), k):
                sub = IntMatrix([[m[i, j] for j in ci] for i in ri])
                g = math.gcd(g, det(sub))
        if g == 0:
            break
        d.append(g // prev)
        prev = g
    return d


def test_c9_kernel_oracles():
    with criterion(f"9a SNF vs minor-gcd oracle on {SNF_ORACLE_MATRICES} random matrices"):
        rng = random.Random(2024)
        failures = 0
        for _ in range(SNF_ORACLE_MATRICES):
            r, c = rng.randint(1, 4), rng.randint(1, 4)
            m = IntMatrix([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
            s = snf(m)
            if list(s.d) != _minor_gcd_factors(m):
                failures += 1
            if not (s.s_transform @ m @ s.t_transform).is_diagonal():
                failures += 1
        assert failures == 0
    with criterion("9b every strong basis passes S/G reduction and membership checks"):
        failures = []
        arrangements = [A(q) for q in (Q5, Q6, Q7)] + random_corpus(seed=0, count=MAIN_SUITE_SIZE)
        ideals = [[parse_poly("x+y", XYZ), parse_poly("x+3*y+z", XYZ)]]
        for a in arrangements:
            for k in range(1, a.l + 1):
                for t in codim_tuples(a, k):
                    ideals.append([a.forms[i] for i in t])
        ideals.append(jacobian_generators(A(Q5)))
        for gens in ideals:
            basis = strong_groebner(gens, LEX, track_cofactors=True)
            failures += verify_strong_basis(basis, gens)
        assert failures == []


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_c")]
    for fn in tests:
        try:
            fn()
        except Exception:
            pass
    print("\n".join(RESULTS))
