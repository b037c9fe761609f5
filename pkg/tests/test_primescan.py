import random

import pytest

from hyparr import arrangement as arr
from hyparr.intmat import IntMatrix, snf
from hyparr.polyring import DEGREVLEX, LEX
from hyparr.primescan import (
    codim_tuples,
    jacobian_generators,
    jacobian_lucky_excluded,
    k_lucky_excluded,
    largest_invariant_factors,
    lemma61_check,
    lucky_excluded_by_tuple,
    main_theorem_rows,
    nongood_primes,
    prime_report,
    primes_up_to,
    rho0,
    theorem77_check,
)


def test_nongood(a6, a7, boolean):
    assert nongood_primes(a7) == {2}
    assert nongood_primes(a6) == set()
    assert nongood_primes(boolean) == set()


def test_k_lucky(a5, a6, boolean):
    assert k_lucky_excluded(a6, 2) == {2, 3}
    assert k_lucky_excluded(a5, 3) == {2}
    for k in (1, 2, 3):
        assert k_lucky_excluded(boolean, k) == set()


def test_k_lucky_range(a5):
    with pytest.raises(ValueError):
        k_lucky_excluded(a5, 4)


def test_k_lucky_threads_agree(a5):
    assert lucky_excluded_by_tuple(a5, 3, workers=2) == lucky_excluded_by_tuple(a5, 3, workers=1)


def test_codim_tuples(a5):
    assert len(codim_tuples(a5, 3)) == 9
    assert len(codim_tuples(a5, 2)) == 10


def test_rho0(a7, boolean, braid, a5):
    assert rho0(a7) == 16
    assert rho0(boolean) == 1
    assert rho0(braid) == 1
    assert rho0(a5) == 2


def test_invariant_factor_hand_cases(a7):
    e = largest_invariant_factors(a7)
    # columns (4,0,1), (8,2,5): 2x2 minors 8, 12, -2
    assert e[(1, 4)] == 2
    assert snf(IntMatrix.from_columns([(4, 0, 1), (8, 2, 5)])).d == (1, 2)
    assert max(e.values()) == 16


def test_theorem77(a5, a7):
    r = theorem77_check(a7)
    assert r.holds and set(r.left) == {2}
    assert theorem77_check(a5).holds
    assert theorem77_check(a7, DEGREVLEX).holds


def test_theorem77_random():
    rng = random.Random(5)
    for _ in range(20):
        a = arr.random_central_essential(rng, rng.choice([2, 3]), rng.randint(3, 6))
        assert theorem77_check(a).holds, a


def test_jacobian(a5, boolean):
    assert jacobian_lucky_excluded(a5, DEGREVLEX) == {2, 3, 5}
    assert jacobian_lucky_excluded(arr.from_polynomial("x", ["x"])) == set()
    assert jacobian_lucky_excluded(boolean) == set()
    assert len(jacobian_generators(a5, include_q=True)) == 4


@pytest.mark.slow
def test_jacobian_lex(a5):
    assert jacobian_lucky_excluded(a5, LEX) == {2, 3, 5}


def test_lemma61(a7, boolean):
    res = lemma61_check(a7, 2)
    assert res.holds
    prop = [pr for pr in res.pairs if pr.proportional_mod_p]
    assert any(pr.pair == (1, 4) for pr in prop)
    assert all(not pr.lucky for pr in prop)
    assert lemma61_check(boolean, 2).holds


def test_lemma61_converse_fails():
    pair = arr.from_polynomial("(x+y)*(x+3*y+z)", ["x", "y", "z"])
    res = lemma61_check(pair, 2)
    assert res.holds
    assert res.converse_counterexamples == [(0, 1)]


def test_prime_report(a7):
    rep = prime_report(a7)
    assert rep.to_json()["rho0"] == 16
    assert rep.rho0_primes == {2}
    assert not rep.equivalent(2) and rep.equivalent(3)
    with pytest.raises(arr.NotEssential):
        prime_report(arr.from_polynomial("(x-y)*(x-z)*(y-z)", ["x", "y", "z"]))


def test_main_theorem_rows(a5):
    rows = main_theorem_rows(a5, primes_up_to(20))
    assert all(r.consistent for r in rows)
    assert [r.p for r in rows if not r.combinatorial] == [2]


def test_primes_up_to():
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
