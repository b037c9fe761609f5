"""Named property checks over built-in and seeded random arrangements.

Each check returns a :class:`CheckResult`; ``run_checks`` drives them for the
command line ``check`` subcommand.
"""

from __future__ import annotations

import random
from math import comb
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import arrangement as arr
from .enumpoly import (
    char_from_tutte,
    coboundary,
    coboundary_from_counts,
    coboundary_from_tutte,
    count_complement,
    tutte,
    tutte_from_coboundary,
)
from .lattice import build_lattice, characteristic_polynomial, comb_equivalent, theorem3_crosscheck
from .polyring import LEX, TermOrder, parse_poly, reduce_mod_p
from .primescan import (
    jacobian_lucky_excluded,
    k_lucky_excluded,
    lemma61_check,
    main_theorem_rows,
    nongood_primes,
    primes_up_to,
    rho0,
    theorem77_check,
)
from .strong_gb import strong_groebner, verify_strong_basis

XYZ = ["x", "y", "z"]

BUILTINS = {
    "boolean": "x*y*z",
    "braid": "(x-y)*(x-z)*(y-z)",
    "jacobian_example": "x*y*z*(x+y)*(x+2*y+z)",
    "pair_example": "x*y*(x+y)*(x+3*y+z)",
    "period_example": "z*(4*x+z)*(2*x+y)*(6*x+y+3*z)*(8*x+2*y+5*z)",
}


def builtin(name: str) -> arr.Arrangement:
    return arr.from_polynomial(BUILTINS[name], XYZ)


def random_corpus(seed: int, count: int = 50) -> list[arr.Arrangement]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        l = rng.choice([2, 3])
        n = rng.randint(l, 6)
        out.append(arr.random_central_essential(rng, l, n))
    return out


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "failures": self.failures}


def _result(name, failures, cases):
    return CheckResult(name, not failures, cases, failures)


@dataclass
class CheckConfig:
    seed: int = 0
    count: int = 50
    order: TermOrder = LEX
    extra: tuple = ()


def _essential_corpus(cfg: CheckConfig):
    return [builtin(k) for k in ("boolean", "jacobian_example", "pair_example", "period_example")] \
        + random_corpus(cfg.seed, cfg.count) + list(cfg.extra)


def check_goldens(cfg: CheckConfig) -> CheckResult:
    fails = []
    gens = [parse_poly("x+y", XYZ), parse_poly("x+3*y+z", XYZ)]
    basis = strong_groebner(gens, cfg.order)
    if sorted(g.to_str(XYZ) for g in basis) != ["2*y + z", "x + y"]:
        fails.append(f"pair basis {[g.to_str(XYZ) for g in basis]}")
    if basis.excluded_primes() != {2}:
        fails.append("pair ideal: excluded primes != {2}")
    if reduce_mod_p(gens[1], 2).to_str(XYZ) != "x + y + z":
        fails.append("(x+3y+z) mod 2 != x+y+z")
    pair = lemma61_check(arr.build(gens, 3, XYZ), 2, cfg.order)
    if pair.converse_counterexamples != [(0, 1)]:
        fails.append(f"pair ideal mod 2: expected a non-proportional non-lucky pair, got {pair.pairs}")
    a5, a6, a7 = builtin("jacobian_example"), builtin("pair_example"), builtin("period_example")
    expect = [
        ("jacobian_example k=3", k_lucky_excluded(a5, 3, cfg.order), {2}),
        ("jacobian_example jacobian", jacobian_lucky_excluded(a5, cfg.order), {2, 3, 5}),
        ("pair_example k=2", k_lucky_excluded(a6, 2, cfg.order), {2, 3}),
        ("pair_example nongood", nongood_primes(a6), set()),
        ("period_example nongood", nongood_primes(a7), {2}),
        ("period_example k=3", k_lucky_excluded(a7, 3, cfg.order), {2}),
        ("period_example rho0", rho0(a7), 16),
    ]
    for label, got, want in expect:
        if got != want:
            fails.append(f"{label}: got {got}, expected {want}")
    if not theorem77_check(a7, cfg.order):
        fails.append("period_example: period comparison fails")
    if characteristic_polynomial(a5) != characteristic_polynomial(arr.reduce(a5, 3)):
        fails.append("jacobian_example: chi differs mod 3")
    return _result("goldens", fails, len(expect) + 6)


def check_essential(cfg: CheckConfig) -> CheckResult:
    fails = []
    corpus = _essential_corpus(cfg) + [
        builtin("braid"),
        arr.from_polynomial("x*(x-1)*y", ["x", "y"]),
        arr.from_polynomial("x*(x-1)", ["x", "y"]),
    ]
    for a in corpus:
        e1 = arr.is_essential(a)
        e2 = arr.projectively_essential(a)
        e3 = len(arr.bar_index_set(a)) != comb(a.n + 1, a.l + 1)
        if not e1 == e2 == e3:
            fails.append(f"{a!r}: {e1}, {e2}, {e3}")
    return _result("essential", fails, len(corpus))


def check_index_sets(cfg: CheckConfig) -> CheckResult:
    fails = []
    corpus = _essential_corpus(cfg)
    cases = 0
    for a in corpus:
        for p in primes_up_to(13):
            if p in nongood_primes(a):
                continue
            ap = arr.reduce(a, p)
            cases += 1
            lhs = arr.bar_index_set(a) == arr.bar_index_set(ap)
            rhs = arr.frak_index_set(a) == arr.frak_index_set(ap)
            if lhs != rhs:
                fails.append(f"{a!r}, p={p}")
    return _result("index_sets", fails, cases)


def check_theorem3(cfg: CheckConfig) -> CheckResult:
    fails = []
    cases = 0
    for a in _essential_corpus(cfg):
        for p in primes_up_to(13):
            ap = arr.reduce(a, p, check_good=False)
            if not ap.is_essential():
                continue
            cases += 1
            if not theorem3_crosscheck(a, ap):
                fails.append(f"{a!r}, p={p}")
    return _result("theorem3", fails, cases)


def check_main_theorem(cfg: CheckConfig) -> CheckResult:
    fails = []
    cases = 0
    for a in _essential_corpus(cfg):
        for row in main_theorem_rows(a, primes_up_to(50), cfg.order):
            cases += 1
            if not row.consistent:
                fails.append(f"{a!r}: {row}")
    return _result("main_theorem", fails, cases)


def check_lemma61(cfg: CheckConfig) -> CheckResult:
    fails = []
    cases = 0
    for a in _essential_corpus(cfg):
        for p in sorted(nongood_primes(a) | {2, 3}):
            cases += 1
            if not lemma61_check(a, p, cfg.order):
                fails.append(f"{a!r}, p={p}")
    return _result("lemma61", fails, cases)


def check_nongood_lucky(cfg: CheckConfig) -> CheckResult:
    fails = []
    corpus = _essential_corpus(cfg)
    for a in corpus:
        if a.l >= 2 and not nongood_primes(a) <= k_lucky_excluded(a, 2, cfg.order):
            fails.append(f"{a!r}")
    return _result("nongood_lucky", fails, len(corpus))


def check_theorem77(cfg: CheckConfig) -> CheckResult:
    fails = []
    corpus = _essential_corpus(cfg)
    for a in corpus:
        res = theorem77_check(a, cfg.order)
        if not res:
            fails.append(f"{a!r}: {res.discrepancies}")
    return _result("theorem77", fails, len(corpus))


def check_polynomials(cfg: CheckConfig) -> CheckResult:
    fails = []
    corpus = _essential_corpus(cfg) + [builtin("braid")]
    for a in corpus:
        t, cb, rk = tutte(a), coboundary(a), a.total_rank()
        if characteristic_polynomial(a) != char_from_tutte(a, t):
            fails.append(f"{a!r}: chi routes differ")
        if coboundary_from_tutte(t, rk) != cb or tutte_from_coboundary(cb, rk) != t:
            fails.append(f"{a!r}: Tutte/coboundary round trip")
    return _result("polynomials", fails, len(corpus))


def check_ffmethod(cfg: CheckConfig) -> CheckResult:
    fails = []
    a = builtin("jacobian_example")
    if coboundary_from_counts(a, [3, 5, 7, 11], cfg.order) != coboundary(a):
        fails.append("interpolated coboundary differs")
    chi = characteristic_polynomial(a)
    for p in (3, 5, 7, 11):
        if count_complement(a, p) != chi(p):
            fails.append(f"count mod {p} differs from chi({p})")
    return _result("ffmethod", fails, 5)


def check_lattice(cfg: CheckConfig) -> CheckResult:
    fails = []
    corpus = _essential_corpus(cfg)
    for a in corpus:
        m = build_lattice(a)
        for f in m.flats:
            if f.rank != a.rank_of(f.hyperplanes):
                fails.append(f"{a!r}: rank of flat {f.sorted_hyperplanes}")
            # sum of mu over [bottom, f] vanishes above the bottom
            lower = [g for g in m.flats if g.hyperplanes <= f.hyperplanes]
            if f.rank and sum(m.mobius[g.key] for g in lower):
                fails.append(f"{a!r}: Moebius sum at {f.sorted_hyperplanes}")
        if characteristic_polynomial(m)(1) != 0:
            fails.append(f"{a!r}: chi(1) != 0")
    return _result("lattice", fails, len(corpus))


CHECKS: dict[str, Callable[[CheckConfig], CheckResult]] = {
    "goldens": check_goldens,
    "essential": check_essential,
    "index_sets": check_index_sets,
    "theorem3": check_theorem3,
    "main_theorem": check_main_theorem,
    "lemma61": check_lemma61,
    "nongood_lucky": check_nongood_lucky,
    "theorem77": check_theorem77,
    "polynomials": check_polynomials,
    "ffmethod": check_ffmethod,
    "lattice": check_lattice,
}


def run_checks(only=None, seed: int = 0, count: int = 50, order: TermOrder = LEX,
               extra: Sequence[arr.Arrangement] = ()) -> list[CheckResult]:
    names = list(CHECKS) if not only else list(only)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    cfg = CheckConfig(seed, count, order, tuple(extra))
    return [CHECKS[n](cfg) for n in names]
