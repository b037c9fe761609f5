"""Hyperplane arrangements over the rationals and their reductions mod p.

An :class:`Arrangement` keeps its hyperplanes in input order as primitive
integer linear forms (optionally with a constant term).  Index tuples are
0-based throughout the library.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .intmat import IntMatrix, rank_mod_p, rank_rational
from .polyring import Poly, default_variables, parse_product, primitive_part


class ArrangementError(ValueError):
    """Domain error about an arrangement (bad input or unmet hypothesis)."""


class DuplicateHyperplane(ArrangementError):
    def __init__(self, i: int, j: int):
        super().__init__(f"hyperplanes {i} and {j} coincide")
        self.pair = (i, j)


class NotCentral(ArrangementError):
    pass


class NotEssential(ArrangementError):
    pass


class NotGood(ArrangementError):
    def __init__(self, p: int, pair: tuple[int, int]):
        super().__init__(f"p={p} is not good: hyperplanes {pair[0]} and {pair[1]} coincide mod {p}")
        self.p = p
        self.pair = pair


def _minors2_gcd(u: Sequence[int], v: Sequence[int]) -> int:
    return math.gcd(*(u[a] * v[b] - u[b] * v[a] for a in range(len(u)) for b in range(a + 1, len(u))))


class _HyperplaneSystem:
    """Shared rank/dimension queries over the working field.

    Subclasses provide ``l``, ``n``, ``field`` (``None`` for the rationals,
    else a prime) and ``rows``: one augmented row ``(a_1, ..., a_l, c)`` per
    hyperplane ``a.x + c = 0``.
    """

    l: int
    field: int | None

    @property
    def n(self) -> int:
        return len(self.rows)

    def _rank(self, rows: list[Sequence[int]], ncols: int) -> int:
        if not rows:
            return 0
        m = IntMatrix(rows, shape=(len(rows), ncols))
        return rank_rational(m) if self.field is None else rank_mod_p(m, self.field)

    def rank_of(self, idx: Iterable[int]) -> int:
        """Rank of the homogeneous coefficient vectors of the given hyperplanes."""
        return self._rank([self.rows[i][:-1] for i in idx], self.l)

    def dim_of(self, idx: Iterable[int]) -> int:
        """Dimension of the intersection; -1 when it is empty."""
        idx = list(idx)
        r = self.rank_of(idx)
        if not self.is_central and self._rank([self.rows[i] for i in idx], self.l + 1) > r:
            return -1
        return self.l - r

    def is_consistent(self, idx: Iterable[int]) -> bool:
        return self.dim_of(idx) >= 0

    @property
    def is_central(self) -> bool:
        return all(row[-1] == 0 for row in self.rows)

    def coned_rows(self) -> list[tuple[int, ...]]:
        """Rows of the coned arrangement: constants become the last variable."""
        extra = tuple([0] * self.l + [1])
        return [tuple(r) for r in self.rows] + [extra]

    def coned_rank(self, idx: Iterable[int]) -> int:
        rows = self.coned_rows()
        return self._rank([rows[i] for i in idx], self.l + 1)

    def total_rank(self) -> int:
        return self.rank_of(range(self.n))

    def is_essential(self) -> bool:
        return self.total_rank() == self.l


@dataclass(frozen=True, eq=False)
class Arrangement(_HyperplaneSystem):
    """Arrangement of distinct hyperplanes in Q^l, in input order."""

    l: int
    forms: tuple[Poly, ...]
    variables: tuple[str, ...]

    field = None

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for f in self.forms:
            coeffs, c = f.linear_coefficients()
            out.append(tuple(coeffs) + (c,))
        return tuple(out)

    @property
    def central(self) -> bool:
        return self.is_central

    @property
    def constants(self) -> tuple[int, ...]:
        return tuple(r[-1] for r in self.rows)

    @cached_property
    def matrix(self) -> IntMatrix:
        """The l x n matrix whose i-th column holds the coefficients of form i."""
        return IntMatrix.from_columns([r[:-1] for r in self.rows], nrows=self.l)

    def defining_polynomial(self) -> Poly:
        q = Poly.constant(1, self.l)
        for f in self.forms:
            q = q * f
        return q

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.l == other.l and self.rows == other.rows

    def __hash__(self):
        return hash((self.l, self.rows))

    def __repr__(self):
        from .polyring import format_product
        return f"Arrangement({format_product(self.forms, self.variables)!r}, l={self.l})"


@dataclass(frozen=True, eq=False)
class ModularArrangement(_HyperplaneSystem):
    """Reduction of a central arrangement modulo a prime ``p``."""

    p: int
    l: int
    columns: tuple[tuple[int, ...], ...]

    @property
    def field(self) -> int:
        return self.p

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c) + (0,) for c in self.columns)

    @property
    def forms_p(self) -> tuple[Poly, ...]:
        return tuple(Poly.linear(c, modulus=self.p) for c in self.columns)

    def is_good(self) -> bool:
        return not any(_minors2_gcd(u, v) % self.p == 0 for u, v in itertools.combinations(self.columns, 2))


def build(forms: Sequence[Poly], l: int | None = None, variables: Sequence[str] | None = None) -> Arrangement:
    """Normalize linear forms into an :class:`Arrangement`.

    Each form is divided by its content and signed so its leading coefficient
    is positive.  Proportional pairs are rejected.
    """
    forms = list(forms)
    if l is None:
        if not forms:
            raise ArrangementError("dimension required for an empty arrangement")
        l = forms[0].nvars
    variables = tuple(variables) if variables is not None else tuple(default_variables(l))
    if len(variables) != l:
        raise ArrangementError(f"{len(variables)} variable names for dimension {l}")
    normalized = []
    for i, f in enumerate(forms):
        if f.nvars != l:
            raise ArrangementError(f"form {i} lives in {f.nvars} variables, expected {l}")
        if not f:
            raise ArrangementError(f"form {i} is zero")
        if f.degree() > 1:
            raise ArrangementError(f"form {i} has degree {f.degree()}")
        if f.degree() == 0:
            raise ArrangementError(f"form {i} is a nonzero constant (empty hyperplane)")
        normalized.append(primitive_part(f))
    rows = [tuple(f.linear_coefficients()[0]) + (f.linear_coefficients()[1],) for f in normalized]
    for i, j in itertools.combinations(range(len(rows)), 2):
        if _minors2_gcd(rows[i], rows[j]) == 0:
            raise DuplicateHyperplane(i, j)
    return Arrangement(l, tuple(normalized), variables)


def from_matrix(columns: Sequence[Sequence[int]], constants: Sequence[int] | None = None,
                variables: Sequence[str] | None = None, l: int | None = None) -> Arrangement:
    """Arrangement whose i-th form has coefficient vector ``columns[i]``."""
    columns = [list(c) for c in columns]
    if l is None:
        if not columns:
            raise ArrangementError("dimension required for an empty arrangement")
        l = len(columns[0])
    constants = list(constants) if constants is not None else [0] * len(columns)
    if len(constants) != len(columns):
        raise ArrangementError("one constant per column required")
    return build([Poly.linear(c, k) for c, k in zip(columns, constants)], l, variables)


def from_polynomial(text: str, variables: Sequence[str]) -> Arrangement:
    return build(parse_product(text, variables), len(variables), variables)


def load(source: str | Path | dict) -> Arrangement:
    """Read the JSON input format.

    ``{"vars": [...], "polynomial": "..."}`` or
    ``{"vars": [...], "matrix": [[col], ...], "constants": [...]}``.
    """
    if isinstance(source, dict):
        data = source
    else:
        data = json.loads(Path(source).read_text())
    if not isinstance(data, dict) or "vars" not in data:
        raise ArrangementError("input must be an object with a 'vars' list")
    variables = list(data["vars"])
    if "polynomial" in data:
        return from_polynomial(data["polynomial"], variables)
    if "matrix" in data:
        return from_matrix(data["matrix"], data.get("constants"), variables, l=len(variables))
    raise ArrangementError("input needs 'polynomial' or 'matrix'")


def _new_variable(variables: Sequence[str]) -> str:
    for name in ("z", "w", "t", "u", "v"):
        if name not in variables:
            return name
    k = len(variables) + 1
    while f"x{k}" in variables:
        k += 1
    return f"x{k}"


def cone(a: Arrangement) -> Arrangement:
    """Homogenize with a new last variable and append it as a hyperplane."""
    l1 = a.l + 1
    columns = [r[:-1] + (r[-1],) for r in a.rows]
    columns.append((0,) * a.l + (1,))
    return from_matrix(columns, variables=list(a.variables) + [_new_variable(a.variables)], l=l1)


def is_essential(a: _HyperplaneSystem) -> bool:
    """Some l hyperplanes meet in a single point."""
    if a.is_central:
        return a.total_rank() == a.l
    return any(a.rank_of(t) == a.l for t in itertools.combinations(range(a.n), a.l))


def projectively_essential(a: _HyperplaneSystem) -> bool:
    """The projectivized arrangement has empty total intersection."""
    return a.coned_rank(range(a.n + 1)) == a.l + 1


def frak_index_set(a: _HyperplaneSystem, p: int | None = None) -> set[tuple[int, ...]]:
    """l-tuples of hyperplanes meeting in the origin.

    For an :class:`Arrangement` ``p`` selects the working field (rationals by
    default); a :class:`ModularArrangement` always uses its own prime.
    """
    if not a.is_central:
        raise NotCentral("index set of l-tuples needs a central arrangement; cone it first")
    if p is not None and isinstance(a, Arrangement):
        a = reduce(a, p, check_good=False)
    return {t for t in itertools.combinations(range(a.n), a.l) if a.rank_of(t) == a.l}


def bar_index_set(a: _HyperplaneSystem) -> set[tuple[int, ...]]:
    """(l+1)-tuples of coned hyperplanes (index n is infinity) with nonempty
    projective intersection."""
    return {t for t in itertools.combinations(range(a.n + 1), a.l + 1)
            if a.coned_rank(t) < a.l + 1}


def nongood_pairs(a: Arrangement, p: int) -> list[tuple[int, int]]:
    """Pairs of hyperplanes that become proportional modulo ``p``."""
    cols = [r[:-1] for r in a.rows]
    return [(i, j) for i, j in itertools.combinations(range(a.n), 2)
            if _minors2_gcd(cols[i], cols[j]) % p == 0]


def reduce(a: Arrangement, p: int, *, check_good: bool = True) -> ModularArrangement:
    """Reduction modulo ``p``; raises :class:`NotGood` for non-good primes
    unless ``check_good`` is false."""
    if not a.is_central:
        raise NotCentral("reduction mod p is defined for central arrangements")
    if check_good:
        bad = nongood_pairs(a, p)
        if bad:
            raise NotGood(p, bad[0])
    return ModularArrangement(p, a.l, tuple(tuple(v % p for v in r[:-1]) for r in a.rows))


def random_central_essential(rng: random.Random, l: int, n: int, lo: int = -5, hi: int = 5,
                             max_tries: int = 1000) -> Arrangement:
    """Random central essential arrangement with entries in ``[lo, hi]``."""
    for _ in range(max_tries):
        cols: list[tuple[int, ...]] = []
        seen = set()
        while len(cols) < n:
            v = [rng.randint(lo, hi) for _ in range(l)]
            g = math.gcd(*v)
            if g == 0:
                continue
            v = [x // g for x in v]
            lead = next(x for x in v if x)
            if lead < 0:
                v = [-x for x in v]
            if tuple(v) in seen:
                continue
            seen.add(tuple(v))
            cols.append(tuple(v))
        a = from_matrix(cols, l=l)
        if a.is_essential():
            return a
    raise ArrangementError("could not draw an essential arrangement")
