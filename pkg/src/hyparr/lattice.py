"""Intersection lattices, Moebius function and characteristic polynomials.

Flats are keyed by the reduced row echelon form of the (augmented) rows of
the hyperplanes containing them, computed over the arrangement's field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .arrangement import Arrangement, ModularArrangement, NotEssential, _HyperplaneSystem, bar_index_set
from .intmat import rref_mod_p, rref_rational

DEFAULT_SUBSET_CAP = 20


class LatticeBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CharPoly:
    """Univariate integer polynomial in t, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        total = 0
        for c in reversed(self.coeffs):
            total = total * t + c
        return total

    def tolist(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            a = abs(c)
            body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append(body if not parts and c > 0 else (f"-{body}" if not parts else f"{sign} {body}"))
        return " ".join(parts) or "0"


@dataclass(frozen=True)
class Flat:
    key: tuple
    rank: int
    hyperplanes: frozenset[int]

    @property
    def sorted_hyperplanes(self) -> list[int]:
        return sorted(self.hyperplanes)


@dataclass
class LatticeModel:
    l: int
    field: int | None
    flats: list[Flat]
    mobius: dict[tuple, int] = field(default_factory=dict)

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    def mu(self, flat: Flat) -> int:
        return self.mobius[flat.key]

    def below(self, flat: Flat) -> list[Flat]:
        """Flats strictly below ``flat`` (strictly larger subspaces)."""
        return [y for y in self.flats if y.hyperplanes < flat.hyperplanes]

    def rank_counts(self) -> list[int]:
        counts = [0] * (self.l + 1)
        for f in self.flats:
            counts[f.rank] += 1
        return counts

    def signature(self) -> list[tuple[int, tuple[int, ...], int]]:
        """Field-independent description: (rank, hyperplanes, mu) per flat."""
        return sorted((f.rank, tuple(f.sorted_hyperplanes), self.mobius[f.key]) for f in self.flats)

    def records(self) -> list[dict]:
        out = []
        for f in self.flats:
            out.append({
                "key": [[str(v) for v in row] for row in f.key],
                "rank": f.rank,
                "mu": self.mobius[f.key],
                "hyperplanes": f.sorted_hyperplanes,
            })
        return out


def _rref(system: _HyperplaneSystem, rows: Sequence[Sequence[int]]):
    if system.field is None:
        return rref_rational(rows)
    return rref_mod_p(rows, system.field)


def _flat_key(system: _HyperplaneSystem, idx: Sequence[int]):
    """Key of the intersection of ``idx``; ``None`` if it is empty."""
    rows = [system.rows[i] for i in idx]
    if not rows:
        return ()
    key = _rref(system, rows)
    last = system.l
    for row in key:
        if all(v == 0 for v in row[:last]) and row[last] != 0:
            return None
    if system.is_central:
        key = tuple(row[:last] for row in key)
    return key


def _contains(system: _HyperplaneSystem, key, i: int) -> bool:
    """Whether hyperplane ``i`` contains the flat with echelon rows ``key``."""
    row = system.rows[i] if not system.is_central else system.rows[i][:-1]
    return len(_rref(system, list(key) + [row])) == len(key)


def build_lattice(a: Arrangement | ModularArrangement, subset_cap: int = DEFAULT_SUBSET_CAP) -> LatticeModel:
    """Enumerate the intersection poset by closure, rank by rank."""
    if a.n > subset_cap:
        raise LatticeBudgetExceeded(f"{a.n} hyperplanes exceed the cap of {subset_cap}")
    bottom = Flat((), 0, frozenset())
    flats = {(): bottom}
    frontier = [bottom]
    while frontier:
        nxt = {}
        for x in frontier:
            for i in range(a.n):
                if i in x.hyperplanes:
                    continue
                idx = sorted(x.hyperplanes | {i})
                key = _flat_key(a, idx)
                if key is None or key in flats or key in nxt:
                    continue
                hyps = frozenset(j for j in range(a.n) if _contains(a, key, j))
                nxt[key] = Flat(key, len(key), hyps)
        flats.update(nxt)
        frontier = list(nxt.values())
    ordered = sorted(flats.values(), key=lambda f: (f.rank, sorted(f.hyperplanes)))
    model = LatticeModel(a.l, a.field, ordered)
    for f in ordered:
        if f.rank == 0:
            model.mobius[f.key] = 1
        else:
            model.mobius[f.key] = -sum(model.mobius[y.key] for y in ordered
                                       if y.rank < f.rank and y.hyperplanes < f.hyperplanes)
    return model


def characteristic_polynomial(m: LatticeModel | Arrangement | ModularArrangement) -> CharPoly:
    """Sum of mu(X) t^dim(X) over the lattice."""
    if not isinstance(m, LatticeModel):
        m = build_lattice(m)
    coeffs = [0] * (m.l + 1)
    for f in m.flats:
        coeffs[m.l - f.rank] += m.mobius[f.key]
    return CharPoly(tuple(coeffs))


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    witness: tuple[int, ...] | None = None
    dims: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def comb_equivalent(a: _HyperplaneSystem, b: _HyperplaneSystem) -> Equivalence:
    """Compare intersection dimensions of every nonempty subset.

    Subsets are visited in lexicographic order so the reported witness is the
    lexicographically least one.
    """
    if a.n != b.n or a.l != b.l:
        raise ValueError(f"size mismatch: ({a.l}, {a.n}) vs ({b.l}, {b.n})")
    n = a.n

    def visit(prefix):
        start = prefix[-1] + 1 if prefix else 0
        for i in range(start, n):
            t = prefix + (i,)
            da, db = a.dim_of(t), b.dim_of(t)
            if da != db:
                return Equivalence(False, t, (da, db))
            found = visit(t)
            if found is not None:
                return found
        return None

    found = visit(())
    return Equivalence(True) if found is None else found


def theorem3_crosscheck(a: _HyperplaneSystem, b: _HyperplaneSystem) -> bool:
    """Equality of the projective index sets agrees with combinatorial equivalence."""
    for x in (a, b):
        if not x.is_essential():
            raise NotEssential("both arrangements must be essential")
    same_bar = bar_index_set(a) == bar_index_set(b)
    return same_bar == bool(comb_equivalent(a, b))


def lattice_from_bar(a: _HyperplaneSystem) -> set[tuple[int, ...]]:
    """Subsets of size k <= l whose intersection has codimension k, read off
    the projective index set alone (a has to be essential)."""
    bar = bar_index_set(a)
    n, l = a.n, a.l
    out = set()
    full = [t for t in itertools.combinations(range(n), l) if t + (n,) not in bar]
    for k in range(1, l + 1):
        for t in itertools.combinations(range(n), k):
            st = set(t)
            if any(st <= set(f) for f in full):
                out.add(t)
    return out
