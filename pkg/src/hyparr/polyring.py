"""Sparse multivariate polynomials with integer (or mod-p) coefficients.

Monomials are exponent tuples.  A :class:`Poly` is a mapping from monomials
to nonzero coefficients; when ``modulus`` is set the coefficients live in
``{0, ..., p-1}`` and every operation reduces eagerly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class TermOrder:
    """Lexicographic or degree-reverse-lexicographic order, ``x1 > x2 > ...``."""

    kind: str = "lex"

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown term order {self.kind!r}")

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m
        return (sum(m),) + tuple(-e for e in reversed(m))

    def __str__(self) -> str:
        return self.kind


LEX = TermOrder("lex")
DEGREVLEX = TermOrder("degrevlex")


def term_order(name: str | TermOrder | None) -> TermOrder:
    if name is None:
        return LEX
    if isinstance(name, TermOrder):
        return name
    return TermOrder(name)


@dataclass(frozen=True)
class LeadingData:
    lt: Monomial
    lc: int

    @property
    def lm(self) -> tuple[int, Monomial]:
        return (self.lc, self.lt)


def default_variables(nvars: int) -> list[str]:
    if nvars <= 4:
        return ["x", "y", "z", "w"][:nvars]
    return [f"x{i}" for i in range(1, nvars + 1)]


def monomial_divides(s: Monomial, t: Monomial) -> bool:
    return all(a <= b for a, b in zip(s, t))


def monomial_lcm(s: Monomial, t: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(s, t))


def monomial_quotient(t: Monomial, s: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(t, s))


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "modulus", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = (),
                 nvars: int | None = None, modulus: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        for m, c in items:
            m = tuple(m)
            c = int(c)
            if modulus is not None:
                c %= modulus
            if c:
                clean[m] = clean.get(m, 0) + c
        if modulus is not None:
            clean = {m: c % modulus for m, c in clean.items()}
        clean = {m: c for m, c in clean.items() if c}
        if nvars is None:
            if not clean:
                raise ValueError("nvars required for an empty polynomial")
            nvars = len(next(iter(clean)))
        for m in clean:
            if len(m) != nvars or any(e < 0 for e in m):
                raise ValueError(f"bad monomial {m} for {nvars} variables")
        self.nvars = nvars
        self.terms = clean
        self.modulus = modulus
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, nvars: int, modulus: int | None = None) -> Poly:
        return cls({}, nvars, modulus)

    @classmethod
    def constant(cls, c: int, nvars: int, modulus: int | None = None) -> Poly:
        return cls({(0,) * nvars: c}, nvars, modulus)

    @classmethod
    def variable(cls, i: int, nvars: int, modulus: int | None = None) -> Poly:
        """The ``i``-th variable, 0-based."""
        m = [0] * nvars
        m[i] = 1
        return cls({tuple(m): 1}, nvars, modulus)

    @classmethod
    def linear(cls, coeffs: Sequence[int], constant: int = 0, modulus: int | None = None) -> Poly:
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            m = [0] * n
            m[i] = 1
            terms[tuple(m)] = c
        terms[(0,) * n] = constant
        return cls(terms, n, modulus)

    def _new(self, terms: Mapping[Monomial, int]) -> Poly:
        return Poly(terms, self.nvars, self.modulus)

    # basic protocol
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.constant(other, self.nvars, self.modulus)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.modulus == other.modulus and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.modulus, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars or other.modulus != self.modulus:
                raise ValueError("incompatible polynomial rings")
            return other
        if isinstance(other, int):
            return Poly.constant(other, self.nvars, self.modulus)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return self._new({m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        out = Poly.constant(1, self.nvars, self.modulus)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_term(self, c: int, m: Monomial) -> Poly:
        return self._new({tuple(a + b for a, b in zip(mm, m)): cc * c for mm, cc in self.terms.items()})

    # inspection
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def sorted_terms(self, order: TermOrder = LEX) -> list[tuple[Monomial, int]]:
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.sorted_terms())

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)

    def linear_coefficients(self) -> tuple[list[int], int]:
        """(coefficients of x1..xl, constant term) of a degree <= 1 polynomial."""
        if self.degree() > 1:
            raise ValueError("polynomial is not of degree <= 1")
        coeffs = [0] * self.nvars
        for i in range(self.nvars):
            m = [0] * self.nvars
            m[i] = 1
            coeffs[i] = self.terms.get(tuple(m), 0)
        return coeffs, self.terms.get((0,) * self.nvars, 0)

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return total % self.modulus if self.modulus else total

    def to_str(self, variables: Sequence[str] | None = None, order: TermOrder = LEX) -> str:
        return format_poly(self, variables, order)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        mod = f", mod {self.modulus}" if self.modulus else ""
        return f"Poly({format_poly(self)!r}{mod})"


def leading(f: Poly, order: TermOrder = LEX) -> LeadingData:
    """Leading term and coefficient of ``f`` under ``order``."""
    if not f:
        raise ValueError("zero polynomial has no leading term")
    m = max(f.terms, key=order.key)
    return LeadingData(m, f.terms[m])


def partial_derivative(f: Poly, i: int) -> Poly:
    """Formal partial derivative with respect to variable ``i`` (0-based)."""
    if not 0 <= i < f.nvars:
        raise IndexError(f"variable index {i} out of range for {f.nvars} variables")
    out = {}
    for m, c in f.terms.items():
        if m[i]:
            mm = list(m)
            mm[i] -= 1
            out[tuple(mm)] = c * m[i]
    return Poly(out, f.nvars, f.modulus)


def content(f: Poly) -> int:
    """Gcd of the coefficients (0 for the zero polynomial)."""
    return math.gcd(*f.terms.values()) if f.terms else 0


def primitive_part(f: Poly, order: TermOrder = LEX) -> Poly:
    """``f / content(f)``, signed so the leading coefficient is positive."""
    if not f:
        return f
    g = content(f)
    if leading(f, order).lc < 0:
        g = -g
    return Poly({m: c // g for m, c in f.terms.items()}, f.nvars)


def reduce_mod_p(f: Poly, p: int) -> Poly:
    """Image of ``f`` in F_p[x], coefficients in ``[0, p)``."""
    return Poly(f.terms, f.nvars, modulus=p)


def format_poly(f: Poly, variables: Sequence[str] | None = None, order: TermOrder = LEX) -> str:
    """Canonical text: terms in descending order, e.g. ``x + 2*y - z``."""
    if variables is None:
        variables = default_variables(f.nvars)
    if not f:
        return "0"
    parts = []
    for m, c in f.sorted_terms(order):
        factors = []
        for v, e in zip(variables, m):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}^{e}")
        mono = "*".join(factors)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def format_product(factors: Sequence[Poly], variables: Sequence[str] | None = None) -> str:
    out = []
    for f in factors:
        s = format_poly(f, variables)
        out.append(f"({s})" if len(f) > 1 else s)
    return "*".join(out)


class ParseError(ValueError):
    """Syntax error in a polynomial expression; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}" + (f": {text!r}" if text else ""))
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        start = mt.start(mt.lastindex)
        if mt.group(1):
            toks.append(("int", mt.group(1), start))
        elif mt.group(2):
            toks.append(("name", mt.group(2), start))
        else:
            ch = mt.group(3)
            if ch not in "+-*()^":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            toks.append((ch, ch, start))
        pos = mt.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = {name: k for k, name in enumerate(variables)}
        for k in range(len(variables)):
            self.vars.setdefault(f"x{k + 1}", k)
        self.nvars = len(variables)

    @property
    def tok(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.tok
        if kind is not None and t[0] != kind:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise ParseError(f"expected {kind!r}, found {what}", t[2], self.text)
        self.i += 1
        return t

    def error(self, msg):
        raise ParseError(msg, self.tok[2], self.text)

    def var(self) -> Poly:
        t = self.take("name")
        if t[1] not in self.vars:
            raise ParseError(f"unknown variable {t[1]!r}", t[2], self.text)
        return Poly.variable(self.vars[t[1]], self.nvars)

    # linear grammar: product of degree-one factors
    def term(self) -> Poly:
        if self.tok[0] == "int":
            c = int(self.take()[1])
            if self.tok[0] == "*" and self.toks[self.i + 1][0] == "name":
                self.take("*")
                return self.var() * c
            return Poly.constant(c, self.nvars)
        if self.tok[0] == "name":
            return self.var()
        self.error("expected a term")

    def sum(self) -> Poly:
        sign = 1
        if self.tok[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        total = self.term() * sign
        while self.tok[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            total = total + self.term() * sign
        return total

    def factor(self) -> tuple[Poly, int]:
        pos = self.tok[2]
        if self.tok[0] == "(":
            self.take("(")
            f = self.sum()
            self.take(")")
        else:
            f = self.term()
        return f, pos

    def product(self) -> list[tuple[Poly, int]]:
        out = [self.factor()]
        while self.tok[0] == "*":
            self.take("*")
            out.append(self.factor())
        return out

    # general polynomial grammar with powers
    def expr(self) -> Poly:
        sign = 1
        if self.tok[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        total = self.mono() * sign
        while self.tok[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            total = total + self.mono() * sign
        return total

    def mono(self) -> Poly:
        out = self.power()
        while self.tok[0] == "*":
            self.take("*")
            out = out * self.power()
        return out

    def power(self) -> Poly:
        t = self.tok
        if t[0] == "int":
            base = Poly.constant(int(self.take()[1]), self.nvars)
        elif t[0] == "name":
            base = self.var()
        elif t[0] == "(":
            self.take("(")
            base = self.expr()
            self.take(")")
        elif t[0] == "-":
            self.take()
            return -self.power()
        else:
            self.error("expected an operand")
        if self.tok[0] == "^":
            self.take("^")
            base = base ** int(self.take("int")[1])
        return base


def parse_product(text: str, variables: Sequence[str]) -> list[Poly]:
    """Parse a product of degree-one factors, e.g. ``x*y*(x+2*y+z)``.

    A bare sum such as ``x+3*y+z`` is accepted as a single factor.  Factors
    may carry a constant term (affine hyperplanes).
    """
    p = _Parser(text, variables)
    try:
        parsed = p.product()
        p.take("end")
    except ParseError as first:
        p = _Parser(text, variables)
        try:
            parsed = [(p.sum(), 0)]
            p.take("end")
        except ParseError:
            raise first from None
    out = []
    for f, pos in parsed:
        if not f:
            raise ParseError("zero factor", pos, text)
        if f.degree() != 1:
            raise ParseError(f"factor {format_poly(f, variables)!r} is not of degree 1", pos, text)
        out.append(f)
    return out


def parse_poly(text: str, variables: Sequence[str]) -> Poly:
    """Parse a general integer polynomial with ``+ - * ^`` and parentheses."""
    p = _Parser(text, variables)
    f = p.expr()
    p.take("end")
    return f
