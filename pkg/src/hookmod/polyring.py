"""Sparse exact polynomials in ``x_1..x_n, y_1..y_n``.

A monomial is stored as one exponent tuple of length ``2n``: the x-exponents
followed by the y-exponents. Coefficients are Python ``int`` or
``fractions.Fraction``; nothing here ever touches floating point.

Monomials are ordered graded-lexicographically with
``x_1 > ... > x_n > y_1 > ... > y_n``; :func:`monomial_key` is the sort key and
every listing of terms is in decreasing order.
"""

from __future__ import annotations

import re
from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence, Union

from hookmod.errors import ParseError

Coeff = Union[int, Fraction]


class Monomial(tuple):
    """Exponent tuple ``(p_1..p_n, q_1..q_n)`` for ``prod x_i^p_i y_i^q_i``."""

    def __new__(cls, exps: Iterable[int]):
        exps = tuple(exps)
        if len(exps) % 2:
            raise ValueError("monomial needs 2n exponents")
        return super().__new__(cls, exps)

    @classmethod
    def from_xy(cls, xexp: Sequence[int], yexp: Sequence[int]) -> "Monomial":
        if len(xexp) != len(yexp):
            raise ValueError("x and y exponent vectors must have equal length")
        return cls(tuple(xexp) + tuple(yexp))

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * (2 * n))

    @property
    def n(self) -> int:
        return len(self) // 2

    @property
    def xexp(self) -> tuple[int, ...]:
        return tuple(self[: len(self) // 2])

    @property
    def yexp(self) -> tuple[int, ...]:
        return tuple(self[len(self) // 2:])

    @property
    def bidegree(self) -> tuple[int, int]:
        h = len(self) // 2
        return sum(self[:h]), sum(self[h:])

    def supp_x(self) -> frozenset[int]:
        return frozenset(i + 1 for i, p in enumerate(self.xexp) if p)

    def supp_y(self) -> frozenset[int]:
        return frozenset(j + 1 for j, q in enumerate(self.yexp) if q)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def factorial_weight(self) -> int:
        """``prod p_i! prod q_j!``, the pairing of this monomial with itself."""
        return prod(factorial(e) for e in self if e > 1)

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"


def monomial_key(m: Sequence[int]) -> tuple:
    """Graded-lex key; larger key means larger monomial."""
    return (sum(m), tuple(m))


def in_Mnk(m: Sequence[int], n: int, k: int) -> bool:
    """Membership in ``M_n^(k)``: the normal-form monomials of ``P_n^(k)``."""
    sx = sy = 0
    for i in range(n):
        p, q = m[i], m[n + i]
        if p and q:
            return False
        sx += p > 0
        sy += q > 0
    return sx <= k - 1 and sy <= n - k


def var_index(name: str, n: int) -> int:
    """Flat index of ``"x3"`` / ``"y1"`` in the ``2n`` exponent tuple."""
    match = re.fullmatch(r"([xy])(\d+)", name)
    if not match:
        raise ParseError(f"bad variable {name!r}")
    i = int(match.group(2))
    if not 1 <= i <= n:
        raise ParseError(f"variable {name} out of range for n={n}")
    return i - 1 if match.group(1) == "x" else n + i - 1


class Polynomial:
    """Finite map ``Monomial -> nonzero rational``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], Coeff] | None = None):
        self.n = n
        self.terms: dict[Monomial, Coeff] = {}
        for m, c in (terms or {}).items():
            if c:
                key = m if isinstance(m, Monomial) else Monomial(m)
                if len(key) != 2 * n:
                    raise ValueError(f"monomial {m} has wrong length for n={n}")
                self.terms[key] = _normalize(c)

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Polynomial":
        """Wrap an already-clean term dict without copying or validation."""
        poly = cls.__new__(cls)
        poly.n = n
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: Coeff = 1) -> "Polynomial":
        return cls(n, {Monomial.one(n): c})

    @classmethod
    def from_monomial(cls, m: Sequence[int], c: Coeff = 1) -> "Polynomial":
        return cls(len(m) // 2, {Monomial(m): c})

    @classmethod
    def variable(cls, name: str, n: int) -> "Polynomial":
        exps = [0] * (2 * n)
        exps[var_index(name, n)] = 1
        return cls(n, {Monomial(exps): 1})

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        acc = dict(self.terms)
        for m, c in other.terms.items():
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Polynomial._raw(self.n, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: Coeff) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {m: _normalize(v * c) for m, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        acc: dict = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
        return Polynomial._raw(
            self.n, {Monomial(m): _normalize(c) for m, c in acc.items() if c}
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Coeff]]:
        """Terms in decreasing monomial order."""
        for m in sorted(self.terms, key=monomial_key, reverse=True):
            yield m, self.terms[m]

    def coefficient(self, m: Sequence[int]) -> Coeff:
        return self.terms.get(Monomial(m), 0)

    # -- structure ------------------------------------------------------

    def bidegrees(self) -> set[tuple[int, int]]:
        return {m.bidegree for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def bidegree(self) -> tuple[int, int]:
        degs = self.bidegrees()
        if len(degs) != 1:
            raise ValueError("polynomial is zero or not bihomogeneous")
        return next(iter(degs))

    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=monomial_key)

    def partial(self, var: int | str) -> "Polynomial":
        """Exact partial derivative in the variable with flat index (or name) ``var``."""
        idx = var_index(var, self.n) if isinstance(var, str) else var
        acc = {}
        for m, c in self.terms.items():
            e = m[idx]
            if e:
                acc[Monomial(m[:idx] + (e - 1,) + m[idx + 1:])] = c * e
        return Polynomial._raw(self.n, acc)

    def permute_variables(self, sigma: Sequence[int]) -> "Polynomial":
        """Diagonal substitution ``x_i -> x_sigma(i), y_i -> y_sigma(i)``."""
        n = self.n
        acc = {}
        for m, c in self.terms.items():
            new = [0] * (2 * n)
            for i in range(n):
                j = sigma[i] - 1
                new[j] = m[i]
                new[n + j] = m[n + i]
            acc[Monomial(new)] = c
        return Polynomial._raw(n, acc)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {to_text(self)!r})"


def _normalize(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


# ---------------------------------------------------------------- pairing


def diff_pair(f: Polynomial, g: Polynomial) -> Coeff:
    """``<f, g>`` = constant term of ``f(d/dx, d/dy) g``.

    Distinct monomials are orthogonal and ``<m, m> = prod p_i! prod q_j!``.
    """
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    total: Coeff = 0
    for m, c in small.terms.items():
        other = big.terms.get(m)
        if other:
            total += c * other * m.factorial_weight()
    return _normalize(total)


def apply_differential(f: Polynomial, g: Polynomial) -> Polynomial:
    """The polynomial ``f(d/dx, d/dy) g`` (``f`` read as a differential operator)."""
    acc: dict = defaultdict(int)
    for mf, cf in f.terms.items():
        for mg, cg in g.terms.items():
            if not mf.divides(mg):
                continue
            coeff = cf * cg
            for a, b in zip(mf, mg):
                for j in range(a):
                    coeff *= b - j
            acc[tuple(b - a for a, b in zip(mf, mg))] += coeff
    return Polynomial._raw(f.n, {Monomial(m): _normalize(c) for m, c in acc.items() if c})


# ---------------------------------------------------------------- the ring P_n^(k)


def reduce_mod_Ik(f: Polynomial, n: int, k: int) -> Polynomial:
    """Normal form modulo the monomial ideal ``I_k``.

    ``I_k`` is generated by squarefree x-monomials of support ``k``,
    squarefree y-monomials of support ``n-k+1`` and the ``x_i y_i``; a term
    survives exactly when its monomial lies in ``M_n^(k)``.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return Polynomial._raw(f.n, {m: c for m, c in f.terms.items() if in_Mnk(m, n, k)})


def mul_in_Pk(f: Polynomial, g: Polynomial, n: int, k: int) -> Polynomial:
    """Product in ``P_n^(k)``; terms outside ``M_n^(k)`` are dropped as they appear."""
    acc: dict = defaultdict(int)
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            if in_Mnk(m, n, k):
                acc[m] += c1 * c2
    return Polynomial._raw(n, {Monomial(m): _normalize(c) for m, c in acc.items() if c})


def elementary(n: int, d: int, side: str = "x") -> Polynomial:
    """``e_d`` in ``x_1..x_n`` (``side="x"``) or ``y_1..y_n``."""
    offset = 0 if side == "x" else n
    terms = {}
    for subset in combinations(range(n), d):
        exps = [0] * (2 * n)
        for i in subset:
            exps[offset + i] = 1
        terms[Monomial(exps)] = 1
    return Polynomial(n, terms)


def power_sum(n: int, d: int, side: str = "x") -> Polynomial:
    offset = 0 if side == "x" else n
    terms = {}
    for i in range(n):
        exps = [0] * (2 * n)
        exps[offset + i] = d
        terms[Monomial(exps)] = 1
    return Polynomial(n, terms)


def elementary_ek(n: int, k: int, m: int) -> Polynomial:
    """``e_m^(k)``: ``e_m(x)`` when ``m <= k-1``, else ``e_(n-m)(y)``."""
    if not 1 <= m <= n - 1:
        raise ValueError(f"m must lie in 1..{n - 1}, got {m}")
    if m <= k - 1:
        return elementary(n, m, "x")
    return elementary(n, n - m, "y")


def elementary_ek_product(n: int, k: int, parts: Iterable[int]) -> Polynomial:
    """``e_nu^(k) = prod_i e_(nu_i)^(k)`` computed inside ``P_n^(k)``."""
    result = Polynomial.constant(n)
    for part in parts:
        result = mul_in_Pk(result, elementary_ek(n, k, part), n, k)
    return result


# ---------------------------------------------------------------- text format

_TOKEN = re.compile(r"([xy])(\d+)(?:\^(\d+))?")


def format_monomial(m: Sequence[int]) -> str:
    n = len(m) // 2
    parts = []
    for i, e in enumerate(m):
        if not e:
            continue
        name = f"x{i + 1}" if i < n else f"y{i - n + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse whitespace- or ``*``-separated tokens ``x<i>^<e>`` / ``y<i>^<e>``.

    The exponent defaults to 1; repeated variables multiply. ``"1"`` is the
    unit monomial.
    """
    exps = [0] * (2 * n)
    body = text.replace("*", " ").split()
    if body == ["1"]:
        return Monomial(exps)
    if not body:
        raise ParseError("empty monomial")
    for tok in body:
        match = _TOKEN.fullmatch(tok)
        if not match:
            raise ParseError(f"bad monomial token {tok!r}")
        idx = var_index(match.group(1) + match.group(2), n)
        exps[idx] += int(match.group(3) or 1)
    return Monomial(exps)


def _format_coeff(c: Coeff) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def to_text(f: Polynomial) -> str:
    """Canonical text: ``"a/b*x1^2*y3 + ..."`` in decreasing monomial order."""
    if not f.terms:
        return "0"
    return " + ".join(f"{_format_coeff(c)}*{format_monomial(m)}" for m, c in f)


def from_text(text: str, n: int) -> Polynomial:
    """Inverse of :func:`to_text`."""
    if text.strip() == "0":
        return Polynomial.zero(n)
    acc: dict = defaultdict(int)
    for chunk in text.split(" + "):
        coeff_text, _, mono_text = chunk.strip().partition("*")
        try:
            coeff = Fraction(coeff_text)
        except ValueError as exc:
            raise ParseError(f"bad coefficient {coeff_text!r}") from exc
        acc[parse_monomial(mono_text or "1", n)] += coeff
    return Polynomial(n, acc)
