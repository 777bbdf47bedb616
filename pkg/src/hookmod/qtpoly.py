"""Bivariate integer polynomials in ``q`` and ``t``."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping


class QTPolynomial:
    """Sparse map ``(qexp, texp) -> nonzero int``; immutable by convention."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        self.coeffs: dict[tuple[int, int], int] = {
            (int(a), int(b)): int(c) for (a, b), c in (coeffs or {}).items() if c
        }

    @classmethod
    def monomial(cls, qexp: int = 0, texp: int = 0, coeff: int = 1) -> "QTPolynomial":
        return cls({(qexp, texp): coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "QTPolynomial":
        """Generating function of a multiset of exponent pairs."""
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for pair in pairs:
            acc[pair] += 1
        return cls(acc)

    def __add__(self, other: "QTPolynomial") -> "QTPolynomial":
        acc = dict(self.coeffs)
        for key, c in other.coeffs.items():
            acc[key] = acc.get(key, 0) + c
        return QTPolynomial(acc)

    def __neg__(self) -> "QTPolynomial":
        return QTPolynomial({key: -c for key, c in self.coeffs.items()})

    def __sub__(self, other: "QTPolynomial") -> "QTPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "QTPolynomial":
        if isinstance(other, int):
            return QTPolynomial({key: c * other for key, c in self.coeffs.items()})
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                acc[(a1 + a2, b1 + b2)] += c1 * c2
        return QTPolynomial(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QTPolynomial({(0, 0): other})
        return isinstance(other, QTPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def swap(self) -> "QTPolynomial":
        """Exchange the roles of ``q`` and ``t``."""
        return QTPolynomial({(b, a): c for (a, b), c in self.coeffs.items()})

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def evaluate(self, q, t):
        return sum(c * q**a * t**b for (a, b), c in self.coeffs.items())

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(a, b, self.coeffs[(a, b)]) for a, b in sorted(self.coeffs)]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for a, b, c in self.sorted_terms():
            factors = []
            if a:
                factors.append("q" if a == 1 else f"q^{a}")
            if b:
                factors.append("t" if b == 1 else f"t^{b}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QTPolynomial({str(self)!r})"
