"""Integer Laurent polynomials in t and small matrices over them."""

from __future__ import annotations

import re
from typing import Iterable


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self.terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> LaurentPoly:
        return cls({e: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(self.terms + other.terms)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly((e, -c) for e, c in self.terms)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    def __call__(self, t):
        return sum(c * t**e for e, c in self.terms)

    def evaluate(self, t: int) -> int:
        if t in (1, -1):
            return sum(c * (t if e % 2 else 1) for e, c in self.terms)
        return self(t)

    def serialize(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}·t^{e}" for e, c in self.terms)

    __str__ = serialize

    def __repr__(self) -> str:
        return f"LaurentPoly({self.serialize()!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split(" + "):
            m = re.fullmatch(r"(-?\d+)·t\^(-?\d+)", chunk.strip())
            if not m:
                raise ValueError(f"malformed Laurent polynomial term: {chunk!r}")
            terms.append((int(m.group(2)), int(m.group(1))))
        return cls(terms)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


class LaurentMatrix:
    """Square matrix of Laurent polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, size: int) -> LaurentMatrix:
        return cls([[ONE if i == j else ZERO for j in range(size)] for i in range(size)])

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentMatrix) and self.rows == other.rows

    def __mul__(self, other: LaurentMatrix) -> LaurentMatrix:
        k = self.size
        out = [[ZERO] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                acc = ZERO
                for r in range(k):
                    x, y = self.rows[i][r], other.rows[r][j]
                    if x and y:
                        acc = acc + x * y
                out[i][j] = acc
        return LaurentMatrix(out)

    def trace(self) -> LaurentPoly:
        acc = ZERO
        for i in range(self.size):
            acc = acc + self.rows[i][i]
        return acc

    def evaluate(self, t: int) -> list[list[int]]:
        return [[p.evaluate(t) for p in row] for row in self.rows]
