"""Braid words in the Artin generators and their cheap class functions.

A word is stored as a tuple of nonzero ints, ``i`` for sigma_i and ``-i``
for its inverse.  Words compose left to right: ``compose(u, v)`` means
"do u, then v".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised for malformed words or mismatched strand counts."""


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise BraidError(f"need at least 2 strands, got n={self.n}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.n:
                raise BraidError(f"letter {x} out of range for B_{self.n}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        return power(self, k)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())


@dataclass(frozen=True)
class Permutation:
    """Strand permutation; ``images[k-1]`` is the final position of the strand starting at k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation: {self.images}")

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self.images[k - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, 1))


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _check_same(u: BraidWord, v: BraidWord) -> None:
    if u.n != v.n:
        raise BraidError(f"strand counts differ: {u.n} vs {v.n}")


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    _check_same(u, v)
    return BraidWord(u.n, free_reduce(u.letters + v.letters))


def concat(n: int, *words: BraidWord | Sequence[int]) -> BraidWord:
    """Freely reduced product of several words (or raw letter sequences)."""
    letters: list[int] = []
    for w in words:
        if isinstance(w, BraidWord):
            if w.n != n:
                raise BraidError(f"strand counts differ: {n} vs {w.n}")
            w = w.letters
        letters.extend(w)
    return BraidWord(n, free_reduce(letters))


def invert(u: BraidWord) -> BraidWord:
    return BraidWord(u.n, tuple(-x for x in reversed(u.letters)))


def power(u: BraidWord, k: int) -> BraidWord:
    base = u if k >= 0 else invert(u)
    return BraidWord(u.n, free_reduce(base.letters * abs(k)))


def permutation(u: BraidWord) -> Permutation:
    # pos[s] = current position of the strand that started at s
    pos = list(range(1, u.n + 1))
    where = list(range(u.n + 1))  # where[p] = strand currently at position p
    for x in u.letters:
        i = abs(x)
        a, b = where[i], where[i + 1]
        where[i], where[i + 1] = b, a
        pos[a - 1], pos[b - 1] = i + 1, i
    return Permutation(tuple(pos))


def exponent_sum(u: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in u.letters)


def closure_component_count(u: BraidWord) -> int:
    """Number of components of the closed braid."""
    return len(permutation(u).cycles())


def parse_word(text: str, n: int | None = None) -> BraidWord:
    """Parse ``"1,-2,3"``.  With ``n`` omitted the strand count is max|i| + 1 (at least 2)."""
    text = text.strip()
    letters: tuple[int, ...] = ()
    if text:
        try:
            letters = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise BraidError(f"malformed braid word: {text!r}") from None
    if n is None:
        n = max([abs(x) for x in letters] + [1]) + 1
    return BraidWord(n, letters)


def format_word(u: BraidWord) -> str:
    return ",".join(str(x) for x in u.letters)


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]
    return BraidWord(n, tuple(letters))
