"""Exchange presentations beta = A*B and k-iterated exchange moves.

A lives in <sigma_1..sigma_{n-2}>, B in <sigma_2..sigma_{n-1}>, and

    ex^k(beta) = A tau^k B tau^-k,    tau = (sigma_2 ... sigma_{n-2})^(n-2),

tau being the full twist of strands 2..n-1.  The move is degenerate when A
or B commutes with tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import garside
from .words import (
    BraidError,
    BraidWord,
    closure_component_count,
    concat,
    exponent_sum,
    invert,
    parse_word,
    permutation,
    power,
)

# Sign of the twist on c_1 in the realized identity
#   tau^-k ex^k(beta)^N tau^k = prod_i beta^(i-1) (tau^(s k) A tau^(-s k) A^-1) beta^-(i-1) * beta^N
# with s = TWIST_SIGN.  Left-to-right words give s = -1: c_1 is twisted by
# -k and c_2 = A(c) by +k, the global flip of the functional-order statement.
TWIST_SIGN = -1


@dataclass(frozen=True)
class ExchangePresentation:
    n: int
    A: BraidWord
    B: BraidWord

    def __post_init__(self):
        if self.n < 4:
            raise BraidError(f"exchange moves need n >= 4, got n={self.n}")
        if self.A.n != self.n or self.B.n != self.n:
            raise BraidError("A and B must be words in B_n")
        for x in self.A.letters:
            if abs(x) > self.n - 2:
                raise BraidError(f"A may only use sigma_1..sigma_{self.n - 2}, found {x}")
        for x in self.B.letters:
            if abs(x) < 2:
                raise BraidError(f"B may only use sigma_2..sigma_{self.n - 1}, found {x}")

    @classmethod
    def from_text(cls, n: int, A: str, B: str) -> ExchangePresentation:
        return cls(n, parse_word(A, n), parse_word(B, n))

    def beta(self) -> BraidWord:
        return concat(self.n, self.A, self.B)

    def serialize(self) -> str:
        return f"n={self.n}\nA={self.A}\nB={self.B}\n"


def read_presentation(path: str | Path) -> ExchangePresentation:
    """Read a ``key=value`` presentation file with keys n, A, B."""
    kv = read_key_values(Path(path).read_text())
    try:
        return ExchangePresentation.from_text(int(kv["n"]), kv.get("A", ""), kv.get("B", ""))
    except KeyError as e:
        raise BraidError(f"presentation file lacks key {e}") from None


def read_key_values(text: str) -> dict[str, str]:
    out = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BraidError(f"expected key=value, got {raw!r}")
        k, v = line.split("=", 1)
        out[k.strip()] = v.strip()
    return out


@dataclass(frozen=True)
class DegeneracyReport:
    a_commutes: bool
    b_commutes: bool

    @property
    def degenerate(self) -> bool:
        return self.a_commutes or self.b_commutes


def tau(n: int) -> BraidWord:
    if n < 4:
        raise BraidError(f"tau(n) needs n >= 4, got n={n}")
    return BraidWord(n, tuple(range(2, n - 1)) * (n - 2))


def iterated_exchange(P: ExchangePresentation, k: int) -> BraidWord:
    t = power(tau(P.n), k)
    return concat(P.n, P.A, t, P.B, invert(t))


def _commutes(u: BraidWord, v: BraidWord) -> bool:
    return garside.equal(concat(u.n, u, v), concat(u.n, v, u))


def is_degenerate(P: ExchangePresentation) -> DegeneracyReport:
    t = tau(P.n)
    return DegeneracyReport(_commutes(P.A, t), _commutes(P.B, t))


def markov_invariants_check(P: ExchangePresentation, k: int) -> bool:
    """Exponent sum, permutation and component count agree for beta and ex^k(beta)."""
    beta = P.beta()
    moved = iterated_exchange(P, k)
    return (
        exponent_sum(beta) == exponent_sum(moved)
        and permutation(beta) == permutation(moved)
        and closure_component_count(beta) == closure_component_count(moved)
    )


def twist_factor(P: ExchangePresentation, k: int, sign: int = TWIST_SIGN) -> BraidWord:
    """tau^(s k) A tau^(-s k) A^-1: the twists on c_1 and c_2 = A(c)."""
    t = power(tau(P.n), sign * k)
    return concat(P.n, t, P.A, invert(t), invert(P.A))


def twist_product(P: ExchangePresentation, k: int, N: int, sign: int = TWIST_SIGN) -> BraidWord:
    """prod_{i=1..N} beta^(i-1) Y beta^-(i-1) * beta^N with Y = twist_factor."""
    beta = P.beta()
    Y = twist_factor(P, k, sign)
    parts = []
    for i in range(N):
        g = power(beta, i)
        parts += [g, Y, invert(g)]
    return concat(P.n, *parts, power(beta, N))


def resolve_twist_sign(P: ExchangePresentation) -> int:
    """Find, by the word problem at (k, N) = (1, 1), which sign pairing realizes ex^1(beta)."""
    t = tau(P.n)
    lhs = concat(P.n, invert(t), iterated_exchange(P, 1), t)
    signs = [s for s in (-1, 1) if garside.equal(lhs, twist_product(P, 1, 1, s))]
    if not signs:
        raise AssertionError("neither sign pairing realizes ex^1")  # pragma: no cover
    return signs[0]


def twist_identity_check(P: ExchangePresentation, k: int, N: int, **kwargs) -> bool:
    """Is ex^k(beta)^N conjugate to the product of N conjugated twist pairs times beta^N?"""
    if N < 1:
        raise BraidError("N must be >= 1")
    lhs = power(iterated_exchange(P, k), N)
    ok, _ = garside.conjugate_test(lhs, twist_product(P, k, N), **kwargs)
    return ok
