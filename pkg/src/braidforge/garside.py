"""Classical Garside structure on B_n.

Simple elements (permutation braids) are tuples ``s`` of 0-based positions:
``s[k]`` is where the strand starting at position k ends up.  Products are
left to right, so the permutation of ``s * t`` is ``k -> t[s[k]]``.

A braid is put in left normal form ``Delta^p s_1 ... s_l`` with every pair
``(s_j, s_{j+1})`` left-weighted: the starting set of ``s_{j+1}`` is
contained in the finishing set of ``s_j``.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .words import (
    BraidError,
    BraidWord,
    concat,
    exponent_sum,
    free_reduce,
    invert,
    permutation,
)

log = logging.getLogger(__name__)

Simple = tuple[int, ...]

DEFAULT_SSS_CAP = 10**6


class SuperSummitOverflow(RuntimeError):
    """The super summit set outgrew its cap; ``partial`` holds what was found."""

    def __init__(self, message: str, partial: frozenset):
        super().__init__(message)
        self.partial = partial


# ---------------------------------------------------------------------------
# simple elements

@lru_cache(maxsize=None)
def _identity(n: int) -> Simple:
    return tuple(range(n))


@lru_cache(maxsize=None)
def _delta(n: int) -> Simple:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def _generator(n: int, i: int) -> Simple:
    s = list(range(n))
    s[i - 1], s[i] = s[i], s[i - 1]
    return tuple(s)


def _inverse(s: Simple) -> Simple:
    inv = [0] * len(s)
    for k, v in enumerate(s):
        inv[v] = k
    return tuple(inv)


@lru_cache(maxsize=None)
def _tau(s: Simple) -> Simple:
    """Conjugation by Delta (an involution on simples)."""
    n = len(s)
    return tuple(n - 1 - s[n - 1 - k] for k in range(n))


def _tau_pow(s: Simple, p: int) -> Simple:
    return _tau(s) if p % 2 else s


@lru_cache(maxsize=None)
def _starting_set(s: Simple) -> frozenset[int]:
    return frozenset(i for i in range(1, len(s)) if s[i - 1] > s[i])


@lru_cache(maxsize=None)
def _finishing_set(s: Simple) -> frozenset[int]:
    inv = _inverse(s)
    return frozenset(i for i in range(1, len(s)) if inv[i - 1] > inv[i])


def _mul_gen(s: Simple, i: int) -> Simple:
    # s * sigma_i: swap positions i-1, i after s
    return tuple(i if v == i - 1 else i - 1 if v == i else v for v in s)


def _gen_ldiv(s: Simple, i: int) -> Simple:
    # sigma_i^{-1} * s
    t = list(s)
    t[i - 1], t[i] = t[i], t[i - 1]
    return tuple(t)


@lru_cache(maxsize=None)
def _left_complement(s: Simple) -> Simple:
    """The simple x with x * s = Delta."""
    inv = _inverse(s)
    n = len(s)
    return tuple(inv[n - 1 - k] for k in range(n))


@lru_cache(maxsize=None)
def _renorm(a: Simple, b: Simple) -> tuple[Simple, Simple]:
    """Make the pair (a, b) left-weighted without changing the product."""
    while True:
        moves = _starting_set(b) - _finishing_set(a)
        if not moves:
            return a, b
        i = min(moves)
        a = _mul_gen(a, i)
        b = _gen_ldiv(b, i)


@lru_cache(maxsize=None)
def _simple_letters(s: Simple) -> tuple[int, ...]:
    """A positive word for the permutation braid s."""
    out = []
    n = len(s)
    while s != _identity(n):
        i = min(_starting_set(s))
        out.append(i)
        s = _gen_ldiv(s, i)
    return tuple(out)


@lru_cache(maxsize=None)
def all_simples(n: int) -> tuple[Simple, ...]:
    """Every non-identity simple element of B_n."""
    return tuple(p for p in itertools.permutations(range(n)) if p != _identity(n))


# ---------------------------------------------------------------------------
# normal forms

@dataclass(frozen=True)
class NormalForm:
    n: int
    inf: int
    factors: tuple[Simple, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def letters(self) -> tuple[int, ...]:
        d = _simple_letters(_delta(self.n))
        if self.inf >= 0:
            out = list(d) * self.inf
        else:
            out = [-x for x in reversed(d)] * (-self.inf)
        for f in self.factors:
            out.extend(_simple_letters(f))
        return free_reduce(out)

    def word(self) -> BraidWord:
        return BraidWord(self.n, self.letters())

    def serialize(self) -> str:
        body = " ; ".join(" ".join(str(v + 1) for v in f) for f in self.factors)
        return f"D^{self.inf} |" + (f" {body}" if body else "")

    def __str__(self) -> str:
        return self.serialize()

    @classmethod
    def parse(cls, text: str) -> NormalForm:
        head, _, body = text.partition("|")
        head = head.strip()
        if not head.startswith("D^"):
            raise BraidError(f"malformed normal form: {text!r}")
        p = int(head[2:])
        factors = []
        for chunk in body.split(";"):
            if chunk.strip():
                factors.append(tuple(int(v) - 1 for v in chunk.split()))
        if not factors:
            raise BraidError("cannot infer strand count from an empty normal form")
        nf = cls(len(factors[0]), p, tuple(factors))
        if not is_normal(nf):
            raise BraidError(f"not a left normal form: {text!r}")
        return nf


def is_normal(nf: NormalForm) -> bool:
    f = nf.factors
    if any(s in (_identity(nf.n), _delta(nf.n)) for s in f):
        return False
    return all(_starting_set(b) <= _finishing_set(a) for a, b in zip(f, f[1:]))


class _Builder:
    """Mutable Delta^p * factors, kept left-weighted as simples are appended."""

    def __init__(self, n: int, p: int = 0, factors=()):
        self.n = n
        self.p = p
        self.factors = list(factors)

    def push(self, s: Simple) -> None:
        f = self.factors
        f.append(s)
        for j in range(len(f) - 2, -1, -1):
            a, b = _renorm(f[j], f[j + 1])
            if a == f[j]:
                break
            f[j], f[j + 1] = a, b
        self._trim()

    def push_inverse_generator(self, i: int) -> None:
        # F * sigma_i^{-1} = Delta^{-1} tau(F) (Delta sigma_i^{-1})
        self.p -= 1
        self.factors = [_tau(s) for s in self.factors]
        self.push(_left_complement(_generator(self.n, i)))

    def _trim(self) -> None:
        f = self.factors
        d, e = _delta(self.n), _identity(self.n)
        lead = 0
        while lead < len(f) and f[lead] == d:
            lead += 1
        if lead:
            self.p += lead
            del f[:lead]
        while f and f[-1] == e:
            f.pop()

    def result(self) -> NormalForm:
        return NormalForm(self.n, self.p, tuple(self.factors))


def normal_form(u: BraidWord) -> NormalForm:
    b = _Builder(u.n)
    for x in u.letters:
        if x > 0:
            b.push(_generator(u.n, x))
        else:
            b.push_inverse_generator(-x)
    return b.result()


def equal(u: BraidWord, v: BraidWord) -> bool:
    """Word problem: do u and v represent the same braid?"""
    if u.n != v.n:
        raise BraidError(f"strand counts differ: {u.n} vs {v.n}")
    return normal_form(u) == normal_form(v)


def conjugate_by_simple(nf: NormalForm, s: Simple) -> NormalForm:
    """Normal form of s^-1 * x * s."""
    # s^-1 Delta^p = Delta^(p-1) * leftcomplement(tau^p(s))
    b = _Builder(nf.n, nf.inf - 1, [_left_complement(_tau_pow(s, nf.inf))])
    b._trim()
    for f in nf.factors:
        b.push(f)
    b.push(s)
    return b.result()


def _cycle(nf: NormalForm) -> tuple[NormalForm, tuple[int, ...]]:
    if not nf.factors:
        return nf, ()
    g = _tau_pow(nf.factors[0], nf.inf)
    b = _Builder(nf.n, nf.inf, nf.factors[1:])
    b.push(g)
    return b.result(), _simple_letters(g)


def _decycle(nf: NormalForm) -> tuple[NormalForm, tuple[int, ...]]:
    if not nf.factors:
        return nf, ()
    last = nf.factors[-1]
    b = _Builder(nf.n, nf.inf, [_tau_pow(last, nf.inf)])
    for f in nf.factors[:-1]:
        b.push(f)
    return b.result(), tuple(-x for x in reversed(_simple_letters(last)))


def cycling(nf: NormalForm) -> NormalForm:
    """Conjugate by the (Delta-twisted) first factor and renormalize."""
    return _cycle(nf)[0]


def decycling(nf: NormalForm) -> NormalForm:
    """Conjugate by the inverse of the last factor and renormalize."""
    return _decycle(nf)[0]


def _improve(nf: NormalForm, step, better) -> tuple[NormalForm, list[int]]:
    # If the bound is not extremal, it improves within |Delta| = n(n-1)/2 steps.
    bound = nf.n * (nf.n - 1) // 2
    conj: list[int] = []
    stall = 0
    seen = {nf}
    while nf.factors and stall < bound:
        new, g = step(nf)
        conj.extend(g)
        if better(new, nf):
            stall = 0
            seen = {new}
        else:
            if new in seen:
                nf = new
                break
            seen.add(new)
            stall += 1
        nf = new
    return nf, conj


def to_summit(nf: NormalForm) -> tuple[NormalForm, tuple[int, ...]]:
    """A super summit conjugate y = g^-1 x g of nf, with the conjugator g."""
    conj: list[int] = []
    while True:
        start = nf
        nf, g = _improve(nf, _cycle, lambda a, b: a.inf > b.inf)
        conj.extend(g)
        nf, g = _improve(nf, _decycle, lambda a, b: a.sup < b.sup)
        conj.extend(g)
        if (nf.inf, nf.sup) == (start.inf, start.sup):
            return nf, free_reduce(conj)


# ---------------------------------------------------------------------------
# super summit sets

@dataclass(frozen=True)
class SummitInvariant:
    inf: int
    sup: int
    summit_set_size: int


class _SummitSet:
    __slots__ = ("root", "members")

    def __init__(self, root: NormalForm, members: dict[NormalForm, tuple[int, ...]]):
        self.root = root
        self.members = members  # member -> c with c^-1 root c = member


class SummitCache:
    """Memo of computed super summit sets, indexed by every member."""

    def __init__(self):
        self._index: dict[NormalForm, _SummitSet] = {}

    def get(self, nf: NormalForm) -> _SummitSet | None:
        return self._index.get(nf)

    def add(self, sss: _SummitSet) -> None:
        for m in sss.members:
            self._index[m] = sss

    def clear(self) -> None:
        self._index.clear()

    def __len__(self) -> int:
        return len({id(s) for s in self._index.values()})


DEFAULT_CACHE = SummitCache()


def _closure(summit: NormalForm, cap: int) -> _SummitSet:
    members = {summit: ()}
    queue = deque([summit])
    simples = all_simples(summit.n)
    while queue:
        y = queue.popleft()
        cy = members[y]
        for s in simples:
            z = conjugate_by_simple(y, s)
            if z.inf != summit.inf or z.sup != summit.sup or z in members:
                continue
            members[z] = cy + _simple_letters(s)
            if len(members) > cap:
                raise SuperSummitOverflow(
                    f"super summit set exceeds cap={cap}", frozenset(members)
                )
            queue.append(z)
    return _SummitSet(summit, members)


def _summit_data(u: BraidWord, cap: int, cache: SummitCache | None):
    """(summit set, word w with w^-1 u w = root of the set)."""
    summit, g = to_summit(normal_form(u))
    sss = cache.get(summit) if cache is not None else None
    if sss is None:
        sss = _closure(summit, cap)
        if cache is not None:
            cache.add(sss)
        log.debug("SSS of size %d for %s", len(sss.members), summit)
    back = tuple(-x for x in reversed(sss.members[summit]))
    return sss, free_reduce(g + back)


def super_summit_set(
    u: BraidWord, cap: int = DEFAULT_SSS_CAP, cache: SummitCache | None = DEFAULT_CACHE
) -> frozenset[NormalForm]:
    sss, _ = _summit_data(u, cap, cache)
    return frozenset(sss.members)


def summit_invariant(
    u: BraidWord, cap: int = DEFAULT_SSS_CAP, cache: SummitCache | None = DEFAULT_CACHE
) -> SummitInvariant:
    sss, _ = _summit_data(u, cap, cache)
    return SummitInvariant(sss.root.inf, sss.root.sup, len(sss.members))


def conjugate_test(
    u: BraidWord,
    v: BraidWord,
    cap: int = DEFAULT_SSS_CAP,
    cache: SummitCache | None = DEFAULT_CACHE,
) -> tuple[bool, BraidWord | None]:
    """Decide whether g^-1 u g = v for some g; return such a g when it exists.

    Raises SuperSummitOverflow when the summit set of u exceeds ``cap``.
    """
    if u.n != v.n:
        raise BraidError(f"strand counts differ: {u.n} vs {v.n}")
    if exponent_sum(u) != exponent_sum(v):
        return False, None
    if permutation(u).cycle_type() != permutation(v).cycle_type():
        return False, None

    sv, gv = to_summit(normal_form(v))
    su, gu = to_summit(normal_form(u))
    if (su.inf, su.sup) != (sv.inf, sv.sup):
        return False, None
    sss, to_root = _summit_data(u, cap, cache)
    if sv not in sss.members:
        return False, None
    # u -> root -> sv -> v
    witness = BraidWord(
        u.n, free_reduce(to_root + sss.members[sv] + tuple(-x for x in reversed(gv)))
    )
    if not equal(concat(u.n, invert(witness), u, witness), v):
        raise AssertionError("conjugator failed verification")  # pragma: no cover
    return True, witness
