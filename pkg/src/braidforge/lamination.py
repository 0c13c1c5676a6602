"""Dynnikov coordinates of curve systems in the n-punctured disk.

A curve system is an integer vector ``(a_1..a_{n-2}; b_1..b_{n-2})``.  Every
nonzero integer vector is the coordinate vector of exactly one integral
lamination, so equality of vectors is equality of isotopy classes.

``act(w, L)`` is a right action: letters of w are applied left to right,
``act(u*v, L) == act(v, act(u, L))``.  The functional (mapping class)
reading ``g(L)`` used for the curve family is ``act(g^-1, L)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .words import BraidError, BraidWord, concat, invert, power

# Coordinates are shifted down once they exceed this many bits; the shift
# is added to the log-scale accumulator.
_SHIFT_BITS = 192
_KEEP_BITS = 64


@dataclass(frozen=True)
class DynnikovCoords:
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != self.n - 2 or len(self.b) != self.n - 2:
            raise BraidError(f"B_{self.n} needs {self.n - 2} a- and b-coordinates")

    @property
    def flat(self) -> tuple[int, ...]:
        return self.a + self.b

    def norm(self) -> int:
        return sum(abs(x) for x in self.flat)

    def serialize(self) -> str:
        a = ",".join(map(str, self.a))
        b = ",".join(map(str, self.b))
        return f"a:{a};b:{b}"

    def __str__(self) -> str:
        return self.serialize()

    @classmethod
    def parse(cls, text: str) -> DynnikovCoords:
        try:
            left, right = text.strip().split(";")
            assert left.startswith("a:") and right.startswith("b:")
            a = tuple(int(x) for x in left[2:].split(",") if x.strip())
            b = tuple(int(x) for x in right[2:].split(",") if x.strip())
        except (ValueError, AssertionError):
            raise BraidError(f"malformed coordinates: {text!r}") from None
        return cls(len(a) + 2, a, b)


# ---------------------------------------------------------------------------
# piecewise-linear update rules, acting in place on a flat list [a..., b...]

def _pos(x):
    return x if x > 0 else 0


def _neg(x):
    return x if x < 0 else 0


def _sigma_first(x, y):
    return -y + _pos(x + _pos(y)), x + _pos(y)


def _sigma_last(x, y):
    return -y + _neg(x + _neg(y)), x + _neg(y)


def _sigma_mid(x1, y1, x2, y2):
    d = x1 - x2 - _pos(y2) + _neg(y1)
    return (
        x1 - _pos(y1) - _pos(_pos(y2) + d),
        y2 + _neg(d),
        x2 - _neg(y2) - _neg(_neg(y1) - d),
        y1 - _neg(d),
    )


def _apply_letter(v: list, m: int, letter: int) -> None:
    # m = n - 2; v[:m] are the a's, v[m:] the b's.
    # sigma_i^-1 is sigma_i conjugated by the reflection a -> -a.
    i = abs(letter)
    inv = letter < 0
    n = m + 2
    if i == 1:
        idx = (0,)
    elif i == n - 1:
        idx = (m - 1,)
    else:
        idx = (i - 2, i - 1)
    if inv:
        for j in idx:
            v[j] = -v[j]
    if i == 1:
        v[0], v[m] = _sigma_first(v[0], v[m])
    elif i == n - 1:
        v[m - 1], v[2 * m - 1] = _sigma_last(v[m - 1], v[2 * m - 1])
    else:
        j = i - 2
        v[j], v[m + j], v[j + 1], v[m + j + 1] = _sigma_mid(v[j], v[m + j], v[j + 1], v[m + j + 1])
    if inv:
        for j in idx:
            v[j] = -v[j]


def _act_flat(letters, v: list, m: int) -> None:
    for x in letters:
        _apply_letter(v, m, x)


def act(w: BraidWord, L: DynnikovCoords) -> DynnikovCoords:
    if w.n != L.n:
        raise BraidError(f"strand counts differ: {w.n} vs {L.n}")
    if w.n < 3:
        return L
    v = list(L.flat)
    m = L.n - 2
    _act_flat(w.letters, v, m)
    return DynnikovCoords(L.n, tuple(v[:m]), tuple(v[m:]))


def apply(g: BraidWord, L: DynnikovCoords) -> DynnikovCoords:
    """Image g(L) in the functional convention: apply(u*v, L) = apply(u, apply(v, L))."""
    return act(invert(g), L)


# ---------------------------------------------------------------------------
# curves

def round_curve(n: int, i: int, j: int) -> DynnikovCoords:
    """The convex curve enclosing punctures i..j (punctures on a horizontal line)."""
    if not 1 <= i < j <= n:
        raise BraidError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    if (i, j) == (1, n):
        raise BraidError("curve around all punctures is boundary parallel")
    if n < 3:
        raise BraidError("no essential curves in B_2")
    # crossings with the vertical line between punctures k and k+1; the
    # arcs above and below each puncture are crossed equally often, so a = 0
    nu = [2 if i <= k < j else 0 for k in range(n)]
    b = tuple((nu[k] - nu[k + 1]) // 2 for k in range(1, n - 1))
    return DynnikovCoords(n, (0,) * (n - 2), b)


def exchange_curve(n: int) -> DynnikovCoords:
    """The curve around punctures 2..n-1, the core of the twist tau(n)."""
    if n < 4:
        raise BraidError("exchange moves need n >= 4")
    return round_curve(n, 2, n - 1)


def random_lamination(n: int, rng: random.Random, bound: int = 10) -> DynnikovCoords:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(2 * (n - 2))]
        if any(v):
            return DynnikovCoords(n, tuple(v[: n - 2]), tuple(v[n - 2:]))


def geometric_nondegeneracy(P) -> tuple[bool, bool]:
    """(A moves c, B moves c) for the exchange curve c of presentation P."""
    c = exchange_curve(P.n)
    return act(P.A, c) != c, act(P.B, c) != c


def curve_family(P, N: int) -> list[DynnikovCoords]:
    """c_1, ..., c_2N with c_{2i-1} = beta^(i-1)(c) and c_{2i} = beta^(i-1)(A(c))."""
    if N < 1:
        raise BraidError("N must be >= 1")
    c = exchange_curve(P.n)
    beta = P.beta()
    out = []
    for i in range(1, N + 1):
        g = power(beta, i - 1)
        out.append(apply(g, c))
        out.append(apply(concat(P.n, g, P.A), c))
    return out


# ---------------------------------------------------------------------------
# entropy

@dataclass(frozen=True)
class EntropyEstimate:
    value: float
    iterations: int
    converged: bool
    residual: float


class ConvergenceError(RuntimeError):
    pass


def _affine_period(hist: list, q: int) -> bool:
    a, b, c = hist[-1], hist[-1 - q], hist[-1 - 2 * q]
    return all(x - 2 * y + z == 0 for x, y, z in zip(a, b, c))


def _estimate_one(letters, v: list, m: int, max_iters: int, tol: float,
                  patience: int, max_period: int) -> EntropyEstimate:
    log_scale = 0.0
    prev_log = math.log(sum(abs(x) for x in v))
    prev_rate = None
    streak = 0
    residual = math.inf
    rate = 0.0
    # exact history, kept until the first rescale; an orbit that is affine
    # along some period q has polynomial growth, hence zero entropy
    hist = [tuple(v)]
    runs = [0] * (max_period + 1)
    for it in range(1, max_iters + 1):
        _act_flat(letters, v, m)
        norm = sum(abs(x) for x in v)
        bits = norm.bit_length()
        if bits > _SHIFT_BITS:
            s = bits - _KEEP_BITS
            v[:] = [x >> s for x in v]
            log_scale += s * math.log(2)
            norm = sum(abs(x) for x in v)
            hist = None
        cur = math.log(norm) + log_scale
        rate = cur - prev_log
        prev_log = cur
        if hist is not None:
            hist.append(tuple(v))
            for q in range(1, min(max_period, (len(hist) - 1) // 2) + 1):
                runs[q] = runs[q] + 1 if _affine_period(hist, q) else 0
                if runs[q] >= 2 * q:
                    return EntropyEstimate(0.0, it, True, 0.0)
        if prev_rate is not None:
            residual = abs(rate - prev_rate)
            streak = streak + 1 if residual < tol else 0
            if streak >= patience:
                return EntropyEstimate(max(rate, 0.0), it, True, residual)
        prev_rate = rate
    return EntropyEstimate(max(rate, 0.0), max_iters, False, residual)


def entropy_estimate(
    w: BraidWord,
    max_iters: int = 2000,
    tol: float = 1e-6,
    seeds: int = 4,
    *,
    seed: int = 0,
    patience: int = 5,
    max_period: int | None = None,
) -> EntropyEstimate:
    """Growth rate of ||w^m(L)||_1, maximized over random integral laminations L.

    Seeds are drawn from ``random.Random(seed + s)`` for s in range(seeds), so the
    result is deterministic.  The value is an estimate of the entropy: for a
    reducible braid a lamination can miss the growing part.
    """
    if max_iters < 1 or tol <= 0 or seeds < 1:
        raise ValueError("need max_iters >= 1, tol > 0, seeds >= 1")
    n = w.n
    if n < 3 or not w.letters:
        return EntropyEstimate(0.0, 0, True, 0.0)
    if max_period is None:
        max_period = 2 * n * n
    m = n - 2
    results = []
    for s in range(seeds):
        L = random_lamination(n, random.Random(seed + s))
        results.append(
            _estimate_one(w.letters, list(L.flat), m, max_iters, tol, patience, max_period)
        )
    best = max(results, key=lambda e: e.value)
    return EntropyEstimate(
        value=best.value,
        iterations=max(e.iterations for e in results),
        converged=all(e.converged for e in results),
        residual=max(e.residual for e in results),
    )


def entropy_of_power_check(w: BraidWord, N: int, tol: float = 1e-6, **kwargs) -> bool:
    """Check ent(w^N) / N against ent(w) within the two estimates' tolerances."""
    if N < 1:
        raise ValueError("N must be >= 1")
    one = entropy_estimate(w, tol=tol, **kwargs)
    many = entropy_estimate(power(w, N), tol=tol, **kwargs)
    if not (one.converged and many.converged):
        raise ConvergenceError(f"estimate did not converge for {w} or its power {N}")
    return abs(many.value / N - one.value) <= tol + tol / N
