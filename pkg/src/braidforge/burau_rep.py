"""Reduced Burau representation, trace certificates and an entropy lower bound.

Generator matrices (size n-1, rows and columns indexed 0..n-2) differ from
the identity in a single row r = i-1:

    sigma_1        row 0:     (-t, 1)                 at columns (0, 1)
    sigma_i        row i-1:   (t, -t, 1)              at columns (i-2, i-1, i)
    sigma_{n-1}    row n-2:   (t, -t)                 at columns (n-3, n-2)

Inverses again differ in one row.  Words are multiplied left to right.
"""

from __future__ import annotations

import hashlib
import math
from functools import lru_cache

import numpy as np

from .laurent import ONE, ZERO, LaurentMatrix, LaurentPoly
from .words import BraidWord

_T = LaurentPoly.monomial(1, 1)
_MT = LaurentPoly.monomial(-1, 1)
_TI = LaurentPoly.monomial(1, -1)
_MTI = LaurentPoly.monomial(-1, -1)


@lru_cache(maxsize=None)
def _generator_row(n: int, letter: int) -> tuple[int, dict[int, LaurentPoly]]:
    i = abs(letter)
    r = i - 1
    if letter > 0:
        entries = {r - 1: _T, r: _MT, r + 1: ONE}
        if i == 1:
            entries = {0: _MT, 1: ONE}
    else:
        entries = {r - 1: ONE, r: _MTI, r + 1: _TI}
        if i == 1:
            entries = {0: _MTI, 1: _TI}
    return r, {c: p for c, p in entries.items() if 0 <= c < n - 1}


def generator_matrix(n: int, letter: int) -> LaurentMatrix:
    r, row = _generator_row(n, letter)
    M = LaurentMatrix.identity(n - 1)
    M.rows[r] = [row.get(c, ZERO) for c in range(n - 1)]
    return M


def _right_multiply(M: list[list[LaurentPoly]], n: int, letter: int) -> None:
    # M <- M G, where G = I + e_r (row - e_r)^T
    r, row = _generator_row(n, letter)
    col_r = [M[k][r] for k in range(n - 1)]
    for c, g in row.items():
        delta = g - ONE if c == r else g
        if not delta:
            continue
        for k in range(n - 1):
            if col_r[k]:
                M[k][c] = M[k][c] + col_r[k] * delta


def burau(w: BraidWord) -> LaurentMatrix:
    M = LaurentMatrix.identity(w.n - 1)
    for x in w.letters:
        _right_multiply(M.rows, w.n, x)
    return M


def trace_certificate(w: BraidWord) -> LaurentPoly:
    """Trace of the Burau matrix; different traces prove non-conjugacy."""
    return burau(w).trace()


def trace_hash(p: LaurentPoly) -> str:
    return hashlib.sha256(p.serialize().encode()).hexdigest()[:16]


def spectral_radius(M: list[list[int]]) -> float:
    if not M:
        return 0.0
    A = np.array(M, dtype=float)
    return float(np.max(np.abs(np.linalg.eigvals(A))))


def entropy_lower_bound(w: BraidWord) -> float:
    """log of the spectral radius of the Burau matrix at t = -1, floored at 0.

    The matrix is an integer matrix of size d = n-1 with determinant +-1, so
    its eigenvalues are algebraic integers of degree <= d.  One that is not a
    root of unity has modulus >= 2**(1/(4d)) (Schinzel-Zassenhaus, proved by
    Dimitrov); a numerical radius below that threshold is therefore exactly 1.
    Rounding noise around repeated eigenvalues stays far below it for n <= 7.
    """
    if w.n < 3:
        return 0.0
    d = w.n - 1
    rho = spectral_radius(burau(w).evaluate(-1))
    if rho < 2 ** (1 / (4 * d)):
        return 0.0
    return math.log(rho)
