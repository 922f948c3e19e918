"""Exact characteristic polynomials of integer matrices and derived sequences.

Everything here is integer or dyadic-rational arithmetic; no floating
point. The characteristic polynomial is computed with the division-free
Berkowitz algorithm; fraction-free Bareiss elimination provides a
genuinely independent determinant for cross-checking it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import DistanceMatrix


def _rows(matrix) -> list[list[int]]:
    if isinstance(matrix, DistanceMatrix):
        return [list(row) for row in matrix.entries]
    rows = [list(row) for row in matrix]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("matrix must be square")
    return rows


@dataclass(frozen=True)
class CharPoly:
    """det(xI - M) as ascending integer coefficients c_0..c_n, c_n == 1."""

    n: int
    coeffs: tuple[int, ...]

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


@dataclass(frozen=True)
class DeltaSeq:
    """Coefficients delta_0..delta_n of det(M - xI), i.e. (-1)^n c_k."""

    n: int
    delta: tuple[int, ...]


@dataclass(frozen=True)
class NormalizedSeq:
    """Normalized coefficients d_0..d_{n-2} as exact dyadic rationals."""

    n: int
    d: tuple[Fraction, ...]


def charpoly(matrix) -> CharPoly:
    """Characteristic polynomial det(xI - M) by the Berkowitz algorithm.

    Division-free over the integers, so exact for any integer matrix.
    Accepts a DistanceMatrix or any square list of integer rows; a 0x0
    input yields the constant polynomial 1.
    """
    M = _rows(matrix)
    n = len(M)
    coeffs = [1]  # descending, for the trailing 0x0 principal block
    for k in range(n - 1, -1, -1):
        pivot = M[k][k]
        size = n - k - 1  # order of the block below and right of row k
        toeplitz = [1, -pivot]
        if size:
            row = M[k][k + 1:]
            block = [r[k + 1:] for r in M[k + 1:]]
            vec = [M[i][k] for i in range(k + 1, n)]
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            for _ in range(size - 1):
                vec = [sum(x * y for x, y in zip(brow, vec)) for brow in block]
                toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
        # multiply the previous coefficient vector by the Toeplitz column
        width = len(toeplitz)
        length = len(coeffs)
        coeffs = [
            sum(
                toeplitz[i - j] * coeffs[j]
                for j in range(max(0, i - width + 1), min(i, length - 1) + 1)
            )
            for i in range(length + 1)
        ]
    coeffs.reverse()
    return CharPoly(n, tuple(coeffs))


def det_at(matrix, t: int) -> int:
    """det(tI - M) by fraction-free Gaussian elimination (Bareiss), exact."""
    rows = _rows(matrix)
    n = len(rows)
    if n == 0:
        return 1
    M = [[(t if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        row_k = M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                # Bareiss guarantees the division by the previous pivot is exact
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def delta_seq(p: CharPoly) -> DeltaSeq:
    """Apply the sign rule delta_k = (-1)^n c_k to a monic polynomial."""
    if not p.coeffs or p.coeffs[-1] != 1:
        raise ValueError("characteristic polynomial must be monic")
    sign = -1 if p.n % 2 else 1
    return DeltaSeq(p.n, tuple(sign * c for c in p.coeffs))


def normalized_seq(ds: DeltaSeq) -> NormalizedSeq:
    """Normalized coefficients d_k = 2^k |delta_k| / 2^(n-2) for k <= n-2.

    Exact dyadic rationals; the values are integers whenever the input
    comes from a tree.
    """
    n = ds.n
    if n < 3:
        raise ValueError("normalized coefficients need order at least 3")
    scale = 1 << (n - 2)
    return NormalizedSeq(
        n, tuple(Fraction(abs(ds.delta[k]) << k, scale) for k in range(n - 1))
    )


def scaled_poly(dm: DistanceMatrix) -> tuple[Fraction, ...]:
    """Ascending coefficients of -det(2xI - D) / 2^(n-2) for a tree matrix.

    The x^n coefficient is -4, the x^(n-1) coefficient is 0, and the
    remaining ones reproduce the normalized coefficient sequence.
    """
    n = dm.n
    if n < 3:
        raise ValueError("scaled polynomial needs order at least 3")
    ones = sum(row.count(1) for row in dm.entries)
    if ones != 2 * (n - 1):
        raise ValueError("distance matrix does not belong to a tree")
    p = charpoly(dm)
    scale = 1 << (n - 2)
    return tuple(Fraction(-(c << k), scale) for k, c in enumerate(p.coeffs))


def trace_power(matrix, k: int) -> int:
    """Exact tr(M^2) or tr(M^3) without forming the full matrix power."""
    if k not in (2, 3):
        raise ValueError("only powers 2 and 3 are supported")
    rows = _rows(matrix)
    n = len(rows)
    if k == 2:
        return sum(rows[i][j] * rows[j][i] for i in range(n) for j in range(n))
    total = 0
    for i in range(n):
        row_i = rows[i]
        for j in range(n):
            entry = sum(row_i[l] * rows[l][j] for l in range(n))
            total += entry * rows[j][i]
    return total
