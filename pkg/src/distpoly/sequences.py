"""Exact predicates and peak-location bounds for coefficient sequences.

All comparisons run in integer or rational arithmetic. The bound formulas
reduce their irrational parts to integer square roots, since a float
rounded the wrong way across a ceil/floor boundary would silently shift a
bound by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .polynomials import NormalizedSeq


@dataclass(frozen=True)
class SeqCheck:
    """Outcome of a sequence predicate; witness is set iff it fails."""

    holds: bool
    witness: int | None = None


@dataclass(frozen=True)
class PeakInterval:
    """Smallest and largest index attaining the sequence maximum."""

    first: int
    last: int


@dataclass(frozen=True)
class BoundSet:
    """Peak-location bounds for one tree: conjectured window and proven bounds."""

    conj_lo: int
    conj_hi: int
    thm_lo: int
    thm_hi: int


def is_unimodal(seq) -> SeqCheck:
    """Nondecreasing up to some index, nonincreasing after it.

    On failure the witness is the first strict dip that a later strict
    rise follows.
    """
    values = list(seq)
    if not values:
        raise ValueError("empty sequence")
    dip = None
    for i in range(1, len(values)):
        if values[i] < values[i - 1]:
            dip = i
            break
    if dip is None:
        return SeqCheck(True)
    for j in range(dip, len(values) - 1):
        if values[j + 1] > values[j]:
            return SeqCheck(False, dip)
    return SeqCheck(True)


def is_log_concave(seq) -> SeqCheck:
    """a_j^2 >= a_{j-1} a_{j+1} for every interior j, exact comparison.

    The literal inequality is used; positivity is not assumed here and is
    checked separately where an argument needs it.
    """
    values = list(seq)
    if not values:
        raise ValueError("empty sequence")
    for j in range(1, len(values) - 1):
        if values[j] * values[j] < values[j - 1] * values[j + 1]:
            return SeqCheck(False, j)
    return SeqCheck(True)


def newton_check(coeffs) -> SeqCheck:
    """Binomial-weighted log-concavity, satisfied by real-rooted polynomials.

    For a_0..a_n, checks a_j^2 C(n,j+1) C(n,j-1) >= a_{j+1} a_{j-1} C(n,j)^2
    for 1 <= j <= n-1 in exact arithmetic.
    """
    values = list(coeffs)
    if len(values) < 2:
        raise ValueError("need at least two coefficients")
    n = len(values) - 1
    for j in range(1, n):
        lhs = values[j] * values[j] * comb(n, j + 1) * comb(n, j - 1)
        rhs = values[j + 1] * values[j - 1] * comb(n, j) ** 2
        if lhs < rhs:
            return SeqCheck(False, j)
    return SeqCheck(True)


def peak_interval(seq) -> PeakInterval:
    """First and last argmax indices; a plateau yields first < last."""
    values = list(seq)
    if not values:
        raise ValueError("empty sequence")
    top = max(values)
    first = values.index(top)
    last = len(values) - 1 - values[::-1].index(top)
    return PeakInterval(first, last)


def conjecture_range(n: int) -> tuple[int, int]:
    """Conjectured peak window [floor(n/2), ceil(n - n/sqrt(5))].

    Since n/sqrt(5) is irrational, ceil(n - n/sqrt(5)) = n - floor(n/sqrt(5))
    and floor(n/sqrt(5)) = isqrt(n^2 // 5), so the result needs integer
    arithmetic only.
    """
    if n < 3:
        raise ValueError("order must be at least 3")
    return n // 2, n - isqrt(n * n // 5)


def upper_bound_rho(n: int, n_p3: int) -> int:
    """Proven peak upper bound ceil((2 - rho) n / (3 - rho)).

    rho = n_p3 / C(n-1, 2) measures how star-like the tree is; the value
    is evaluated as ceil(n (2C - n_p3) / (3C - n_p3)) with C = C(n-1, 2),
    all in integers.
    """
    if n < 3:
        raise ValueError("order must be at least 3")
    cap = comb(n - 1, 2)
    if not 0 <= n_p3 <= cap:
        raise ValueError(f"path-of-length-2 count {n_p3} outside [0, {cap}]")
    num = n * (2 * cap - n_p3)
    den = 3 * cap - n_p3
    return -(-num // den)


def lower_bound_diam(n: int, diam: int) -> int:
    """Proven peak lower bound floor((n - 2) / (1 + diameter))."""
    if n < 3:
        raise ValueError("order must be at least 3")
    if not 1 <= diam <= n - 1:
        raise ValueError(f"diameter {diam} outside [1, {n - 1}]")
    return (n - 2) // (1 + diam)


def ratio_bound_check(d_seq: NormalizedSeq, n: int, diam: int) -> SeqCheck:
    """Checks 3 d_{n-3} < n * diam * d_{n-2} in exact arithmetic."""
    if n < 3:
        raise ValueError("order must be at least 3")
    if d_seq.n != n:
        raise ValueError("sequence order mismatch")
    if 3 * d_seq.d[-2] < n * diam * d_seq.d[-1]:
        return SeqCheck(True)
    return SeqCheck(False, n - 3)


def bound_set(n: int, n_p3: int, diam: int) -> BoundSet:
    """All four peak bounds for a tree with the given statistics."""
    lo, hi = conjecture_range(n)
    return BoundSet(lo, hi, lower_bound_diam(n, diam), upper_bound_rho(n, n_p3))
