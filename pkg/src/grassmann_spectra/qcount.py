"""Exact q-binomial counts of subspaces. Integers only, no floats."""

from __future__ import annotations


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n.

    Zero when ``k < 0`` or ``k > n``. Each partial product is itself a
    q-binomial coefficient, so every floor division below is exact.
    """
    if q < 2:
        raise ValueError(f"q={q} must be >= 2")
    if k < 0 or k > n:
        return 0
    value = 1
    for i in range(k):
        value = value * (q ** (n - i) - 1) // (q ** (i + 1) - 1)
    return value


def q_bracket_one(a: int, q: int) -> int:
    """[a, 1]_q = 1 + q + ... + q^(a-1)."""
    if a < 0:
        raise ValueError(f"a={a} must be >= 0")
    return sum(q**i for i in range(a))


def count_disjoint(n: int, j: int, i: int, q: int) -> int:
    """i-spaces meeting a fixed j-space only in 0."""
    _check_dims(n, i, j)
    return q ** (i * j) * gaussian_binomial(n - j, i, q)


def count_intersecting(n: int, j: int, i: int, m: int, q: int) -> int:
    """i-spaces meeting a fixed j-space in exactly an m-space."""
    _check_dims(n, i, j)
    if not 0 <= m <= min(i, j):
        raise ValueError(f"need 0 <= m <= min(i, j), got m={m}")
    return q ** ((i - m) * (j - m)) * gaussian_binomial(n - j, i - m, q) * gaussian_binomial(j, m, q)


def cover_count(n: int, k: int, q: int) -> int:
    """(k+1)-spaces containing a fixed k-space."""
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got n={n}, k={k}")
    return gaussian_binomial(n - k, 1, q)


def _check_dims(n: int, i: int, j: int) -> None:
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"need 0 <= i, j <= n, got n={n}, i={i}, j={j}")
