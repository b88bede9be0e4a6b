"""Cyclic Jacobi eigenvalues for real symmetric matrices.

Sweeps use the round-robin ("tournament") ordering: each sweep visits every
off-diagonal pair once, grouped into n-1 rounds of disjoint pairs. Rotations
in one round commute, so a round is applied as a single vectorised update.
"""

from __future__ import annotations

import numpy as np


class JacobiNotConverged(RuntimeError):
    def __init__(self, sweeps: int, residual: float):
        super().__init__(f"Jacobi did not converge after {sweeps} sweeps (relative off-norm {residual:.3e})")
        self.sweeps = sweeps
        self.residual = residual


def round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """n-1 (or n) rounds of disjoint index pairs covering every pair i<j once."""
    m = n + (n % 2)
    ring = list(range(1, m))
    rounds = []
    for _ in range(m - 1):
        order = [0] + ring
        ps, qs = [], []
        for i in range(m // 2):
            a, b = order[i], order[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        if ps:
            rounds.append((np.array(ps), np.array(qs)))
        ring = ring[-1:] + ring[:-1]
    return rounds


def _off_norm(A: np.ndarray) -> float:
    off = A - np.diag(np.diag(A))
    return float(np.linalg.norm(off))


def _rotate_rows(A: np.ndarray, p, q, c, s) -> np.ndarray:
    A = np.ascontiguousarray(A)
    Ap, Aq = A[p], A[q]
    A[p] = c[:, None] * Ap - s[:, None] * Aq
    A[q] = s[:, None] * Ap + c[:, None] * Aq
    return A


def jacobi_eigenvalues(A, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of symmetric ``A``, sorted descending.

    Stops once the off-diagonal Frobenius norm is at most ``tol`` times the
    Frobenius norm of ``A``.
    """
    A = np.array(A, dtype=np.float64, copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not symmetric")
    n = A.shape[0]
    scale = float(np.linalg.norm(A))
    rounds = round_robin(n)
    sweeps = 0
    while _off_norm(A) > tol * scale:
        if sweeps == max_sweeps:
            raise JacobiNotConverged(sweeps, _off_norm(A) / scale)
        for p, q in rounds:
            apq = A[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (A[q, q] - A[p, p]) / (2.0 * apq)
            with np.errstate(over="ignore"):
                t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            huge = np.abs(theta) > 1e150
            t[huge] = 0.5 / theta[huge]
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # A <- J^T A J as two row updates: (J^T (J^T A)^T) with A symmetric
            A = _rotate_rows(_rotate_rows(A, p, q, c, s).T, p, q, c, s)
            A[p, q] = 0.0
            A[q, p] = 0.0
        sweeps += 1
    return np.sort(np.diag(A))[::-1].copy()
