"""Exact rank and nullity of integer matrices by fraction-free elimination."""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components


def bareiss_rank(M) -> int:
    """Rank of an integer matrix via Bareiss elimination.

    Every stored entry stays a minor of the input, so each division by the
    previous pivot is exact and no rational arithmetic is needed.
    """
    M = np.array(M, dtype=object)
    if M.size == 0:
        return 0
    nrows, ncols = M.shape
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = [i for i in range(r, nrows) if M[i, c] != 0]
        if not nz:
            continue
        i = nz[0]
        if i != r:
            M[[r, i]] = M[[i, r]]
        piv = M[r, c]
        if r + 1 < nrows and c + 1 < ncols:
            below = M[r + 1 :, c : c + 1]
            M[r + 1 :, c + 1 :] = (piv * M[r + 1 :, c + 1 :] - below * M[r, c + 1 :]) // prev
        M[r + 1 :, c] = 0
        prev = piv
        r += 1
    return r


def _blocks(M: np.ndarray) -> list[tuple[np.ndarray, np.ndarray]]:
    """Row/column index sets of the independent blocks of M's nonzero pattern."""
    nrows, ncols = M.shape
    rr, cc = np.nonzero(M)
    # bipartite graph: rows 0..nrows-1, columns nrows..nrows+ncols-1
    graph = csr_matrix(
        (np.ones(len(rr), dtype=np.int8), (rr, cc + nrows)), shape=(nrows + ncols, nrows + ncols)
    )
    count, labels = connected_components(graph, directed=False)
    out = []
    for lab in range(count):
        members = np.flatnonzero(labels == lab)
        rows = members[members < nrows]
        cols = members[members >= nrows] - nrows
        if len(rows) and len(cols):
            out.append((rows, cols))
    return out


def exact_rank(M) -> int:
    """Rank over Q; splits M into independent blocks first (a permutation, rank-preserving)."""
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return sum(bareiss_rank(M[np.ix_(rows, cols)]) for rows, cols in _blocks(M))


def exact_multiplicity(Asq, mu: int) -> int:
    """Nullity of Asq - mu*I, i.e. the multiplicity of mu as an eigenvalue of a symmetric Asq."""
    Asq = np.asarray(Asq)
    if Asq.ndim != 2 or Asq.shape[0] != Asq.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {Asq.shape}")
    if int(mu) != mu:
        raise ValueError(f"mu={mu} must be an integer")
    n = Asq.shape[0]
    shifted = Asq.astype(object) - int(mu) * np.eye(n, dtype=np.int64).astype(object)
    return n - exact_rank(shifted)
