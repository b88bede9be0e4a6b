"""Matrices and canonical subspaces over GF(q).

A subspace is always held as the RREF of a spanning matrix, so structural
equality of the basis is equality of subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .field import FieldSpec


class AmbientMismatch(ValueError):
    pass


@dataclass(frozen=True)
class MatrixGF:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> MatrixGF:
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        q = field.q
        if any(not 0 <= x < q for r in rows for x in r):
            raise ValueError(f"entry outside GF({q})")
        return cls(field, len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixGF:
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixGF:
        return cls(field, rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]


def _rref_rows(field: FieldSpec, rows: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """In-place Gauss-Jordan; returns the nonzero rows and their pivot columns."""
    add, mul, inv = field.add, field.mul, field.inv
    neg = field.neg
    r = 0
    pivots = []
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        f = inv(rows[r][c])
        if f != 1:
            rows[r] = [mul(f, x) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                g = neg(rows[i][c])
                rows[i] = [add(x, mul(g, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rref(M: MatrixGF) -> tuple[MatrixGF, int]:
    """Reduced row echelon form (same shape as ``M``, zero rows last) and rank."""
    rows, _ = _rref_rows(M.field, M.to_rows(), M.cols)
    rank = len(rows)
    rows += [[0] * M.cols for _ in range(M.rows - rank)]
    return MatrixGF.from_rows(M.field, rows, M.cols), rank


def rank(M: MatrixGF) -> int:
    return len(_rref_rows(M.field, M.to_rows(), M.cols)[0])


def null_space_rows(field: FieldSpec, rows: list[list[int]], cols: int) -> list[list[int]]:
    """Basis of {x : R x^T = 0}, one vector per free column."""
    red, pivots = _rref_rows(field, [list(r) for r in rows], cols)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * cols
        x[f] = 1
        for r, pc in zip(red, pivots):
            x[pc] = field.neg(r[f])
        basis.append(x)
    return basis


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    ambient_dim: int
    basis: MatrixGF

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def rows(self) -> list[list[int]]:
        return self.basis.to_rows()

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(c for c, x in enumerate(r) if x) for r in self.basis.to_rows())

    def vectors(self) -> Iterable[tuple[int, ...]]:
        """All q^dim vectors of the subspace (brute force; small cases only)."""
        import itertools

        f = self.field
        rows = self.rows
        for coeffs in itertools.product(range(f.q), repeat=self.dim):
            v = [0] * self.ambient_dim
            for c, r in zip(coeffs, rows):
                if c:
                    v = [f.add(x, f.mul(c, y)) for x, y in zip(v, r)]
            yield tuple(v)

    def serialize(self) -> str:
        return serialize_subspace(self)

    def __repr__(self) -> str:
        return f"Subspace({self.dim}/{self.ambient_dim} over {self.field!r}: {self.serialize() or '0'})"


def subspace_from_rows(field: FieldSpec, n: int, rows: Iterable[Sequence[int]]) -> Subspace:
    rows = [list(r) for r in rows]
    if any(len(r) != n for r in rows):
        raise ValueError(f"rows must have length {n}")
    red, _ = _rref_rows(field, rows, n)
    return Subspace(field, n, MatrixGF.from_rows(field, red, n))


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, MatrixGF.zeros(field, 0, n))


def full_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, MatrixGF.identity(field, n))


def _same_ambient(U: Subspace, W: Subspace) -> None:
    if U.field != W.field or U.ambient_dim != W.ambient_dim:
        raise AmbientMismatch(f"subspaces of different spaces: {U!r} vs {W!r}")


def span_sum(U: Subspace, W: Subspace) -> Subspace:
    _same_ambient(U, W)
    return subspace_from_rows(U.field, U.ambient_dim, U.rows + W.rows)


def intersect_dim(U: Subspace, W: Subspace) -> int:
    """dim(U ∩ W) via the modular law; no intersection basis is formed."""
    _same_ambient(U, W)
    stacked = _rref_rows(U.field, U.rows + W.rows, U.ambient_dim)[0]
    return U.dim + W.dim - len(stacked)


def contains(W: Subspace, U: Subspace) -> bool:
    """True iff U is a subspace of W."""
    return U.dim <= W.dim and intersect_dim(U, W) == U.dim


def annihilator(U: Subspace) -> Subspace:
    """{x : <u, x> = 0 for all u in U} under the standard dot product."""
    n = U.ambient_dim
    return subspace_from_rows(U.field, n, null_space_rows(U.field, U.rows, n))


# -- serialization


def _digit(d: int, p: int) -> str:
    if p <= 36:
        return np.base_repr(d, 36).lower()
    return f"{d}."


def serialize_subspace(U: Subspace) -> str:
    """Row-major base-p digits per coefficient (low degree first), rows joined by ';'.

    For p > 36 each digit is written in decimal followed by '.'.
    """
    f = U.field
    return ";".join(
        "".join(_digit(c, f.p) for x in row for c in f.to_coeffs(x)) for row in U.rows
    )


# -- batched rank, vectorised over a leading axis with field tables


def batch_rank(field: FieldSpec, stack: np.ndarray) -> np.ndarray:
    """Ranks of a stack of matrices with shape (B, r, c)."""
    M = np.array(stack, dtype=np.int64, copy=True)
    B, nrows, ncols = M.shape
    ranks = np.zeros(B, dtype=np.int64)
    if B == 0 or nrows == 0:
        return ranks
    if not field.has_tables:
        return np.array([len(_rref_rows(field, m.tolist(), ncols)[0]) for m in M], dtype=np.int64)
    t = field.np_tables
    mul, sub, inv = t["mul"], t["sub"], t["inv"]
    row_ids = np.arange(nrows)
    batch = np.arange(B)
    for c in range(ncols):
        # candidate pivot rows: not yet used and nonzero in column c
        cand = (M[:, :, c] != 0) & (row_ids[None, :] >= ranks[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = batch[has]
        r = ranks[has]
        piv = cand[has].argmax(axis=1)
        # swap pivot row into position r
        top = M[b, r].copy()
        M[b, r] = M[b, piv]
        M[b, piv] = top
        prow = mul[inv[M[b, r, c]][:, None], M[b, r]]
        M[b, r] = prow
        # clear column c below the pivot (rank only needs echelon form)
        sub_rows = M[b]
        factors = np.where(row_ids[None, :] > r[:, None], sub_rows[:, :, c], 0)
        M[b] = sub[sub_rows, mul[factors[:, :, None], prow[:, None, :]]]
        ranks[has] += 1
    return ranks


def subspace_array(subspaces: Sequence[Subspace]) -> np.ndarray:
    """Stack bases of equal-dimension subspaces into an (N, k, n) int array."""
    if not subspaces:
        return np.zeros((0, 0, 0), dtype=np.int64)
    k, n = subspaces[0].dim, subspaces[0].ambient_dim
    out = np.zeros((len(subspaces), k, n), dtype=np.int64)
    for i, U in enumerate(subspaces):
        if k:
            out[i] = np.array(U.basis.entries, dtype=np.int64).reshape(k, n)
    return out
