"""Exhaustive enumeration of k-subspaces of GF(q)^n in canonical order."""

from __future__ import annotations

import itertools

from .field import FieldSpec
from .linalg import MatrixGF, Subspace
from .qcount import gaussian_binomial

DEFAULT_CAP = 200_000


class CapExceeded(RuntimeError):
    """The requested object is larger than the configured desk-scale cap."""

    def __init__(self, what: str, required: int, cap: int):
        super().__init__(f"{what} needs {required} items, cap is {cap}")
        self.required = required
        self.cap = cap


def free_cells(pivots: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Row-major (row, col) cells of an RREF matrix with these pivots that are not forced."""
    pset = set(pivots)
    return [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pset]


def enumerate_subspaces(field: FieldSpec, n: int, k: int, cap: int = DEFAULT_CAP) -> list[Subspace]:
    """Every k-subspace of GF(q)^n exactly once.

    Order: pivot sets lexicographically; within a pivot set the free cells
    (row-major) run as an odometer over the field elements, last cell
    fastest, elements ordered by coefficient vector.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    total = gaussian_binomial(n, k, field.q)
    if total > cap:
        raise CapExceeded(f"{k}-subspaces of GF({field.q})^{n}", total, cap)
    elements = field.ordered_codes
    out = []
    for pivots in itertools.combinations(range(n), k):
        cells = free_cells(pivots, n)
        template = [0] * (k * n)
        for r, c in enumerate(pivots):
            template[r * n + c] = 1
        for fill in itertools.product(elements, repeat=len(cells)):
            entries = list(template)
            for (r, c), x in zip(cells, fill):
                entries[r * n + c] = x
            out.append(Subspace(field, n, MatrixGF(field, k, n, tuple(entries))))
    if len(out) != total:  # pragma: no cover - would mean the pivot-pattern count identity failed
        raise AssertionError(f"enumerated {len(out)} subspaces, expected {total}")
    return out
