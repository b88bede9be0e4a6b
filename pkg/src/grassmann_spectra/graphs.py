"""Grassmann graphs G(q,n,k) and subspace-inclusion graphs S(q,n,k)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .enumeration import DEFAULT_CAP, CapExceeded, enumerate_subspaces
from .field import FieldSpec
from .linalg import Subspace, batch_rank, intersect_dim, subspace_array
from .qcount import gaussian_binomial, q_bracket_one

DENSE_CAP = 5_000
UNREACHABLE = -1
# bound on pairs handled per batched rank call
_PAIR_CHUNK = 100_000


class ConstructionError(RuntimeError):
    """A built graph violated a structural identity it must satisfy."""


@dataclass(frozen=True)
class BipartiteParams:
    n1: int
    n2: int
    r1: int
    r2: int

    def __post_init__(self) -> None:
        if self.n1 * self.r1 != self.n2 * self.r2:
            raise ValueError(f"inconsistent bi-regular parameters {self}")

    @property
    def edges(self) -> int:
        return self.n1 * self.r1


@dataclass(frozen=True)
class Graph:
    name: str
    vertices: tuple[Subspace, ...]
    adjacency: tuple[tuple[int, ...], ...]
    part_sizes: tuple[int, int] | None = None
    params: BipartiteParams | None = None
    _dense: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def vertex_labels(self) -> list[str]:
        return [v.serialize() for v in self.vertices]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def dense(self, cap: int = DENSE_CAP) -> np.ndarray:
        """0/1 adjacency matrix (cached; callers must not mutate it)."""
        if "A" not in self._dense:
            if self.order > cap:
                raise CapExceeded(f"dense adjacency of {self.name}", self.order, cap)
            A = np.zeros((self.order, self.order), dtype=np.int64)
            for u, nbrs in enumerate(self.adjacency):
                A[u, list(nbrs)] = 1
            A.setflags(write=False)
            self._dense["A"] = A
        return self._dense["A"]


def _adjacency_from_pairs(N: int, pairs: list[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    nbrs: list[list[int]] = [[] for _ in range(N)]
    for u, v in pairs:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return tuple(tuple(sorted(a)) for a in nbrs)


def _pairs_with_stack_rank(
    field: FieldSpec, left: Sequence[Subspace], right: Sequence[Subspace], target: int, upper_only: bool
) -> list[tuple[int, int]]:
    """All (i, j) with rank([left_i; right_j]) == target, tested pairwise.

    With ``upper_only`` the two sequences are the same and only i < j is tested.
    """
    L, R = subspace_array(left), subspace_array(right)
    if not len(left) or not len(right):
        return []
    if not field.has_tables:
        return [
            (i, j)
            for i, U in enumerate(left)
            for j, W in enumerate(right)
            if (not upper_only or i < j) and U.dim + W.dim - intersect_dim(U, W) == target
        ]
    out = []
    step = max(1, _PAIR_CHUNK // len(right))
    for start in range(0, len(left), step):
        rows = np.arange(start, min(start + step, len(left)))
        ii, jj = np.meshgrid(rows, np.arange(len(right)), indexing="ij")
        ii, jj = ii.ravel(), jj.ravel()
        if upper_only:
            keep = ii < jj
            ii, jj = ii[keep], jj[keep]
        if not len(ii):
            continue
        stack = np.concatenate([L[ii], R[jj]], axis=1)
        hit = batch_rank(field, stack) == target
        out.extend(zip(ii[hit].tolist(), jj[hit].tolist()))
    return out


def build_grassmann(field: FieldSpec, n: int, k: int, cap: int = DEFAULT_CAP) -> Graph:
    """k-subspaces, adjacent iff they meet in a (k-1)-space."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    q = field.q
    verts = enumerate_subspaces(field, n, k, cap)
    # dim(U ∩ W) = k-1  <=>  rank of the stacked bases = k+1
    pairs = _pairs_with_stack_rank(field, verts, verts, k + 1, upper_only=True)
    g = Graph(f"G({q},{n},{k})", tuple(verts), _adjacency_from_pairs(len(verts), pairs))
    expected = q * q_bracket_one(k, q) * q_bracket_one(n - k, q)
    if set(g.degrees()) != {expected}:
        raise ConstructionError(f"{g.name} is not {expected}-regular")
    return g


def build_inclusion(field: FieldSpec, n: int, k: int, cap: int = DEFAULT_CAP) -> Graph:
    """Bipartite graph on k- and (k+1)-subspaces, adjacent under inclusion."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
    q = field.q
    need = gaussian_binomial(n, k, q) + gaussian_binomial(n, k + 1, q)
    if need > cap:
        raise CapExceeded(f"S({q},{n},{k})", need, cap)
    low = enumerate_subspaces(field, n, k, cap)
    high = enumerate_subspaces(field, n, k + 1, cap)
    n1 = len(low)
    # U ⊆ W  <=>  rank([U; W]) = dim W
    pairs = [(i, n1 + j) for i, j in _pairs_with_stack_rank(field, low, high, k + 1, upper_only=False)]
    params = BipartiteParams(n1, len(high), q_bracket_one(n - k, q), q_bracket_one(k + 1, q))
    g = Graph(
        f"S({q},{n},{k})",
        tuple(low) + tuple(high),
        _adjacency_from_pairs(n1 + len(high), pairs),
        part_sizes=(n1, len(high)),
        params=params,
    )
    degs = g.degrees()
    if set(degs[:n1]) != {params.r1} or set(degs[n1:]) != {params.r2}:
        raise ConstructionError(f"{g.name} is not bi-regular with {params}")
    return g


def bfs_distances(g: Graph, source: int) -> list[int]:
    if not 0 <= source < g.order:
        raise IndexError(f"vertex {source} out of range")
    dist = [UNREACHABLE] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        raise ValueError("empty graph")
    return UNREACHABLE not in bfs_distances(g, 0)


def diameter(g: Graph) -> int:
    best = 0
    for s in range(g.order):
        d = bfs_distances(g, s)
        if UNREACHABLE in d:
            raise ValueError(f"{g.name} is disconnected")
        best = max(best, max(d))
    return best


def adjacency_square(g: Graph, cap: int = DENSE_CAP) -> np.ndarray:
    """Exact A @ A; entry (v, w) counts common neighbours."""
    A = g.dense(cap)
    max_deg = max(g.degrees(), default=0)
    # every entry of A^2 is at most the maximum degree
    if max_deg >= 2**62:  # pragma: no cover
        obj = A.astype(object)
        return obj @ obj
    return A @ A


def export_edge_list(g: Graph) -> str:
    lines = [f"# {g.name} |V|={g.order} |E|={g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def export_dot(g: Graph) -> str:
    lines = [f'graph "{g.name}" {{']
    for i, label in enumerate(g.vertex_labels):
        lines.append(f'  {i} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
