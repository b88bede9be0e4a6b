"""End-to-end checks of S(q,n,k) against the counting and spectral closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .enumeration import DEFAULT_CAP
from .field import field_of_order
from .graphs import DENSE_CAP, adjacency_square, build_grassmann, build_inclusion, is_connected
from .qcount import cover_count, gaussian_binomial, q_bracket_one
from .spectra import (
    certify_square_multiplicities,
    check_inclusion_hypothesis,
    cluster_and_match,
    inclusion_spectrum_closed,
    numeric_spectrum,
    square_block_matrix,
    square_spectrum_closed,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str

    def __str__(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}: {self.detail}"


def verify_instance(
    q: int,
    n: int,
    k: int,
    cap: int = DEFAULT_CAP,
    dense_cap: int = DENSE_CAP,
    tol: float = 1e-12,
    cluster_tol: float = 1e-6,
    match_tol: float = 1e-8,
    on_check: Callable[[Check], None] | None = None,
) -> list[Check]:
    """Run every check in order; raises only for invalid parameters or caps."""
    check_inclusion_hypothesis(n, k)
    field = field_of_order(q)
    checks: list[Check] = []

    def record(name: str, ok: bool, detail: str) -> None:
        c = Check(name, bool(ok), detail)
        checks.append(c)
        if on_check:
            on_check(c)

    S = build_inclusion(field, n, k, cap)
    n1, n2 = S.part_sizes
    want1, want2 = gaussian_binomial(n, k, q), gaussian_binomial(n, k + 1, q)
    record("count V_k", n1 == want1, f"{n1} enumerated, [n,k]_q = {want1}")
    record("count V_k+1", n2 == want2, f"{n2} enumerated, [n,k+1]_q = {want2}")

    degs = S.degrees()
    r1, r2 = cover_count(n, k, q), q_bracket_one(k + 1, q)
    record("degree V_k", set(degs[:n1]) == {r1}, f"degrees {sorted(set(degs[:n1]))}, cover count {r1}")
    record("degree V_k+1", set(degs[n1:]) == {r2}, f"degrees {sorted(set(degs[n1:]))}, [k+1,1]_q = {r2}")
    edges = S.edge_count
    record("edge double count", n1 * r1 == n2 * r2 == edges, f"n1*r1={n1 * r1}, n2*r2={n2 * r2}, |E|={edges}")
    record("connected", is_connected(S), f"BFS from vertex 0 over {S.order} vertices")

    A2 = adjacency_square(S, dense_cap)
    blocks = square_block_matrix(q, n, k, build_grassmann(field, n, k, cap), build_grassmann(field, n, k + 1, cap),
                                 dense_cap)
    bad = int((A2 != blocks).sum())
    record("A^2 block identity", bad == 0, f"{bad} mismatching entries of {A2.size}")

    table = inclusion_spectrum_closed(q, n, k)
    report = cluster_and_match(numeric_spectrum(S.dense(dense_cap), tol=tol), table, cluster_tol, match_tol)
    worst = max((d.delta for d in report.deltas if d.delta is not None), default=0.0)
    record("closed vs numeric spectrum", report.ok,
           f"{report.clusters} clusters / {report.expected} expected, max |delta| = {worst:.2e}")

    certs = certify_square_multiplicities(A2, square_spectrum_closed(q, n, k))
    record("exact A^2 multiplicities", all(m == got for _, m, got in certs),
           ", ".join(f"{mu}: {got}/{m}" for mu, m, got in certs))

    record("multiplicity sum", table.total_multiplicity == S.order, f"{table.total_multiplicity} vs |V|={S.order}")
    record("trace", table.trace_is_zero(), "sign-symmetric table, sum m*lambda = 0")
    energy = table.power_sum_2()
    record("energy", energy == 2 * edges, f"sum m*lambda^2 = {energy}, 2|E| = {2 * edges}")
    return checks
