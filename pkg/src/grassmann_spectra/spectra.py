"""Closed-form and numerical spectra of G(q,n,k) and S(q,n,k)."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import total_ordering

import numpy as np

from .exact import exact_multiplicity
from .field import FieldSpec, field_of_order
from .graphs import DENSE_CAP, Graph, adjacency_square, build_grassmann, build_inclusion
from .enumeration import DEFAULT_CAP, CapExceeded
from .jacobi import jacobi_eigenvalues
from .qcount import gaussian_binomial, q_bracket_one


class HypothesisViolation(ValueError):
    """Parameters outside the range where the closed form is established."""


class FormulaError(ArithmeticError):
    """A closed-form quantity that must be an integer was not."""


@total_ordering
@dataclass(frozen=True, eq=False)
class ExactEigenvalue:
    """sign * sqrt(radicand) / denominator, with the radicand kept unreduced."""

    sign: int
    radicand: int
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.radicand < 0 or self.denominator < 1:
            raise ValueError("radicand must be >= 0 and denominator >= 1")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign is 0 exactly when the radicand is 0")

    @classmethod
    def integer(cls, value: int) -> ExactEigenvalue:
        return cls((value > 0) - (value < 0), value * value, 1)

    @property
    def square(self) -> Fraction:
        return Fraction(self.radicand, self.denominator**2)

    @property
    def signed_square(self) -> Fraction:
        # order-preserving: x -> sign(x) * x^2 is strictly increasing
        return self.sign * self.square

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactEigenvalue):
            return NotImplemented
        return (
            self.sign == other.sign
            and self.radicand * other.denominator**2 == other.radicand * self.denominator**2
        )

    def __lt__(self, other: ExactEigenvalue) -> bool:
        return self.signed_square < other.signed_square

    def __hash__(self) -> int:
        return hash(self.signed_square)

    def __neg__(self) -> ExactEigenvalue:
        return ExactEigenvalue(-self.sign, self.radicand, self.denominator)

    def __float__(self) -> float:
        root = math.isqrt(self.radicand)
        if root * root == self.radicand:
            return self.sign * root / self.denominator
        return self.sign * math.sqrt(self.radicand) / self.denominator

    def as_integer(self) -> int | None:
        """The exact integer value, or None when irrational or fractional."""
        root = math.isqrt(self.radicand)
        if root * root != self.radicand or root % self.denominator:
            return None
        return self.sign * root // self.denominator

    def __str__(self) -> str:
        as_int = self.as_integer()
        if as_int is not None:
            return str(as_int)
        s = "-" if self.sign < 0 else ""
        return f"{s}√{self.radicand}" + (f"/{self.denominator}" if self.denominator != 1 else "")


@dataclass
class SpectrumTable:
    family: str
    q: int
    n: int
    k: int
    entries: list[tuple[ExactEigenvalue, int]] = dc_field(default_factory=list)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def eigenvalues(self) -> list[ExactEigenvalue]:
        return [lam for lam, _ in self.entries]

    def multiplicity(self, lam: ExactEigenvalue) -> int:
        return sum(m for e, m in self.entries if e == lam)

    def power_sum_2(self) -> Fraction:
        """Σ m·λ², exact."""
        return sum((m * lam.square for lam, m in self.entries), Fraction(0))

    def is_sign_symmetric(self) -> bool:
        table = dict((lam, m) for lam, m in self.entries)
        return all(table.get(-lam) == m for lam, m in self.entries)

    def trace(self) -> int | None:
        """Σ m·λ as an exact integer when every eigenvalue is rational, else None.

        Irrational tables only admit the sign-symmetry argument; see
        :meth:`trace_is_zero`.
        """
        total = Fraction(0)
        for lam, m in self.entries:
            root = math.isqrt(lam.radicand)
            if root * root != lam.radicand:
                return None
            total += m * lam.sign * Fraction(root, lam.denominator)
        return int(total) if total.denominator == 1 else None

    def trace_is_zero(self) -> bool:
        if self.is_sign_symmetric():
            return True
        return self.trace() == 0

    def validate(self, order: int | None = None) -> None:
        lams = self.eigenvalues()
        if any(m <= 0 for _, m in self.entries):
            raise ValueError("multiplicities must be positive")
        if any(not a > b for a, b in zip(lams, lams[1:])):
            raise ValueError("entries must be strictly decreasing")
        if order is not None and self.total_multiplicity != order:
            raise ValueError(f"multiplicities sum to {self.total_multiplicity}, expected {order}")
        if self.family == "inclusion" and not self.is_sign_symmetric():
            raise ValueError("bipartite spectrum is not symmetric under negation")

    # -- serialization

    def rows(self) -> list[dict]:
        return [
            {
                "sign": lam.sign,
                "radicand": str(lam.radicand),
                "denominator": str(lam.denominator),
                "approx": float(lam),
                "multiplicity": str(m),
            }
            for lam, m in self.entries
        ]

    def to_dict(self) -> dict:
        return {"family": self.family, "q": self.q, "n": self.n, "k": self.k, "entries": self.rows()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> SpectrumTable:
        entries = [
            (
                ExactEigenvalue(int(e["sign"]), int(e["radicand"]), int(e["denominator"])),
                int(e["multiplicity"]),
            )
            for e in data["entries"]
        ]
        return cls(data["family"], int(data["q"]), int(data["n"]), int(data["k"]), entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        fields = ["sign", "radicand", "denominator", "approx", "multiplicity"]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows())
        return buf.getvalue()

    def to_text(self) -> str:
        name = {"grassmann": "G", "inclusion": "S", "inclusion-square": "A^2 of S"}.get(self.family, self.family)
        lines = [f"Spec {name}({self.q},{self.n},{self.k})  total multiplicity {self.total_multiplicity}"]
        for lam, m in self.entries:
            lines.append(f"  {str(lam):>14}  ~ {float(lam):>+.12f}  x {m}")
        return "\n".join(lines) + "\n"


def _table(family: str, q: int, n: int, k: int, entries: list[tuple[ExactEigenvalue, int]]) -> SpectrumTable:
    merged: dict[ExactEigenvalue, int] = {}
    for lam, m in entries:
        if m:
            merged[lam] = merged.get(lam, 0) + m
    ordered = sorted(merged.items(), key=lambda e: e[0], reverse=True)
    return SpectrumTable(family, q, n, k, ordered)


def _check_q(q: int) -> None:
    if q < 2:
        raise ValueError(f"q={q} must be >= 2")


# -- Grassmann graphs


def grassmann_eigenvalue(q: int, n: int, k: int, j: int) -> int:
    """j-th eigenvalue of G(q,n,k): q^(j+1)[k-j,1][n-k-j,1] - [j,1]."""
    return q ** (j + 1) * q_bracket_one(k - j, q) * q_bracket_one(n - k - j, q) - q_bracket_one(j, q)


def eigen_multiplicity(q: int, n: int, j: int) -> int:
    """[n,j] - [n,j-1], with [n,-1] = 0."""
    return gaussian_binomial(n, j, q) - gaussian_binomial(n, j - 1, q)


def grassmann_spectrum_closed(q: int, n: int, k: int) -> SpectrumTable:
    _check_q(q)
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    d = min(k, n - k)
    entries = [
        (ExactEigenvalue.integer(grassmann_eigenvalue(q, n, k, j)), eigen_multiplicity(q, n, j))
        for j in range(d + 1)
    ]
    return _table("grassmann", q, n, k, entries)


# -- inclusion graphs


def check_inclusion_hypothesis(n: int, k: int) -> None:
    if n < 3 or not 1 <= k or not 2 * k < n:
        raise HypothesisViolation(
            f"closed-form spectrum of S(q,n,k) requires n >= 3 and 1 <= k < n/2; got n={n}, k={k}"
        )


def inclusion_theta(q: int, n: int, k: int, j: int) -> int:
    """(q-1)^2 times the j-th eigenvalue of A^2 for S(q,n,k)."""
    return q ** (n - j + 1) - q ** (n - k) + q**j - q ** (k + 1)


def inclusion_spectrum_closed(q: int, n: int, k: int) -> SpectrumTable:
    """Spectrum of S(q,n,k): ±sqrt(theta_j)/(q-1), each sign with multiplicity [n,j]-[n,j-1], plus 0."""
    _check_q(q)
    check_inclusion_hypothesis(n, k)
    entries = []
    for j in range(k + 1):
        theta = inclusion_theta(q, n, k, j)
        m = eigen_multiplicity(q, n, j)
        entries.append((ExactEigenvalue(1, theta, q - 1), m))
        entries.append((ExactEigenvalue(-1, theta, q - 1), m))
    entries.append((ExactEigenvalue(0, 0), gaussian_binomial(n, k + 1, q) - gaussian_binomial(n, k, q)))
    return _table("inclusion", q, n, k, entries)


def square_eigenvalue(q: int, n: int, k: int, j: int) -> int:
    theta = inclusion_theta(q, n, k, j)
    value, rem = divmod(theta, (q - 1) ** 2)
    if rem:
        raise FormulaError(f"theta_{j}={theta} is not divisible by (q-1)^2 for q={q}, n={n}, k={k}")
    return value


def square_spectrum_closed(q: int, n: int, k: int) -> SpectrumTable:
    """Spectrum of A^2 for S(q,n,k), all eigenvalues exact integers."""
    _check_q(q)
    check_inclusion_hypothesis(n, k)
    entries = [
        (ExactEigenvalue.integer(square_eigenvalue(q, n, k, j)), 2 * eigen_multiplicity(q, n, j))
        for j in range(k + 1)
    ]
    entries.append((ExactEigenvalue.integer(square_eigenvalue(q, n, k, k + 1)),
                    gaussian_binomial(n, k + 1, q) - gaussian_binomial(n, k, q)))
    return _table("inclusion-square", q, n, k, entries)


# -- A^2 block structure


@dataclass
class BlockReport:
    q: int
    n: int
    k: int
    shape: tuple[int, int]
    mismatches: list[tuple[int, int, int, int]]  # (row, col, got, expected)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self) -> str:
        head = f"A^2 block identity for S({self.q},{self.n},{self.k}) on {self.shape[0]}x{self.shape[1]}"
        if self.ok:
            return head + ": exact equality"
        shown = ", ".join(f"({r},{c}): {g} != {e}" for r, c, g, e in self.mismatches[:10])
        return head + f": {len(self.mismatches)} mismatching entries, e.g. {shown}"


def square_block_matrix(q: int, n: int, k: int, low: Graph, high: Graph, dense_cap: int = DENSE_CAP) -> np.ndarray:
    """diag([n-k,1] I + A(G(q,n,k)), [k+1,1] I + A(G(q,n,k+1)))."""
    r, s = low.order, high.order
    M = np.zeros((r + s, r + s), dtype=np.int64)
    M[:r, :r] = low.dense(dense_cap) + q_bracket_one(n - k, q) * np.eye(r, dtype=np.int64)
    M[r:, r:] = high.dense(dense_cap) + q_bracket_one(k + 1, q) * np.eye(s, dtype=np.int64)
    return M


def verify_square_blocks(q: int, n: int, k: int, cap: int = DEFAULT_CAP, dense_cap: int = DENSE_CAP,
                         field: FieldSpec | None = None) -> BlockReport:
    field = field or field_of_order(q)
    S = build_inclusion(field, n, k, cap)
    low = build_grassmann(field, n, k, cap)
    high = build_grassmann(field, n, k + 1, cap)
    if S.order > dense_cap:
        raise CapExceeded(f"dense A^2 of {S.name}", S.order, dense_cap)
    got = adjacency_square(S, dense_cap)
    expected = square_block_matrix(q, n, k, low, high, dense_cap)
    rows, cols = np.nonzero(got != expected)
    mismatches = [(int(i), int(j), int(got[i, j]), int(expected[i, j])) for i, j in zip(rows, cols)]
    return BlockReport(q, n, k, got.shape, mismatches)


# -- numeric oracle


def numeric_spectrum(A, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """All eigenvalues of symmetric A by cyclic Jacobi, descending."""
    return jacobi_eigenvalues(A, tol=tol, max_sweeps=max_sweeps).tolist()


def cluster(values: list[float], cluster_tol: float = 1e-6) -> list[list[float]]:
    """Group consecutive sorted values whose gaps are within cluster_tol."""
    groups: list[list[float]] = []
    for v in values:
        if groups and abs(groups[-1][-1] - v) <= cluster_tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return groups


@dataclass
class ClusterDelta:
    exact: str | None
    exact_approx: float | None
    expected_multiplicity: int | None
    mean: float | None
    size: int | None
    delta: float | None
    ok: bool


@dataclass
class MatchReport:
    ok: bool
    clusters: int
    expected: int
    deltas: list[ClusterDelta]
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "clusters": self.clusters,
            "expected": self.expected,
            "message": self.message,
            "deltas": [d.__dict__ for d in self.deltas],
        }

    def __str__(self) -> str:
        lines = [f"match: {'OK' if self.ok else 'MISMATCH'} ({self.clusters} clusters, {self.expected} expected)"]
        if self.message:
            lines.append("  " + self.message)
        for d in self.deltas:
            mark = "ok " if d.ok else "BAD"
            lines.append(
                f"  {mark} exact={d.exact} x{d.expected_multiplicity}  numeric mean={d.mean} x{d.size}  delta={d.delta}"
            )
        return "\n".join(lines)


def cluster_and_match(
    numeric: list[float], exact: SpectrumTable, cluster_tol: float = 1e-6, match_tol: float = 1e-8
) -> MatchReport:
    groups = cluster(sorted(numeric, reverse=True), cluster_tol)
    deltas = []
    for i in range(max(len(groups), len(exact.entries))):
        g = groups[i] if i < len(groups) else None
        e = exact.entries[i] if i < len(exact.entries) else None
        mean = float(np.mean(g)) if g else None
        if g is None or e is None:
            deltas.append(ClusterDelta(
                str(e[0]) if e else None, float(e[0]) if e else None, e[1] if e else None,
                mean, len(g) if g else None, None, False,
            ))
            continue
        lam, m = e
        delta = abs(mean - float(lam))
        deltas.append(ClusterDelta(str(lam), float(lam), m, mean, len(g), delta, delta <= match_tol and len(g) == m))
    ok = len(groups) == len(exact.entries) and all(d.ok for d in deltas)
    msg = "" if len(groups) == len(exact.entries) else f"cluster count {len(groups)} != {len(exact.entries)}"
    return MatchReport(ok, len(groups), len(exact.entries), deltas, msg)


def certify_square_multiplicities(A2, table: SpectrumTable) -> list[tuple[int, int, int]]:
    """(eigenvalue, closed-form multiplicity, exact nullity) for each entry of an A^2 table."""
    out = []
    for lam, m in table.entries:
        mu = lam.as_integer()
        if mu is None:
            raise FormulaError(f"A^2 eigenvalue {lam} is not an integer")
        out.append((mu, m, exact_multiplicity(A2, mu)))
    return out


def closed_form(family: str, q: int, n: int, k: int) -> SpectrumTable:
    if family == "grassmann":
        return grassmann_spectrum_closed(q, n, k)
    if family == "inclusion":
        return inclusion_spectrum_closed(q, n, k)
    raise ValueError(f"unknown family {family!r}")


def build(family: str, q: int, n: int, k: int, cap: int = DEFAULT_CAP) -> Graph:
    field = field_of_order(q)
    if family == "grassmann":
        return build_grassmann(field, n, k, cap)
    if family == "inclusion":
        return build_inclusion(field, n, k, cap)
    raise ValueError(f"unknown family {family!r}")
