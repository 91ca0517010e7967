"""Cross-checks run by ``verify``: every independent route to N_F(n) and cap(F)
must agree with the cluster pipeline."""

from __future__ import annotations

from dataclasses import dataclass

from .capacity import capacity, capacity_spectral
from .cluster import cluster_genfun
from .errors import DegenerateError, ResourceError
from .series import DEFAULT_BRUTE_BUDGET, brute_force_counts, count_range
from .spectral import build_debruijn, is_degenerate, verify_transfer_identity, walk_counts
from .words import ForbiddenSet

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "status": self.status, "detail": self.detail}


def _max_brute_n(q: int, n_max: int, budget: int) -> int:
    n = 0
    while n < n_max and q ** (n + 1) <= budget:
        n += 1
    return n


def run_checks(
    F: ForbiddenSet,
    n_max: int = 16,
    eps: float = 1e-9,
    budget: int = DEFAULT_BRUTE_BUDGET,
) -> list[CheckResult]:
    out: list[CheckResult] = []
    # the degree bound is asserted inside cluster_genfun; reaching the next line means it held
    _, f = cluster_genfun(F)
    out.append(CheckResult("degree-bound", PASS, f"deg T={f.T.degree}, deg S={f.S.degree}"))
    counts = count_range(f, n_max)

    nb = _max_brute_n(F.q, n_max, budget)
    brute = brute_force_counts(F, nb, budget)
    bad = [n for n in range(nb + 1) if brute[n] != counts[n]]
    out.append(CheckResult(
        "brute-force-counts", FAIL if bad else PASS,
        f"n <= {nb}" + (f"; mismatch at n={bad[:5]}" if bad else ""),
    ))

    if not len(F):
        for name in ("walk-counts", "transfer-matrix-identity", "degeneracy", "capacity-agreement"):
            out.append(CheckResult(name, SKIP, "empty forbidden set"))
        return out

    try:
        G = build_debruijn(F)
    except ResourceError as exc:
        for name in ("walk-counts", "transfer-matrix-identity", "degeneracy", "capacity-agreement"):
            out.append(CheckResult(name, SKIP, str(exc)))
        return out

    walks = walk_counts(G, n_max)
    bad = [n for n, v in walks.items() if v != counts[n]]
    out.append(CheckResult(
        "walk-counts", FAIL if bad else PASS,
        f"{F.ell} <= n <= {n_max}" + (f"; mismatch at n={bad[:5]}" if bad else ""),
    ))

    try:
        ok = verify_transfer_identity(F, f)
        out.append(CheckResult("transfer-matrix-identity", PASS if ok else FAIL, f"{G.m} vertices"))
    except ResourceError as exc:
        out.append(CheckResult("transfer-matrix-identity", SKIP, str(exc)))

    degenerate = is_degenerate(F)
    agree = degenerate == (f.S.degree < 1)
    out.append(CheckResult(
        "degeneracy", PASS if agree else FAIL,
        f"graph says {'degenerate' if degenerate else 'nondegenerate'}, deg S={f.S.degree}",
    ))

    if degenerate:
        out.append(CheckResult("capacity-agreement", SKIP, "degenerate: capacity undefined"))
        return out
    try:
        c1 = capacity(f, eps)
        c2 = capacity_spectral(F, eps)
    except (ResourceError, DegenerateError) as exc:
        out.append(CheckResult("capacity-agreement", SKIP, str(exc)))
        return out
    diff = abs(c1.value - c2.value)
    out.append(CheckResult(
        "capacity-agreement", PASS if diff <= 2 * eps else FAIL,
        f"cluster {c1.value:.12f}, spectral {c2.value:.12f}, diff {diff:.2e}",
    ))
    return out
