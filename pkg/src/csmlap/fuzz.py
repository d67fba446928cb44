"""Randomized and exhaustive checking of the expansion identities."""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field

from .condensation import desnanot_jacobi
from .csm import (build_initialized, build_tilde, csm_lhs, csm_rhs, csm_rhs_complement,
                  csm_terms, lemma_lhs_value, lemma_rhs_value)
from .index import CsmPartition, OrderedIndexSet, complement
from .laplace import laplace_det
from .matrix import LEIBNIZ_MAX_N, LabeledMatrix, det_leibniz
from .ring import RingContext


def random_matrix(ctx: RingContext, n: int, rng: random.Random, low=-9, high=9) -> LabeledMatrix:
    return LabeledMatrix(OrderedIndexSet.natural(n), OrderedIndexSet.natural(n),
                         [[ctx.random(rng, low, high) for _ in range(n)] for _ in range(n)],
                         ctx, check=False)


def random_partition(A: LabeledMatrix, rng: random.Random) -> CsmPartition:
    """|F| uniform in 0..n-1, then |I| uniform in 0..n-|F|, then uniform label sets."""
    n = len(A.rows)
    f = rng.randint(0, n - 1)
    F = rng.sample(A.rows.labels, f)
    G = rng.sample(A.cols.labels, f)
    rest = complement(A.rows, F)
    I = rng.sample(rest, rng.randint(0, len(rest)))
    return CsmPartition.make(A.rows, A.cols, F, G, I)


def all_partitions(rows: OrderedIndexSet, cols: OrderedIndexSet):
    """Every valid ``(F, G, I)`` in a fixed order."""
    n = len(rows)
    for f in range(n + 1):
        for F in itertools.combinations(rows.labels, f):
            rest = complement(rows, F)
            for G in itertools.combinations(cols.labels, f):
                for i in range(len(rest) + 1):
                    for I in itertools.combinations(rest, i):
                        yield CsmPartition.make(rows, cols, F, G, I)


CHECKS = (
    "laplace_position", "laplace_rank", "laplace_complement",
    "csm_position", "csm_rank", "csm_complement",
    "csm_empty_F", "csm_empty_I",
    "lemma_rhs", "lemma_lhs", "tilde_det",
    "desnanot_jacobi",
)


def check_matrix(A: LabeledMatrix, P: CsmPartition, K, I_free, FG_fixed) -> dict[str, bool]:
    """Run every identity on one matrix; returns check name -> passed.

    ``K`` is the Laplace row set, ``I_free`` the ``I`` used with ``F`` empty,
    and ``FG_fixed`` the ``(F, G)`` used with ``I`` empty.
    """
    out = {}
    d = det_leibniz(A)
    out["laplace_position"] = laplace_det(A, K, "position") == d
    out["laplace_rank"] = laplace_det(A, K, "rank") == d
    out["laplace_complement"] = laplace_det(A, K, "rank", complement_form=True) == d

    lhs = csm_lhs(A, P.F, P.G)
    out["csm_position"] = csm_rhs(A, P, "position") == lhs
    out["csm_rank"] = csm_rhs(A, P, "rank") == lhs
    out["csm_complement"] = csm_rhs_complement(A, P, "rank") == lhs

    P0 = CsmPartition.make(A.rows, A.cols, (), (), I_free)
    out["csm_empty_F"] = (csm_rhs(A, P0, "rank") == laplace_det(A, I_free, "rank")
                          and csm_rhs(A, P0, "position") == laplace_det(A, I_free, "position"))
    F, G = FG_fixed
    P1 = CsmPartition.make(A.rows, A.cols, F, G, ())
    sign, terms = csm_terms(A, P1)
    out["csm_empty_I"] = (sign == 1 and len(terms) == 1 and terms[0].sign == 1
                          and terms[0].product == csm_lhs(A, F, G))

    if len(A.rows) + len(P.F) <= LEIBNIZ_MAX_N:
        vec = build_initialized(A, P)
        dv = det_leibniz(vec)
        out["lemma_rhs"] = dv == lemma_rhs_value(A, P)
        out["lemma_lhs"] = dv == lemma_lhs_value(A, P)
        out["tilde_det"] = det_leibniz(build_tilde(vec, P.F, P.G)) == dv

    if len(A.rows) >= 2:
        out["desnanot_jacobi"] = desnanot_jacobi(A)[2]
    return out


@dataclass
class FuzzSummary:
    trials: int
    seed: int | None
    ring: str
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    failures: list[dict] = field(default_factory=list)

    @property
    def total_failures(self) -> int:
        return sum(self.failed.values())

    def record(self, trial: int, result: dict[str, bool], info: dict) -> None:
        for name, ok in result.items():
            if ok:
                self.passed[name] += 1
            else:
                self.failed[name] += 1
                self.failures.append({"trial": trial, "check": name, **info})

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "ring": self.ring,
            "checks": {name: {"passed": self.passed[name], "failed": self.failed[name]}
                       for name in CHECKS if self.passed[name] or self.failed[name]},
            "total_failures": self.total_failures,
            "failures": sorted(self.failures, key=lambda f: (f["trial"], f["check"])),
        }

    def to_text(self) -> str:
        lines = [f"ring {self.ring}  trials {self.trials}  seed {self.seed}"]
        for name in CHECKS:
            p, f = self.passed[name], self.failed[name]
            if p or f:
                lines.append(f"  {name:<20} pass {p:>6}  fail {f:>4}")
        for fail in sorted(self.failures, key=lambda f: (f["trial"], f["check"]))[:20]:
            lines.append(f"  FAIL trial {fail['trial']}: {fail['check']} {fail.get('partition', '')}")
        lines.append(f"total failures {self.total_failures}")
        return "\n".join(lines)


def fuzz(trials: int, seed: int, ctx: RingContext | None = None,
         min_n: int = 2, max_n: int = 6) -> FuzzSummary:
    """``trials`` random matrices and partitions; deterministic for a given seed."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 1 <= min_n <= max_n:
        raise ValueError(f"bad size range {min_n}..{max_n}")
    ctx = ctx or RingContext.integers()
    rng = random.Random(seed)
    summary = FuzzSummary(trials, seed, ctx.spec)
    for t in range(trials):
        n = rng.randint(min_n, max_n)
        A = random_matrix(ctx, n, rng)
        P = random_partition(A, rng)
        K = rng.sample(A.rows.labels, rng.randint(0, n))
        I_free = rng.sample(A.rows.labels, rng.randint(0, n))
        f = rng.randint(0, n)
        FG = (rng.sample(A.rows.labels, f), rng.sample(A.cols.labels, f))
        summary.record(t, check_matrix(A, P, K, I_free, FG),
                       {"n": n, "partition": P.describe()})
    return summary


def exhaustive(n: int, ctx: RingContext | None = None, values=None) -> FuzzSummary:
    """Every ``n x n`` matrix with entries from ``values`` against every partition.

    ``values`` defaults to all residues for a modular ring and ``{0, 1}``
    otherwise.  Checks the CSM identity in both sign variants plus the
    complement form.
    """
    ctx = ctx or RingContext.integers()
    if values is None:
        values = range(ctx.modulus) if ctx.kind == "mod" else (0, 1)
    elems = [ctx.coerce(v) for v in values]
    rows = OrderedIndexSet.natural(n)
    parts = list(all_partitions(rows, rows))
    summary = FuzzSummary(0, None, ctx.spec)
    for k, flat in enumerate(itertools.product(elems, repeat=n * n)):
        A = LabeledMatrix(rows, rows, [flat[i * n:(i + 1) * n] for i in range(n)], ctx, check=False)
        summary.trials += 1
        for P in parts:
            lhs = csm_lhs(A, P.F, P.G)
            res = {
                "csm_position": csm_rhs(A, P, "position") == lhs,
                "csm_rank": csm_rhs(A, P, "rank") == lhs,
                "csm_complement": csm_rhs_complement(A, P) == lhs,
            }
            summary.record(k, res, {"n": n, "partition": P.describe()})
    return summary
