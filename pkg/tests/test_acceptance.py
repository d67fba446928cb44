"""Exit criteria.  All comparisons are exact; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""
import itertools
import random
import time

from csmlap import (CsmPartition, LabeledMatrix, RingContext, build_doubled, build_initialized,
                    build_tilde, condense, csm_lhs, csm_rhs, csm_terms, det_leibniz, expand_csm,
                    laplace_det)
from csmlap.csm import lemma_lhs_sign, lemma_lhs_value, lemma_rhs_value
from csmlap.fuzz import CHECKS, all_partitions, exhaustive, fuzz, random_partition
from csmlap.ring import parse_poly


def report(capsys, number, title, ok, detail=""):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}  {detail}")
    assert ok, detail


def test_criterion_1_symbolic_reproduction(capsys):
    t0 = time.perf_counter()
    A = LabeledMatrix.symbolic(3)
    P = CsmPartition.make(A.rows, A.cols, [2], [2], [1])
    rep = expand_csm(A, P)
    elapsed = time.perf_counter() - t0
    names = A.ctx.names
    braced = {str(parse_poly("a21*a12*a32*a23", names)), str(parse_poly("-a12*a23*a21*a32", names))}
    pairs = [{rep.product_str(i), rep.product_str(j)} for i, j in rep.cancelling_pairs]
    a22 = A.ctx.var("a22")
    ok = (len(rep.products) == 8 and pairs == [braced]
          and rep.rhs == a22 * det_leibniz(A) and rep.equal
          and str(rep.factor) == "a22" and rep.quotient == det_leibniz(A)
          and elapsed < 1.0)
    report(capsys, 1, "n=3 symbolic expansion, 8 products, braced pair cancels, = a22*det(A)", ok,
           f"products={len(rep.products)} pairs={len(pairs)} t={elapsed:.2f}s")


def test_criterion_2_exhaustive_binary_3x3(capsys):
    t0 = time.perf_counter()
    summary = exhaustive(3, RingContext.integers(), (0, 1))
    elapsed = time.perf_counter() - t0
    n_parts = len(list(all_partitions(LabeledMatrix.identity(3).rows,
                                      LabeledMatrix.identity(3).cols)))
    ok = (summary.trials == 512 and summary.total_failures == 0
          and summary.passed["csm_position"] == 512 * n_parts
          and summary.passed["csm_rank"] == 512 * n_parts
          and elapsed < 60)
    report(capsys, 2, "all 512 {0,1} 3x3 matrices x every partition, both variants", ok,
           f"partitions={n_parts} failures={summary.total_failures} t={elapsed:.1f}s")


def test_criterion_3_random_fuzz(capsys):
    t0 = time.perf_counter()
    summary = fuzz(1000, seed=20261016, ctx=RingContext.integers(), min_n=2, max_n=6)
    elapsed = time.perf_counter() - t0
    required = ["laplace_position", "laplace_rank", "laplace_complement",
                "csm_position", "csm_rank", "csm_complement", "desnanot_jacobi"]
    ok = (summary.total_failures == 0
          and all(summary.passed[c] == 1000 for c in required)
          and elapsed < 120)
    counts = " ".join(f"{c}={summary.passed[c]}" for c in CHECKS)
    report(capsys, 3, "1000 seeded trials n in 2..6, all identities", ok,
           f"failures={summary.total_failures} t={elapsed:.1f}s [{counts}]")


def _grid(M):
    return [["0" if not x else str(x)[1:] for x in r] for r in M.entries]


def test_criterion_4_construction_fidelity(capsys):
    A = LabeledMatrix.symbolic(6)
    P = CsmPartition.make(A.rows, A.cols, [2, 4], [3, 5], [1, 6])
    hat = build_doubled(A, P.F, P.G)
    vec = build_initialized(A, P)
    tilde = build_tilde(vec, P.F, P.G)

    cols = ["1", "2", "3", "3", "4", "5", "5", "6"]
    rows = ["1", "2", "2", "3", "4", "4", "5", "6"]
    want_hat = [[r + c for c in cols] for r in rows]
    # zero pattern: plain columns 3, 5 are zero in rows 2+, 3, 4+, 5; 3+, 5+ zero elsewhere
    lower = {2, 3, 5, 6}  # slots of 2+, 3, 4+, 5
    want_vec = [[("0" if (j in (3, 6)) != (i in lower) and j in (2, 3, 5, 6) else r + c)
                 for j, c in enumerate(cols)] for i, r in enumerate(rows)]
    want_tilde = [list(x) for x in want_vec]
    for i in (2, 5):  # rows 2+, 4+
        want_tilde[i] = ["0"] * 8
        want_tilde[i][3] = rows[i] + "3"
        want_tilde[i][6] = rows[i] + "5"
    for i in (3, 6):  # rows 3, 5 after column addition
        want_tilde[i][2] = rows[i] + "3"
        want_tilde[i][5] = rows[i] + "5"

    patterns = (_grid(hat) == want_hat and _grid(vec) == want_vec and _grid(tilde) == want_tilde
                and [str(x) for x in vec.rows] == ["1", "2", "2+", "3", "4", "4+", "5", "6"]
                and [str(x) for x in vec.cols] == ["1", "2", "3", "3+", "4", "5", "5+", "6"])
    d_vec = det_leibniz(vec)
    d_tilde = det_leibniz(tilde)
    sign = lemma_lhs_sign(A, P)
    target = det_leibniz(A.keep(P.F, P.G)) * det_leibniz(A)
    dets = d_vec == d_tilde == (target if sign > 0 else -target)
    report(capsys, 4, "running example doubled/initialized/reduced patterns and determinants",
           patterns and dets, f"patterns={patterns} dets={dets} sign={sign:+d}")


def test_criterion_5_lemma_cross_check(capsys):
    rng = random.Random(5)
    bad = 0
    for _ in range(100):
        A = LabeledMatrix.from_rows([[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)])
        P = random_partition(A, rng)
        d = det_leibniz(build_initialized(A, P))
        if not (d == lemma_rhs_value(A, P) and d == lemma_lhs_value(A, P)):
            bad += 1
    report(capsys, 5, "100 random 5x5: det(initialized) = signed sum = signed product", bad == 0,
           f"mismatches={bad}")


def test_criterion_6_condensation(capsys):
    rng = random.Random(6)
    t0 = time.perf_counter()
    bad = fallback = 0
    for k in range(500):
        n = 2 + k % 6
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        if k % 3 == 0 and n >= 3:
            # zero interior entry forces a zero divisor one layer later
            i, j = rng.randint(1, n - 2), rng.randint(1, n - 2)
            rows[i][j] = 0
        elif k % 3 == 1:
            rows = [[rng.choice((-1, 0, 0, 1)) for _ in range(n)] for _ in range(n)]
        A = LabeledMatrix.from_rows(rows)
        tr = condense(A)
        fallback += bool(tr.fallback_events)
        bad += tr.det != det_leibniz(A)
    elapsed = time.perf_counter() - t0
    report(capsys, 6, "condensation = Leibniz on 500 matrices n in 2..7",
           bad == 0 and fallback >= 50 and elapsed < 120,
           f"mismatches={bad} with_fallback={fallback} t={elapsed:.1f}s")


def test_criterion_7_degenerations(capsys):
    rng = random.Random(7)
    bad = 0
    for _ in range(20):
        A = LabeledMatrix.from_rows([[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)])
        for k in range(6):
            for I in itertools.combinations(A.rows.labels, k):
                P0 = CsmPartition.make(A.rows, A.cols, [], [], I)
                for v in ("position", "rank"):
                    bad += csm_rhs(A, P0, v) != laplace_det(A, I, v)
        f = rng.randint(0, 5)
        F, G = rng.sample(A.rows.labels, f), rng.sample(A.cols.labels, f)
        sign, terms = csm_terms(A, CsmPartition.make(A.rows, A.cols, F, G, []))
        bad += not (sign == 1 and len(terms) == 1 and terms[0].sign == 1
                    and terms[0].product == csm_lhs(A, F, G))
    summary = fuzz(200, seed=77)
    in_fuzz = (summary.passed["csm_empty_F"] == 200 and summary.passed["csm_empty_I"] == 200
               and summary.total_failures == 0)
    report(capsys, 7, "F empty reduces to Laplace with K=I; I empty gives one term = lhs",
           bad == 0 and in_fuzz, f"mismatches={bad} fuzz_ok={in_fuzz}")
