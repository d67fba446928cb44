"""Command-line front end.

Exit codes: 0 computed/verified, 1 identity violated, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .condensation import condense, desnanot_jacobi
from .csm import build_doubled, build_initialized, build_tilde, expand_csm, verify_csm
from .fuzz import exhaustive, fuzz
from .index import CsmPartition, split_labels
from .laplace import laplace_terms
from .matrix import LabeledMatrix, det_leibniz
from .matrixfile import read_matrix
from .ring import RingContext

OK, VIOLATION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _labels(text):
    return split_labels(text) if text else []


def _load(args) -> LabeledMatrix:
    ring = RingContext.from_spec(args.ring) if args.ring else None
    if args.symbolic:
        if args.matrix:
            raise UsageError("give either --matrix or --symbolic, not both")
        return LabeledMatrix.symbolic(args.symbolic)
    if not args.matrix:
        raise UsageError("--matrix PATH (or --symbolic N) is required")
    return read_matrix(args.matrix, ring)


def _partition(args, A: LabeledMatrix) -> CsmPartition:
    return CsmPartition.make(A.rows, A.cols, _labels(args.F), _labels(args.G), _labels(args.I))


def _emit(args, text: str, data: dict) -> None:
    if args.format == "structured":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def cmd_det(args) -> int:
    A = _load(args)
    algo = args.algo
    K = args.K
    if algo.startswith("laplace:"):
        algo, K = "laplace", algo.split(":", 1)[1]
    extra = {}
    if algo == "leibniz":
        d = det_leibniz(A)
    elif algo == "laplace":
        if K is None:
            raise UsageError("--algo laplace needs --rows/--K (or laplace:K)")
        terms = laplace_terms(A, _labels(K), args.variant)
        d = A.ctx.zero
        for t in terms:
            d = d + t.product
        extra["terms"] = len(terms)
    elif algo == "condensation":
        tr = condense(A)
        d = tr.det
        extra["fallbacks"] = len(tr.fallback_events)
    else:
        raise UsageError(f"unknown algorithm {algo!r}")
    _emit(args, str(d), {"algorithm": algo, "det": str(d), **extra})
    return OK


def cmd_verify_laplace(args) -> int:
    A = _load(args)
    if args.K is None:
        raise UsageError("verify-laplace needs --rows/--K")
    K = _labels(args.K)
    d = det_leibniz(A)
    results = {}
    lines = [f"det (Leibniz) {d}"]
    for variant in ("position", "rank") if args.variant == "both" else (args.variant,):
        for comp in (False, True):
            terms = laplace_terms(A, K, variant, complement_form=comp)
            total = A.ctx.zero
            for t in terms:
                total = total + t.product
            key = f"{variant}{'/complement' if comp else ''}"
            results[key] = {"value": str(total), "equal": total == d,
                            "terms": [{"L": [str(x) for x in t.subset], "sign": t.sign,
                                       "product": str(t.product)} for t in terms]}
            lines.append(f"{key:<20} {total}  ({len(terms)} terms) "
                         f"{'EQUAL' if total == d else 'NOT-EQUAL'}")
    ok = all(r["equal"] for r in results.values())
    lines.append(f"verdict {'EQUAL' if ok else 'NOT-EQUAL'}")
    _emit(args, "\n".join(lines), {"det": str(d), "checks": results,
                                   "verdict": "EQUAL" if ok else "NOT-EQUAL"})
    return OK if ok else VIOLATION


def cmd_verify_csm(args) -> int:
    A = _load(args)
    P = _partition(args, A)
    variants = ("position", "rank") if args.variant == "both" else (args.variant,)
    reps = [verify_csm(A, P, v) for v in variants]
    if len(reps) == 1:
        _emit(args, reps[0].to_text(), reps[0].to_dict())
    else:
        _emit(args, "\n\n".join(r.to_text() for r in reps), {"reports": [r.to_dict() for r in reps]})
    return OK if all(r.ok for r in reps) else VIOLATION


def cmd_expand(args) -> int:
    A = _load(args)
    if A.ctx.kind != "poly":
        raise UsageError("expand needs a polynomial matrix (ring poly:...)")
    variant = "rank" if args.variant == "both" else args.variant
    rep = expand_csm(A, _partition(args, A), variant)
    _emit(args, rep.to_text(), rep.to_dict())
    return OK if rep.equal else VIOLATION


def cmd_build_initialized(args) -> int:
    A = _load(args)
    P = _partition(args, A)
    hat = build_doubled(A, P.F, P.G)
    vec = build_initialized(A, P)
    tilde = build_tilde(vec, P.F, P.G)
    blocks = [("A", A), ("doubled", hat), ("initialized", vec), ("reduced", tilde)]
    text = "\n\n".join(f"{name}:\n{M.to_text()}" for name, M in blocks)
    data = {name: {"rows": [str(x) for x in M.rows], "cols": [str(x) for x in M.cols],
                   "entries": [[str(x) for x in r] for r in M.entries]} for name, M in blocks}
    _emit(args, f"{P.describe()}\n\n{text}", {"partition": P.describe(), **data})
    return OK


def cmd_fuzz(args) -> int:
    if args.seed is None and not args.exhaustive:
        raise UsageError("fuzz needs --seed")
    ctx = RingContext.from_spec(args.ring or "integer")
    if args.exhaustive:
        summary = exhaustive(args.max_n, ctx)
    else:
        summary = fuzz(args.trials, args.seed, ctx, args.min_n, args.max_n)
    _emit(args, summary.to_text(), summary.to_dict())
    return OK if summary.total_failures == 0 else VIOLATION


def cmd_desnanot(args) -> int:
    A = _load(args)
    lhs, rhs, eq = desnanot_jacobi(A)
    _emit(args, f"lhs {lhs}\nrhs {rhs}\nverdict {'EQUAL' if eq else 'NOT-EQUAL'}",
          {"lhs": str(lhs), "rhs": str(rhs), "equal": eq})
    return OK if eq else VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="csmlap", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--matrix", metavar="PATH")
    common.add_argument("--symbolic", type=int, metavar="N",
                        help="use the N x N matrix of indeterminates a11..ann")
    common.add_argument("--ring", metavar="SPEC", help="integer | rational | mod:m | poly:x,y,...")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--variant", choices=("position", "rank", "both"), default="rank")
    part = argparse.ArgumentParser(add_help=False)
    part.add_argument("--F", default="", metavar="LABELS")
    part.add_argument("--G", default="", metavar="LABELS")
    part.add_argument("--I", default="", metavar="LABELS")

    sub = p.add_subparsers(dest="command", required=True)
    d = sub.add_parser("det", parents=[common], help="exact determinant")
    d.add_argument("--algo", default="leibniz",
                   help="leibniz | laplace | laplace:K | condensation")
    d.add_argument("--rows", "--K", dest="K", metavar="LABELS", help="row set for laplace")
    d.set_defaults(func=cmd_det)

    v = sub.add_parser("verify-laplace", parents=[common], help="check Laplace expansion along rows K")
    v.add_argument("--rows", "--K", dest="K", metavar="LABELS")
    v.set_defaults(func=cmd_verify_laplace)

    sub.add_parser("verify-csm", parents=[common, part],
                   help="check the common-submatrix expansion").set_defaults(func=cmd_verify_csm)
    sub.add_parser("expand", parents=[common, part],
                   help="multiply out the right-hand side and show cancellations"
                   ).set_defaults(func=cmd_expand)
    sub.add_parser("build-initialized", parents=[common, part],
                   help="print the doubled, initialized and reduced matrices"
                   ).set_defaults(func=cmd_build_initialized)
    sub.add_parser("desnanot", parents=[common],
                   help="check the Desnanot-Jacobi identity").set_defaults(func=cmd_desnanot)

    f = sub.add_parser("fuzz", parents=[common], help="random identity checks")
    f.add_argument("--trials", type=int, default=100)
    f.add_argument("--seed", type=int)
    f.add_argument("--min-n", type=int, default=2)
    f.add_argument("--max-n", type=int, default=6)
    f.add_argument("--exhaustive", action="store_true",
                   help="enumerate every max-n x max-n matrix over the ring's residues (or {0,1})")
    f.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
