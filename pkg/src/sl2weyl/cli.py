"""Command-line front end.  Every payload is exact (integers or rational
strings); output is byte-identical across runs except for the clearly marked
elapsed-seconds field in verification reports."""

from __future__ import annotations

import argparse
import json
import sys

from . import basis_enum, quotient_oracle, symfunc, weyl_ideal
from .dpalgebra import CoeffRing, RATIONALS, format_dpoly, parse_dpoly
from .partitions import parse_partition

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

_FAMILIES = {
    "y": "defining",
    "defining": "defining",
    "gm": "schur",
    "schur": "schur",
    "srevlex": "forgotten",
    "forgotten": "forgotten",
}


def _ring(char: int) -> CoeffRing:
    return CoeffRing(char) if char else RATIONALS


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _basis_for(m: int, order: str, trunc) -> basis_enum.BasisSet:
    if trunc is not None:
        return basis_enum.truncated_basis(m, trunc)
    builder = {
        "lex": basis_enum.lex_basis,
        "revlex": basis_enum.revlex_basis,
        "cv": basis_enum.cv_basis,
    }[order]
    return builder(m)


def cmd_basis(args) -> int:
    bs = _basis_for(args.m, args.order, args.truncate)
    monos = bs.sorted_monomials()
    if args.format == "json":
        _emit(args, json.dumps(
            {"m": args.m, "order": bs.provenance, "count": len(monos),
             "monomials": [list(a) for a in monos]},
            separators=(",", ":"),
        ))
    else:
        lines = [f"# m={args.m} order={bs.provenance} count={len(monos)}"]
        from .dpalgebra import format_monomial

        lines += [format_monomial(a) for a in monos]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_gens(args) -> int:
    ring = _ring(args.char)
    family = _FAMILIES[args.family]
    if family == "defining":
        max_d = args.max_degree if args.max_degree is not None else args.m + 2
        max_d = max(max_d, args.m + 1)
        max_w = args.max_weight if args.max_weight is not None else max_d * max(args.m - 1, 0)
        gs = weyl_ideal.defining_generators(args.m, ring, max_d, max_w)
    elif family == "schur":
        gs = weyl_ideal.schur_family(args.m, ring)
    else:
        gs = weyl_ideal.forgotten_family(args.m, ring)
    if args.format == "json":
        gens = []
        for e in gs.entries:
            prov: dict = {"family": gs.family}
            if e.provenance[0] == "series":
                prov.update(uexp=list(e.provenance[1]), power=e.provenance[2], k=e.provenance[3])
            else:
                prov.update(partition=list(e.provenance[1]), k=e.provenance[2])
            gens.append({
                "degree": e.degree, "weight": e.weight, "provenance": prov,
                "terms": [
                    {"coeff": str(c), "monomial": list(a)}
                    for a, c in sorted(e.poly.terms.items())
                ],
            })
        _emit(args, json.dumps(
            {"m": args.m, "char": ring.char, "family": gs.family,
             "degree_bound": gs.degree_bound, "weight_bound": gs.weight_bound,
             "count": len(gens), "generators": gens},
            separators=(",", ":"),
        ))
    else:
        lines = [f"# m={args.m} char={ring.char} family={gs.family} count={len(gs.entries)}"]
        for e in gs.entries:
            lines.append(f"{e.provenance}\t{format_dpoly(e.poly)}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_dim(args) -> int:
    ring = _ring(args.char)
    bound = args.max_degree if args.max_degree is not None else args.m + 2
    report = quotient_oracle.quotient_dim(args.m, ring, bound)
    if args.format == "json":
        _emit(args, json.dumps(
            {"m": args.m, "char": ring.char, "max_degree": bound,
             "slices": [
                 {"degree": d, "weight": w, "dim": q}
                 for (d, w), q in sorted(report.dims.items()) if q
             ],
             "total": report.total},
            separators=(",", ":"),
        ))
    else:
        lines = [f"# m={args.m} char={ring.char} max_degree={bound}"]
        for (d, w), q in sorted(report.dims.items()):
            if q:
                lines.append(f"degree={d} weight={w} dim={q}")
        lines.append(f"total={report.total}")
        _emit(args, "\n".join(lines))
        print(f"elapsed_seconds={report.elapsed_seconds:.3f}", file=sys.stderr)
    return EXIT_OK


def _verification_payload(report) -> dict:
    return {
        "m": report.m, "char": report.char, "order": report.provenance,
        "max_degree": report.degree_bound,
        "slices": [
            {"degree": s.degree, "weight": s.weight, "slice_dim": s.slice_dim,
             "quotient_dim": s.quotient_dim, "candidates": s.candidate_count,
             "independent": s.independent, "spanning": s.spanning}
            for s in report.slices
            if s.slice_dim or s.candidate_count
        ],
        "total_quotient_dim": report.total_quotient_dim,
        "total_candidates": report.total_candidates,
        "passed": report.passed,
        "elapsed_seconds": report.elapsed_seconds,  # excluded from golden tests
    }


def cmd_verify(args) -> int:
    ring = _ring(args.char)
    bound = args.max_degree if args.max_degree is not None else args.m + 2
    session = quotient_oracle.OracleSession(args.m, ring, bound)
    if args.truncate is not None:
        report = quotient_oracle.truncated_quotient(args.m, args.truncate, ring, bound)
        payload = _verification_payload(report.verification)
        payload["truncation"] = args.truncate
        payload["dims_total"] = report.dims.total
        payload["basis_size"] = report.basis_size
        payload["passed"] = report.passed
        ok = report.passed
    else:
        bs = _basis_for(args.m, args.order, None)
        report = session.verify_basis(bs)
        payload = _verification_payload(report)
        ok = report.passed
    if args.format == "json":
        _emit(args, json.dumps(payload, separators=(",", ":")))
    else:
        failing = [s for s in payload["slices"] if not (s["independent"] and s["spanning"])]
        lines = [
            f"# m={args.m} char={ring.char} order={payload['order']} max_degree={bound}",
            f"slices_checked={len(payload['slices'])}",
            f"total_quotient_dim={payload['total_quotient_dim']}",
            f"total_candidates={payload['total_candidates']}",
        ]
        for s in failing:
            lines.append(
                f"FAIL degree={s['degree']} weight={s['weight']} "
                f"quotient_dim={s['quotient_dim']} candidates={s['candidates']}"
            )
        lines.append("PASS" if ok else "FAIL")
        _emit(args, "\n".join(lines))
        print(f"elapsed_seconds={payload['elapsed_seconds']:.3f}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_reduce(args) -> int:
    ring = _ring(args.char)
    f = parse_dpoly(args.poly, args.m, ring)
    bs = _basis_for(args.m, args.order, None)
    coords = quotient_oracle.reduce_element(f, args.m, ring, bs)
    items = sorted(coords.items())
    if args.format == "json":
        _emit(args, json.dumps(
            {"m": args.m, "char": ring.char, "poly": args.poly,
             "basis": bs.provenance,
             "coordinates": [
                 {"monomial": list(a), "coeff": str(c)} for a, c in items
             ]},
            separators=(",", ":"),
        ))
    else:
        from .dpalgebra import format_monomial

        lines = [f"{c}\t{format_monomial(a)}" for a, c in items] or ["0"]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_kostka(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    _emit(args, str(symfunc.kostka(lam, mu)))
    return EXIT_OK


def cmd_dcoeff(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    _emit(args, str(symfunc.forgotten_coeff(lam, mu)))
    return EXIT_OK


def cmd_count(args) -> int:
    if args.ell is not None:
        _emit(args, str(basis_enum.count_B(args.m, args.ell)))
        return EXIT_OK
    rows = [(ell, basis_enum.count_B(args.m, ell)) for ell in range(args.m // 2 + 1)]
    if args.format == "json":
        _emit(args, json.dumps(
            {"m": args.m, "counts": [{"ell": l, "B": b} for l, b in rows]},
            separators=(",", ":"),
        ))
    else:
        _emit(args, "\n".join(f"ell={l} B={b}" for l, b in rows))
    return EXIT_OK


def cmd_truncate(args) -> int:
    ring = _ring(args.char)
    bound = args.max_degree if args.max_degree is not None else args.m + 2
    report = quotient_oracle.truncated_quotient(args.m, args.n, ring, bound)
    payload = {
        "m": args.m, "char": ring.char, "truncation": args.n,
        "dims_total": report.dims.total, "basis_size": report.basis_size,
        "passed": report.passed,
    }
    if args.format == "json":
        _emit(args, json.dumps(payload, separators=(",", ":")))
    else:
        _emit(args, "\n".join(f"{k}={v}" for k, v in payload.items()))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_selftest(args) -> int:
    """Run every acceptance criterion capped at m = args.max_m."""
    from .acceptance import run_all

    failures = run_all(max_m=args.max_m)
    print(f"selftest: {'OK' if failures == 0 else f'{failures} criterion(s) failed'}")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sl2weyl",
        description="exact bases and verification for sl2 local Weyl modules",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, char=True, fmt=True, out=True):
        if char:
            p.add_argument("--char", type=int, default=0, help="prime characteristic (0 = rationals)")
        if fmt:
            p.add_argument("--format", choices=["text", "json"], default="text")
        if out:
            p.add_argument("--output", help="write to this path instead of stdout")

    p = sub.add_parser("basis", help="enumerate a monomial basis")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--order", choices=["lex", "revlex", "cv"], default="lex")
    p.add_argument("--truncate", type=int, default=None, metavar="N")
    common(p, char=False)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("gens", help="list ideal generators")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--family", choices=sorted(_FAMILIES), default="y")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--max-weight", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("dim", help="graded quotient dimensions")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("verify", help="verify a candidate basis against the quotient")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--order", choices=["lex", "revlex", "cv"], default="lex")
    p.add_argument("--truncate", type=int, default=None, metavar="N")
    p.add_argument("--max-degree", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="coordinates of a polynomial in a verified basis")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--order", choices=["lex", "revlex", "cv"], default="lex")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("kostka", help="Kostka number K[lam, mu]")
    p.add_argument("lam")
    p.add_argument("mu")
    common(p, char=False, fmt=False)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("dcoeff", help="signed forgotten/monomial multiplicity D[lam, mu]")
    p.add_argument("lam")
    p.add_argument("mu")
    common(p, char=False, fmt=False)
    p.set_defaults(func=cmd_dcoeff)

    p = sub.add_parser("count", help="low-half census B[m, ell]")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--ell", type=int, default=None)
    common(p, char=False)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("truncate", help="truncated quotient vs truncated basis")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-N", dest="n", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("selftest", help="run the acceptance checks at desk scale")
    p.add_argument("--max-m", type=int, default=4)
    common(p, char=False, fmt=False, out=False)
    p.set_defaults(func=cmd_selftest)

    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
