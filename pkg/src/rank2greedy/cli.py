"""Command-line front end.

Exit codes: 0 on success (including checks skipped at the enumeration cap,
unless --strict), 1 on any verification failure, 2 on usage errors.
JSON output is deterministic; pass --no-timings to zero the millis fields
when byte-identical output matters.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import cluster, greedy, roots, verify
from .dyck import DEFAULT_EDGE_CAP, TooLargeError, max_dyck_path
from .laurent import LaurentPoly2


def _record(check: str, b: int, c: int, k: int | None, ok: bool, *,
            min_coeff=None, skipped: bool = False, millis: int = 0,
            timings: bool = True, **extra) -> dict:
    rec = {
        "check": check, "b": b, "c": c, "k": k,
        "pass": bool(ok),
        "min_coeff": None if min_coeff is None else str(min_coeff),
        "skipped": skipped,
        "millis": millis if timings else 0,
    }
    rec.update(extra)
    return rec


def _emit(args, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit_text(payload)


def _emit_text(payload, indent: str = "") -> None:
    if isinstance(payload, list):
        for item in payload:
            _emit_text(item, indent)
        return
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                print(f"{indent}{key}:")
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
        print()
        return
    print(f"{indent}{payload}")


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _default_k_max(b: int, c: int) -> int:
    return 3 if {b, c} == {5, 1} else 2


def _write_svg(path, filename: str) -> None:
    scale = 24
    margin = 12
    width = path.a1 * scale + 2 * margin
    height = max(path.a2, 1) * scale + 2 * margin

    def xy(pt):
        return (margin + pt[0] * scale, height - margin - pt[1] * scale)

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">']
    for x in range(path.a1 + 1):
        x0, y0 = xy((x, 0))
        x1, y1 = xy((x, path.a2))
        lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#ccc"/>')
    for y in range(path.a2 + 1):
        x0, y0 = xy((0, y))
        x1, y1 = xy((path.a1, y))
        lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#ccc"/>')
    x0, y0 = xy((0, 0))
    x1, y1 = xy((path.a1, path.a2))
    lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#888" stroke-dasharray="4"/>')
    pts = " ".join(f"{x},{y}" for x, y in (xy(p) for p in path.points))
    lines.append(f'<polyline points="{pts}" fill="none" stroke="#000" stroke-width="2"/>')
    lines.append("</svg>")
    with open(filename, "w") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_greedy(args) -> int:
    element = greedy.greedy_element(args.b, args.c, args.a1, args.a2,
                                    cap=args.max_edges, threads=args.threads)
    payload = {
        "b": args.b, "c": args.c, "a1": args.a1, "a2": args.a2,
        "grid": [[str(x) for x in row] for row in element.grid.to_lists()],
        "laurent": element.laurent.to_json_dict(),
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"x[{args.a1},{args.a2}] in A({args.b},{args.c}):")
        print(f"  {element.laurent}")
        print("  grid (rows p = |S2|, cols q = |S1|):")
        for row in element.grid.to_lists():
            print("   ", row)
    return 0


def _cmd_dyck(args) -> int:
    path = max_dyck_path(args.a1, args.a2)
    print(path.steps)
    if args.svg:
        _write_svg(path, args.svg)
    return 0


def _cmd_support(args) -> int:
    start = time.monotonic()
    ok = greedy.support_equals_region(args.b, args.c, args.a1, args.a2,
                                      cap=args.max_edges, threads=args.threads)
    millis = int((time.monotonic() - start) * 1000)
    if args.format == "json":
        rec = _record("support-equals-region", args.b, args.c, None, ok,
                      millis=millis, timings=not args.no_timings,
                      a1=args.a1, a2=args.a2)
        print(json.dumps(rec, indent=2, sort_keys=True))
    else:
        print(f"support = region: {str(ok).lower()}")
    return 0 if ok else 1


def _cmd_p_check(args) -> int:
    k_max = args.k_max if args.k_max is not None else _default_k_max(args.b, args.c)
    reports = [verify.check_pk_positive(args.b, args.c, k,
                                        cap=args.max_edges, threads=args.threads)
               for k in range(k_max + 1)]
    records = [r.to_record(timings=not args.no_timings) for r in reports]
    _emit(args, records)
    if any(r.skipped for r in reports):
        if args.strict:
            return 1
        return 0 if all(r.positive for r in reports if not r.skipped) else 1
    return 0 if all(r.positive for r in reports) else 1


def _cmd_mu_check(args) -> int:
    bb, cc = (args.b, args.c) if args.b >= args.c else (args.c, args.b)
    seq_case = roots.sequences(bb, cc).case
    k_lo = args.k_min if args.k_min is not None else (1 if seq_case == "general" else 2)
    k_hi = args.k_max if args.k_max is not None else k_lo + 2
    records = []
    failed = False
    skipped = False
    for k in range(k_lo, k_hi + 1):
        try:
            report = verify.mu_map(args.b, args.c, k, cap=args.max_edges)
        except TooLargeError:
            records.append(_record("mu-injection", args.b, args.c, k, False,
                                   skipped=True, timings=not args.no_timings))
            skipped = True
            continue
        records.append(report.to_record(timings=not args.no_timings))
        failed = failed or not report.passed
    _emit(args, records)
    if failed:
        return 1
    return 1 if (skipped and args.strict) else 0


def _cmd_cluster_vars(args) -> int:
    payload = []
    for m in range(args.m_min, args.m_max + 1):
        var = cluster.cluster_variable(args.b, args.c, m)
        payload.append({"m": m, "laurent": var.to_json_dict()})
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for item in payload:
            poly = LaurentPoly2.from_json_dict(item["laurent"])
            print(f"x_{item['m']} = {poly}")
    return 0


def _cmd_sigma_check(args) -> int:
    records = []
    ok = True
    for ell in (1, 2):
        start = time.monotonic()
        passed = cluster.verify_sigma_on_greedy(args.b, args.c, (args.a1, args.a2), ell,
                                                cap=args.max_edges, threads=args.threads)
        millis = int((time.monotonic() - start) * 1000)
        records.append(_record("sigma-on-greedy", args.b, args.c, None, passed,
                               millis=millis, timings=not args.no_timings,
                               ell=ell, a1=args.a1, a2=args.a2))
        ok = ok and passed
    _emit(args, records)
    return 0 if ok else 1


def _cmd_identities(args) -> int:
    b, c = (args.b, args.c) if args.b >= args.c else (args.c, args.b)
    mirrored = (b, c) != (args.b, args.c)
    try:
        report = roots.check_identities(b, c, args.k_min, args.k_max)
        ok = True
    except roots.IdentityViolatedError as exc:
        report = [{"k": exc.k, "identity": exc.which, "pass": False}]
        ok = False
    payload = {"b": args.b, "c": args.c, "mirrored": mirrored,
               "k_min": args.k_min, "k_max": args.k_max,
               "pass": ok, "identities": report}
    _emit(args, payload)
    return 0 if ok else 1


def _cmd_verify_all(args) -> int:
    timings = not args.no_timings
    records: list[dict] = []
    rng = random.Random(args.seed)

    def run(check, b, c, k, fn, **extra):
        start = time.monotonic()
        try:
            ok = fn()
            skipped = False
        except TooLargeError:
            ok, skipped = False, True
        millis = int((time.monotonic() - start) * 1000)
        records.append(_record(check, b, c, k, ok, skipped=skipped,
                               millis=millis, timings=timings, **extra))

    # greedy basics against the cluster recurrence
    for b, c in [(3, 2), (2, 3), (5, 1)]:
        expected = LaurentPoly2({(-1, -1): 1, (b - 1, -1): 1, (-1, c - 1): 1})
        run("greedy-1-1", b, c, None,
            lambda b=b, c=c, e=expected: greedy.greedy_element(b, c, 1, 1).laurent == e)
        run("greedy-matches-recurrence", b, c, None,
            lambda b=b, c=c: (greedy.greedy_element(b, c, 1, 0).laurent
                              == cluster.cluster_variable(b, c, 3)
                              and greedy.greedy_element(b, c, 0, 1).laurent
                              == cluster.cluster_variable(b, c, 0)))

    # support theorem at imaginary roots
    for b, c, pairs in [(3, 2, [(1, 1), (2, 2), (4, 3), (4, 5)]),
                        (5, 1, [(2, 1), (7, 3), (7, 4)])]:
        for a1, a2 in pairs:
            run("support-equals-region", b, c, None,
                lambda b=b, c=c, a1=a1, a2=a2: greedy.support_equals_region(
                    b, c, a1, a2, cap=args.max_edges, threads=args.threads),
                a1=a1, a2=a2)

    # containment PS <= P on a small sweep
    def containment(b, c):
        for a1 in range(args.sweep + 1):
            for a2 in range(args.sweep + 1):
                element = greedy.greedy_element(b, c, a1, a2, cap=args.max_edges,
                                                threads=args.threads)
                region = greedy.RegionP(b, c, a1, a2).lattice_points()
                if not element.support() <= region:
                    return False
        return True

    for b, c in [(3, 2), (5, 1)]:
        run("support-in-region-sweep", b, c, None,
            lambda b=b, c=c: containment(b, c), sweep=args.sweep)

    # p_k positivity including mirrored runs, and the decomposition checks
    for b, c in [(5, 1), (1, 5), (3, 2), (2, 3)]:
        k_max = args.k_max if args.k_max is not None else _default_k_max(b, c)
        for k in range(k_max + 1):
            report = verify.check_pk_positive(b, c, k, cap=args.max_edges,
                                              threads=args.threads)
            records.append(report.to_record(timings=timings))
            run("eq2-monomial-in-gamma", b, c, k,
                lambda b=b, c=c, k=k: verify.check_eq2(b, c, k, cap=args.max_edges,
                                                       threads=args.threads))
            run("eq1-beta-dominates", b, c, k,
                lambda b=b, c=c, k=k: verify.check_eq1(b, c, k, cap=args.max_edges,
                                                       threads=args.threads))

    # mu injection
    for b, c, ks in [(3, 2, (1, 2, 3)), (5, 1, (2, 3, 4))]:
        for k in ks:
            run("mu-injection", b, c, k,
                lambda b=b, c=c, k=k: verify.mu_map(b, c, k, cap=args.max_edges).passed)

    # support comparison and same-shape geometry
    for b, c, ks in [(3, 2, (1, 2, 3)), (5, 1, (2, 3, 4))]:
        for k in ks:
            run("support-comparison", b, c, k,
                lambda b=b, c=c, k=k: verify.check_support_comparison(b, c, k))
            run("same-shape", b, c, k,
                lambda b=b, c=c, k=k: verify.check_same_shape(b, c, k))

    # Weyl layer
    for b, c in [(3, 2), (2, 3), (5, 1), (1, 5)]:
        bb, cc = (b, c) if b >= c else (c, b)
        run("sequence-identities", b, c, None,
            lambda bb=bb, cc=cc: bool(roots.check_identities(bb, cc, -3, 10)))
        def q_invariance(b=b, c=c):
            for _ in range(1000):
                v = (rng.randint(-50, 50), rng.randint(-50, 50))
                q = roots.quadratic_form(b, c, v)
                if (roots.quadratic_form(b, c, roots.reflect(b, c, 1, v)) != q
                        or roots.quadratic_form(b, c, roots.reflect(b, c, 2, v)) != q):
                    return False
            return True
        run("q-invariance", b, c, None, q_invariance)

    # sigma action on the smallest imaginary root
    for b, c in [(3, 2), (2, 3)]:
        for ell in (1, 2):
            run("sigma-on-greedy", b, c, None,
                lambda b=b, c=c, ell=ell: cluster.verify_sigma_on_greedy(
                    b, c, (1, 1), ell, cap=args.max_edges, threads=args.threads),
                ell=ell)

    _emit(args, records)
    failures = [r for r in records if not r["pass"] and not r["skipped"]]
    skipped = [r for r in records if r["skipped"]]
    if args.format == "text":
        print(f"{len(records) - len(failures) - len(skipped)} passed, "
              f"{len(failures)} failed, {len(skipped)} skipped")
    if failures:
        return 1
    if skipped and args.strict:
        return 1
    return 0


# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser, *, bc: bool = True) -> None:
    if bc:
        parser.add_argument("--b", type=int, required=True)
        parser.add_argument("--c", type=int, required=True)
    parser.add_argument("--max-edges", type=int, default=DEFAULT_EDGE_CAP,
                        help="enumeration cap on a1+a2 (default %(default)s)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker processes for enumeration (default 1)")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks")
    parser.add_argument("--strict", action="store_true",
                        help="exit nonzero when a check is skipped at the cap")
    parser.add_argument("--no-timings", action="store_true",
                        help="zero the millis fields for reproducible output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank2greedy",
        description="Exact greedy-element computations in rank-2 cluster algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("greedy", help="compute one greedy element")
    _add_common(p)
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("dyck", help="print the maximal Dyck path step word")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--svg", help="write an SVG drawing of the path")
    p.set_defaults(func=_cmd_dyck)

    p = sub.add_parser("support", help="compare pointed support with the region")
    _add_common(p)
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.set_defaults(func=_cmd_support)

    p = sub.add_parser("p-check", help="positivity of p_k over a k range")
    _add_common(p)
    p.add_argument("--k-max", type=int, default=None)
    p.set_defaults(func=_cmd_p_check)

    p = sub.add_parser("mu-check", help="the subset-pair injection checks")
    _add_common(p)
    p.add_argument("--k-min", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.set_defaults(func=_cmd_mu_check)

    p = sub.add_parser("cluster-vars", help="cluster variables in the initial cluster")
    _add_common(p)
    p.add_argument("--m-min", type=int, default=-4)
    p.add_argument("--m-max", type=int, default=8)
    p.set_defaults(func=_cmd_cluster_vars)

    p = sub.add_parser("sigma-check", help="sigma action on a greedy element")
    _add_common(p)
    p.add_argument("--a1", type=int, default=1)
    p.add_argument("--a2", type=int, default=1)
    p.set_defaults(func=_cmd_sigma_check)

    p = sub.add_parser("identities", help="sequence identity suite")
    _add_common(p)
    p.add_argument("--k-min", type=int, default=-3)
    p.add_argument("--k-max", type=int, default=10)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("verify-all", help="run the full verification battery")
    _add_common(p, bc=False)
    p.add_argument("--k-max", type=int, default=None,
                   help="override the per-algebra default k range")
    p.add_argument("--sweep", type=int, default=6,
                   help="bound for the containment sweep (default 6)")
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return 1 if getattr(args, "strict", False) else 0
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
