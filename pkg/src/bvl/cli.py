"""Command-line surface: group inspection, tables, structure constants,
Beauville search/verify, generating-class search/verify, Zsigmondy parts.

Exit codes: 0 success, 1 negative mathematical verdict, 2 usage error,
3 capacity or internal-consistency error.  JSON output is byte-stable for a
fixed invocation and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .beauville import (
    STATUS_CERTIFICATE,
    STATUS_NONE_EXHAUSTED,
    BeauvilleCertificate,
    all_pairs_generate,
    search_beauville,
    search_gen_classes,
    verify_certificate,
)
from .catalog import build_group, lie_meta, parse_spec
from .chartab import TableError, character_table, verify_orthogonality
from .numtheory import DomainError, zsigmondy_part
from .permgroup import CapacityError, MembershipError
from .structconst import (
    char_bound_check,
    point_count_probe,
    structure_constant_brute,
    structure_constant_formula,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _json_bytes(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "format", "text") == "json":
        sys.stdout.write(_json_bytes(payload))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(_json_bytes(payload))


def _group_of(args):
    return build_group(parse_spec(args.group))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_group(args) -> int:
    G = _group_of(args)
    payload = {
        "spec": args.group,
        "name": G.name,
        "degree": G.degree,
        "order": G.order,
        "base": G.base,
        "basic_orbit_sizes": G.basic_orbit_sizes,
        "num_strong_generators": len(G.strong_generators),
    }
    text = (
        f"group {G.name}: degree {G.degree}, order {G.order}\n"
        f"base {G.base}, basic orbits {G.basic_orbit_sizes}"
    )
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_classes(args) -> int:
    G = _group_of(args)
    cd = G.conjugacy_data()
    payload = {
        "spec": args.group,
        "order": G.order,
        "mode": cd.class_map.mode,
        "classes": [
            {
                "label": c.label,
                "size": c.size,
                "element_order": c.element_order,
                "inverse_class": c.inverse_class,
                "power_classes": {str(k): v for k, v in sorted(c.power_classes.items())},
                "representative": c.representative.to_list(),
            }
            for c in cd.classes
        ],
    }
    lines = [f"{len(cd.classes)} classes of {G.name} (order {G.order})"]
    lines.append(f"{'label':>6} {'size':>8} {'order':>6} {'inverse':>8}")
    for c in cd.classes:
        lines.append(f"{c.label:>6} {c.size:>8} {c.element_order:>6} {c.inverse_class:>8}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _cmd_chartab(args) -> int:
    G = _group_of(args)
    T = character_table(G)
    payload = T.to_json_dict()
    payload["orthogonality_verified"] = verify_orthogonality(T)
    width = max(8, max(len(lbl) for lbl in T.class_labels) + 2)
    lines = [
        f"character table of {T.group_name} (order {T.group_order}, "
        f"conductor {T.conductor}, prime {T.prime})"
    ]
    lines.append(" " * 6 + "".join(f"{lbl:>{width}}" for lbl in T.class_labels))
    for deg, row in zip(T.degrees, T.rows):
        cells = []
        for v in row:
            s = repr(v)
            cells.append(s if len(s) <= width - 1 else s[: width - 2] + "~")
        lines.append(f"chi{deg:<4}" + "".join(f"{c:>{width}}" for c in cells))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _parse_class_triple(text: str) -> tuple[str, str, str]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3 or not all(parts):
        raise DomainError(f"--classes needs three comma-separated labels, got {text!r}")
    return parts[0], parts[1], parts[2]


def _cmd_struct(args) -> int:
    G = _group_of(args)
    c1, c2, c3 = _parse_class_triple(args.classes)
    results = {}
    if args.method in ("formula", "both"):
        T = character_table(G)
        results["formula"] = structure_constant_formula(T, c1, c2, c3).n_value
    if args.method in ("brute", "both"):
        results["brute"] = structure_constant_brute(G, G.conjugacy_data(), c1, c2, c3).n_value
    payload = {
        "spec": args.group,
        "classes": [c1, c2, c3],
        "method": args.method,
        "n": results,
    }
    if len(results) == 2 and results["formula"] != results["brute"]:
        raise TableError(
            f"formula/brute disagree on {(c1, c2, c3)}: {results}"
        )
    shown = " ".join(f"{k}={v}" for k, v in sorted(results.items()))
    _emit(args, payload, f"n({c1},{c2},{c3}) in {G.name}: {shown}")
    return EXIT_OK


def _cmd_charbound(args) -> int:
    G = _group_of(args)
    meta = lie_meta(parse_spec(args.group))
    report = char_bound_check(G, G.conjugacy_data(), meta, character_table(G))
    payload = {
        "spec": args.group,
        "bound": report.bound,
        "per_class_max": {k: v for k, v in sorted(report.per_class_max.items())},
        "pass": report.passed,
    }
    lines = [f"character bound check for {G.name}: |W| = {report.bound}"]
    for label, value in sorted(report.per_class_max.items()):
        lines.append(f"  {label:>6}: max |chi| = {value:.6f}")
    lines.append("PASS" if report.passed else "FAIL")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _cmd_pointcount(args) -> int:
    G = _group_of(args)
    meta = lie_meta(parse_spec(args.group))
    c1, c2, c3 = _parse_class_triple(args.classes)
    report = point_count_probe(G, G.conjugacy_data(), meta, character_table(G), c1, c2, c3)
    payload = {
        "spec": args.group,
        "classes": list(report.labels),
        "n": report.n_value,
        "class_size": report.class_size,
        "exact_count": report.exact_count,
        "predicted": report.predicted,
        "ratio": [report.ratio.numerator, report.ratio.denominator],
    }
    text = (
        f"triple variety points for {G.name} {report.labels}: "
        f"exact {report.exact_count} = n({report.n_value}) * |C1|({report.class_size}), "
        f"leading term {report.predicted}, ratio {report.ratio}"
    )
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_beauville_search(args) -> int:
    G = _group_of(args)
    strategy = "COPRIME_FIRST" if args.strategy == "coprime" else "EXHAUSTIVE_CLASSES"
    result = search_beauville(
        G,
        strategy=strategy,
        seed=args.seed,
        budget=args.budget,
        require_hyperbolic=args.require_hyperbolic,
    )
    if result.status == STATUS_CERTIFICATE:
        cert = result.certificate
        cert.group = args.group
        payload = cert.to_json_dict()
        text = (
            f"Beauville structure found for {G.name}: orders {cert.orders}, "
            f"sigma classes {cert.sigma_classes[0]} | {cert.sigma_classes[1]}"
        )
        _emit(args, payload, text)
        return EXIT_OK
    payload = {
        "spec": args.group,
        "status": result.status,
        "types_examined": result.types_examined,
        "pair_tests": result.pair_tests,
    }
    if result.status == STATUS_NONE_EXHAUSTED:
        _emit(args, payload, f"NONE_EXHAUSTED: {G.name} admits no unmixed Beauville structure")
        return EXIT_NEGATIVE
    _emit(args, payload, f"NONE_BUDGET: search budget exhausted on {G.name}")
    return EXIT_CAPACITY


def _cmd_beauville_verify(args) -> int:
    raw = json.loads(Path(args.cert).read_text())
    cert = BeauvilleCertificate.from_json_dict(raw)
    G = build_group(parse_spec(cert.group))
    ok, reason = verify_certificate(G, cert, require_hyperbolic=args.require_hyperbolic)
    payload = {"group": cert.group, "verified": ok, "reason": reason}
    _emit(args, payload, f"certificate for {cert.group}: {'VERIFIED' if ok else 'REFUSED: ' + reason}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_genclasses_search(args) -> int:
    G = _group_of(args)
    pairs = search_gen_classes(G)
    payload = {"spec": args.group, "pairs": [list(p) for p in pairs]}
    if pairs:
        text = f"all-pairs generating class pairs of {G.name}: " + ", ".join(
            f"({c},{d})" for c, d in pairs
        )
        _emit(args, payload, text)
        return EXIT_OK
    _emit(args, payload, f"no all-pairs generating class pairs in {G.name}")
    return EXIT_NEGATIVE


def _cmd_genclasses_verify(args) -> int:
    G = _group_of(args)
    cert = all_pairs_generate(G, args.c, args.d)
    payload = {
        "spec": args.group,
        "c": list(cert.c_labels),
        "d": cert.d_label,
        "exhaustive": cert.exhaustive,
        "pairs_tested": cert.pairs_tested,
        "counterexample": list(cert.counterexample) if cert.counterexample else None,
    }
    if cert.all_generate:
        _emit(args, payload, f"({args.c}, {args.d}) in {G.name}: all {cert.pairs_tested} pairs generate")
        return EXIT_OK
    _emit(args, payload, f"({args.c}, {args.d}) in {G.name}: counterexample found")
    return EXIT_NEGATIVE


def _cmd_zsigmondy(args) -> int:
    res = zsigmondy_part(args.q, args.n)
    payload = {
        "q": res.q,
        "n": res.n,
        "phi_value": res.phi_value,
        "primitive_part": res.primitive_part,
        "primitive_primes": sorted(res.primitive_primes),
    }
    text = (
        f"Phi_{args.n}({args.q}) = {res.phi_value}, "
        f"primitive part {res.primitive_part}, "
        f"primitive primes {sorted(res.primitive_primes) or '{}'}"
    )
    _emit(args, payload, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser, group_flag: bool = True) -> None:
    if group_flag:
        p.add_argument("--group", required=True, help="group spec: A5, S6, L2:7, L3:3, file:PATH")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="also write the JSON payload to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bvl",
        description="Beauville structures and generating class pairs in small finite simple groups",
    )
    parser.add_argument("--version", action="version", version=f"bvl {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="build a group and report its order")
    _add_common(p)
    p.set_defaults(func=_cmd_group)

    p = sub.add_parser("classes", help="conjugacy classes with power maps")
    _add_common(p)
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("chartab", help="exact character table")
    _add_common(p)
    p.set_defaults(func=_cmd_chartab)

    p = sub.add_parser("struct", help="structure constant n(C1,C2,C3)")
    _add_common(p)
    p.add_argument("--classes", required=True, help="three labels: C1,C2,C3")
    p.add_argument("--method", choices=("formula", "brute", "both"), default="formula")
    p.set_defaults(func=_cmd_struct)

    p = sub.add_parser("charbound", help="character bound on regular semisimple classes")
    _add_common(p)
    p.set_defaults(func=_cmd_charbound)

    p = sub.add_parser("pointcount", help="triple-variety point-count probe")
    _add_common(p)
    p.add_argument("--classes", required=True, help="three regular semisimple labels")
    p.set_defaults(func=_cmd_pointcount)

    p = sub.add_parser("beauville", help="search or verify Beauville structures")
    bsub = p.add_subparsers(dest="subcommand", required=True)
    ps = bsub.add_parser("search")
    _add_common(ps)
    ps.add_argument("--strategy", choices=("coprime", "exhaustive"), default="coprime")
    ps.add_argument("--require-hyperbolic", action="store_true")
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--budget", type=int, default=10_000_000)
    ps.set_defaults(func=_cmd_beauville_search)
    pv = bsub.add_parser("verify")
    pv.add_argument("--cert", required=True, help="certificate JSON file")
    pv.add_argument("--require-hyperbolic", action="store_true")
    pv.add_argument("--format", choices=("text", "json"), default="text")
    pv.add_argument("--out")
    pv.set_defaults(func=_cmd_beauville_verify)

    p = sub.add_parser("genclasses", help="all-pairs generating class pairs")
    gsub = p.add_subparsers(dest="subcommand", required=True)
    gs = gsub.add_parser("search")
    _add_common(gs)
    gs.set_defaults(func=_cmd_genclasses_search)
    gv = gsub.add_parser("verify")
    _add_common(gv)
    gv.add_argument("--c", required=True, help="class label for C")
    gv.add_argument("--d", required=True, help="class label for D")
    gv.set_defaults(func=_cmd_genclasses_verify)

    p = sub.add_parser("zsigmondy", help="cyclotomic value and Zsigmondy primitive part")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_zsigmondy)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except TableError as exc:
        print(f"error: internal: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DomainError, MembershipError, KeyError) as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
