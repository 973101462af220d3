"""Command-line front end.

Subcommands: ``status``, ``decompose``, ``bounds``, ``table``, ``certify``,
``verify``; all accept ``--format table|json|csv``.  Output is a pure
function of the arguments (byte-identical across runs), numbers are always
full decimal, and exit codes are 0 (success), 1 (verification failure),
2 (usage error) and nothing else.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cases as case_mod
from .gapmap import (
    GapDecomposition,
    certify_nongap,
    coarse_horizon,
    decompose,
    refined_horizon,
    status,
)

SCHEMA_VERSION = "1"


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genusgaps",
        description="Certified genus gap/non-gap structure of curves on "
        "very general surfaces in P^3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--format",
            choices=("table", "json", "csv"),
            default="table",
            help="output format (default: table)",
        )
        return p

    p = add("status", "verdict for a single (degree, genus) pair")
    p.add_argument("d", type=int, help="surface degree (>= 1)")
    p.add_argument("g", type=int, help="genus (>= 0)")
    p.set_defaults(run=_cmd_status)

    p = add("decompose", "certified gap decomposition for one degree")
    p.add_argument("d", type=int, help="surface degree (>= 4)")
    p.set_defaults(run=_cmd_decompose)

    p = add("bounds", "coarse and refined certification horizons")
    p.add_argument("d", type=int, help="surface degree (>= 4)")
    p.set_defaults(run=_cmd_bounds)

    p = add("table", "decompositions for a range of degrees")
    p.add_argument("d_min", type=int)
    p.add_argument("d_max", type=int)
    p.set_defaults(run=_cmd_table)

    p = add("certify", "smallest non-gap certificate for a (degree, genus) pair")
    p.add_argument("d", type=int, help="surface degree (>= 4)")
    p.add_argument("g", type=int, help="genus (>= 0)")
    p.set_defaults(run=_cmd_certify)

    p = add("verify", "re-run the mechanical proof checks")
    p.add_argument("scope", choices=("cases", "kappa", "all"))
    p.set_defaults(run=_cmd_verify)

    return parser


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _emit_csv(header: list[str], rows: list[list[object]]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join("" if v is None else str(v) for v in row))


def _cmd_status(args: argparse.Namespace) -> int:
    st = status(args.d, args.g)
    cert = st.certificate
    if args.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "status",
                "d": args.d,
                "g": args.g,
                "verdict": st.verdict,
                "source": st.source,
                "certificate": None if cert is None else {"n": cert.n, "delta": cert.delta},
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["d", "g", "verdict", "source", "n", "delta"],
            [[args.d, args.g, st.verdict, st.source or "",
              cert.n if cert else None, cert.delta if cert else None]],
        )
    else:
        line = f"degree {args.d} genus {args.g}: {st.verdict}"
        if st.source:
            line += f" [{st.source}]"
        if cert:
            line += f" via a degree-{cert.n} cut with {cert.delta} nodes"
        print(line)
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    if args.d < 4:
        print(
            f"error: certificates exist only for degree >= 4, got {args.d}"
            " (lower degrees carry curves of every genus)",
            file=sys.stderr,
        )
        return 2
    cert = certify_nongap(args.d, args.g)
    if args.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "certify",
                "d": args.d,
                "g": args.g,
                "certificate": None if cert is None else {"n": cert.n, "delta": cert.delta},
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["d", "g", "n", "delta"],
            [[args.d, args.g, cert.n if cert else None, cert.delta if cert else None]],
        )
    else:
        if cert is None:
            print(f"degree {args.d} genus {args.g}: no certificate")
        else:
            print(
                f"degree {args.d} genus {args.g}: certified by a degree-{cert.n}"
                f" cut with {cert.delta} nodes"
            )
    return 0


def _decomposition_record(dec: GapDecomposition) -> dict:
    return {
        "d": dec.d,
        "horizon": dec.horizon,
        "proved": dec.proved_gaps.to_pairs(),
        "unknown": dec.unknown_candidates.to_pairs(),
        "certified": dec.nongap_certified.to_pairs(),
        "sources": [
            {"lo": part.lo, "hi": part.hi, "source": src}
            for part, src in dec.proved_sources
        ],
    }


def _decomposition_csv_rows(dec: GapDecomposition) -> list[list[object]]:
    if dec.horizon < 0:
        return [[dec.d, "nogaps", None, None, ""]]
    tag = {(p.lo, p.hi): src for p, src in dec.proved_sources}
    rows: list[list[object]] = []
    for part in dec.proved_gaps:
        rows.append([dec.d, "proved", part.lo, part.hi, tag.get((part.lo, part.hi), "")])
    for part in dec.unknown_candidates:
        rows.append([dec.d, "unknown", part.lo, part.hi, ""])
    for part in dec.nongap_certified:
        rows.append([dec.d, "certified", part.lo, part.hi, ""])
    rows.sort(key=lambda r: (r[0], r[2]))
    return rows


def _print_decomposition(dec: GapDecomposition) -> None:
    if dec.horizon < 0:
        print(f"degree {dec.d}: no gaps, every genus is a certified non-gap")
        return
    tag = {(p.lo, p.hi): src for p, src in dec.proved_sources}
    print(f"degree {dec.d}: gaps confined to [0,{dec.horizon}]")
    for part in dec.proved_gaps:
        src = tag.get((part.lo, part.hi), "")
        print(f"  proved gap         {part}  [{src}]")
    for part in dec.unknown_candidates:
        print(f"  unknown            {part}")
    for part in dec.nongap_certified:
        print(f"  certified non-gap  {part}")
    print(f"every genus above {dec.horizon} is a certified non-gap")


def _check_decomposable(d: int) -> None:
    if d < 4:
        raise ValueError(
            f"no gap decomposition for degree {d}: surfaces of degree at most 3"
            " are rational and carry irreducible curves of every genus"
        )


def _cmd_decompose(args: argparse.Namespace) -> int:
    _check_decomposable(args.d)
    dec = decompose(args.d)
    if args.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "decompose",
                **_decomposition_record(dec),
            }
        )
    elif args.format == "csv":
        _emit_csv(["d", "kind", "lo", "hi", "source"], _decomposition_csv_rows(dec))
    else:
        _print_decomposition(dec)
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    _check_decomposable(args.d)
    coarse = coarse_horizon(args.d)
    refined = refined_horizon(args.d) if args.d >= 5 else -1
    if args.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "bounds",
                "d": args.d,
                "coarse": coarse,
                "refined": refined,
            }
        )
    elif args.format == "csv":
        _emit_csv(["d", "coarse", "refined"], [[args.d, coarse, refined]])
    else:
        print(f"degree {args.d}: coarse horizon {coarse}, refined horizon {refined}")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if not 4 <= args.d_min <= args.d_max:
        raise ValueError(
            f"need 4 <= d_min <= d_max, got d_min={args.d_min}, d_max={args.d_max}"
        )
    decs = [decompose(d) for d in range(args.d_min, args.d_max + 1)]
    if args.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "table",
                "rows": [_decomposition_record(dec) for dec in decs],
            }
        )
    elif args.format == "csv":
        rows: list[list[object]] = []
        for dec in decs:
            rows.extend(_decomposition_csv_rows(dec))
        rows.sort(key=lambda r: (r[0], r[2] if isinstance(r[2], int) else -1))
        _emit_csv(["d", "kind", "lo", "hi", "source"], rows)
    else:
        for dec in decs:
            _print_decomposition(dec)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    runner = {
        "cases": case_mod.verify_elimination,
        "kappa": case_mod.verify_kappa,
        "all": case_mod.verify_all,
    }[args.scope]
    report = runner()
    if args.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "verify",
                "scope": args.scope,
                "ok": report.ok,
                "checks": [
                    {"id": c.check_id, "ok": c.ok, "detail": c.detail}
                    for c in report.checks
                ],
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["check_id", "ok", "detail"],
            [[c.check_id, "pass" if c.ok else "FAIL", c.detail] for c in report.checks],
        )
    else:
        for c in report.checks:
            print(f"{'PASS' if c.ok else 'FAIL'} {c.check_id}: {c.detail}")
        n_fail = sum(1 for c in report.checks if not c.ok)
        if n_fail:
            print(f"{n_fail} of {len(report.checks)} checks FAILED")
        else:
            print(f"all {len(report.checks)} checks passed")
    return 0 if report.ok else 1
