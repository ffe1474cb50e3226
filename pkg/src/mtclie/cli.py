"""Command-line front end.

Subcommands expose every engine capability with deterministic output:
``roots``, ``irrep``, ``orbit``, ``check``, ``classify``, ``tables``.
Exit codes: 0 success (and empty verification diff), 1 verification
mismatch or failed check, 2 usage or parse error.  Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import catalog as _catalog
from .classify import (
    ClassificationError,
    case2_brute_force,
    enumerate_case1,
    enumerate_case2,
    enumerate_case3,
    mtc_report,
)
from .parsing import ParseError, parse_group, parse_rep
from .reps import freudenthal_multiplicities, weight_set
from .roots import GroupSpec, build_root_system, ov_to_bourbaki


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mtclie",
        description=(
            "Exact Lie-theoretic classification of homogeneous maximal "
            "totally complex submanifolds of quaternionic projective space."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--rank-cap",
        type=int,
        default=argparse.SUPPRESS,
        help="rank bound for enumeration searches (default 12, "
        "env MTCLIE_RANK_CAP)",
    )
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default=argparse.SUPPRESS,
        help="output format (default text)",
    )
    common.add_argument(
        "--convention",
        choices=("bourbaki", "ov"),
        default=argparse.SUPPRESS,
        help="numbering convention for input Dynkin labels",
    )
    common.add_argument(
        "--color",
        action="store_true",
        default=argparse.SUPPRESS,
        help="accepted for interface stability; output is always plain",
    )
    p.set_defaults(
        rank_cap=int(os.environ.get("MTCLIE_RANK_CAP", "12")),
        format="text",
        convention="bourbaki",
        color=False,
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser(
        "roots", help="root-system summary for a group", parents=[common]
    )
    sp.add_argument("group")

    sp = sub.add_parser(
        "irrep",
        help="dimension, type and weights of an irrep",
        parents=[common],
    )
    sp.add_argument("group")
    sp.add_argument("rep")
    sp.add_argument(
        "--weights", action="store_true", help="print the full weight list"
    )

    sp = sub.add_parser(
        "orbit",
        help="orbit geometry of a highest-weight orbit",
        parents=[common],
    )
    sp.add_argument("group")
    sp.add_argument("rep")

    sp = sub.add_parser(
        "check", help="full candidate verdict for one module", parents=[common]
    )
    sp.add_argument("group")
    sp.add_argument("rep")

    sp = sub.add_parser(
        "classify", help="run the enumeration searches", parents=[common]
    )
    sp.add_argument(
        "--case", choices=("1", "2", "3", "all"), default="all", dest="case"
    )
    sp.add_argument(
        "--exhaustive",
        action="store_true",
        help="re-verify the non-simple reduction by brute force",
    )

    sp = sub.add_parser(
        "tables", help="catalog display and regression check", parents=[common]
    )
    sp.add_argument(
        "--verify",
        action="store_true",
        help="recompute every catalog row and diff against the searches",
    )
    sp.add_argument(
        "--show", metavar="KEY", help="render one catalog table or row"
    )
    return p


def _load(args, need_rep: bool = True):
    group = parse_group(args.group)
    rep = None
    if need_rep:
        rep_text = args.rep
        rep = parse_rep(rep_text, group)
        if args.convention == "ov":
            rep = _remap_ov(group, rep)
    return group, rep


def _remap_ov(group: GroupSpec, rep):
    from .reps import FactorRep, RepExpr, Summand

    summands = []
    for mult, s in rep.summands:
        facs = tuple(
            FactorRep(ov_to_bourbaki(t, f.labels), f.dual)
            for f, t in zip(s.factors, group.factors)
        )
        summands.append((mult, Summand(facs)))
    return RepExpr(group, tuple(summands))


def _cmd_roots(args) -> int:
    group, _ = _load(args, need_rep=False)
    if args.format == "json":
        data = []
        for t in group.factors:
            rs = build_root_system(t)
            data.append(
                {
                    "type": str(t),
                    "rank": t.rank,
                    "dim_g": rs.rank + 2 * len(rs.positive_roots),
                    "num_positive_roots": len(rs.positive_roots),
                    "cartan_matrix": [list(r) for r in rs.cartan],
                }
            )
        print(json.dumps(data, indent=2))
        return 0
    rows = []
    for t in group.factors:
        rs = build_root_system(t)
        rows.append(
            (
                str(t),
                str(t.rank),
                str(rs.rank + 2 * len(rs.positive_roots)),
                str(len(rs.positive_roots)),
            )
        )
    header = ("factor", "rank", "dim_g", "positive_roots")
    if args.format == "csv":
        print(",".join(header))
        for r in rows:
            print(",".join(r))
        return 0
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


def _cmd_irrep(args) -> int:
    group, rep = _load(args)
    if not rep.is_irreducible:
        dims = [m * rep.summand_dim(s) for m, s in rep.summands]
        fs = {rep.summand_fs(s) for _, s in rep.summands}
        print(
            f"dim {rep.dim} = {' + '.join(str(d) for d in dims)}, "
            f"summand types {{{', '.join(sorted(fs))}}}"
        )
        return 0
    summand = rep.summands[0][1]
    fs = rep.summand_fs(summand)
    n_weights = 0
    per_factor = []
    for fac, t in zip(summand.factors, group.factors):
        ws = weight_set(t, fac.resolve(t))
        per_factor.append((t, fac.resolve(t), ws))
    n_weights = 1
    for _, _, ws in per_factor:
        n_weights *= len(ws)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "group": str(group),
                    "rep": rep.render(),
                    "dim": rep.dim,
                    "fs_type": fs,
                    "num_weights": n_weights,
                },
                indent=2,
            )
        )
        return 0
    print(f"dim {rep.dim}, {fs}, {n_weights} weights")
    if args.weights:
        if len(group.factors) == 1:
            t, lam, _ = per_factor[0]
            mults = freudenthal_multiplicities(t, lam)
            for w in sorted(mults, reverse=True):
                lbl = "[" + ",".join(str(x) for x in w) + "]"
                print(f"  {lbl} x{mults[w]}")
        else:
            from .reps import tensor_weight_set

            for w in sorted(tensor_weight_set(group, summand), reverse=True):
                print("  [" + ",".join(str(x) for x in w) + "]")
    return 0


def _cmd_orbit(args) -> int:
    group, rep = _load(args)
    report, _ = mtc_report(group, rep)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
        return 0
    print(
        f"orbit_dim_C {report.orbit_dim_c}, levi {report.levi.render()}, "
        f"ambient HP^{report.ambient_n}, MTC: {'yes' if report.is_mtc else 'no'}"
    )
    return 0


def _cmd_check(args) -> int:
    group, rep = _load(args)
    _, verdict = mtc_report(group, rep)
    verdict = _catalog.annotate_table_rows([verdict], args.rank_cap)[0]
    if args.format == "json":
        print(json.dumps(verdict.to_json_dict(), indent=2))
    else:
        print(_catalog.render_verdicts([verdict], args.format))
        for note in verdict.notes:
            print(f"note: {note}")
    return 0


def _cmd_classify(args) -> int:
    cap = args.rank_cap
    out_parts: list[str] = []
    if args.case in ("1", "all"):
        vs = _catalog.annotate_table_rows(enumerate_case1(cap), cap)
        out_parts.append(_section("case 1: simple groups", vs, args.format))
    if args.case in ("2", "all"):
        vs = _catalog.annotate_table_rows(enumerate_case2(cap), cap)
        out_parts.append(_section("case 2: non-simple groups", vs, args.format))
        if args.exhaustive:
            bf_cap = min(cap, 4)
            bf = case2_brute_force(bf_cap)
            structural = {
                v.key
                for v in enumerate_case2(bf_cap)
            }
            extra = sorted(
                {v.key for v in bf if _canonical_key(v) not in structural}
            )
            if extra:
                print(
                    "exhaustive check found rows outside the reduction: "
                    + "; ".join(extra),
                    file=sys.stderr,
                )
                return 1
            out_parts.append(
                f"# exhaustive brute force at rank cap {bf_cap}: "
                f"{len(bf)} rows, all within the reduction"
            )
    if args.case in ("3", "all"):
        lines = []
        for spec, verdict in enumerate_case3(cap):
            shape = f"k={spec.k},s={spec.s},base={spec.base_type} std"
            lines.append(f"{shape}: {verdict.identification}")
        if args.format == "json":
            out_parts.append(
                json.dumps(
                    [
                        {
                            "k": spec.k,
                            "s": spec.s,
                            "base": str(spec.base_type),
                            "valid": verdict.valid,
                            "identification": verdict.identification,
                        }
                        for spec, verdict in enumerate_case3(cap)
                    ],
                    indent=2,
                )
            )
        else:
            out_parts.append(
                "# case 3: reducible modules\n" + "\n".join(lines)
            )
    print("\n\n".join(out_parts))
    return 0


def _canonical_key(verdict) -> str:
    """Fold brute-force aliases (factor order, triality) onto the
    structural search's canonical presentation."""
    from .roots import automorphism_canonical

    group = verdict.group
    summand = verdict.rep.summands[0][1]
    pairs = sorted(
        (
            (t, automorphism_canonical(t, fac.resolve(t)))
            for fac, t in zip(summand.factors, group.factors)
        ),
        key=lambda p: (p[0].sort_key, p[1]),
        reverse=True,
    )
    g = GroupSpec(tuple(t for t, _ in pairs))
    from .reps import RepExpr

    return f"{g} {RepExpr.irreducible(g, [lam for _, lam in pairs]).render()}"


def _section(title: str, verdicts, fmt: str) -> str:
    body = _catalog.render_verdicts(verdicts, fmt)
    if fmt == "text":
        return f"# {title}\n{body}"
    return body


def _cmd_tables(args) -> int:
    if args.verify:
        report = _catalog.verify_catalog(args.rank_cap)
        print(report.render())
        if report.ok:
            print("all rows match")
            return 0
        return 1
    if args.show:
        try:
            print(_catalog.render(args.format, args.show))
        except KeyError as e:
            print(f"error: {e.args[0]}", file=sys.stderr)
            return 2
        return 0
    print(_catalog.render_catalog(args.format))
    return 0


_COMMANDS = {
    "roots": _cmd_roots,
    "irrep": _cmd_irrep,
    "orbit": _cmd_orbit,
    "check": _cmd_check,
    "classify": _cmd_classify,
    "tables": _cmd_tables,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if args.rank_cap < 2:
        print("error: --rank-cap must be at least 2", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ClassificationError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
