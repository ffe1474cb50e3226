"""The curated catalog: known rows of the classification tables, loaded
from package data, re-derivable from root data on demand.

Fixed rows carry explicit group/representation strings; parametrized
families (the standard-plus-dual series and the vector-times-SU(2)
series) are resolved in code.  ``verify_catalog`` recomputes every
numeric field and cross-checks the table rows against the enumeration
searches, returning a diff report.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

import yaml

from .roots import GroupSpec, SimpleLieType
from .reps import FS_QUATERNIONIC, FactorRep, RepExpr, Summand
from .classify import (
    CandidateVerdict,
    _so_type,
    enumerate_case1,
    enumerate_case2,
    mtc_report,
    normal_holonomy,
)
from .parsing import parse_group, parse_rep


@lru_cache(maxsize=None)
def load_catalog() -> dict:
    """The raw catalog sections, parsed from package data."""
    text = resources.files("mtclie.data").joinpath("catalog.yaml").read_text()
    return yaml.safe_load(text)


# -- parametrized families ----------------------------------------------


def su_standard_plus_dual(n: int) -> tuple[GroupSpec, RepExpr]:
    """SU(n+1) on the standard module plus its dual; the CP^n row."""
    if n < 1:
        raise ValueError("need n >= 1")
    t = SimpleLieType("A", n)
    group = GroupSpec((t,))
    lam = (1,) + (0,) * (n - 1)
    rep = RepExpr(
        group,
        (
            (1, Summand((FactorRep(lam),))),
            (1, Summand((FactorRep(lam, dual=True),))),
        ),
    )
    return group, rep


def so_vector_times_su2(n: int) -> tuple[GroupSpec, RepExpr]:
    """SO(n+2) x SU(2) on vector tensor standard, for n >= 3."""
    if n < 3:
        raise ValueError("need n >= 3")
    so_t, so_lam = _so_type(n + 2)
    a1 = SimpleLieType("A", 1)
    group = GroupSpec((so_t, a1))
    rep = RepExpr.irreducible(group, [so_lam, (1,)])
    return group, rep


_FAMILIES = {
    "su-standard-plus-dual": su_standard_plus_dual,
    "so-vector-times-su2": so_vector_times_su2,
}

# Rows whose own parameter differs from the family parameter: the Wolf
# standard-plus-dual row counts n so that the twistor orbit is CP^{2n-1},
# and the reducible parallel row counts the ambient dimension directly.
_FAMILY_PARAM_SHIFT = {"wolf1": -1, "tsu2": -1}


def resolve_row(row: dict, n: Optional[int] = None) -> tuple[GroupSpec, RepExpr]:
    """Group and representation for a catalog row (family rows need n)."""
    if "family" in row:
        if n is None:
            raise ValueError(f"row {row['id']} is parametrized; give n")
        shifted = n + _FAMILY_PARAM_SHIFT.get(row["id"], 0)
        return _FAMILIES[row["family"]](shifted)
    group = parse_group(row["group"])
    return group, parse_rep(row["rep"], group)


def _formula(expr: str, n: int) -> int:
    return eval(expr, {"__builtins__": {}}, {"n": n})  # catalog-controlled input


# -- verification -------------------------------------------------------


@dataclass(frozen=True)
class CatalogReport:
    ok: bool
    lines: tuple[str, ...]

    def render(self) -> str:
        status = "catalog OK" if self.ok else "catalog MISMATCH"
        return "\n".join(list(self.lines) + [status])


def _row_key(row: dict, n: Optional[int] = None) -> str:
    group, rep = resolve_row(row, n)
    return f"{group} {rep.render()}"


def verify_catalog(rank_cap: int = 12) -> CatalogReport:
    """Recompute every catalog field and diff the tables against the
    enumeration searches at the given rank cap."""
    cat = load_catalog()
    lines: list[str] = []
    ok = True

    def check(cond: bool, msg: str) -> None:
        nonlocal ok
        if not cond:
            ok = False
            lines.append(f"FAIL {msg}")

    for row in cat["wolf"]:
        rid = row["id"]
        if "family" in row:
            for n in range(row["n_min"], row["n_min"] + 8):
                group, rep = resolve_row(row, n)
                want = _formula(row["cp_dim_formula"], n)
                check(
                    rep.dim - 1 == want,
                    f"{rid}@n={n}: twistor dim {rep.dim - 1} != {want}",
                )
        else:
            group, rep = resolve_row(row)
            check(
                rep.dim - 1 == row["cp_dim"],
                f"{rid}: twistor dim {rep.dim - 1} != {row['cp_dim']}",
            )
        lines.append(f"ok   {rid}")

    fixed_keys: dict[str, str] = {}
    for section in ("table1", "nonsimple", "tsukada"):
        for row in cat[section]:
            rid = row["id"]
            if "family" in row:
                continue
            group, rep = resolve_row(row)
            _, verdict = mtc_report(group, rep)
            check(verdict.fs == FS_QUATERNIONIC, f"{rid}: not quaternionic")
            check(
                verdict.ambient_n == row["ambient_n"],
                f"{rid}: ambient {verdict.ambient_n} != {row['ambient_n']}",
            )
            check(
                verdict.degenerate == bool(row.get("degenerate", False)),
                f"{rid}: degenerate flag mismatch",
            )
            if "nh_dim" in row:
                nh = normal_holonomy(rid)
                check(
                    nh.dim == row["nh_dim"],
                    f"{rid}: normal holonomy dim {nh.dim} != {row['nh_dim']}",
                )
            fixed_keys[verdict.key] = rid
            lines.append(f"ok   {rid}")

    for n in (1, 2, 3, 5, 8):
        nh = normal_holonomy("tsu1", n)
        check(nh.dim == n * n, f"tsu1@n={n}: holonomy dim {nh.dim} != {n * n}")
    lines.append("ok   tsu1 (family)")
    for n in range(4, 10):
        group, rep = resolve_row(_row_by_id("tsukada", "tsu2"), n)
        check(
            rep.dim // 2 - 1 == n,
            f"tsu2@n={n}: ambient {rep.dim // 2 - 1} != {n}",
        )
    lines.append("ok   tsu2 (family)")

    # -- diff the tables against the searches --
    case1 = [v for v in enumerate_case1(rank_cap) if not v.transitive]
    want1 = {}
    for r in cat["table1"]:
        group, _ = resolve_row(r)
        if max(t.rank for t in group.factors) <= rank_cap:
            want1[_row_key(r)] = r["id"]
    _diff(check, lines, "table1", want1, case1)

    case2 = enumerate_case2(rank_cap)
    want2: dict[str, str] = {}
    for row in cat["nonsimple"]:
        if "family" in row:
            for n in range(row["n_min"], 2 * rank_cap):
                group, _ = resolve_row(row, n)
                if max(t.rank for t in group.factors) > rank_cap:
                    continue
                want2[_row_key(row, n)] = f"{row['id']}@n={n}"
        else:
            group, _ = resolve_row(row)
            if max(t.rank for t in group.factors) <= rank_cap:
                want2[_row_key(row)] = row["id"]
    triple = _row_by_id("wolf", "wolf3")
    want2[_row_key(triple)] = triple["id"]
    _diff(check, lines, "nonsimple", want2, case2)

    return CatalogReport(ok, tuple(lines))


def _diff(check, lines, name, want: dict[str, str], got: list[CandidateVerdict]):
    got_keys = {v.key for v in got}
    for key, rid in sorted(want.items()):
        check(key in got_keys, f"{name}: search missed {rid} ({key})")
    for key in sorted(got_keys - set(want)):
        check(False, f"{name}: search found unlisted candidate {key}")
    lines.append(f"ok   {name} matches the search ({len(got)} rows)")


def _row_by_id(section: str, rid: str) -> dict:
    for row in load_catalog()[section]:
        if row["id"] == rid:
            return row
    raise KeyError(rid)


# -- verdict annotation -------------------------------------------------


def annotate_table_rows(
    verdicts: list[CandidateVerdict], rank_cap: int = 12
) -> list[CandidateVerdict]:
    """Attach catalog row ids to matching enumeration verdicts."""
    from dataclasses import replace

    cat = load_catalog()
    mapping: dict[str, str] = {}
    for section in ("nonsimple", "table1", "wolf", "tsukada"):
        for row in cat[section]:
            if "family" in row:
                if row["id"] != "ns-so":
                    continue
                for n in range(row["n_min"], 2 * rank_cap):
                    group, _ = resolve_row(row, n)
                    if max(t.rank for t in group.factors) > rank_cap:
                        continue
                    mapping.setdefault(_row_key(row, n), f"{row['id']}@n={n}")
            else:
                mapping.setdefault(_row_key(row), row["id"])
    return [
        replace(v, table_row=mapping.get(v.key)) if v.table_row is None else v
        for v in verdicts
    ]


# -- rendering ----------------------------------------------------------


def render_verdicts(verdicts: list[CandidateVerdict], fmt: str = "text") -> str:
    """Render enumeration verdicts as text, JSON or CSV."""
    if fmt == "json":
        return json.dumps([v.to_json_dict() for v in verdicts], indent=2)
    rows = []
    header = [
        "group",
        "rep",
        "fs_type",
        "ambient_n",
        "orbit_dim_c",
        "levi",
        "flags",
        "same_orbit_as",
        "table_row",
    ]
    for v in verdicts:
        flags = [
            name
            for name, on in (
                ("transitive", v.transitive),
                ("degenerate", v.degenerate),
                ("mtc", v.is_mtc),
            )
            if on
        ]
        rows.append(
            [
                str(v.group),
                v.rep.render(),
                v.fs,
                str(v.ambient_n),
                str(v.orbit_dim_c),
                v.levi.render(),
                ",".join(flags),
                v.same_orbit_as or "-",
                v.table_row or "-",
            ]
        )
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    out = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(out)


def render(fmt: str, which: str) -> str:
    """Render one catalog table or row by key.

    ``which`` is a section name (wolf, table1, nonsimple, tsukada), a row
    id, or ``all``.
    """
    cat = load_catalog()
    if which == "all":
        return render_catalog(fmt)
    if which in cat:
        data = {which: cat[which]}
    else:
        row = None
        for section in cat.values():
            for r in section:
                if r["id"] == which:
                    row = r
                    break
        if row is None:
            raise KeyError(f"no catalog table or row named {which!r}")
        data = row
    if fmt == "json":
        return json.dumps(data, indent=2)
    if fmt == "csv" and isinstance(data, dict) and which in data:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "group", "rep", "dim", "space"])
        for r in data[which]:
            w.writerow(
                [
                    r["id"],
                    r.get("group", r.get("family", "")),
                    r.get("rep", ""),
                    r.get("ambient_n", r.get("cp_dim", r.get("cp_dim_formula", ""))),
                    r.get("space", r.get("target", "")),
                ]
            )
        return buf.getvalue().rstrip("\n")
    # plain text: stable key order, one field per line for single rows
    if isinstance(data, dict) and which in data:
        lines = [f"[{which}]"]
        for r in data[which]:
            cells = [
                r["id"],
                r.get("group", r.get("family", "")),
                r.get("rep", ""),
                str(r.get("ambient_n", r.get("cp_dim", r.get("cp_dim_formula", "")))),
                r.get("space", r.get("target", "")),
            ]
            lines.append("  " + "  ".join(c for c in cells if c))
        return "\n".join(lines)
    return "\n".join(f"{k}: {data[k]}" for k in data)


def render_catalog(fmt: str = "text") -> str:
    """Render the raw catalog tables."""
    cat = load_catalog()
    if fmt == "json":
        return json.dumps(cat, indent=2)
    out: list[str] = []
    rows_for_csv: list[list[str]] = []
    for section in ("wolf", "table1", "nonsimple", "tsukada"):
        if fmt == "text":
            out.append(f"[{section}]")
        for row in cat[section]:
            cells = [
                section,
                row["id"],
                row.get("group", row.get("family", "")),
                row.get("rep", ""),
                str(
                    row.get(
                        "ambient_n",
                        row.get("cp_dim", row.get("cp_dim_formula", "")),
                    )
                ),
                row.get("space", row.get("target", "")),
            ]
            if fmt == "text":
                out.append("  " + "  ".join(c for c in cells[1:] if c))
            else:
                rows_for_csv.append(cells)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["section", "id", "group", "rep", "dim", "space"])
        w.writerows(rows_for_csv)
        return buf.getvalue().rstrip("\n")
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(out)
