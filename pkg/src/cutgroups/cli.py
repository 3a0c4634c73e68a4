"""Command-line front end.

Exit codes follow one convention everywhere: 0 for an affirmative
verdict (cut / Camina / all checks passed), 1 for a negative verdict,
2 for any error (bad input, size caps, inapplicable method).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import report as report_mod
from .classify import central_height, classify_cut_metacyclic
from .cut import CutVerdict, is_camina, is_cut_ritter_sehgal, is_nonabelian_camina
from .cyclo import is_cut_wedderburn
from .errors import CutGroupsError
from .groups import (
    FiniteGroup,
    MetacyclicPresentation,
    direct_product,
    make_abelian,
    make_metacyclic,
    parse_cayley_table,
)
from .verify import run_all


@dataclass(frozen=True)
class GroupDescriptor:
    """How the user named a group: metacyclic, abelian, table or product."""

    kind: str
    metacyclic: Optional[tuple[int, int, int, int]] = None
    abelian: Optional[tuple[int, ...]] = None
    table_path: Optional[str] = None
    factors: Optional[tuple["GroupDescriptor", ...]] = None

    def build(self) -> FiniteGroup:
        if self.kind == "metacyclic":
            p = MetacyclicPresentation(*self.metacyclic)
            p.validate()
            return make_metacyclic(p)
        if self.kind == "abelian":
            return make_abelian(list(self.abelian))
        if self.kind == "table":
            with open(self.table_path) as fh:
                return parse_cayley_table(fh.read())
        G = self.factors[0].build()
        for f in self.factors[1:]:
            G = direct_product(G, f.build())
        return G

    def to_json(self) -> dict:
        if self.kind == "metacyclic":
            n, t, r, ell = self.metacyclic
            return {"kind": "metacyclic", "n": n, "t": t, "r": r, "l": ell}
        if self.kind == "abelian":
            return {"kind": "abelian", "factors": list(self.abelian)}
        if self.kind == "table":
            return {"kind": "table", "path": self.table_path}
        return {"kind": "product", "factors": [f.to_json() for f in self.factors]}

    def describe(self) -> str:
        if self.kind == "metacyclic":
            n, t, r, ell = self.metacyclic
            return f"<a,b | a^{n}=1, b^{t}=a^{ell}, b^-1ab=a^{r}>"
        if self.kind == "abelian":
            return "C" + " x C".join(map(str, self.abelian)) if self.abelian else "C1"
        if self.kind == "table":
            return f"table:{self.table_path}"
        return " x ".join(f"({f.describe()})" for f in self.factors)


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise CutGroupsError(f"expected a comma-separated integer list, got {text!r}")


def _parse_part(part: str) -> GroupDescriptor:
    part = part.strip()
    if "=" not in part:
        raise CutGroupsError(
            f"product part {part!r} must look like kind=args "
            "(metacyclic=n,t,r,l | abelian=d1,d2,... | table=PATH)"
        )
    kind, _, args = part.partition("=")
    kind = kind.strip()
    if kind == "metacyclic":
        vals = _parse_int_list(args)
        if len(vals) != 4:
            raise CutGroupsError("metacyclic needs exactly n,t,r,l")
        return GroupDescriptor("metacyclic", metacyclic=vals)
    if kind == "abelian":
        return GroupDescriptor("abelian", abelian=_parse_int_list(args))
    if kind == "table":
        return GroupDescriptor("table", table_path=args.strip())
    raise CutGroupsError(f"unknown product part kind {kind!r}")


def parse_product(expr: str) -> GroupDescriptor:
    """Parse 'metacyclic=8,2,3,8 * abelian=4' style product expressions."""
    parts = [p for p in expr.split("*") if p.strip()]
    if len(parts) < 2:
        raise CutGroupsError("product needs at least two '*'-separated parts")
    return GroupDescriptor("product", factors=tuple(_parse_part(p) for p in parts))


def _descriptor_from_args(args) -> GroupDescriptor:
    chosen = [
        k
        for k, v in (
            ("metacyclic", args.metacyclic),
            ("abelian", args.abelian),
            ("table", args.table),
            ("product", args.product),
        )
        if v
    ]
    if len(chosen) != 1:
        raise CutGroupsError(
            "specify exactly one of --metacyclic, --abelian, --table, --product"
        )
    kind = chosen[0]
    if kind == "metacyclic":
        vals = _parse_int_list(args.metacyclic)
        if len(vals) != 4:
            raise CutGroupsError("--metacyclic needs exactly n,t,r,l")
        return GroupDescriptor("metacyclic", metacyclic=vals)
    if kind == "abelian":
        return GroupDescriptor("abelian", abelian=_parse_int_list(args.abelian))
    if kind == "table":
        return GroupDescriptor("table", table_path=args.table)
    return parse_product(args.product)


def _witness_json(G: FiniteGroup, verdict: CutVerdict) -> Optional[dict]:
    if verdict.witness is None:
        return None
    x, j = verdict.witness
    return {"element": x, "label": G.label(x), "power": j}


def _component_json(rep) -> dict:
    pair, cc = rep.pair, rep.center
    return {
        "n": pair.matrix_size,
        "k": pair.k,
        "h_order": pair.H.order,
        "k_order": pair.K.order,
        "action_image": sorted(pair.action_image.members),
        "center": {
            "kind": cc.kind.value,
            "degree": cc.degree,
            "d": cc.d,
        },
        "dimension": pair.dimension,
    }


def _verdict_json(desc: GroupDescriptor, G: FiniteGroup, verdict: CutVerdict) -> dict:
    out = {
        "group": desc.to_json(),
        "order": G.order,
        "method": verdict.method,
        "is_cut": verdict.is_cut,
        "witness": _witness_json(G, verdict),
    }
    if verdict.components is not None:
        out["components"] = [_component_json(r) for r in verdict.components]
        if verdict.offender is not None:
            out["offending_center"] = verdict.offender.center.describe()
    return out


def _emit(args, payload: dict, human_lines: list[str]):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _run_single_method(G: FiniteGroup, method: str) -> CutVerdict:
    if method == "conjugacy":
        return is_cut_ritter_sehgal(G)
    return is_cut_wedderburn(G)


def _cmd_check(args) -> int:
    desc = _descriptor_from_args(args)
    G = desc.build()
    if args.method == "both":
        v1 = is_cut_ritter_sehgal(G)
        v2 = is_cut_wedderburn(G)
        agree = v1.is_cut == v2.is_cut
        payload = {
            "group": desc.to_json(),
            "order": G.order,
            "conjugacy": _verdict_json(desc, G, v1),
            "wedderburn": _verdict_json(desc, G, v2),
            "agree": agree,
        }
        lines = [
            f"group {desc.describe()} of order {G.order}",
            f"  conjugacy test:  {'cut' if v1.is_cut else 'not cut'}"
            + (
                f" (witness x={G.label(v1.witness[0])}, j={v1.witness[1]})"
                if v1.witness
                else ""
            ),
            f"  component test:  {'cut' if v2.is_cut else 'not cut'}"
            + (
                f" (offending center {v2.offender.center.describe()})"
                if v2.offender
                else ""
            ),
        ]
        _emit(args, payload, lines)
        if not agree:
            print("the two criteria disagree; this indicates a bug", file=sys.stderr)
            return 2
        return 0 if v1.is_cut else 1
    v = _run_single_method(G, args.method)
    lines = [
        f"group {desc.describe()} of order {G.order}: "
        + ("cut" if v.is_cut else "not cut")
    ]
    if v.witness:
        lines.append(
            f"  witness: x = {G.label(v.witness[0])}, j = {v.witness[1]} "
            f"(x^j avoids both conjugacy classes)"
        )
    if v.offender:
        lines.append(f"  offending center: {v.offender.center.describe()}")
    _emit(args, _verdict_json(desc, G, v), lines)
    return 0 if v.is_cut else 1


def _cmd_wedderburn(args) -> int:
    desc = _descriptor_from_args(args)
    G = desc.build()
    v = is_cut_wedderburn(G)
    payload = _verdict_json(desc, G, v)
    lines = [
        f"group {desc.describe()} of order {G.order}: "
        + ("cut" if v.is_cut else "not cut"),
        f"  {len(v.components)} simple components:",
    ]
    for rep in v.components:
        pair = rep.pair
        lines.append(
            f"    n={pair.matrix_size:<2} k={pair.k:<3} |H|={pair.H.order:<3} "
            f"|K|={pair.K.order:<3} dim={rep.dimension:<4} "
            f"center {rep.center.describe()}"
        )
    _emit(args, payload, lines)
    return 0 if v.is_cut else 1


def _cmd_height(args) -> int:
    desc = _descriptor_from_args(args)
    G = desc.build()
    v = central_height(G)
    payload = {
        "group": desc.to_json(),
        "order": G.order,
        "height": v.height,
        "reason": v.reason,
    }
    _emit(
        args,
        payload,
        [
            f"group {desc.describe()} of order {G.order}: "
            f"central height {v.height} ({v.reason})"
        ],
    )
    return 0


def _cmd_camina(args) -> int:
    desc = _descriptor_from_args(args)
    G = desc.build()
    cam = is_camina(G)
    payload = {
        "group": desc.to_json(),
        "order": G.order,
        "is_camina": cam,
        "is_nonabelian_camina": is_nonabelian_camina(G),
    }
    _emit(
        args,
        payload,
        [
            f"group {desc.describe()} of order {G.order}: "
            + ("Camina" if cam else "not Camina")
        ],
    )
    return 0 if cam else 1


def _cmd_classify(args) -> int:
    t_set = _parse_int_list(args.t_set)
    res = classify_cut_metacyclic(args.max_n, t_set, jobs=args.jobs)
    payload = {
        "max_n": args.max_n,
        "t_set": sorted(t_set),
        "num_cut_presentations": len(res.cut_presentations),
        "classes": [
            {
                "order": cls.order,
                "representative": list(cls.representative.astuple()),
                "members": [list(p.astuple()) for p in cls.members],
                "catalog": [
                    list(e.presentation.astuple()) for e in cls.catalog_members
                ],
            }
            for cls in res.classes
        ],
        "catalog_diff": {
            "missing": [
                {
                    "presentation": list(d.entry.presentation.astuple()),
                    "conjugacy": d.conjugacy_verdict,
                    "wedderburn": d.wedderburn_verdict,
                    "confirmed_discrepancy": d.confirmed,
                }
                for d in res.missing_entries
            ],
            "extra": [
                {
                    "presentation": list(d.presentation.astuple()),
                    "conjugacy": d.conjugacy_verdict,
                    "wedderburn": d.wedderburn_verdict,
                    "confirmed_discrepancy": d.confirmed,
                }
                for d in res.extra_classes
            ],
            "out_of_range": [
                list(e.presentation.astuple()) for e in res.out_of_range_entries
            ],
        },
        "matches_catalog": res.matches_catalog,
    }
    lines = [
        f"{len(res.cut_presentations)} cut presentations, "
        f"{len(res.classes)} isomorphism classes "
        f"(n <= {args.max_n}, t in {sorted(t_set)})"
    ]
    for cls in res.classes:
        n, t, r, ell = cls.representative.astuple()
        cat = (
            ", ".join("/".join(map(str, e.presentation.astuple())) for e in cls.catalog_members)
            or "NONE"
        )
        lines.append(
            f"  order {cls.order:<4} rep (n={n}, t={t}, r={r}, l={ell}) "
            f"members={len(cls.members):<3} catalog: {cat}"
        )
    if res.matches_catalog:
        lines.append("catalog diff: clean (every class covered, every entry found)")
    else:
        lines.append(
            f"catalog diff: {len(res.missing_entries)} missing, "
            f"{len(res.extra_classes)} extra"
        )
    _emit(args, payload, lines)
    if args.report_dir:
        for path in report_mod.render_classify_report(res, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    return 0 if res.matches_catalog else 1


def _cmd_verify_paper(args) -> int:
    numbers = None
    if args.criteria:
        numbers = set(_parse_int_list(args.criteria))
    results = run_all(numbers)
    payload = {
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "passed": r.passed,
                "seconds": round(r.seconds, 2),
                "detail": r.detail,
            }
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append(
        f"{sum(r.passed for r in results)}/{len(results)} checks passed "
        f"in {sum(r.seconds for r in results):.1f}s"
    )
    _emit(args, payload, lines)
    if args.report_dir:
        for path in report_mod.render_verify_report(results, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    return 0 if ok else 1


def _add_group_flags(sp):
    sp.add_argument("--metacyclic", metavar="n,t,r,l", help="metacyclic presentation")
    sp.add_argument("--abelian", metavar="d1,d2,...", help="abelian invariant factors")
    sp.add_argument("--table", metavar="FILE", help="Cayley table file")
    sp.add_argument(
        "--product",
        metavar="EXPR",
        help="direct product, e.g. 'metacyclic=8,2,3,8 * abelian=4'",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cutgroups",
        description=(
            "decide whether all central units of an integral group ring are "
            "trivial, classify the metacyclic groups with that property, and "
            "compute central heights"
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="run a cut test on one group", parents=[common])
    _add_group_flags(sp)
    sp.add_argument(
        "--method",
        choices=("conjugacy", "wedderburn", "both"),
        default="conjugacy",
    )
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser(
        "wedderburn", help="component table and center-based test", parents=[common]
    )
    _add_group_flags(sp)
    sp.set_defaults(func=_cmd_wedderburn)

    sp = sub.add_parser(
        "height", help="central height (metacyclic input expected)", parents=[common]
    )
    _add_group_flags(sp)
    sp.set_defaults(func=_cmd_height)

    sp = sub.add_parser("camina", help="Camina-group detection", parents=[common])
    _add_group_flags(sp)
    sp.set_defaults(func=_cmd_camina)

    sp = sub.add_parser(
        "classify", help="sweep presentations and diff the catalog", parents=[common]
    )
    sp.add_argument("--max-n", type=int, default=42)
    sp.add_argument("--t-set", default="2,3,4,6")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--report-dir", help="write CSV and figures here")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser(
        "verify-paper", help="run the full verification suite", parents=[common]
    )
    sp.add_argument(
        "--criteria", help="comma-separated subset of checks to run, e.g. 1,4,5"
    )
    sp.add_argument("--report-dir", help="write CSV and figures here")
    sp.set_defaults(func=_cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except CutGroupsError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
