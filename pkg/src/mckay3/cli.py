"""Command line front end: build, compute, verify, export.

Subcommands:

* list    - spec grammar and the catalog type numbers
* info    - order, exponent, conductor, class count, dimension multiset
* chartab - character table as text or JSON
* quiver  - the quiver as DOT or JSON
* cartan  - M, B or A plus a verification summary
* verify  - run every structural check; exit 1 on any failure

Exit codes: 0 success, 1 a verification check failed, 2 malformed spec or
usage, 3 the closure hit its order bound.  All payloads are byte
deterministic; elapsed-time fields are the only exception and are clearly
named (elapsedMs).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import catalog, chartab, mckay, published
from .catalog import CatalogError, SpecError
from .matgroup import OrderBoundExceeded


# ---------------------------------------------------------------------------
# shared analysis pipeline


class _Analysis:
    """Everything the subcommands need for one group, computed once."""

    def __init__(self, spec: catalog.GroupSpec, max_order: int):
        self.spec = spec
        self.group = catalog.build_group(spec, max_order=max_order)
        self.classes = chartab.conjugacy_classes(self.group)
        self.table = chartab.dixon_table(self.group, self.classes)
        self.chi = chartab.natural_character(self.group, self.classes)
        self.quiver = mckay.adjacency(self.table, self.chi)
        self.b = mckay.pre_cartan(self.quiver)
        self.a = mckay.gen_cartan(self.b)


_CACHE: dict[tuple[str, int], _Analysis] = {}


def _analyze(spec: catalog.GroupSpec, max_order: int) -> _Analysis:
    key = (spec.name, max_order)
    if key not in _CACHE:
        _CACHE[key] = _Analysis(spec, max_order)
    return _CACHE[key]


# ---------------------------------------------------------------------------
# encoders


def _enc_cyc(v) -> dict:
    """{"N": conductor, "coeffs": [[k, "p/q"], ...]} with zero terms dropped."""
    return {
        "N": v.conductor,
        "coeffs": [[k, str(c)] for k, c in enumerate(v.coefficients) if c],
    }


def _short(v) -> str:
    q = v.try_rational()
    if q is not None:
        return str(q)
    text = str(v)
    return text.rsplit(" (z = zeta_", 1)[0]


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _matrix_rows(mat) -> list[list[int]]:
    return [list(row) for row in mat]


# ---------------------------------------------------------------------------
# subcommands


_KINDS = (
    ("Hmn:<m>,<n>", 1, "diagonal abelian group of order m*n"),
    ("Gm3:<m>", 2, "H(m,m) extended by the 3-cycle coordinate rotation, order 3m^2"),
    ("Gm6:<m>", 3, "H(m,m) extended by all coordinate permutations, order 6m^2"),
    ("SL2:cyclic:<k>[:alpha=<j>]", 4, "embedded cyclic group of order k"),
    ("SL2:binD:<k>[:alpha=<j>]", 4, "embedded binary dihedral group of order 4k"),
    ("SL2:2T[:alpha=<j>]", 4, "embedded binary tetrahedral group, order 24"),
    ("SL2:2O[:alpha=<j>]", 4, "embedded binary octahedral group, order 48"),
    ("SL2:2I[:alpha=<j>]", 4, "embedded binary icosahedral group, order 120"),
    ("G5", 5, "order 108, 14 irreducibles"),
    ("G6", 6, "order 216, 16 irreducibles"),
    ("G7", 7, "order 60, simple, 5 irreducibles"),
    ("G8", 8, "order 168, simple, 6 irreducibles"),
    ("G9", 9, "order 180, the order-60 group times its center"),
    ("G10", 10, "order 504, the order-168 group times its center"),
    ("G11", 11, "order 648, extends G5"),
    ("G12", 12, "order 1080, extends G7"),
)


def _cmd_list(args) -> tuple[int, str]:
    if args.format == "json":
        payload = [
            {"grammar": g, "type": t, "description": d} for g, t, d in _KINDS
        ]
        return 0, _dump_json(payload)
    width = max(len(g) for g, _, _ in _KINDS)
    lines = [f"{'spec'.ljust(width)}  type  description"]
    for g, t, d in _KINDS:
        lines.append(f"{g.ljust(width)}  {str(t).ljust(4)}  {d}")
    lines.append("")
    lines.append("the alpha=<j> suffix multiplies the embedding by a central")
    lines.append("j-th root of unity block chosen to keep determinant 1")
    return 0, "\n".join(lines) + "\n"


def _cmd_info(args) -> tuple[int, str]:
    spec = catalog.parse_spec(args.group)
    an = _analyze(spec, args.max_order)
    dims = sorted(an.table.dims)
    profile = catalog.expected_profile(spec)
    degenerate = bool(profile and profile.degenerate)
    notes = list(profile.notes) if profile else []
    if args.format == "json":
        payload = {
            "group": spec.name,
            "order": an.group.order,
            "exponent": an.group.exponent(),
            "conductor": an.table.conductor,
            "classCount": an.table.count,
            "dimMultiset": dims,
            "degenerate": degenerate,
            "notes": notes,
        }
        return 0, _dump_json(payload)
    lines = [
        f"group      {spec.name}",
        f"order      {an.group.order}",
        f"exponent   {an.group.exponent()}",
        f"conductor  {an.table.conductor}",
        f"classes    {an.table.count}",
        f"dims       {','.join(map(str, dims))}",
    ]
    if degenerate:
        lines.append(f"degenerate yes ({'; '.join(notes)})")
    return 0, "\n".join(lines) + "\n"


def _cmd_chartab(args) -> tuple[int, str]:
    spec = catalog.parse_spec(args.group)
    an = _analyze(spec, args.max_order)
    t = an.table
    if args.format == "json":
        payload = {
            "group": {"spec": spec.name, "order": t.order, "conductor": t.conductor},
            "classes": [
                {
                    "size": t.class_sizes[k],
                    "elementOrder": t.class_orders[k],
                    "centralizer": t.order // t.class_sizes[k],
                }
                for k in range(t.count)
            ],
            "irreps": [{"dim": d} for d in t.dims],
            "values": [[_enc_cyc(v) for v in row] for row in t.values],
        }
        return 0, _dump_json(payload)
    cells = [[_short(v) for v in row] for row in t.values]
    width = max(4, max(len(c) for row in cells for c in row))
    head = [
        f"# {spec.name}: order {t.order}, {t.count} classes, "
        f"entries in Q(zeta_{t.conductor})",
        "# class size   " + " ".join(str(s).rjust(width) for s in t.class_sizes),
        "# elem order   " + " ".join(str(o).rjust(width) for o in t.class_orders),
    ]
    body = [
        f"chi{i} (dim {t.dims[i]}): ".ljust(15)
        + " ".join(c.rjust(width) for c in cells[i])
        for i in range(t.count)
    ]
    return 0, "\n".join(head + body) + "\n"


def _cmd_quiver(args) -> tuple[int, str]:
    spec = catalog.parse_spec(args.group)
    an = _analyze(spec, args.max_order)
    if args.format == "json":
        payload = {"group": spec.name, **mckay.export_json(an.quiver)}
        return 0, _dump_json(payload)
    return 0, mckay.export_dot(an.quiver)


def _published_match(name: str, quiver) -> dict | None:
    """The `publishedMatch` payload: how the recorded matrix compares."""
    audit = published.audit_cartan(name, quiver)
    if audit is None:
        return None
    against = {
        "matched-as-A": "A",
        "matched-as-B": "B",
        "matched-with-erratum": "corrected",
    }.get(audit.status)
    return {
        "matchedAgainst": against,
        "permutation": list(audit.witness) if audit.witness else None,
        "asDocumented": audit.as_expected,
        "notes": list(audit.notes),
    }


def _cmd_cartan(args) -> tuple[int, str]:
    spec = catalog.parse_spec(args.group)
    an = _analyze(spec, args.max_order)
    chosen = {"M": an.quiver.matrix, "B": an.b, "A": an.a}[args.print]
    psd = mckay.psd_check(an.a)
    eig = mckay.eigenvector_check(an.table, an.quiver, an.chi)
    report = {
        "charPolyA": list(psd.char_poly),
        "psd": psd.is_psd,
        "deltaInKernelOfA": mckay.kernel_delta(an.a, an.quiver.dims),
        "deltaInKernelOfB": mckay.kernel_delta(an.b, an.quiver.dims),
        "eigenChecks": list(eig),
        "dualTransposeOk": mckay.dual_transpose_check(an.table, an.quiver, an.chi),
        "publishedMatch": _published_match(spec.name, an.quiver),
    }
    if args.format == "json":
        payload = {
            "group": spec.name,
            "requested": args.print,
            "matrix": _matrix_rows(chosen),
            "report": report,
        }
        return 0, _dump_json(payload)
    if args.format == "csv":
        return 0, "\n".join(",".join(map(str, row)) for row in chosen) + "\n"
    width = max(len(str(v)) for row in chosen for v in row)
    lines = [" ".join(str(v).rjust(width) for v in row) for row in chosen]
    lines.append("")
    lines.append(f"charPoly(A) coefficients: {' '.join(map(str, report['charPolyA']))}")
    lines.append(f"psd: {report['psd']}")
    lines.append(f"A*delta = 0: {report['deltaInKernelOfA']}")
    lines.append(f"B*delta = 0: {report['deltaInKernelOfB']}")
    lines.append(f"eigenvector property: {sum(eig)}/{len(eig)} classes")
    lines.append(f"dual transpose: {report['dualTransposeOk']}")
    pm = report["publishedMatch"]
    if pm is None:
        lines.append("published match: nothing recorded")
    elif pm["matchedAgainst"]:
        lines.append(f"published match: {pm['matchedAgainst']}")
    else:
        lines.append("published match: documented mismatch")
    for note in pm["notes"] if pm else ():
        lines.append(f"  note: {note}")
    return 0, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verify


_CHECK_NAMES = (
    "orthogonality",
    "sumOfSquares",
    "integrality",
    "dimensionBalance",
    "psd",
    "kernelDelta",
    "eigenvectorProp",
    "dualTranspose",
    "profileMatch",
    "expectedQuiverMatch",
    "publishedMatrixMatch",
    "publishedTableMatch",
)


def _verify_one(spec: catalog.GroupSpec, max_order: int) -> dict:
    t0 = time.monotonic()
    an = _analyze(spec, max_order)
    table, quiver, chi = an.table, an.quiver, an.chi
    checks: dict[str, str] = {}
    discrepancies: list[dict] = []

    checks["orthogonality"] = "pass" if chartab.verify_orthogonality(table) else "fail"
    ok = sum(d * d for d in table.dims) == table.order
    checks["sumOfSquares"] = "pass" if ok else "fail"
    ok = all(v >= 0 for row in quiver.matrix for v in row)
    checks["integrality"] = "pass" if ok else "fail"

    dims, m, r = quiver.dims, quiver.matrix, quiver.count
    ok = all(
        sum(m[i][j] * dims[j] for j in range(r)) == 3 * dims[i] for i in range(r)
    ) and all(
        sum(dims[i] * m[i][j] for i in range(r)) == 3 * dims[j] for j in range(r)
    )
    checks["dimensionBalance"] = "pass" if ok else "fail"

    checks["psd"] = "pass" if mckay.psd_check(an.a).is_psd else "fail"
    bt = tuple(tuple(an.b[j][i] for j in range(r)) for i in range(r))
    ok = (
        mckay.kernel_delta(an.a, dims)
        and mckay.kernel_delta(an.b, dims)
        and mckay.kernel_delta(bt, dims)
    )
    checks["kernelDelta"] = "pass" if ok else "fail"
    eig = mckay.eigenvector_check(table, quiver, chi)
    checks["eigenvectorProp"] = "pass" if all(eig) else "fail"
    ok = mckay.dual_transpose_check(table, quiver, chi)
    checks["dualTranspose"] = "pass" if ok else "fail"

    profile = catalog.expected_profile(spec)
    if profile is None:
        checks["profileMatch"] = "skip"
    else:
        ok = (
            profile.order == table.order
            and profile.class_count == table.count
            and profile.dims == tuple(sorted(table.dims))
        )
        checks["profileMatch"] = "pass" if ok else "fail"
        if profile.degenerate:
            discrepancies.append(
                {
                    "kind": "degenerate",
                    "detail": "; ".join(profile.notes) or "collapses to a smaller group",
                }
            )

    expected = catalog.expected_adjacency(spec)
    if expected is None:
        checks["expectedQuiverMatch"] = "skip"
    else:
        witness = mckay.quiver_iso(quiver, expected)
        checks["expectedQuiverMatch"] = "pass" if witness is not None else "fail"

    audit = published.audit_cartan(spec.name, quiver)
    if audit is None:
        checks["publishedMatrixMatch"] = "skip"
    else:
        checks["publishedMatrixMatch"] = "pass" if audit.as_expected else "fail"
        for note in audit.notes:
            discrepancies.append({"kind": "published-cartan", "detail": note})
        if audit.status == "mismatch":
            discrepancies.append(
                {
                    "kind": "published-cartan",
                    "detail": "recorded matrix matches the computed quiver under "
                    "no dimension-preserving relabeling",
                }
            )

    recorded = published.PRINTED_TABLES.get(spec.name)
    if not recorded:
        checks["publishedTableMatch"] = "skip"
    else:
        ok = True
        for printed, should_match in recorded:
            got = published.match_printed_table(table, printed)
            if got != should_match:
                ok = False
            for note in printed.notes:
                discrepancies.append({"kind": "published-table", "detail": note})
        checks["publishedTableMatch"] = "pass" if ok else "fail"

    elapsed = int(round((time.monotonic() - t0) * 1000))
    return {
        "groupSpec": spec.name,
        "order": table.order,
        "classCount": table.count,
        "dimMultiset": sorted(table.dims),
        "checks": checks,
        "discrepancies": discrepancies,
        "elapsedMs": elapsed,
    }


def _format_report_text(report: dict) -> str:
    dims = ",".join(map(str, report["dimMultiset"]))
    lines = [
        f"{report['groupSpec']}: order {report['order']}, "
        f"{report['classCount']} classes, dims {dims}"
    ]
    for name in _CHECK_NAMES:
        lines.append(f"  {name.ljust(22)}{report['checks'][name]}")
    for d in report["discrepancies"]:
        lines.append(f"  note ({d['kind']}): {d['detail']}")
    lines.append(f"  elapsed {report['elapsedMs']} ms")
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> tuple[int, str]:
    if args.all:
        specs = list(catalog.all_specs(max_m=args.max_m))
    else:
        specs = [catalog.parse_spec(args.group)]
    reports = [_verify_one(spec, args.max_order) for spec in specs]
    failures = sum(
        1 for rep in reports if any(v == "fail" for v in rep["checks"].values())
    )
    if args.format == "json":
        if args.all:
            payload = {"reports": reports, "failures": failures}
        else:
            payload = reports[0]
        return (1 if failures else 0), _dump_json(payload)
    chunks = [_format_report_text(rep) for rep in reports]
    if args.all:
        chunks.append(f"{len(reports)} groups verified, {failures} with failures\n")
    return (1 if failures else 0), "".join(chunks)


# ---------------------------------------------------------------------------
# argument wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mckay",
        description="character tables, quivers and Cartan matrices of the "
        "catalog of finite SL3(C) subgroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default_format):
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", help="write the payload to this file")
        p.add_argument(
            "--max-order",
            type=int,
            default=20000,
            help="abort closure beyond this many elements (default 20000)",
        )

    p = sub.add_parser("list", help="spec grammar and catalog types")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("info", help="order, exponent, classes, dims")
    p.add_argument("--group", required=True)
    common(p, ("text", "json"), "text")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("chartab", help="character table")
    p.add_argument("--group", required=True)
    common(p, ("text", "json"), "text")
    p.set_defaults(func=_cmd_chartab)

    p = sub.add_parser("quiver", help="the quiver as DOT or JSON")
    p.add_argument("--group", required=True)
    common(p, ("dot", "json"), "dot")
    p.set_defaults(func=_cmd_quiver)

    p = sub.add_parser("cartan", help="adjacency / pre-Cartan / Cartan matrix")
    p.add_argument("--group", required=True)
    p.add_argument("--print", choices=("M", "B", "A"), default="A")
    common(p, ("text", "json", "csv"), "text")
    p.set_defaults(func=_cmd_cartan)

    p = sub.add_parser("verify", help="run all structural checks")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--group")
    target.add_argument("--all", action="store_true")
    p.add_argument(
        "--max-m",
        type=int,
        default=6,
        help="parameter bound for the parametric families under --all",
    )
    common(p, ("text", "json"), "text")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OrderBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
