"""Command-line interface.

All subcommands speak the same wire formats as the HTTP service: tableaux as
``{"kind", "n", "rows"}`` JSON (``null`` marks the empty row), points as
``"j:i"`` strings, polynomial coefficients as ascending decimal strings.
``--format csv`` flattens the same data for spreadsheets.  ``DELLAC_MAX_N``
caps the sizes a command may ask for.
"""
from __future__ import annotations

import csv
import json
import os
import sys
from itertools import islice
from typing import Optional

import click

from .enumeration import enum_dc, enum_sdc, enum_te, enum_to, iter_sp
from .grid import Tableau, fr, is_symmetric, validate
from .maps import (
    even_expand,
    even_reduce,
    odd_expand,
    odd_reduce,
    p_fiber,
    p_forward,
    pi_fiber,
    pi_forward,
    recover_label_function,
)
from .polynomials import (
    D_poly,
    L_seq,
    P_poly,
    P_via_cf,
    P_via_pistols,
    R_seq,
    c_triangle,
    cf_series,
    l_seq,
    r_seq,
)
from .render import OVERLAYS, render_svg
from .stats import (
    assign_forward_labels,
    assign_nu_labels,
    bar_inv,
    inv,
    path_report,
    path_report_odd,
    poincare_poly,
    tilde_inv,
)
from .verify import SUITES, run_suite

_ENUMERATORS = {"dc": enum_dc, "sdc": enum_sdc, "te": enum_te, "to": enum_to}
MAP_OPS = ("even-expand", "even-reduce", "odd-expand", "odd-reduce",
           "pi", "pi-fiber", "p", "p-fiber")


def _max_n_cap() -> int:
    raw = os.environ.get("DELLAC_MAX_N", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 8


def _check_n(n: int) -> int:
    cap = _max_n_cap()
    if not 1 <= n <= cap:
        raise click.ClickException(f"n must be between 1 and {cap} "
                                   f"(set DELLAC_MAX_N to raise the cap)")
    return n


def _read_doc(input_path: Optional[str]) -> dict:
    if input_path and input_path != "-":
        with open(input_path) as fh:
            return json.load(fh)
    return json.load(sys.stdin)


def _doc_tableau(doc: dict) -> Tableau:
    body = doc if "kind" in doc else doc.get("tableau", {})
    try:
        t = Tableau(body["kind"], body["n"],
                    tuple(None if r is None else int(r) for r in body["rows"]))
    except (KeyError, TypeError) as exc:
        raise click.ClickException(f"malformed tableau document: {exc}")
    report = validate(t)
    if not report:
        raise click.ClickException(f"invalid tableau: {report.violation} "
                                   f"(witness {report.witness})")
    return t


def _point_key(p: tuple[int, int]) -> str:
    return f"{p[0]}:{p[1]}"


def _parse_point(s: str) -> tuple[int, int]:
    j, _, i = s.partition(":")
    try:
        return int(j), int(i)
    except ValueError:
        raise click.ClickException(f"bad point {s!r}, expected 'j:i'")


def _emit(ctx: click.Context, payload: dict, csv_rows=None) -> None:
    """JSON by default; csv_rows is a (header, rows) pair for --format csv."""
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        writer = csv.writer(sys.stdout)
        if csv_rows is None:
            csv_rows = (("key", "value"),
                        [(k, json.dumps(v)) for k, v in sorted(payload.items())])
        header, rows = csv_rows
        writer.writerow(header)
        writer.writerows(rows)


@click.group()
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True, help="Output format.")
@click.option("--threads", type=click.IntRange(1, 16), default=1,
              show_default=True, help="Worker threads for verification.")
@click.pass_context
def main(ctx: click.Context, fmt: str, threads: int) -> None:
    """Exact enumeration and verification engine for Dellac-type tableaux."""
    ctx.ensure_object(dict)
    ctx.obj["format"] = fmt
    ctx.obj["threads"] = threads


@main.command("enumerate")
@click.argument("kind", type=click.Choice([*_ENUMERATORS, "sp"]))
@click.argument("n", type=int)
@click.option("--limit", type=click.IntRange(0), default=None,
              help="Stop after this many items.")
@click.option("--count-only", is_flag=True, help="Print only the count.")
@click.pass_context
def enumerate_(ctx: click.Context, kind: str, n: int, limit: Optional[int],
               count_only: bool) -> None:
    """List all tableaux (or surjection tables) of one kind and size."""
    _check_n(n)
    if kind == "sp":
        source = iter_sp(n)
        as_dict = lambda f: {"kind": "sp", "n": n, "values": list(f)}
    else:
        source = _ENUMERATORS[kind](n)
        as_dict = lambda t: t.to_json_dict()
    if count_only:
        total = sum(1 for _ in source)
        _emit(ctx, {"kind": kind, "n": n, "count": total},
              (("kind", "n", "count"), [(kind, n, total)]))
        return
    items = [as_dict(x) for x in islice(source, limit)]
    payload = {"kind": kind, "n": n, "count": len(items), "items": items}
    if kind == "sp":
        rows = [(kind, n, " ".join(map(str, it["values"]))) for it in items]
    else:
        rows = [(kind, n, " ".join("-" if r is None else str(r)
                                   for r in it["rows"])) for it in items]
    _emit(ctx, payload, (("kind", "n", "rows"), rows))


@main.command()
@click.option("--report", type=click.Choice(["inv", "paths", "labels"]),
              default="inv", show_default=True)
@click.option("--input", "input_path", default=None,
              help="Tableau JSON file ('-' or omitted = stdin).")
@click.pass_context
def stats(ctx: click.Context, report: str, input_path: Optional[str]) -> None:
    """Statistics of one tableau read from JSON."""
    t = _doc_tableau(_read_doc(input_path))
    out: dict = {"kind": t.kind, "n": t.n}
    if report == "inv":
        if t.kind not in ("dc", "sdc"):
            raise click.ClickException("inversion stats need a square configuration")
        out["inv"] = inv(t)
        if is_symmetric(t):
            out["tilde_inv"] = tilde_inv(t)
            out["bar_inv"] = bar_inv(t)
    elif report == "paths":
        if t.kind == "te":
            out.update(path_report(t).to_json_dict())
        elif t.kind == "to":
            out.update(path_report_odd(t).to_json_dict())
        else:
            raise click.ClickException("path stats need an extended tableau")
    else:
        if t.kind == "te":
            labels = assign_forward_labels(t)
        elif t.kind == "to":
            labels = assign_nu_labels(t)
        else:
            raise click.ClickException("step labels need an extended tableau")
        out["fr"] = fr(t)
        out["labels"] = {_point_key(p): lab for p, lab in sorted(labels.items())}
    _emit(ctx, out)


@main.command()
@click.argument("variety", type=click.Choice(["a", "sp", "so"]))
@click.argument("n", type=int)
@click.pass_context
def poincare(ctx: click.Context, variety: str, n: int) -> None:
    """Rank polynomial of one family, by exhaustive enumeration."""
    _check_n(n)
    poly = poincare_poly(variety, n)
    coeffs = [str(c) for c in poly.coeffs]
    _emit(ctx, {"variety": variety, "n": n, "coeffs": coeffs},
          (("variety", "n", "degree", "coeff"),
           [(variety, n, d, c) for d, c in zip(range(len(coeffs)), coeffs)]))


@main.command()
@click.argument("family", type=click.Choice(
    ["D", "P", "P_cf", "P_pistols", "l", "r", "L", "R", "c", "cf"]))
@click.argument("n", type=int)
@click.pass_context
def poly(ctx: click.Context, family: str, n: int) -> None:
    """Polynomials and scalar sequences from the recurrences."""
    out: dict = {"family": family, "n": n}
    if family in ("D", "P", "P_cf", "P_pistols"):
        if family != "D" and n < 1:
            raise click.ClickException("n must be >= 1 for this family")
        _check_n(max(n, 1))
        p = {"D": D_poly, "P": P_poly, "P_cf": P_via_cf,
             "P_pistols": P_via_pistols}[family](n)
        out["coeffs"] = [str(c) for c in p.coeffs]
        rows = [(family, n, d, c) for d, c in
                zip(range(len(out["coeffs"])), out["coeffs"])]
        _emit(ctx, out, (("family", "n", "degree", "coeff"), rows))
    elif family in ("l", "r", "L", "R"):
        _check_n(max(n, 1))
        out["value"] = str({"l": l_seq, "r": r_seq, "L": L_seq,
                            "R": R_seq}[family](n))
        _emit(ctx, out, (("family", "n", "value"), [(family, n, out["value"])]))
    elif family == "c":
        if n < 1:
            raise click.ClickException("n must be >= 1 for the triangle")
        _check_n(n)
        out["rows"] = [[str(c) for c in row] for row in c_triangle(n)]
        rows = [(family, m + 1, k, c) for m, row in enumerate(out["rows"])
                for k, c in zip(range(len(row)), row)]
        _emit(ctx, out, (("family", "n", "k", "coeff"), rows))
    else:
        if not 0 <= n <= 12:
            raise click.ClickException("series order must be between 0 and 12")
        out["coeffs_by_t"] = [[str(c) for c in p.coeffs] for p in cf_series(n)]
        rows = [(family, m, d, c) for m, cs in enumerate(out["coeffs_by_t"])
                for d, c in zip(range(len(cs)), cs)]
        _emit(ctx, out, (("family", "t_power", "degree", "coeff"), rows))


@main.command("map")
@click.argument("op", type=click.Choice(MAP_OPS))
@click.option("--input", "input_path", default=None,
              help="JSON document ('-' or omitted = stdin).")
@click.pass_context
def map_(ctx: click.Context, op: str, input_path: Optional[str]) -> None:
    """Apply a bijection or projection step to a tableau.

    The input document is either a bare tableau or an object with a
    "tableau" entry plus "labels" (expansions), "X" (pi-fiber) or
    "l" (p-fiber) as the operation requires.
    """
    doc = _read_doc(input_path)
    t = _doc_tableau(doc)
    if op in ("even-expand", "odd-expand"):
        raw = doc.get("labels")
        if raw is None:
            raise click.ClickException(f"{op} needs a labels entry")
        labels = {_parse_point(k): int(v) for k, v in raw.items()}
        fn = even_expand if op == "even-expand" else odd_expand
        _emit(ctx, {"tableau": fn(t, labels).to_json_dict()})
    elif op in ("even-reduce", "odd-reduce"):
        fn = even_reduce if op == "even-reduce" else odd_reduce
        t0, labels = fn(t)
        _emit(ctx, {"tableau": t0.to_json_dict(),
                    "labels": {_point_key(p): v
                               for p, v in sorted(labels.items())}})
    elif op == "pi":
        t0, X = pi_forward(t)
        _emit(ctx, {"tableau": t0.to_json_dict(),
                    "X": [_point_key(p) for p in sorted(X)]})
    elif op == "pi-fiber":
        raw = doc.get("X")
        if raw is None:
            raise click.ClickException("pi-fiber needs an X entry")
        X = frozenset(_parse_point(s) for s in raw)
        _emit(ctx, {"tableaux": [u.to_json_dict() for u in pi_fiber(t, X)]})
    elif op == "p":
        _emit(ctx, {"tableau": p_forward(t).to_json_dict()})
    else:
        raw = doc.get("l")
        if raw is None:
            raise click.ClickException("p-fiber needs an l entry")
        l = {int(j): code for j, code in raw.items()}
        u = p_fiber(t, l)
        _emit(ctx, {"tableau": u.to_json_dict(),
                    "recovered": {str(j): c for j, c in
                                  sorted(recover_label_function(u).items())}})


@main.command()
@click.argument("suite", type=click.Choice([*SUITES, "all"]), default="all")
@click.option("--max-n", type=click.IntRange(1), default=None,
              help="Lower every per-check bound to this size.")
@click.pass_context
def verify(ctx: click.Context, suite: str, max_n: Optional[int]) -> None:
    """Re-check the headline identities; exit nonzero if any check fails."""
    report = run_suite(suite, max_n=max_n, threads=ctx.obj["threads"])
    rows = [(c.name, "ok" if c.ok else "FAIL", c.expected, c.actual,
             f"{c.seconds:.3f}") for c in report.checks]
    _emit(ctx, report.to_json_dict(),
          (("check", "status", "expected", "actual", "seconds"), rows))
    if not report.ok:
        ctx.exit(1)


@main.command()
@click.option("--overlay", type=click.Choice(list(OVERLAYS)), default="none",
              show_default=True)
@click.option("--cell", type=click.IntRange(8, 120), default=24,
              show_default=True, help="Cell size in pixels.")
@click.option("--input", "input_path", default=None,
              help="Tableau JSON file ('-' or omitted = stdin).")
@click.option("-o", "--output", default=None,
              help="Write the SVG here instead of stdout.")
def render(overlay: str, cell: int, input_path: Optional[str],
           output: Optional[str]) -> None:
    """Draw a tableau as SVG."""
    t = _doc_tableau(_read_doc(input_path))
    svg = render_svg(t, overlay=overlay, cell=cell)
    if output:
        with open(output, "w") as fh:
            fh.write(svg)
        click.echo(f"wrote {output}", err=True)
    else:
        click.echo(svg)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Start the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
