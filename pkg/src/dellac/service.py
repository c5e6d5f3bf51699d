"""HTTP service exposing the engine.

Same operations as the command line, same wire formats: tableaux are
``{"kind", "n", "rows"}`` with ``null`` for the empty row, points are
``"j:i"`` strings, polynomial coefficients are ascending decimal strings.
``DELLAC_MAX_N`` caps the sizes a request may ask for.
"""
from __future__ import annotations

import os
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import Response
from pydantic import BaseModel, Field

from . import __version__
from .enumeration import enum_dc, enum_sdc, enum_te, enum_to
from .grid import InvalidTableau, IntegrityError, Tableau, fr, is_symmetric, validate
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

DEFAULT_MAX_N = 8
ENUM_DEFAULT_LIMIT = 200

_ENUMERATORS = {"dc": enum_dc, "sdc": enum_sdc, "te": enum_te, "to": enum_to}


def max_n_cap() -> int:
    raw = os.environ.get("DELLAC_MAX_N", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return DEFAULT_MAX_N


def _check_n(n: int) -> int:
    cap = max_n_cap()
    if not 1 <= n <= cap:
        raise HTTPException(422, f"n must be between 1 and {cap}")
    return n


class TableauModel(BaseModel):
    kind: str
    n: int = Field(ge=1)
    rows: list[Optional[int]]

    def to_tableau(self) -> Tableau:
        t = Tableau(self.kind, self.n, tuple(self.rows))
        report = validate(t)
        if not report:
            raise HTTPException(422, f"invalid tableau: {report.violation} "
                                     f"(witness {report.witness})")
        return t

    @classmethod
    def from_tableau(cls, t: Tableau) -> "TableauModel":
        return cls(**t.to_json_dict())


class EnumerateRequest(BaseModel):
    kind: str
    n: int = Field(ge=1)
    limit: Optional[int] = Field(default=None, ge=0)


class StatsRequest(BaseModel):
    tableau: TableauModel
    report: str = "inv"


class PoincareRequest(BaseModel):
    variety: str
    n: int = Field(ge=1)


class PolyRequest(BaseModel):
    family: str
    n: int = Field(ge=0)


class MapRequest(BaseModel):
    op: str
    tableau: TableauModel
    labels: Optional[dict[str, int]] = None
    X: Optional[list[str]] = None
    l: Optional[dict[str, str]] = None


class VerifyRequest(BaseModel):
    suite: str = "all"
    max_n: Optional[int] = Field(default=None, ge=1)
    threads: int = Field(default=1, ge=1, le=16)


class RenderRequest(BaseModel):
    tableau: TableauModel
    overlay: str = "none"
    cell: int = Field(default=24, ge=8, le=120)


def _point_key(p: tuple[int, int]) -> str:
    return f"{p[0]}:{p[1]}"


def _parse_point(s: str) -> tuple[int, int]:
    try:
        j, i = s.split(":")
        return int(j), int(i)
    except ValueError:
        raise HTTPException(422, f"bad point {s!r}, expected 'j:i'")


def create_app() -> FastAPI:
    app = FastAPI(title="dellac", version=__version__)

    @app.exception_handler(InvalidTableau)
    async def _invalid(_, exc):  # noqa: ANN001
        return Response(content=f'{{"detail":"{exc}"}}', status_code=422,
                        media_type="application/json")

    @app.exception_handler(IntegrityError)
    async def _integrity(_, exc):  # noqa: ANN001
        return Response(content=f'{{"detail":"{exc}"}}', status_code=500,
                        media_type="application/json")

    @app.get("/")
    def index() -> dict:
        return {"name": "dellac", "version": __version__,
                "max_n": max_n_cap()}

    @app.post("/enumerate")
    def enumerate_(req: EnumerateRequest) -> dict:
        if req.kind not in _ENUMERATORS:
            raise HTTPException(422, f"kind must be one of {sorted(_ENUMERATORS)}")
        _check_n(req.n)
        limit = ENUM_DEFAULT_LIMIT if req.limit is None else req.limit
        items, truncated = [], False
        for t in _ENUMERATORS[req.kind](req.n):
            if len(items) >= limit:
                truncated = True
                break
            items.append(t.to_json_dict())
        return {"kind": req.kind, "n": req.n, "count": len(items),
                "truncated": truncated, "items": items}

    @app.post("/stats")
    def stats(req: StatsRequest) -> dict:
        t = req.tableau.to_tableau()
        out: dict = {"kind": t.kind, "n": t.n}
        if req.report == "inv":
            if t.kind not in ("dc", "sdc"):
                raise HTTPException(422, "inversion stats need a square configuration")
            out["inv"] = inv(t)
            if is_symmetric(t):
                out["tilde_inv"] = tilde_inv(t)
                out["bar_inv"] = bar_inv(t)
        elif req.report == "paths":
            if t.kind == "te":
                out.update(path_report(t).to_json_dict())
            elif t.kind == "to":
                out.update(path_report_odd(t).to_json_dict())
            else:
                raise HTTPException(422, "path stats need an extended tableau")
        elif req.report == "labels":
            if t.kind == "te":
                labels = assign_forward_labels(t)
            elif t.kind == "to":
                labels = assign_nu_labels(t)
            else:
                raise HTTPException(422, "step labels need an extended tableau")
            out["fr"] = fr(t)
            out["labels"] = {_point_key(p): lab
                             for p, lab in sorted(labels.items())}
        else:
            raise HTTPException(422, "report must be inv, paths, or labels")
        return out

    @app.post("/poincare")
    def poincare(req: PoincareRequest) -> dict:
        if req.variety not in ("a", "sp", "so"):
            raise HTTPException(422, "variety must be a, sp, or so")
        _check_n(req.n)
        poly = poincare_poly(req.variety, req.n)
        return {"variety": req.variety, "n": req.n,
                "coeffs": [str(c) for c in poly.coeffs]}

    @app.post("/poly")
    def poly(req: PolyRequest) -> dict:
        fam, n = req.family, req.n
        out: dict = {"family": fam, "n": n}
        if fam in ("D", "P", "P_cf", "P_pistols"):
            if fam != "D" and n < 1:
                raise HTTPException(422, "n must be >= 1 for this family")
            _check_n(max(n, 1))
            p = {"D": D_poly, "P": P_poly, "P_cf": P_via_cf,
                 "P_pistols": P_via_pistols}[fam](n)
            out["coeffs"] = [str(c) for c in p.coeffs]
        elif fam in ("l", "r", "L", "R"):
            _check_n(max(n, 1))
            out["value"] = str({"l": l_seq, "r": r_seq,
                                "L": L_seq, "R": R_seq}[fam](n))
        elif fam == "c":
            if n < 1:
                raise HTTPException(422, "n must be >= 1 for the triangle")
            _check_n(n)
            out["rows"] = [[str(c) for c in row] for row in c_triangle(n)]
        elif fam == "cf":
            if not 0 <= n <= 12:
                raise HTTPException(422, "series order must be between 0 and 12")
            out["coeffs_by_t"] = [[str(c) for c in p.coeffs]
                                  for p in cf_series(n)]
        else:
            raise HTTPException(422, "family must be one of D, P, P_cf, "
                                     "P_pistols, l, r, L, R, c, cf")
        return out

    @app.post("/map")
    def map_(req: MapRequest) -> dict:
        t = req.tableau.to_tableau()
        op = req.op
        if op in ("even-expand", "odd-expand"):
            if req.labels is None:
                raise HTTPException(422, f"{op} needs labels")
            labels = {_parse_point(k): v for k, v in req.labels.items()}
            fn = even_expand if op == "even-expand" else odd_expand
            return {"tableau": fn(t, labels).to_json_dict()}
        if op in ("even-reduce", "odd-reduce"):
            fn = even_reduce if op == "even-reduce" else odd_reduce
            t0, labels = fn(t)
            return {"tableau": t0.to_json_dict(),
                    "labels": {_point_key(p): v
                               for p, v in sorted(labels.items())}}
        if op == "pi":
            t0, X = pi_forward(t)
            return {"tableau": t0.to_json_dict(),
                    "X": [_point_key(p) for p in sorted(X)]}
        if op == "pi-fiber":
            if req.X is None:
                raise HTTPException(422, "pi-fiber needs X")
            X = frozenset(_parse_point(s) for s in req.X)
            return {"tableaux": [u.to_json_dict() for u in pi_fiber(t, X)]}
        if op == "p":
            return {"tableau": p_forward(t).to_json_dict()}
        if op == "p-fiber":
            if req.l is None:
                raise HTTPException(422, "p-fiber needs l")
            l = {int(j): code for j, code in req.l.items()}
            u = p_fiber(t, l)
            return {"tableau": u.to_json_dict(),
                    "recovered": {str(j): c for j, c in
                                  sorted(recover_label_function(u).items())}}
        raise HTTPException(422, "op must be one of even-expand, even-reduce, "
                                 "odd-expand, odd-reduce, pi, pi-fiber, p, p-fiber")

    @app.post("/verify")
    def verify(req: VerifyRequest) -> dict:
        cap = min(max_n_cap(), 5)
        max_n = min(req.max_n, cap) if req.max_n is not None else 4
        report = run_suite_lazy(req.suite, max_n=max_n, threads=req.threads)
        return report.to_json_dict()

    @app.post("/render")
    def render(req: RenderRequest) -> Response:
        if req.overlay not in OVERLAYS:
            raise HTTPException(422, f"overlay must be one of {OVERLAYS}")
        t = req.tableau.to_tableau()
        svg = render_svg(t, overlay=req.overlay, cell=req.cell)
        return Response(content=svg, media_type="image/svg+xml")

    return app


def run_suite_lazy(suite: str, max_n: int, threads: int):
    from .verify import run_suite

    try:
        return run_suite(suite, max_n=max_n, threads=threads)
    except ValueError as exc:
        raise HTTPException(422, str(exc))


app = create_app()
