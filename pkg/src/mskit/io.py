"""JSON formats for surfaces, coloured quivers and quivers with potential; DOT output."""

from __future__ import annotations

import json
from pathlib import Path

from .charts import INF
from .errors import BadInput, MalformedGluing
from .qp import Arrow, Quiver, QuiverWithPotential, make_qp
from .quiver import ColouredQuiver
from .surface import ArcCopy, OriginalBoundary, Removal, SurfaceComplex, Triangle


# -- surfaces ---------------------------------------------------------------

def _prov_to_json(p) -> dict:
    if isinstance(p, ArcCopy):
        out = {"arc": p.arc, "tag": p.tag}
        if p.in_r:
            out["in_r"] = True
        return out
    return {"segment": p.segment}


def _prov_from_json(obj: dict):
    if "arc" in obj:
        return ArcCopy(int(obj["arc"]), str(obj["tag"]), bool(obj.get("in_r", False)))
    return OriginalBoundary(int(obj["segment"]))


def surface_to_json(cx: SurfaceComplex) -> dict:
    out = {
        "triangles": [{"id": t.id, "sides": list(t.sides)} for t in cx.triangles],
        "gluing": [list(p) for p in cx.pairs],
        "R": sorted(cx.R),
    }
    if cx.boundary_provenance:
        out["boundary"] = [
            {"side": s, "provenance": _prov_to_json(p)} for s, p in cx.boundary_provenance
        ]
    if cx.removed:
        out["removed"] = [
            {
                "triangle": {"id": r.triangle.id, "sides": list(r.triangle.sides)},
                "lost": [_prov_to_json(p) for p in r.lost],
            }
            for r in cx.removed
        ]
    return out


def surface_from_json(obj) -> SurfaceComplex:
    if not isinstance(obj, dict):
        raise MalformedGluing("surface JSON must be an object")
    try:
        tris = [Triangle(int(t["id"]), tuple(int(s) for s in t["sides"]))
                for t in obj.get("triangles", [])]
        gluing = [tuple(int(x) for x in p) for p in obj.get("gluing", [])]
        if any(len(p) != 2 for p in gluing):
            raise MalformedGluing("each gluing entry must pair two sides")
        prov = {int(b["side"]): _prov_from_json(b["provenance"]) for b in obj.get("boundary", [])}
        removed = [
            Removal(
                Triangle(int(r["triangle"]["id"]), tuple(r["triangle"]["sides"])),
                tuple(_prov_from_json(p) for p in r["lost"]),
            )
            for r in obj.get("removed", [])
        ]
        R = [int(r) for r in obj.get("R", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedGluing(f"bad surface JSON: {exc}") from exc
    return SurfaceComplex.build(tris, gluing, R, prov, removed)


# -- coloured quivers -----------------------------------------------------------

def quiver_to_json(Q: ColouredQuiver) -> dict:
    out = {
        "vertices": [{"id": v, "d": "inf" if p == INF else int(p)} for v, p in Q.d.items()],
        "arrows": [
            {"src": i, "dst": j, "colour": c}
            for (i, j, c), m in Q.arrows
            for _ in range(m)
        ],
    }
    if Q.window is not None:
        out["window"] = list(Q.window)
    return out


def quiver_from_json(obj) -> ColouredQuiver:
    try:
        d = {int(v["id"]): INF if v["d"] == "inf" else int(v["d"]) for v in obj["vertices"]}
        arrows: dict = {}
        for a in obj.get("arrows", []):
            key = (int(a["src"]), int(a["dst"]), int(a["colour"]))
            arrows[key] = arrows.get(key, 0) + 1
        window = obj.get("window")
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"bad quiver JSON: {exc}") from exc
    return ColouredQuiver.make(d, arrows, tuple(window) if window else None)


def quiver_to_dot(Q: ColouredQuiver, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    for v, p in Q.d.items():
        label = f"{v} (d={'inf' if p == INF else int(p)})"
        lines.append(f'  {v} [label="{label}"];')
    for (i, j, c), m in Q.arrows:
        for _ in range(m):
            lines.append(f'  {i} -> {j} [label="({c})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- quivers with potential ------------------------------------------------------

def qp_to_json(qp: QuiverWithPotential) -> dict:
    return {
        "vertices": list(qp.vertices),
        "arrows": [{"id": a.id, "src": a.src, "dst": a.dst} for a in qp.arrows],
        "potential": [{"coeff": c, "cycle": list(cyc)} for c, cyc in qp.potential],
    }


def qp_from_json(obj) -> QuiverWithPotential:
    try:
        arrows = [Arrow(int(a["id"]), int(a["src"]), int(a["dst"])) for a in obj["arrows"]]
        pot = [(int(t["coeff"]), tuple(int(x) for x in t["cycle"])) for t in obj.get("potential", [])]
        return make_qp([int(v) for v in obj["vertices"]], arrows, pot)
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"bad QP JSON: {exc}") from exc


def plain_quiver_to_qp(Q: Quiver) -> QuiverWithPotential:
    arrows = []
    for (i, j), m in Q.arrows:
        for _ in range(m):
            arrows.append(Arrow(len(arrows), i, j))
    return make_qp(Q.vertices, arrows)


def qp_to_dot(qp: QuiverWithPotential, name: str = "QP") -> str:
    lines = [f"digraph {name} {{"]
    for v in qp.vertices:
        lines.append(f"  {v};")
    for a in qp.arrows:
        lines.append(f'  {a.src} -> {a.dst} [label="a{a.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- files ---------------------------------------------------------------------

def read_json(path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise BadInput(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadInput(f"{path} is not valid JSON: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
