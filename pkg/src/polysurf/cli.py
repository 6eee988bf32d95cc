"""Command-line interface: ``polysurf <command> ...``.

Exit codes: 0 success, 2 invalid input, 3 numerical non-convergence.
``--format machine`` prints one JSON document per invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .catalog import CatalogQuery, enumerate_vertex_types
from .complex import VertexType, build_complex, is_edge_to_edge, is_orientable
from .cover import develop_universal_cover
from .curvature import CurvatureProfile, angle_sum, classify, curvature
from .errors import NumericalError, PolysurfError, ValidationError
from .gauss_bonnet import check_gauss_bonnet
from .generators import FAMILIES, generate
from .isoperimetric import ball_profile
from .metric import DEFAULT_BUDGET, approx_diameter, build_mesh, vertex_avoidance_probe
from .psc import read_psc, serialize_psc, write_psc
from .render import RenderOptions, render_svg
from .spherical import critical_radius, polygon_spec, threshold_radius


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _load(path: str):
    return build_complex(read_psc(path))


def _types(cx_path: str | None, types: list[str] | None):
    if types:
        return None, [VertexType.parse(t) for t in types]
    if not cx_path:
        raise ValidationError("give a .psc file or --types")
    cx = _load(cx_path)
    return cx, sorted({v.vertex_type for v in cx.interior_vertices()})


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[str(c) for c in r] for r in rows]
    w = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    lines = ["  ".join(c.ljust(w[k]) for k, c in enumerate(r)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * x for x in w))
    return "\n".join(lines)


# -- commands -------------------------------------------------------------
def cmd_validate(a):
    cx = _load(a.file)
    e2e = is_edge_to_edge(cx)
    return {
        "valid": True,
        "faces": cx.num_faces,
        "edges": cx.num_edges,
        "vertices": cx.num_vertices,
        "closed": cx.is_closed,
        "orientable": is_orientable(cx),
        "edge_to_edge": e2e.ok,
        "edge_to_edge_witness": e2e.witness,
    }


def cmd_report(a):
    cx = _load(a.file)
    rows = []
    for v in sorted(cx.vertices, key=lambda v: v.vertex_id):
        rows.append(
            {
                "vertex_id": v.vertex_id,
                "type": str(v.vertex_type),
                "angle_sum_over_pi": _frac(angle_sum(v.cyclic_sizes).coefficient_of_pi),
                "kappa": _frac(curvature(v.cyclic_sizes)),
                "boundary": v.is_boundary,
            }
        )
    return {"vertices": rows}


def cmd_classify(a):
    cx, types = _types(a.file, a.types)
    prof = (
        CurvatureProfile.from_complex(cx, a.side_bound)
        if cx is not None
        else CurvatureProfile.from_types(types, a.side_bound)
    )
    tv = classify(prof)
    return {
        "verdict": tv.verdict.value,
        "reason": tv.reason,
        "universal_cover": tv.universal_cover,
        "note": tv.note,
        "types": [str(t) for t in prof.types],
        "side_bound": prof.side_bound,
    }


def cmd_euler(a):
    r = check_gauss_bonnet(_load(a.file))
    return {
        "V": r.V, "E": r.E, "F": r.F, "chi": r.chi_euler,
        "curvature_sum": _frac(r.curvature_sum), "consistent": r.consistent,
    }


def cmd_catalog(a):
    q = CatalogQuery(a.sides, a.sign, a.degree_min, a.degree_max)
    return {
        "query": {"sides": q.side_bound, "sign": q.sign, "degree_min": q.degree_min, "degree_max": q.degree_max},
        "types": [{"type": str(t), "kappa": _frac(curvature(t))} for t in enumerate_vertex_types(q)],
    }


def cmd_cover(a):
    base = _load(a.file)
    if a.max_generation is None and a.max_faces is None:
        raise ValidationError("give --max-generation or --max-faces")
    ball = develop_universal_cover(base, max_faces=a.max_faces, max_generation=a.max_generation)
    cx = ball.cover_complex
    proj = {str(cx.face_ids[F]): base.face_ids[b] for F, b in enumerate(ball.face_projection)}
    out = {
        "faces": cx.num_faces,
        "halted_by": ball.halted_by,
        "faces_per_generation": ball.faces_per_generation(),
    }
    if a.out:
        write_psc(a.out, cx)
        side = Path(str(a.out) + ".projection.json")
        side.write_text(json.dumps({"cover_face_to_base_face": proj}, indent=1) + "\n", encoding="utf-8")
        out["written"] = [str(a.out), str(side)]
    else:
        out["projection"] = proj
    return out


def cmd_spherical(a):
    s = polygon_spec(a.r, a.n)
    return {
        "r": s.r, "n": s.n, "phi": s.phi, "interior_angle": s.interior_angle,
        "circumradius": s.circumradius, "area": s.area,
    }


def cmd_critical_radius(a):
    _, types = _types(a.file, a.types)
    return {
        "thresholds": {str(t): threshold_radius(t) for t in types},
        "margin": a.margin,
        "critical_radius": critical_radius(types, a.margin),
    }


def cmd_diameter(a):
    cx = _load(a.file)
    mesh = build_mesh(cx, a.r, a.resolution, budget=a.budget)
    est = approx_diameter(mesh)
    return {"r": a.r, "resolution": a.resolution, "nodes": mesh.num_nodes, "diameter_upper_estimate": est.value, "kind": est.kind}


def cmd_avoidance(a):
    cx = _load(a.file)
    mesh = build_mesh(cx, a.r, a.resolution, budget=a.budget)
    seed = 0 if a.seed is None else a.seed
    rep = vertex_avoidance_probe(mesh, cx, a.r, pairs=a.pairs, seed=seed)
    return {
        "r": a.r, "resolution": a.resolution, "seed": seed, "pairs": len(rep.pairs),
        "min_detour": rep.min_detour, "all_nonnegative": rep.all_nonnegative,
        "detours": [p.detour for p in rep.pairs],
    }


def cmd_isoperimetric(a):
    cx = _load(a.file)
    reps = ball_profile(cx, a.center, a.max_radius)
    return {
        "center": a.center,
        "balls": [
            {"radius": k, "faces": r.face_count, "boundary_edges": r.boundary_edge_count,
             "ratio": _frac(r.ratio), "rho_area": r.rho_area}
            for k, r in enumerate(reps)
        ],
    }


def cmd_generate(a):
    opts = {"complete_rim": True} if a.complete_rim else {}
    params = [p if a.family == "platonic" else int(p) for p in a.params]
    cx = generate(a.family, *params, **opts)
    text = serialize_psc(cx)
    if a.out:
        Path(a.out).write_text(text, encoding="utf-8")
        return {"family": a.family, "params": a.params, "faces": cx.num_faces, "written": a.out}
    return {"psc": text}


def cmd_render(a):
    cx = _load(a.file)
    svg = render_svg(cx, RenderOptions(label_curvature=a.labels, output_path=a.out))
    return {"written": a.out} if a.out else {"svg": svg}


# -- human output -----------------------------------------------------------
def _human(cmd: str, res: dict) -> str:
    if "psc" in res:
        return res["psc"].rstrip("\n")
    if "svg" in res:
        return res["svg"].rstrip("\n")
    if cmd == "report":
        rows = [[r["vertex_id"], r["type"], r["angle_sum_over_pi"], r["kappa"], "yes" if r["boundary"] else ""]
                for r in res["vertices"]]
        return _table(["vertex", "type", "angle-sum/pi", "kappa", "boundary"], rows)
    if cmd == "catalog":
        return "\n".join(f'{t["type"]}  {t["kappa"]}' for t in res["types"])
    if cmd == "isoperimetric":
        rows = [[b["radius"], b["faces"], b["boundary_edges"], b["ratio"], f'{b["rho_area"]:.6f}'] for b in res["balls"]]
        return _table(["radius", "|F|", "|E(bd)|", "ratio", "rho_area"], rows)
    if cmd == "classify":
        lines = [res["verdict"], f'reason: {res["reason"]}']
        if res["universal_cover"]:
            lines.append(f'universal cover: {res["universal_cover"]}')
        if res["note"]:
            lines.append(f'note: {res["note"]}')
        return "\n".join(lines)
    lines = []
    for k, v in res.items():
        if isinstance(v, dict):
            lines.append(f"{k}:")
            lines += [f"  {kk}: {vv}" for kk, vv in v.items()]
        elif isinstance(v, list) and len(v) > 12:
            lines.append(f"{k}: [{len(v)} values]")
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


COMMANDS = {
    "validate": cmd_validate, "report": cmd_report, "classify": cmd_classify,
    "euler": cmd_euler, "catalog": cmd_catalog, "cover": cmd_cover,
    "spherical": cmd_spherical, "critical-radius": cmd_critical_radius,
    "diameter": cmd_diameter, "avoidance": cmd_avoidance,
    "isoperimetric": cmd_isoperimetric, "generate": cmd_generate, "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="polysurf", description="Curvature, covers and metrics of regular polygonal surfaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--seed", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True)
    add = lambda name, **kw: sub.add_parser(name, parents=[common], **kw)

    for name in ("validate", "report", "euler"):
        add(name).add_argument("file")

    s = add("classify")
    s.add_argument("file", nargs="?")
    s.add_argument("--types", nargs="+", metavar="K1,K2,...")
    s.add_argument("--side-bound", type=int)

    s = add("catalog")
    s.add_argument("--sides", type=int, required=True)
    s.add_argument("--sign", required=True, choices=("pos", "zero", "neg", "positive", "negative"))
    s.add_argument("--degree-min", type=int, default=3)
    s.add_argument("--degree-max", type=int)

    s = add("cover")
    s.add_argument("file")
    s.add_argument("--max-generation", type=int)
    s.add_argument("--max-faces", type=int)
    s.add_argument("--out")

    s = add("spherical")
    s.add_argument("--r", type=float, required=True)
    s.add_argument("--n", type=int, required=True)

    s = add("critical-radius")
    s.add_argument("file", nargs="?")
    s.add_argument("--types", nargs="+", metavar="K1,K2,...")
    s.add_argument("--margin", type=float, default=0.01)

    for name in ("diameter", "avoidance"):
        s = add(name)
        s.add_argument("file")
        s.add_argument("--r", type=float, required=True)
        s.add_argument("--resolution", type=float, default=0.1 if name == "diameter" else 0.05)
        s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--pairs", type=int, default=50)

    s = add("isoperimetric")
    s.add_argument("file")
    s.add_argument("--center", type=int, default=0)
    s.add_argument("--max-radius", type=int, required=True)

    s = add("generate", description=f"families: {', '.join(FAMILIES)}")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("params", nargs="*")
    s.add_argument("--complete-rim", action="store_true")
    s.add_argument("--out")

    s = add("render")
    s.add_argument("file")
    s.add_argument("--labels", action="store_true", help="label interior vertices with kappa")
    s.add_argument("--out")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors, matching the validation exit code
        return int(exc.code or 0)
    try:
        res = COMMANDS[args.command](args)
    except NumericalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (PolysurfError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return getattr(exc, "exit_code", 2)
    if args.format == "machine":
        print(json.dumps({"command": args.command, "result": res}, sort_keys=True))
    else:
        print(_human(args.command, res))
    return 0


if __name__ == "__main__":
    sys.exit(main())
