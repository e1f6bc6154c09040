"""JSON input documents and report rendering for the command line.

Input schemas (all integers; ray/cone/factor indices 0-based, Dynkin nodes
1-based Bourbaki; unknown fields rejected):

  fan            {"kind": "fan", "dim": n, "rays": [[..]], "maximal_cones": [[..]]}
  horospherical  {"kind": "horospherical",
                  "group": {"simple_factors": [{"type": "A", "rank": 2}, ..],
                            "torus_rank": r},
                  "marking": [[factor, node], ..],
                  "fiber_fan": {"dim": .., "rays": [[..]], "maximal_cones": [[..]]},
                  "embedding": [{"fw": [..], "torus": [..]}, ..]}
  bundle         {"kind": "bundle", "base": {"simple_factors": [..]},
                  "marking": [[factor, node], ..],
                  "line_bundles": [[coeffs in marking order], ..]}
  bundle_batch   {"kind": "bundle_batch", "specs": [bundle objects without "kind"]}

B_2 factors are accepted and normalized to C_2; marking nodes and embedding
coordinates written against the raw B_2 numbering are converted here, so the
rest of the library only ever sees the normalized convention.

JSON reports are rendered with sorted keys and two-space indentation, so a
parsed report re-rendered by the same function is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bundles import BundleReport, BundleSpec
from .errors import SchemaError
from .fan import DemazureRoot, Fan, ToricAutReport
from .horospherical import (
    AutReport,
    Extendability,
    HorosphericalDatum,
)
from .rootsystem import ParabolicMarking, RootSystemSpec, Weight

KINDS = ("fan", "horospherical", "bundle", "bundle_batch")


@dataclass(frozen=True)
class InputDocument:
    kind: str
    payload: dict


def _expect_object(value, required: tuple[str, ...], where: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(f"{where}: expected an object")
    missing = [k for k in required if k not in value]
    if missing:
        raise SchemaError(f"{where}: missing field(s) {missing}")
    unknown = [k for k in value if k not in required]
    if unknown:
        raise SchemaError(f"{where}: unknown field(s) {unknown}")
    return value


def _expect_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: expected an integer")
    return value


def _expect_array(value, where: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected an array")
    return value


def _int_vector(value, where: str) -> list[int]:
    return [_expect_int(v, where) for v in _expect_array(value, where)]


def _fan_fragment(value, where: str) -> dict:
    obj = _expect_object(value, ("dim", "rays", "maximal_cones"), where)
    dim = _expect_int(obj["dim"], f"{where}.dim")
    if dim < 0:
        raise SchemaError(f"{where}.dim: must be non-negative")
    rays = [_int_vector(r, f"{where}.rays[{i}]") for i, r in enumerate(_expect_array(obj["rays"], f"{where}.rays"))]
    for i, r in enumerate(rays):
        if len(r) != dim:
            raise SchemaError(f"{where}.rays[{i}]: expected {dim} coordinates")
    cones = [
        _int_vector(c, f"{where}.maximal_cones[{i}]")
        for i, c in enumerate(_expect_array(obj["maximal_cones"], f"{where}.maximal_cones"))
    ]
    return {"dim": dim, "rays": rays, "maximal_cones": cones}


def _group_fragment(value, where: str, torus_allowed: bool) -> dict:
    keys = ("simple_factors", "torus_rank") if torus_allowed else ("simple_factors",)
    if not torus_allowed and isinstance(value, dict) and value.get("torus_rank") == 0:
        # a redundant explicit zero is harmless
        keys = ("simple_factors", "torus_rank")
    obj = _expect_object(value, keys, where)
    factors = []
    for i, f in enumerate(_expect_array(obj["simple_factors"], f"{where}.simple_factors")):
        fo = _expect_object(f, ("type", "rank"), f"{where}.simple_factors[{i}]")
        if not isinstance(fo["type"], str):
            raise SchemaError(f"{where}.simple_factors[{i}].type: expected a string")
        factors.append((fo["type"], _expect_int(fo["rank"], f"{where}.simple_factors[{i}].rank")))
    torus = _expect_int(obj.get("torus_rank", 0), f"{where}.torus_rank")
    return {"simple_factors": factors, "torus_rank": torus}


def _marking_fragment(value, where: str) -> list[tuple[int, int]]:
    out = []
    for i, pair in enumerate(_expect_array(value, where)):
        vec = _int_vector(pair, f"{where}[{i}]")
        if len(vec) != 2:
            raise SchemaError(f"{where}[{i}]: expected [factor, node]")
        out.append((vec[0], vec[1]))
    return out


def _bundle_fragment(value, where: str, with_kind: bool) -> dict:
    keys = ("kind", "base", "marking", "line_bundles") if with_kind else ("base", "marking", "line_bundles")
    obj = _expect_object(value, keys, where)
    return {
        "base": _group_fragment(obj["base"], f"{where}.base", torus_allowed=False),
        "marking": _marking_fragment(obj["marking"], f"{where}.marking"),
        "line_bundles": [
            _int_vector(lb, f"{where}.line_bundles[{i}]")
            for i, lb in enumerate(_expect_array(obj["line_bundles"], f"{where}.line_bundles"))
        ],
    }


def parse_document(obj) -> InputDocument:
    """Shape-check a parsed JSON object; raises SchemaError on any mismatch."""
    if not isinstance(obj, dict):
        raise SchemaError("top level: expected an object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"kind must be one of {list(KINDS)}, got {kind!r}")
    if kind == "fan":
        _expect_object(obj, ("kind", "dim", "rays", "maximal_cones"), "fan")
        payload = _fan_fragment({k: v for k, v in obj.items() if k != "kind"}, "fan")
    elif kind == "horospherical":
        o = _expect_object(obj, ("kind", "group", "marking", "fiber_fan", "embedding"), "horospherical")
        emb = []
        for i, w in enumerate(_expect_array(o["embedding"], "embedding")):
            wo = _expect_object(w, ("fw", "torus"), f"embedding[{i}]")
            emb.append(
                {
                    "fw": _int_vector(wo["fw"], f"embedding[{i}].fw"),
                    "torus": _int_vector(wo["torus"], f"embedding[{i}].torus"),
                }
            )
        payload = {
            "group": _group_fragment(o["group"], "group", torus_allowed=True),
            "marking": _marking_fragment(o["marking"], "marking"),
            "fiber_fan": _fan_fragment(o["fiber_fan"], "fiber_fan"),
            "embedding": emb,
        }
    elif kind == "bundle":
        payload = _bundle_fragment(obj, "bundle", with_kind=True)
    else:
        o = _expect_object(obj, ("kind", "specs"), "bundle_batch")
        payload = {
            "specs": [
                _bundle_fragment(s, f"specs[{i}]", with_kind=False)
                for i, s in enumerate(_expect_array(o["specs"], "specs"))
            ]
        }
    return InputDocument(kind, payload)


def parse_text(text: str) -> InputDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return parse_document(obj)


# -- construction of domain objects (semantic errors surface here) -----------


def build_fan(payload: dict) -> Fan:
    return Fan(payload["dim"], tuple(map(tuple, payload["rays"])), tuple(map(tuple, payload["maximal_cones"])))


def _build_spec(group: dict) -> RootSystemSpec:
    return RootSystemSpec(tuple(group["simple_factors"]), group["torus_rank"])


def build_datum(payload: dict) -> HorosphericalDatum:
    spec = _build_spec(payload["group"])
    marking = ParabolicMarking.of(
        spec, [(f, spec.to_internal_node(f, n)) for f, n in payload["marking"]]
    )
    emb = tuple(
        Weight(spec.to_internal_fw(w["fw"]), tuple(w["torus"])) for w in payload["embedding"]
    )
    return HorosphericalDatum(spec, marking, build_fan(payload["fiber_fan"]), emb)


def build_bundle(payload: dict) -> BundleSpec:
    spec = _build_spec(payload["base"])
    marking = tuple((f, spec.to_internal_node(f, n)) for f, n in payload["marking"])
    return BundleSpec(spec, marking, tuple(map(tuple, payload["line_bundles"])))


def build_bundle_batch(payload: dict) -> list[BundleSpec]:
    return [build_bundle(s) for s in payload["specs"]]


# -- report serialization -----------------------------------------------------


def dump_json(obj) -> str:
    """Canonical rendering: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def dump_json_line(obj) -> str:
    """One-object-per-line rendering used by batch mode."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def fan_report_obj(fan: Fan, roots, semisimple, report: ToricAutReport) -> dict:
    ss = {r.m for r in semisimple}
    return {
        "kind": "fan_report",
        "dim": fan.dim,
        "roots": [
            {
                "m": list(r.m),
                "ray_index": r.ray_index,
                "kind": "semisimple" if r.m in ss else "unipotent",
            }
            for r in roots
        ],
        "n_roots": len(roots),
        "n_semisimple": report.n_semisimple,
        "n_unipotent": report.n_unipotent,
        "dim_aut": report.dim_aut,
        "reductive": report.reductive,
    }


def fan_report_text(fan: Fan, roots, semisimple, report: ToricAutReport) -> list[str]:
    ss = {r.m for r in semisimple}
    lines = [f"fan: dim {fan.dim}, {len(fan.rays)} rays, {len(fan.maximal_cones)} maximal cones"]
    lines.append(f"demazure roots ({len(roots)}):")
    for r in roots:
        kind = "semisimple" if r.m in ss else "unipotent"
        lines.append(f"  m = {_fmt_vec(r.m)}   ray {r.ray_index}   {kind}")
    lines.append(f"semisimple: {report.n_semisimple}   unipotent: {report.n_unipotent}")
    lines.append(f"dim Aut^0(X) = dim S + |R| = {fan.dim} + {len(roots)} = {report.dim_aut}")
    lines.append(f"reductive: {_fmt_bool(report.reductive)}")
    return lines


def weight_obj(w: Weight) -> dict:
    return {"fw": list(w.fw), "torus": list(w.torus)}


def aut_report_obj(report: AutReport, ext: Extendability) -> dict:
    return {
        "kind": "aut_report",
        "dim_aut_gp": report.dim_aut_gp,
        "g_surjects": report.g_surjects,
        "dim_s": report.dim_s,
        "roots": [
            {
                "m_fiber": list(r.m_fiber),
                "m_ambient": weight_obj(r.m_ambient),
                "kind": r.kind,
                "v_dim": r.v_dim,
            }
            for r in report.roots
        ],
        "n_semisimple": report.n_semisimple,
        "unipotent_dims": list(report.unipotent_dims),
        "dim_aut_total": report.dim_aut_total,
        "dim_unipotent_radical": report.dim_unipotent_radical,
        "dim_levi": report.dim_levi,
        "reductive": report.reductive,
        "levi_note": report.levi_note,
        "extends": [
            {"m": list(e.m_fiber), "g_normalized": e.g_normalized} for e in ext.extends
        ],
        "does_not_extend": [list(m) for m in ext.does_not_extend],
    }


def aut_report_text(report: AutReport, ext: Extendability) -> list[str]:
    lines = [
        f"base: dim Aut^0(G/P) = {report.dim_aut_gp} (G surjects onto it: {_fmt_bool(report.g_surjects)})",
        f"fiber: dim S = {report.dim_s}",
        f"B+-roots ({len(report.roots)}):",
    ]
    for r in report.roots:
        lines.append(
            f"  m = {_fmt_vec(r.m_fiber)}  ->  fw {_fmt_vec(r.m_ambient.fw)} "
            f"torus {_fmt_vec(r.m_ambient.torus)}   {r.kind}   dim V(m) = {r.v_dim}"
        )
    lines.append("dim Aut^0(X) = dim Aut^0(G/P) + dim S + |S+| + sum dim V(m)")
    lines.append(
        f"{report.dim_aut_total} = {report.dim_aut_gp} + {report.dim_s} "
        f"+ {report.n_semisimple} + {sum(report.unipotent_dims)}"
    )
    lines.append(f"unipotent radical: dim {report.dim_unipotent_radical}")
    lines.append(f"levi: dim {report.dim_levi}")
    lines.append(f"reductive: {_fmt_bool(report.reductive)}")
    lines.append(f"note: {report.levi_note}")
    if ext.extends:
        lines.append("extendable fiber roots:")
        for e in ext.extends:
            lines.append(f"  m = {_fmt_vec(e.m_fiber)}   G-normalized: {_fmt_bool(e.g_normalized)}")
    if ext.does_not_extend:
        lines.append("non-extendable fiber roots:")
        for m in ext.does_not_extend:
            lines.append(f"  m = {_fmt_vec(m)}")
    return lines


def bundle_report_obj(report: BundleReport) -> dict:
    return {
        "kind": "bundle_report",
        "pair_roots": [
            {"i": p.i, "j": p.j, "nef": p.nef, "iso": p.iso, "v_dim": p.v_dim}
            for p in report.pair_roots
        ],
        "reductive": report.reductive,
        "dim_aut_total": report.dim_aut_total,
        "fano": report.fano,
        "k_unstable": report.k_unstable,
        "base_fano_index": report.base_fano_index,
    }


def bundle_report_text(report: BundleReport) -> list[str]:
    lines = ["pairs (chi_i - chi_j):"]
    for p in report.pair_roots:
        extra = f"   dim V = {p.v_dim}" if p.nef else ""
        lines.append(
            f"  chi_{p.i} - chi_{p.j}: nef {_fmt_bool(p.nef)} iso {_fmt_bool(p.iso)}{extra}"
        )
    lines.append(f"reductive: {_fmt_bool(report.reductive)}")
    lines.append(f"dim Aut^0(X) = {report.dim_aut_total}")
    lines.append(f"fano: {report.fano}")
    lines.append(f"k_unstable: {report.k_unstable}")
    lines.append(f"base fano index: {report.base_fano_index}")
    return lines


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"
