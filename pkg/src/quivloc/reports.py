"""Aggregate JSON-ready reports used by the command line."""

from __future__ import annotations

from .localization import LocalizationOracle, as_params
from .moment import DEFAULT_BUDGET, is_flat, leaves_on_wall, wall_kind
from .quiver import Quiver, as_vector, positive_roots_upto, require_supported
from .serialize import (
    family_to_json,
    flatness_to_json,
    fmt_rational,
    reptype_to_json,
    root_to_json,
    slice_transfer_to_json,
    verdict_to_json,
)
from .walls import DominantInstance, dominant_instance, singular_hyperplanes, verify_star


def _dominantized(inst: DominantInstance) -> dict:
    return {
        "v": list(inst.v),
        "w": list(inst.w),
        "chain": list(inst.chain),
        "substituted": inst.substituted,
        "empty": inst.empty,
    }


def analyze_report(quiver: Quiver, v, w, budget: int = DEFAULT_BUDGET) -> dict:
    cls = require_supported(quiver)
    v = as_vector(quiver, v, "v")
    w = as_vector(quiver, w, "w")
    flat = is_flat(quiver, v, w, budget=budget)
    inst = dominant_instance(quiver, v, w)
    families = singular_hyperplanes(quiver, v, w, budget=budget) if flat.flat else []
    return {
        "quiver": quiver.to_json(),
        "classification": cls.label,
        "v": list(v),
        "w": list(w),
        "dominantized": _dominantized(inst),
        "flatness": flatness_to_json(flat),
        "walls": [family_to_json(f) for f in families],
        "verify_star": verify_star(families) if flat.flat else None,
    }


def decide_report(quiver: Quiver, v, w, lam, theta, budget: int = DEFAULT_BUDGET) -> dict:
    cls = require_supported(quiver)
    oracle = LocalizationOracle(quiver, v, w, budget=budget)
    lam = as_params(quiver, lam, "lambda")
    theta = as_params(quiver, theta, "theta")
    verdicts = {
        "derived": oracle.derived(lam),
        "gamma_exact": oracle.gamma_exact(lam, theta),
        "abelian": oracle.abelian(lam, theta),
        "o_regular": oracle.o_regular(lam),
    }
    return {
        "classification": cls.label,
        "v": list(v),
        "w": list(w),
        "lambda": [fmt_rational(x) for x in lam],
        "theta": [fmt_rational(x) for x in theta],
        "dominantized": _dominantized(oracle.instance),
        "verdicts": {k: verdict_to_json(x) for k, x in verdicts.items()},
        "slice_transfer": slice_transfer_to_json(oracle.slice_transfer(lam, theta)),
    }


def leaves_report(quiver: Quiver, v, w, normals=None, budget: int = DEFAULT_BUDGET) -> dict:
    """Leaves on the given wall normals, or on every classical wall."""
    inst = dominant_instance(quiver, v, w)
    if inst.empty:
        return {"dominantized": _dominantized(inst), "leaves": []}
    if normals is None:
        normals = [f.normal for f in singular_hyperplanes(quiver, v, w, budget=budget)]
    out = []
    for b in normals:
        types = leaves_on_wall(quiver, inst.v, inst.w, b)
        out.append({"normal": list(b), "kind": wall_kind(quiver, b), "types": [reptype_to_json(t) for t in types]})
    return {"dominantized": _dominantized(inst), "leaves": out}


def roots_report(quiver: Quiver, bound) -> dict:
    return {"roots": [root_to_json(r) for r in positive_roots_upto(quiver, bound)]}
