"""JSON encodings of reports and the schemas they follow.

Rationals are written as ``"p/q"`` strings (integers as ``"p"``) so they
survive a round trip bit-exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .localization import SliceTransferReport, Verdict
from .moment import FlatnessReport, RepType
from .quiver import Root, RootKind
from .slices import SliceData
from .walls import HyperplaneFamily, Wall


def fmt_rational(x) -> str:
    return str(Fraction(x))


def parse_rational(text, field: str = "value") -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{field}: cannot parse {text!r} as a rational p/q") from None


def root_to_json(root: Root) -> dict:
    return {"coords": list(root.coords), "kind": root.kind.value}


def reptype_to_json(rt: RepType) -> dict:
    return {
        "v0": list(rt.v0),
        "summands": [{"root": list(r), "multiplicity": k} for r, k in rt.summands],
        "minimal": rt.minimal,
    }


def reptype_from_json(data: dict) -> RepType:
    return RepType(
        tuple(data["v0"]),
        tuple((tuple(s["root"]), s["multiplicity"]) for s in data["summands"]),
        minimal=data.get("minimal", False),
    )


def flatness_to_json(rep: FlatnessReport) -> dict:
    return {
        "flat": rep.flat,
        "fast_path": rep.fast_path,
        "witness": reptype_to_json(rep.witness) if rep.witness else None,
    }


def family_to_json(fam: HyperplaneFamily) -> dict:
    wall = fam.wall
    return {
        "normal": list(wall.normal),
        "kind": wall.kind.value,
        "m": wall.m,
        "w_bar": wall.w_bar,
        "v_bar": wall.v_bar,
        "singular_offsets": [fmt_rational(s) for s in fam.singular_offsets],
        "shift_modulus": fam.shift_modulus,
    }


def family_from_json(data: dict) -> HyperplaneFamily:
    wall = Wall(tuple(data["normal"]), RootKind(data["kind"]), data["m"], data["w_bar"], data["v_bar"])
    offsets = tuple(parse_rational(s, "singular_offsets") for s in data["singular_offsets"])
    return HyperplaneFamily(wall, offsets, data["shift_modulus"])


def walls_report(families) -> dict:
    return {"walls": [family_to_json(f) for f in families]}


def slice_to_json(sd: SliceData) -> dict:
    return sd.to_json()


def verdict_to_json(v: Verdict) -> dict:
    return {
        "question": v.question,
        "holds": v.holds,
        "confidence": v.confidence.value,
        "basis": v.basis,
        "walls": [
            {
                "normal": list(d.normal),
                "pairing": fmt_rational(d.pairing),
                "relevant": d.relevant,
                "threshold": None if d.threshold is None else fmt_rational(d.threshold),
                "side": d.side,
                "ok": d.ok,
            }
            for d in v.walls
        ],
    }


def slice_transfer_to_json(rep: SliceTransferReport) -> dict:
    return {
        "ambient_holds": rep.ambient_holds,
        "consistent": rep.consistent,
        "slices": [
            {
                "normal": list(e.normal),
                "slice_quiver": e.slice_quiver,
                "v_bar": e.v_bar,
                "w_bar": e.w_bar,
                "eta_lambda": fmt_rational(e.eta_lambda),
                "eta_theta": fmt_rational(e.eta_theta),
                "holds": e.holds,
            }
            for e in rep.slices
        ],
        "violations": [list(n) for n in rep.violations],
    }


# JSON Schema (draft 2020-12) for every published report

_INT_VEC = {"type": "array", "items": {"type": "integer"}}
_NONNEG_VEC = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_RATIONAL = {"type": "string", "pattern": r"^-?\d+(/[1-9]\d*)?$"}

QUIVER_SCHEMA = {
    "type": "object",
    "required": ["vertices", "arrows"],
    "properties": {
        "vertices": {"type": "integer", "minimum": 1},
        "arrows": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
        },
    },
}

SLICE_SCHEMA = {
    "type": "object",
    "required": ["vertices", "arrows", "v_bar", "w_bar", "eta"],
    "properties": {
        **QUIVER_SCHEMA["properties"],
        "v_bar": _NONNEG_VEC,
        "w_bar": _NONNEG_VEC,
        "eta": {"type": "array", "items": _INT_VEC},
    },
}

WALL_SCHEMA = {
    "type": "object",
    "required": ["normal", "kind", "m", "w_bar", "v_bar", "singular_offsets", "shift_modulus"],
    "properties": {
        "normal": _NONNEG_VEC,
        "kind": {"enum": ["real", "imaginary"]},
        "m": {"type": "integer", "minimum": 1},
        "w_bar": {"type": "integer", "minimum": 1},
        "v_bar": {"type": "integer", "minimum": 1},
        "singular_offsets": {"type": "array", "items": _RATIONAL, "minItems": 1},
        "shift_modulus": {"type": "integer", "minimum": 1},
    },
}

WALLS_SCHEMA = {"type": "object", "required": ["walls"], "properties": {"walls": {"type": "array", "items": WALL_SCHEMA}}}

REPTYPE_SCHEMA = {
    "type": "object",
    "required": ["v0", "summands"],
    "properties": {
        "v0": _INT_VEC,
        "summands": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["root", "multiplicity"],
                "properties": {"root": _NONNEG_VEC, "multiplicity": {"type": "integer", "minimum": 1}},
            },
        },
        "minimal": {"type": "boolean"},
    },
}

VERDICT_SCHEMA = {
    "type": "object",
    "required": ["question", "holds", "confidence", "basis", "walls"],
    "properties": {
        "question": {"type": "string"},
        "holds": {"type": "boolean"},
        "confidence": {"enum": ["proven", "conjectural"]},
        "basis": {"type": "string"},
        "walls": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["normal", "pairing", "relevant"],
                "properties": {
                    "normal": _NONNEG_VEC,
                    "pairing": _RATIONAL,
                    "relevant": {"type": "boolean"},
                    "threshold": {"anyOf": [_RATIONAL, {"type": "null"}]},
                    "side": {"enum": ["+", "-", None]},
                    "ok": {"type": "boolean"},
                },
            },
        },
    },
}

_DOMINANTIZED = {
    "type": "object",
    "required": ["v", "w", "chain", "substituted", "empty"],
    "properties": {
        "v": _INT_VEC,
        "w": _NONNEG_VEC,
        "chain": _NONNEG_VEC,
        "substituted": {"type": "boolean"},
        "empty": {"type": "boolean"},
    },
}

ANALYZE_SCHEMA = {
    "type": "object",
    "required": ["quiver", "classification", "v", "w", "dominantized", "flatness", "walls", "verify_star"],
    "properties": {
        "quiver": QUIVER_SCHEMA,
        "classification": {"type": "string"},
        "v": _NONNEG_VEC,
        "w": _NONNEG_VEC,
        "dominantized": _DOMINANTIZED,
        "flatness": {
            "type": "object",
            "required": ["flat", "fast_path", "witness"],
            "properties": {
                "flat": {"type": "boolean"},
                "fast_path": {"type": "boolean"},
                "witness": {"anyOf": [REPTYPE_SCHEMA, {"type": "null"}]},
            },
        },
        "walls": {"type": "array", "items": WALL_SCHEMA},
        "verify_star": {"type": ["boolean", "null"]},
    },
}

SLICE_TRANSFER_SCHEMA = {
    "type": "object",
    "required": ["ambient_holds", "consistent", "slices", "violations"],
    "properties": {
        "ambient_holds": {"type": "boolean"},
        "consistent": {"type": "boolean"},
        "slices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["normal", "slice_quiver", "v_bar", "w_bar", "eta_lambda", "eta_theta", "holds"],
                "properties": {
                    "normal": _NONNEG_VEC,
                    "slice_quiver": {"enum": ["A1", "jordan"]},
                    "v_bar": {"type": "integer"},
                    "w_bar": {"type": "integer"},
                    "eta_lambda": _RATIONAL,
                    "eta_theta": _RATIONAL,
                    "holds": {"type": "boolean"},
                },
            },
        },
        "violations": {"type": "array", "items": _NONNEG_VEC},
    },
}

DECIDE_SCHEMA = {
    "type": "object",
    "required": ["classification", "v", "w", "lambda", "theta", "dominantized", "verdicts", "slice_transfer"],
    "properties": {
        "classification": {"type": "string"},
        "v": _NONNEG_VEC,
        "w": _NONNEG_VEC,
        "lambda": {"type": "array", "items": _RATIONAL},
        "theta": {"type": "array", "items": _RATIONAL},
        "dominantized": _DOMINANTIZED,
        "verdicts": {
            "type": "object",
            "required": ["derived", "gamma_exact", "abelian", "o_regular"],
            "additionalProperties": VERDICT_SCHEMA,
        },
        "slice_transfer": SLICE_TRANSFER_SCHEMA,
    },
}

ROOTS_SCHEMA = {
    "type": "object",
    "required": ["roots"],
    "properties": {
        "roots": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coords", "kind"],
                "properties": {"coords": _NONNEG_VEC, "kind": {"enum": ["real", "imaginary"]}},
            },
        }
    },
}

LEAVES_SCHEMA = {
    "type": "object",
    "required": ["leaves"],
    "properties": {
        "leaves": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["normal", "kind", "types"],
                "properties": {
                    "normal": _NONNEG_VEC,
                    "kind": {"enum": ["real", "imaginary"]},
                    "types": {"type": "array", "items": REPTYPE_SCHEMA},
                },
            },
        }
    },
}
