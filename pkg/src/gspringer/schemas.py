"""JSON schemas for the documents read and written by the command line."""
from __future__ import annotations

import jsonschema

_INT_MATRIX = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}

GROUP = {
    "type": "object",
    "description": "A finite group, by multiplication table or by generating permutations.",
    "oneOf": [
        {"required": ["table"], "properties": {"table": _INT_MATRIX}},
        {"required": ["generators"], "properties": {"generators": _INT_MATRIX}},
    ],
}

COCYCLE = {
    "type": "object",
    "description": "A normalized 2-cocycle with values exp(2 pi i k / modulus), stored as exponents k.",
    "required": ["modulus", "table"],
    "properties": {"modulus": {"type": "integer", "minimum": 1}, "table": _INT_MATRIX},
}

TWISTED_GROUP = {
    "type": "object",
    "description": "Input of twisted-irreps: a group and an optional cocycle (trivial if absent).",
    "required": ["group"],
    "properties": {"group": GROUP, "cocycle": COCYCLE},
}

ORBIT = {
    "type": "object",
    "description": "A nilpotent orbit: a partition (classical, tag I/II for very even type D) or a Bala-Carter label.",
    "required": ["family"],
    "properties": {
        "family": {"enum": ["A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2"]},
        "rank": {"type": "integer", "minimum": 1},
        "partition": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "tag": {"enum": ["I", "II"]},
        "bala_carter": {"type": "string"},
    },
}

PARABOLIC_PAIR = {
    "type": "object",
    "description": "A pair (X, Omega): simple roots X in Bourbaki numbering and generators of Omega as permutations of 1..rank.",
    "required": ["X"],
    "properties": {
        "X": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "omega": _INT_MATRIX,
    },
}

EXTQUOT = {
    "type": "object",
    "description": (
        "A group action with twisted quotient data. action[g][x] is g.x. Cocycle tables are indexed by "
        "the sorted stabilizer of x. theta entries give the global indices of the images of the sorted "
        "stabilizer and scalar exponents; missing entries mean conjugation by gamma. Alternatively 'lifts' "
        "gives cocycles at basepoints, transported along chosen elements sigma."
    ),
    "required": ["group", "action"],
    "properties": {
        "group": GROUP,
        "action": _INT_MATRIX,
        "modulus": {"type": "integer", "minimum": 1},
        "cocycles": {
            "type": "array",
            "items": {"type": "object", "required": ["x", "table"],
                      "properties": {"x": {"type": "integer"}, "table": _INT_MATRIX}},
        },
        "theta": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["gamma", "x", "map"],
                "properties": {
                    "gamma": {"type": "integer"},
                    "x": {"type": "integer"},
                    "map": {"type": "array", "items": {"type": "integer"}},
                    "scalars": {"type": "array", "items": {"type": "integer"}},
                    "inner_witness": {"type": "integer"},
                },
            },
        },
        "lifts": {
            "type": "object",
            "required": ["base_cocycles"],
            "properties": {
                "base_cocycles": {
                    "type": "array",
                    "items": {"type": "object", "required": ["x", "table"],
                              "properties": {"x": {"type": "integer"}, "modulus": {"type": "integer"},
                                             "table": _INT_MATRIX}},
                },
                "sigma": {"type": "object", "additionalProperties": {"type": "integer"}},
            },
        },
    },
}

_FRACTION = {"type": ["string", "integer"], "description": "a rational number such as \"1/2\""}

CATALOG = {
    "type": "object",
    "description": (
        "Synthetic cuspidal-datum catalog. Each entry is one inertial class: a lattice of the given rank "
        "with one integer matrix per element of the group W, labels with isotropy generators (torsion "
        "points of the torus, coordinates mod 1), an optional central-character tag and shift, the action "
        "of W on labels, and optional cocycles on label stabilizers (sorted-stabilizer indexing)."
    ),
    "required": ["entries"],
    "properties": {
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["key", "group", "points"],
                "properties": {
                    "key": {"type": "string"},
                    "levi": {"type": "string"},
                    "rank": {"type": "integer", "minimum": 0},
                    "group": GROUP,
                    "lattice_action": {"type": "array", "items": _INT_MATRIX},
                    "points": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["label"],
                            "properties": {
                                "label": {"type": "string"},
                                "isotropy": {"type": "array", "items": {"type": "array", "items": _FRACTION}},
                                "tag": {"type": "string"},
                                "shift": {"type": "string"},
                            },
                        },
                    },
                    "point_action": _INT_MATRIX,
                    "cocycles": {
                        "type": "array",
                        "items": {"type": "object", "required": ["label", "modulus", "table"],
                                  "properties": {"label": {"type": "string"}, "modulus": {"type": "integer"},
                                                 "table": _INT_MATRIX}},
                    },
                    "normal": {"type": "array", "items": {"type": "integer"}},
                },
            },
        }
    },
}

SCHEMAS = {
    "group": GROUP,
    "cocycle": COCYCLE,
    "twisted-group": TWISTED_GROUP,
    "orbit": ORBIT,
    "parabolic-pair": PARABOLIC_PAIR,
    "extquot": EXTQUOT,
    "catalog": CATALOG,
}


def check(name: str, document) -> None:
    """Raise jsonschema.ValidationError if ``document`` does not match schema ``name``."""
    jsonschema.validate(document, SCHEMAS[name])
