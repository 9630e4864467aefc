"""JSON encoding of eigensystems (schema version 1)."""

from __future__ import annotations

import json

import jsonschema

from .eigensys import DirichletCharacter, Eigensystem
from .scalars import decode_scalar, encode_scalar

_RATIONAL = {"type": "string", "pattern": r"^\s*-?[0-9]+(\s*/\s*[0-9]*[1-9][0-9]*)?\s*$"}
_QUAD = {
    "type": "object",
    "required": ["t", "d", "a", "b"],
    "properties": {
        "t": _RATIONAL,
        "d": _RATIONAL,
        "a": _RATIONAL,
        "b": _RATIONAL,
        "branch": {"enum": [0, 1]},
    },
    "additionalProperties": False,
}
_SCALAR = {"oneOf": [_RATIONAL, _QUAD]}

CHARACTER_SCHEMA = {
    "type": "object",
    "required": ["modulus"],
    "properties": {
        "modulus": {"type": "integer", "minimum": 1},
        "values": {"type": "object", "patternProperties": {"^[0-9]+$": _RATIONAL}, "additionalProperties": False},
        "formal": {"type": "boolean"},
    },
    "additionalProperties": False,
}

EIGENSYSTEM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "group", "p", "tame_level", "weight", "spherical"],
    "properties": {
        "schema": {"const": 1},
        "group": {"enum": ["GL2", "GSp4"]},
        "p": {"type": "integer", "minimum": 2},
        "tame_level": {"type": "integer", "minimum": 1},
        "weight": {
            "oneOf": [
                {"type": "integer", "minimum": 1},
                {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
            ]
        },
        "nebentypus": CHARACTER_SCHEMA,
        "spherical": {
            "type": "object",
            "patternProperties": {"^[0-9]+$": {"type": "array", "items": _SCALAR, "minItems": 2, "maxItems": 3}},
            "additionalProperties": False,
        },
        "iwahori_p": {"type": "array", "items": _SCALAR, "minItems": 2, "maxItems": 3},
        "flags": {"type": "array", "items": {"type": "string"}},
        "id": {"type": "string"},
    },
    "additionalProperties": False,
}

DATASET_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "gsp4", "gl2"],
    "properties": {
        "schema": {"const": 1},
        "gsp4": {"type": "array", "items": EIGENSYSTEM_SCHEMA},
        "gl2": {"type": "array", "items": EIGENSYSTEM_SCHEMA},
    },
    "additionalProperties": False,
}


class SchemaError(ValueError):
    """Input does not match the schema; ``pointer`` locates the offending node."""

    def __init__(self, message: str, pointer: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


def _pointer(path) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


def validate(obj, schema=EIGENSYSTEM_SCHEMA):
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(obj), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        err = errors[0]
        raise SchemaError(err.message, _pointer(err.absolute_path))


def encode_character(eta: DirichletCharacter) -> dict:
    out = {"modulus": eta.modulus, "values": {str(a): encode_scalar(v) for a, v in eta.values if eta.modulus > 1}}
    if eta.formal:
        out["formal"] = True
    return out


def decode_character(obj) -> DirichletCharacter:
    vals = {int(a): decode_scalar(v) for a, v in obj.get("values", {}).items()}
    return DirichletCharacter(obj["modulus"], tuple(vals.items()), bool(obj.get("formal", False)))


def encode_eigensystem(x: Eigensystem) -> dict:
    out = {
        "schema": 1,
        "group": x.group,
        "p": x.p,
        "tame_level": x.tame_level,
        "weight": list(x.weight) if isinstance(x.weight, tuple) else x.weight,
        "spherical": {str(ell): [encode_scalar(v) for v in vals] for ell, vals in x.spherical},
    }
    if x.iwahori_p is not None:
        out["iwahori_p"] = [encode_scalar(v) for v in x.iwahori_p]
    if x.nebentypus is not None:
        out["nebentypus"] = encode_character(x.nebentypus)
    if x.flags:
        out["flags"] = list(x.flags)
    if x.id is not None:
        out["id"] = x.id
    return out


def decode_eigensystem(obj, check: bool = True) -> Eigensystem:
    if check:
        validate(obj)
    weight = obj["weight"]
    try:
        return _build(obj, weight)
    except (ValueError, TypeError) as exc:
        raise SchemaError(str(exc), "") from exc


def _build(obj, weight) -> Eigensystem:
    return Eigensystem(
        obj["group"],
        obj["p"],
        obj["tame_level"],
        tuple(weight) if isinstance(weight, list) else weight,
        tuple((int(ell), tuple(decode_scalar(v) for v in vals)) for ell, vals in obj["spherical"].items()),
        None if "iwahori_p" not in obj else tuple(decode_scalar(v) for v in obj["iwahori_p"]),
        None if "nebentypus" not in obj else decode_character(obj["nebentypus"]),
        tuple(obj.get("flags", ())),
        obj.get("id"),
    )


def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
