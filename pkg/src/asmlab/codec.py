"""Versioned JSON payloads for every object kind."""

from __future__ import annotations

import json
from typing import Any

from .asm import Asm, AsmError
from .fpl import EdgeColoring, LinkPattern, validate_fpl
from .height import HeightFn, HeightMatrix, InvalidHeight
from .lattice import LatticeError
from .sixvertex import IceState, validate_ice, vertex_types

SCHEMA = "asmlab/1"
KINDS = ("asm", "sixvertex", "height", "fpl", "linkpattern")


class PayloadError(ValueError):
    pass


def kind_of(obj: Any) -> str:
    if isinstance(obj, Asm):
        return "asm"
    if isinstance(obj, IceState):
        return "sixvertex"
    if isinstance(obj, HeightMatrix):
        return "height"
    if isinstance(obj, EdgeColoring):
        return "fpl"
    if isinstance(obj, LinkPattern):
        return "linkpattern"
    raise PayloadError(f"no payload format for {type(obj).__name__}")


def payload(obj: Any) -> dict:
    """The object's JSON fields, without the envelope."""
    kind = kind_of(obj)
    if kind == "sixvertex":
        out = obj.to_json()
        out["types"] = [[t.value for t in row] for row in vertex_types(obj)]
        return out
    if kind == "fpl":
        out = obj.to_json()
        out["boundary_word"] = obj.boundary_word()
        return out
    if kind == "height":
        return {"m": obj.m, "n": obj.n, "h": obj.to_lists()}
    return obj.to_json()


def envelope(kind: str, body: dict) -> dict:
    return {"schema": SCHEMA, "kind": kind, **body}


def dump(obj: Any) -> dict:
    return envelope(kind_of(obj), payload(obj))


def to_text(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def load(data: dict, kind: str | None = None) -> Any:
    """Validate a payload and build the object it describes."""
    if not isinstance(data, dict):
        raise PayloadError("payload must be a JSON object")
    schema = data.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise PayloadError(f"unsupported schema {schema!r}")
    kind = kind or data.get("kind")
    if kind not in KINDS:
        raise PayloadError(f"unknown or missing kind {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        if kind == "asm":
            return Asm.from_json(data)
        if kind == "sixvertex":
            raw = IceState.from_json(data)
            return validate_ice(raw.spec, raw.bits)
        if kind == "height":
            h = data["h"]
            if len(h) == len(h[0]):
                return HeightFn.from_json(data)
            return HeightMatrix(tuple(tuple(map(int, r)) for r in h))
        if kind == "fpl":
            return validate_fpl(EdgeColoring.from_json(data))
        return LinkPattern.from_json(data)
    except (KeyError, TypeError, IndexError) as exc:
        raise PayloadError(f"malformed {kind} payload: {exc}") from exc
    except (AsmError, InvalidHeight, LatticeError, ValueError) as exc:
        raise PayloadError(f"invalid {kind}: {exc}") from exc


def loads(text: str, kind: str | None = None) -> Any:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PayloadError(f"not valid JSON: {exc}") from exc
    return load(data, kind)
