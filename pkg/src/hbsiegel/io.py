"""JSON (de)serialisation. Every rational travels as an exact ``"num/den"`` string."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InputError
from .linalg import RatMatrix, format_fraction, parse_fraction
from .modembed import HBPoint, SiegelPoint
from .numfield import FieldElement, NumberField
from .symplectic import HBMatrix
from .torsion import HBTorsionPoint, TorsionPoint


def _rats(values, what: str):
    try:
        return [parse_fraction(v) for v in values]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational in {what}: {exc}") from None


def read_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def field_from_json(obj: dict) -> NumberField:
    if not isinstance(obj, dict) or "minpoly" not in obj or "basis" not in obj:
        raise InputError('field description needs "minpoly" and "basis"')
    return NumberField(_rats(obj["minpoly"], "minpoly"),
                       [_rats(v, "basis") for v in obj["basis"]])


def field_to_json(nf: NumberField) -> dict:
    return {"minpoly": [format_fraction(c) for c in nf.minpoly],
            "basis": [vec_to_json(e.coords) for e in nf.basis]}


def vec_to_json(v) -> list[str]:
    return [format_fraction(x) for x in v]


def matrix_to_json(m: RatMatrix) -> list[list[str]]:
    return [vec_to_json(r) for r in m.rows]


def matrix_from_json(rows) -> RatMatrix:
    try:
        return RatMatrix([_rats(r, "matrix") for r in rows])
    except ValueError as exc:
        raise InputError(str(exc)) from None


def element_from_json(nf: NumberField, coords) -> FieldElement:
    c = _rats(coords, "field element")
    if len(c) != nf.degree:
        raise InputError(f"field element needs {nf.degree} coordinates")
    return nf.element(c)


def hbmatrix_from_json(nf: NumberField, obj: dict) -> HBMatrix:
    try:
        return HBMatrix(*(element_from_json(nf, obj[k]) for k in "abcd"))
    except KeyError as exc:
        raise InputError(f"HB matrix is missing entry {exc}") from None


def hbmatrix_to_json(h: HBMatrix) -> dict:
    return {k: vec_to_json(x.coords) for k, x in zip("abcd", h.entries())}


def hbpoint_from_json(nf: NumberField, obj: dict) -> HBPoint:
    return HBPoint(element_from_json(nf, obj["re"]), element_from_json(nf, obj["im"]),
                   int(obj.get("orientation", 1)))


def hbpoint_to_json(tau: HBPoint) -> dict:
    return {"re": vec_to_json(tau.re.coords), "im": vec_to_json(tau.im.coords)}


def siegel_to_json(tau: SiegelPoint) -> dict:
    return {"re": matrix_to_json(tau.re), "im": matrix_to_json(tau.im)}


def siegel_from_json(obj: dict) -> SiegelPoint:
    return SiegelPoint(matrix_from_json(obj["re"]), matrix_from_json(obj["im"]),
                       int(obj.get("orientation", 1)))


def hbtorsion_from_json(nf: NumberField, obj: dict) -> HBTorsionPoint:
    return HBTorsionPoint(element_from_json(nf, obj["x"]), element_from_json(nf, obj["y"]),
                          int(obj["n"]))


def hbtorsion_to_json(t: HBTorsionPoint) -> dict:
    return {"x": vec_to_json(t.x.coords), "y": vec_to_json(t.y.coords), "n": t.n}


def torsion_to_json(t: TorsionPoint) -> list[str]:
    return vec_to_json(t.v)


def dumps(record: dict) -> str:
    """Canonical one-line JSON: sorted keys, no whitespace variance."""
    return json.dumps(record, sort_keys=True, separators=(",", ":"))
