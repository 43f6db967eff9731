"""Matrix text files and JSON reports.

Matrix files hold one row per line with whitespace-separated entries, each an
integer (``-3``) or a fraction (``5/2``).  Blank lines and lines starting with
``#`` are skipped.  Vectors use the same format, written either as a single
row or as a single column.

Reports are JSON objects; every rational is written as a ``"p/q"`` string so
that nothing is ever rounded to a decimal.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .linalg import Matrix, Vector

SCHEMA_VERSION = "1.0"

_ENTRY = re.compile(r"[+-]?\d+(?:/\d+)?")
_RATIONAL_STR = re.compile(r"-?\d+/\d+")


class FormatError(ValueError):
    """A matrix or vector file could not be parsed."""


def parse_matrix_text(text: str, source: str = "<string>") -> Matrix:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for token in stripped.split():
            if not _ENTRY.fullmatch(token):
                raise FormatError(f"{source}:{lineno}: bad entry {token!r}")
            try:
                row.append(Fraction(token))
            except ZeroDivisionError:
                raise FormatError(f"{source}:{lineno}: zero denominator in {token!r}") from None
        if rows and len(row) != len(rows[0]):
            raise FormatError(f"{source}:{lineno}: expected {len(rows[0])} entries, got {len(row)}")
        rows.append(row)
    if not rows:
        raise FormatError(f"{source}: no matrix rows")
    return Matrix(rows)


def parse_vector_text(text: str, source: str = "<string>") -> Vector:
    M = parse_matrix_text(text, source)
    if M.m == 1:
        return M.row(0)
    if M.n == 1:
        return M.col(0)
    raise FormatError(f"{source}: a vector must be a single row or a single column, got {M.m}x{M.n}")


def read_matrix(path: str | Path) -> Matrix:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise FormatError(f"{p}: {exc.strerror or exc}") from None
    return parse_matrix_text(text, str(p))


def read_vector(path: str | Path) -> Vector:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise FormatError(f"{p}: {exc.strerror or exc}") from None
    return parse_vector_text(text, str(p))


def rational_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def format_entry(v: Fraction) -> str:
    """Text-file spelling: integers bare, fractions as ``p/q``."""
    return str(v.numerator) if v.denominator == 1 else rational_str(v)


def matrix_to_text(M: Matrix) -> str:
    return "".join(" ".join(format_entry(v) for v in row) + "\n" for row in M.rows)


def vector_to_text(v: Vector) -> str:
    return " ".join(format_entry(x) for x in v) + "\n"


def input_digest(*objects: Matrix | Vector) -> str:
    """SHA-256 over the canonical text of the inputs, in order."""
    parts = [matrix_to_text(o) if isinstance(o, Matrix) else vector_to_text(o) for o in objects]
    return "sha256:" + hashlib.sha256("--\n".join(parts).encode()).hexdigest()


def to_data(obj: Any) -> Any:
    """Turn library values into JSON-ready data with Fractions left in place."""
    if isinstance(obj, Vector):
        return list(obj.entries)
    if isinstance(obj, Matrix):
        return [list(r) for r in obj.rows]
    return obj


def _encode(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, (Vector, Matrix)):
        return _encode(to_data(obj))
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _decode(obj: Any) -> Any:
    if isinstance(obj, str) and _RATIONAL_STR.fullmatch(obj):
        return Fraction(obj)
    if isinstance(obj, dict):
        return {k: _decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode(v) for v in obj]
    return obj


@dataclass
class Report:
    command: str
    input_digest: str
    result: dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        payload = {
            "schema_version": self.schema_version,
            "command": self.command,
            "input_digest": self.input_digest,
            "result": _encode(self.result),
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Report:
        data = json.loads(text)
        return cls(
            command=data["command"],
            input_digest=data["input_digest"],
            result=_decode(data["result"]),
            schema_version=data["schema_version"],
        )


_RAT = {"type": "string", "pattern": r"^-?[0-9]+/[1-9][0-9]*$"}
_VEC = {"type": "array", "items": {"$ref": "#/$defs/rational"}, "minItems": 1}
_MAT = {"type": "array", "items": {"type": "array", "items": {"$ref": "#/$defs/rational"}}}
_CERT = {
    "oneOf": [
        {
            "type": "object",
            "properties": {"kind": {"const": "primal"}, "x": {"$ref": "#/$defs/vector"}},
            "required": ["kind", "x"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"kind": {"const": "dual"}, "y": {"$ref": "#/$defs/vector"}},
            "required": ["kind", "y"],
            "additionalProperties": False,
        },
    ]
}


def _nullable(ref: str) -> dict:
    return {"oneOf": [{"type": "null"}, {"$ref": ref}]}


_RESULTS = {
    "analyze": {
        "type": "object",
        "required": [
            "shape", "rank", "full_rank", "monotone", "weakly_monotone", "method",
            "left_inverse", "right_inverse", "counterexample_monotone",
            "counterexample_weak", "q_shortcut",
        ],
        "properties": {
            "shape": {"type": "array", "items": {"type": "integer"}},
            "rank": {"type": "integer", "minimum": 0},
            "full_rank": {"type": "boolean"},
            "monotone": {"type": "boolean"},
            "weakly_monotone": {"type": "boolean"},
            "method": {"enum": ["zero-matrix", "single-row", "left-inverse", "right-inverse", "ray-enumeration"]},
            "left_inverse": _nullable("#/$defs/matrix"),
            "right_inverse": _nullable("#/$defs/matrix"),
            "counterexample_monotone": {
                "oneOf": [
                    {"type": "null"},
                    {
                        "type": "object",
                        "required": ["x", "Ax"],
                        "properties": {"x": {"$ref": "#/$defs/vector"}, "Ax": {"$ref": "#/$defs/vector"}},
                    },
                ]
            },
            "counterexample_weak": {
                "oneOf": [
                    {"type": "null"},
                    {
                        "type": "object",
                        "required": ["b", "certificate"],
                        "properties": {
                            "b": {"$ref": "#/$defs/vector"},
                            "certificate": {"$ref": "#/$defs/certificate"},
                        },
                    },
                ]
            },
            "q_shortcut": {"enum": ["sufficient-yes", "inconclusive"]},
        },
    },
    "solve": {
        "type": "object",
        "required": ["mode"],
        "oneOf": [
            {
                "properties": {"mode": {"const": "nonneg"}, "certificate": {"$ref": "#/$defs/certificate"}},
                "required": ["certificate"],
            },
            {
                "properties": {
                    "mode": {"const": "any"},
                    "solvable": {"type": "boolean"},
                    "x": _nullable("#/$defs/vector"),
                },
                "required": ["solvable", "x"],
            },
        ],
    },
    "sandwich": {
        "type": "object",
        "oneOf": [
            {
                "properties": {
                    "status": {"const": "ok"},
                    "x0": {"$ref": "#/$defs/vector"},
                    "x": {"$ref": "#/$defs/vector"},
                    "x1": {"$ref": "#/$defs/vector"},
                },
                "required": ["status", "x0", "x", "x1"],
            },
            {
                "properties": {
                    "status": {"const": "failure"},
                    "step": {"enum": ["z2", "z3"]},
                    "certificate": {"$ref": "#/$defs/certificate"},
                },
                "required": ["status", "step", "certificate"],
            },
        ],
    },
    "decompose": {
        "type": "object",
        "required": ["rank", "q", "p", "s", "s_shape", "columns", "reduced"],
        "properties": {
            "rank": {"type": "integer", "minimum": 0},
            "q": {"$ref": "#/$defs/matrix"},
            "p": {"$ref": "#/$defs/matrix"},
            "s": {"$ref": "#/$defs/matrix"},
            "s_shape": {"type": "array", "items": {"type": "integer"}},
            "columns": {"type": "array", "items": {"type": "integer"}},
            "reduced": {"$ref": "#/$defs/matrix"},
        },
    },
    "rays": {
        "type": "object",
        "required": ["ambient_dim", "rays"],
        "properties": {
            "ambient_dim": {"type": "integer", "minimum": 1},
            "rays": {"type": "array", "items": {"$ref": "#/$defs/vector"}},
        },
    },
}

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "command", "input_digest", "result"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": sorted(_RESULTS)},
        "input_digest": {"type": "string", "pattern": "^sha256:[0-9a-f]{64}$"},
        "result": {"type": "object"},
    },
    "allOf": [
        {
            "if": {"properties": {"command": {"const": name}}},
            "then": {"properties": {"result": schema}},
        }
        for name, schema in _RESULTS.items()
    ],
    "$defs": {"rational": _RAT, "vector": _VEC, "matrix": _MAT, "certificate": _CERT},
}
