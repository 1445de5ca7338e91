"""File and text codecs: the .hm document and delta-notation.

A ``.hm`` file is a JSON object with exactly the fields ``shape``,
``data`` (flat, ID order) and ``scalar_kind``; unknown fields are
rejected so golden files stay a closed format.  Delta-notation is the
ASCII grammar ``d<m>[c1,c2,...,cn]`` for logical matrices.
"""

from __future__ import annotations

import json
import math
import re

import numpy as np

from .core import Hypermatrix
from .permutation import LogicalMatrix


class DocumentError(ValueError):
    """Malformed .hm document or delta-notation text."""


_HM_FIELDS = {"shape", "data", "scalar_kind"}


def dumps_hm(a: Hypermatrix) -> str:
    """Serialise a hypermatrix; integers exactly, floats shortest round-trip."""
    if a.kind == "float":
        data = [float(v) for v in a.data]
        for pos, v in enumerate(data, start=1):
            if not math.isfinite(v):
                raise DocumentError(f"non-finite float {v!r} at data position {pos}")
    else:
        data = [int(v) for v in a.data]
    doc = {"shape": list(a.dims), "data": data, "scalar_kind": a.kind}
    return json.dumps(doc, allow_nan=False)


def loads_hm(text: str) -> Hypermatrix:
    """Parse a .hm document, checking every field strictly."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document root must be an object")
    unknown = set(doc) - _HM_FIELDS
    if unknown:
        raise DocumentError(f"unknown field(s): {', '.join(sorted(unknown))}")
    missing = _HM_FIELDS - set(doc)
    if missing:
        raise DocumentError(f"missing field(s): {', '.join(sorted(missing))}")
    shape = doc["shape"]
    if not isinstance(shape, list) or not all(isinstance(n, int) and not isinstance(n, bool) for n in shape):
        raise DocumentError("field 'shape' must be a list of integers")
    kind = doc["scalar_kind"]
    if kind not in ("int", "float"):
        raise DocumentError(f"field 'scalar_kind' must be 'int' or 'float', got {kind!r}")
    data = doc["data"]
    if not isinstance(data, list):
        raise DocumentError("field 'data' must be a list")
    for pos, v in enumerate(data, start=1):
        if isinstance(v, bool):
            raise DocumentError(f"field 'data' position {pos}: booleans are not scalars")
        if kind == "int" and not isinstance(v, int):
            raise DocumentError(f"field 'data' position {pos}: {v!r} is not an integer")
        if kind == "float":
            if not isinstance(v, (int, float)):
                raise DocumentError(f"field 'data' position {pos}: {v!r} is not a number")
            if not math.isfinite(float(v)):
                raise DocumentError(f"field 'data' position {pos}: non-finite value")
    try:
        return Hypermatrix(shape, data, kind)
    except (ValueError, OverflowError) as exc:
        raise DocumentError(str(exc)) from None


def _reject_constant(name):
    raise DocumentError(f"non-finite constant {name} is not allowed")


def read_hm(path) -> Hypermatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_hm(fh.read())


def write_hm(a: Hypermatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_hm(a))
        fh.write("\n")


# -- delta-notation ------------------------------------------------------

_DELTA_RE = re.compile(r"^d(\d+)\[(\d+(?:,\d+)*)\]$")


def print_delta(w: LogicalMatrix) -> str:
    """Canonical delta-notation: ``d<m>[c1,c2,...]``, no spaces."""
    return f"d{w.rows}[{','.join(str(c) for c in w.cols)}]"


def parse_delta(text: str) -> LogicalMatrix:
    """Parse delta-notation; inverse of print_delta on canonical form."""
    match = _DELTA_RE.match(text.strip())
    if not match:
        raise DocumentError(f"not delta-notation: {text!r}")
    m = int(match.group(1))
    cols = [int(tok) for tok in match.group(2).split(",")]
    for j, c in enumerate(cols, start=1):
        if not 1 <= c <= m:
            raise DocumentError(f"entry {j} is {c}, outside [1, {m}]")
    return LogicalMatrix(m, cols)


def densify(w: LogicalMatrix) -> np.ndarray:
    """Dense 0/1 matrix with column j equal to the basis vector cols[j]."""
    out = np.zeros((w.rows, w.n_cols), dtype=np.int64)
    for j, c in enumerate(w.cols):
        out[c - 1, j] = 1
    return out
