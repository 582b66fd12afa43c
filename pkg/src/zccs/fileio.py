"""JSON spec files and code-set files.

Both formats are written with a fixed key order and one sequence per line so
that regenerated files can be compared byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .construct import ConstructionSpec
from .correlation import CodeSet, ZccsParams

__all__ = [
    "FormatError",
    "spec_to_json",
    "spec_from_json",
    "read_spec",
    "codeset_to_json",
    "codeset_from_json",
    "read_codeset",
]

SPEC_FIELDS = ("q", "m", "path", "deleted", "isolated", "gamma", "a_weights", "e_weights", "b_weights", "linear", "constant")


class FormatError(ValueError):
    """Malformed spec or code-set document."""


def _loads(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{what}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _int(v, name):
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"field {name!r} must be an integer, got {v!r}")
    return v


def _int_list(v, name):
    if not isinstance(v, list):
        raise FormatError(f"field {name!r} must be a list, got {type(v).__name__}")
    return [_int(x, f"{name}[{i}]") for i, x in enumerate(v)]


def _int_matrix(v, name, rows, cols):
    if not isinstance(v, list) or len(v) != rows:
        raise FormatError(f"field {name!r} must be a list of {rows} rows")
    out = []
    for i, row in enumerate(v):
        row = _int_list(row, f"{name}[{i}]")
        if len(row) != cols:
            raise FormatError(f"field {name!r} row {i} must have {cols} entries, got {len(row)}")
        out.append(row)
    return out


def _row(values) -> str:
    return "[" + ", ".join(str(int(v)) for v in values) + "]"


def _matrix_text(rows, indent: str) -> str:
    if not rows:
        return "[]"
    inner = (",\n" + indent + "  ").join(_row(r) for r in rows)
    return "[\n" + indent + "  " + inner + "\n" + indent + "]"


def spec_to_json(s: ConstructionSpec) -> str:
    lines = [
        f'  "q": {s.q}',
        f'  "m": {s.m}',
        f'  "path": {_row(s.path)}',
        f'  "deleted": {_row(s.deleted)}',
        f'  "isolated": {_row(s.isolated)}',
        f'  "gamma": {s.gamma}',
        f'  "a_weights": {_matrix_text(s.a_weights, "  ")}',
        f'  "e_weights": {_matrix_text(s.e_weights, "  ")}',
        f'  "b_weights": {_matrix_text(s.b_weights, "  ")}',
        f'  "linear": {_row(s.linear)}',
        f'  "constant": {s.constant}',
    ]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def spec_from_json(text: str) -> ConstructionSpec:
    """Parse a spec document.

    Syntax, type and shape problems raise `FormatError`; structural problems
    surface from `ConstructionSpec` validation.
    """
    doc = _loads(text, "spec")
    if not isinstance(doc, dict):
        raise FormatError("spec document must be a JSON object")
    unknown = sorted(set(doc) - set(SPEC_FIELDS))
    if unknown:
        raise FormatError(f"unknown spec fields: {unknown}")
    for name in ("q", "m", "path"):
        if name not in doc:
            raise FormatError(f"missing field {name!r}")
    q = _int(doc["q"], "q")
    m = _int(doc["m"], "m")
    if m < 1:
        raise FormatError(f"m must be >= 1, got {m}")
    labels = {}
    for name in ("path", "deleted", "isolated"):
        labels[name] = _int_list(doc.get(name, []), name)
        for v in labels[name]:
            if not 0 <= v < m:
                raise FormatError(f"label {v} in {name!r} outside 0..{m - 1}")
    n, k, p = len(labels["path"]), len(labels["deleted"]), len(labels["isolated"])
    gamma = _int(doc["gamma"], "gamma") if "gamma" in doc else None
    if gamma is not None and not 0 <= gamma < m:
        raise FormatError(f"gamma={gamma} outside 0..{m - 1}")
    a = _int_matrix(doc["a_weights"], "a_weights", n, k) if "a_weights" in doc else None
    e = _int_matrix(doc["e_weights"], "e_weights", k, p) if "e_weights" in doc else None
    b = _int_matrix(doc["b_weights"], "b_weights", k, k) if "b_weights" in doc else None
    lin = _int_list(doc["linear"], "linear") if "linear" in doc else None
    if lin is not None and len(lin) != m:
        raise FormatError(f"field 'linear' must have {m} entries, got {len(lin)}")
    const = _int(doc.get("constant", 0), "constant")
    return ConstructionSpec(
        q=q, m=m, gamma=gamma, a_weights=a, e_weights=e, b_weights=b, linear=lin, constant=const, **labels
    )


def read_spec(path) -> ConstructionSpec:
    return spec_from_json(Path(path).read_text())


def codeset_to_json(S: CodeSet, params: ZccsParams | None = None) -> str:
    m = S.L.bit_length() - 1
    head = [f'  "q": {S.q}', f'  "m": {m}']
    if params is not None:
        fields = [f'"K": {params.K}', f'"M": {params.M}', f'"L": {params.L}', f'"Z": {params.Z}']
        fields.append(f'"optimal": {"true" if params.optimal else "false"}')
        if not params.canonical:
            fields.append('"canonical": false')
        head.append('  "params": {' + ", ".join(fields) + "}")
    blocks = []
    for code in S.codes:
        rows = ",\n".join("      " + _row(r) for r in code)
        blocks.append("    [\n" + rows + "\n    ]")
    head.append('  "codes": [\n' + ",\n".join(blocks) + "\n  ]")
    return "{\n" + ",\n".join(head) + "\n}\n"


def codeset_from_json(text: str) -> tuple[CodeSet, ZccsParams | None]:
    doc = _loads(text, "code set")
    if not isinstance(doc, dict) or "q" not in doc or "codes" not in doc:
        raise FormatError("code-set document needs fields 'q' and 'codes'")
    q = _int(doc["q"], "q")
    try:
        arr = np.array(doc["codes"], dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"codes must be a rectangular K x M x L integer array: {exc}") from None
    if arr.ndim != 3:
        raise FormatError(f"codes must be a K x M x L array, got shape {arr.shape}")
    L = arr.shape[2]
    if L & (L - 1):
        raise FormatError(f"sequence length must be a power of two, got {L}")
    if "m" in doc and 1 << _int(doc["m"], "m") != L:
        raise FormatError(f"m={doc['m']} disagrees with sequence length {L}")
    try:
        S = CodeSet(q, arr)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    params = None
    if "params" in doc:
        pd = doc["params"]
        try:
            params = ZccsParams(
                K=_int(pd["K"], "K"), M=_int(pd["M"], "M"), L=_int(pd["L"], "L"), Z=_int(pd["Z"], "Z"),
                canonical=bool(pd.get("canonical", True)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad params block: {exc}") from None
        if (params.K, params.M, params.L) != arr.shape:
            raise FormatError(f"params K, M, L = {(params.K, params.M, params.L)} disagree with codes {arr.shape}")
        declared = pd.get("optimal")
        if declared is not None and declared is not params.optimal:
            raise FormatError(f"declared optimal={declared} contradicts the bound check")
    return S, params


def read_codeset(path):
    return codeset_from_json(Path(path).read_text())
