"""JSON documents: hopf.v1, pair.v1, rmatrix.v1, cqt.v1 and transmute.v1.

Every scalar is written as its canonical string.  Readers raise
:class:`SchemaError` on malformed documents.
"""

from __future__ import annotations

import json
from pathlib import Path

from .hopf import DimensionError, HopfAlgebra
from .linalg import Matrix, Tensor3
from .scalars import ScalarSyntaxError, ScalarZeroDivisionError, parse_scalar

__all__ = [
    "SchemaError",
    "hopf_to_json",
    "hopf_from_json",
    "pair_to_json",
    "pair_from_json",
    "rmatrix_to_json",
    "rmatrix_from_json",
    "cqt_to_json",
    "cqt_from_json",
    "transmute_to_json",
    "load_json",
    "dump_json",
]


class SchemaError(ValueError):
    pass


def _s(x) -> str:
    return str(x)


def _parse(x, where: str):
    if isinstance(x, int) and not isinstance(x, bool):
        x = str(x)
    if not isinstance(x, str):
        raise SchemaError(f"{where}: expected a scalar string, got {x!r}")
    try:
        return parse_scalar(x)
    except (ScalarSyntaxError, ScalarZeroDivisionError) as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _grid(rows, shape, where):
    if not isinstance(rows, list) or len(rows) != shape[0]:
        raise SchemaError(f"{where}: expected {shape[0]} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != shape[1]:
            raise SchemaError(f"{where}[{i}]: expected {shape[1]} entries")
        out.append([_parse(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    return out


def _require(d: dict, keys, schema):
    if not isinstance(d, dict):
        raise SchemaError(f"{schema}: expected a JSON object")
    missing = [k for k in keys if k not in d]
    if missing:
        raise SchemaError(f"{schema}: missing field(s) {', '.join(missing)}")


def _tensor_to_json(t: Tensor3):
    return [[[_s(x) for x in t.c[i][j]] for j in range(t.n)] for i in range(t.n)]


def _tensor_from_json(data, n, where) -> Tensor3:
    if not isinstance(data, list) or len(data) != n:
        raise SchemaError(f"{where}: expected {n} slices")
    return Tensor3(n, [_grid(data[i], (n, n), f"{where}[{i}]") for i in range(n)])


def _matrix_rows(M: Matrix):
    return [[_s(x) for x in row] for row in M.to_lists()]


# -- hopf.v1 ----------------------------------------------------------------

def hopf_to_json(H: HopfAlgebra) -> dict:
    n = H.dim
    d = {
        "schema": "hopf.v1",
        "name": H.name,
        "dim": n,
        "basis": list(H.basis),
        "mult": _tensor_to_json(H.mult),
        "unit": [_s(x) for x in H.unit],
        "comult": [[_s(H.comult[k, i]) for k in range(n * n)] for i in range(n)],
        "counit": [_s(x) for x in H.counit],
        "antipode": [[_s(H.antipode_matrix[k, i]) for k in range(n)] for i in range(n)],
    }
    if not H.is_constant():
        d["parameters"] = ["a"]
    return d


def hopf_from_json(d: dict) -> HopfAlgebra:
    _require(d, ("name", "dim", "basis", "mult", "unit", "comult", "counit", "antipode"), "hopf.v1")
    n = d["dim"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("hopf.v1: dim must be a positive integer")
    if not isinstance(d["basis"], list) or len(d["basis"]) != n:
        raise SchemaError(f"hopf.v1: basis must list {n} names")
    mult = _tensor_from_json(d["mult"], n, "mult")
    unit = _grid([d["unit"]], (1, n), "unit")[0]
    counit = _grid([d["counit"]], (1, n), "counit")[0]
    comult_rows = _grid(d["comult"], (n, n * n), "comult")
    s_rows = _grid(d["antipode"], (n, n), "antipode")
    comult = Matrix.from_columns(n * n, [{k: x for k, x in enumerate(row) if x} for row in comult_rows])
    antipode = Matrix.from_columns(n, [{k: x for k, x in enumerate(row) if x} for row in s_rows])
    try:
        return HopfAlgebra(str(d["name"]), [str(b) for b in d["basis"]], mult, unit, comult, counit, antipode)
    except DimensionError as exc:
        raise SchemaError(f"hopf.v1: {exc}") from exc


# -- pair.v1 ----------------------------------------------------------------

def pair_to_json(pair, hopf_ref: str | None = None) -> dict:
    return {
        "schema": "pair.v1",
        "hopf": hopf_ref or pair.H.name,
        "name": pair.name,
        "left": _tensor_to_json(pair.left),
        "right": _tensor_to_json(pair.right),
    }


def pair_from_json(d: dict, resolve_hopf):
    """``resolve_hopf(ref)`` turns the ``hopf`` field into a HopfAlgebra.
    An absent ``right`` is derived from ``left``."""
    from .matched_pair import ActionPair, derive_right_action

    _require(d, ("hopf", "left"), "pair.v1")
    H = resolve_hopf(d["hopf"])
    left = _tensor_from_json(d["left"], H.dim, "left")
    if d.get("right") is None:
        right = derive_right_action(H, left)
    else:
        right = _tensor_from_json(d["right"], H.dim, "right")
    return ActionPair(H, left, right, str(d.get("name", "pair")))


# -- rmatrix.v1 -------------------------------------------------------------

def rmatrix_to_json(H: HopfAlgebra, M: Matrix, hopf_ref: str | None = None) -> dict:
    return {
        "schema": "rmatrix.v1",
        "hopf": hopf_ref or H.name,
        "dim_sq": H.dim * H.dim,
        "matrix": _matrix_rows(M),
    }


def rmatrix_from_json(d: dict, resolve_hopf):
    _require(d, ("hopf", "dim_sq", "matrix"), "rmatrix.v1")
    H = resolve_hopf(d["hopf"])
    N = H.dim * H.dim
    if d["dim_sq"] != N:
        raise SchemaError(f"rmatrix.v1: dim_sq is {d['dim_sq']}, expected {N} for {H.name}")
    return H, Matrix.from_lists(_grid(d["matrix"], (N, N), "matrix"))


# -- cqt.v1 -----------------------------------------------------------------

def cqt_to_json(F, hopf_ref: str | None = None) -> dict:
    return {"schema": "cqt.v1", "hopf": hopf_ref or F.H.name, "form": _matrix_rows(F.form)}


def cqt_from_json(d: dict, resolve_hopf):
    """The inverse form is always recomputed."""
    from .cqt import make_form

    _require(d, ("hopf", "form"), "cqt.v1")
    H = resolve_hopf(d["hopf"])
    return make_form(H, Matrix.from_lists(_grid(d["form"], (H.dim, H.dim), "form")))


# -- transmute.v1 -----------------------------------------------------------

def transmute_to_json(T, hopf_ref: str | None = None) -> dict:
    return {
        "schema": "transmute.v1",
        "hopf": hopf_ref or T.H.name,
        "pair": T.pair.name,
        "bullet": _tensor_to_json(T.bullet),
        "s_round": _matrix_rows(T.s_round),
        "ad_l_coaction": _matrix_rows(T.ad_l_coaction),
        "prebraiding": _matrix_rows(T.prebraiding),
    }


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc


def dump_json(doc, path=None) -> str:
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
