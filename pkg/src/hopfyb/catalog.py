"""Bundled algebras, matched pairs and forms, looked up by name.

The two matched-pair families on A = A_{C2xC2} are given twice: as full
transcribed tables of the left action, and as action data on generators from
which both actions are expanded.  Tests compare the two.
"""

from __future__ import annotations

from .hopf import (
    HopfAlgebra,
    a_c2c2,
    cyclic_group_algebra,
    klein_group_algebra,
    s3_group_algebra,
    sweedler_h4,
)
from .linalg import Tensor3
from .matched_pair import ActionPair, conjugation_pair, expand_generator_actions, trivial_pair
from .scalars import A, ONE, Scalar, as_scalar

__all__ = [
    "ALGEBRAS",
    "PAIRS",
    "FORMS",
    "get_algebra",
    "get_pair",
    "family_table",
    "family_generator_data",
    "family_pair",
    "parse_table",
    "UnknownNameError",
]


class UnknownNameError(LookupError):
    pass


ALGEBRAS = {
    "a_c2c2": a_c2c2,
    "h4": sweedler_h4,
    "c2": lambda: cyclic_group_algebra(2),
    "c2c2": klein_group_algebra,
    "s3": s3_group_algebra,
}

_cache: dict = {}


def get_algebra(name: str) -> HopfAlgebra:
    if name not in ALGEBRAS:
        raise UnknownNameError(f"unknown algebra {name!r}; known: {', '.join(ALGEBRAS)}")
    if name not in _cache:
        _cache[name] = ALGEBRAS[name]()
    return _cache[name]


# Left action tables on A, row x gives x -> y for y in the basis order
# 1 g h gh x gx hx ghx.  'a(u-v)' means a*u - a*v.

TABLE_1 = """
1   | 1 g h gh x gx hx ghx
g   | 1 g h gh -x -gx -hx -ghx
h   | 1 g h gh -x -gx -hx -ghx
gh  | 1 g h gh x gx hx ghx
x   | 0 0 0 0 a(1-g) a(1-g) a(gh-h) a(gh-h)
gx  | 0 0 0 0 a(1-g) a(1-g) a(gh-h) a(gh-h)
hx  | 0 0 0 0 a(1-g) a(1-g) a(gh-h) a(gh-h)
ghx | 0 0 0 0 a(1-g) a(1-g) a(gh-h) a(gh-h)
"""

TABLE_2 = """
1   | 1 g h gh x gx hx ghx
g   | 1 g h gh -x -gx -hx -ghx
h   | 1 g gh h -x -gx ghx hx
gh  | 1 g gh h x gx -ghx -hx
x   | 0 0 0 0 a(1-g) a(1-g) a(gh-h) a(gh-h)
gx  | 0 0 0 0 a(1-g) a(1-g) a(gh-h) a(gh-h)
hx  | 0 0 0 0 a(1-g) a(1-g) a(h-gh) a(h-gh)
ghx | 0 0 0 0 a(1-g) a(1-g) a(h-gh) a(h-gh)
"""


def _parse_entry(H: HopfAlgebra, text: str, alpha: Scalar) -> dict:
    if text == "0":
        return {}
    if text.startswith("a(") and text.endswith(")"):
        u, v = text[2:-1].split("-")
        out = {}
        for name, c in ((u, alpha), (v, -alpha)):
            i = H.index(name)
            out[i] = out.get(i, 0) + c
        return {k: c for k, c in out.items() if c}
    sign = -ONE if text.startswith("-") else ONE
    return {H.index(text.lstrip("-")): sign}


def parse_table(H: HopfAlgebra, text: str, alpha=A) -> Tensor3:
    """Tensor of a transcribed action table."""
    alpha = as_scalar(alpha)
    images = {}
    for line in text.strip().splitlines():
        head, body = line.split("|")
        i = H.index(head.strip())
        entries = body.split()
        if len(entries) != H.dim:
            raise ValueError(f"row {head.strip()} has {len(entries)} entries")
        for j, entry in enumerate(entries):
            images[i, j] = _parse_entry(H, entry, alpha)
    return Tensor3.from_function(H.dim, lambda i, j: images[i, j])


def family_table(family: int, alpha=A) -> Tensor3:
    H = get_algebra("a_c2c2")
    return parse_table(H, {1: TABLE_1, 2: TABLE_2}[family], alpha)


def family_generator_data(family: int, alpha=A) -> tuple[dict, dict]:
    """Both actions on pairs of generator letters, as {basis name: scalar}."""
    if family not in (1, 2):
        raise ValueError("family must be 1 or 2")
    alpha = as_scalar(alpha)
    x_on_x = {"1": alpha, "g": -alpha}
    hh = {"h": ONE} if family == 1 else {"gh": ONE}
    left = {
        ("g", "g"): {"g": ONE}, ("g", "h"): {"h": ONE}, ("h", "g"): {"g": ONE},
        ("g", "x"): {"x": -ONE}, ("h", "x"): {"x": -ONE},
        ("x", "g"): {}, ("x", "h"): {}, ("x", "x"): x_on_x,
        ("h", "h"): hh,
    }
    right = {
        ("g", "g"): {"g": ONE}, ("h", "g"): {"h": ONE}, ("g", "h"): {"g": ONE},
        ("x", "g"): {"x": -ONE}, ("x", "h"): {"x": -ONE},
        ("g", "x"): {}, ("h", "x"): {}, ("x", "x"): x_on_x,
        ("h", "h"): hh,
    }
    return left, right


def family_pair(family: int, alpha=A, source: str = "table") -> ActionPair:
    """Family 1 or 2 on A.

    ``source="table"`` takes the left action from the transcribed table and
    the right action from the generator expansion; ``source="generators"``
    expands both from generator data.
    """
    H = get_algebra("a_c2c2")
    left_gen, right_gen = family_generator_data(family, alpha)
    expanded = expand_generator_actions(H, left_gen, right_gen, f"family{family}")
    if source == "generators":
        return expanded
    if source != "table":
        raise ValueError("source must be 'table' or 'generators'")
    return ActionPair(H, family_table(family, alpha), expanded.right, f"family{family}")


PAIRS = {
    "family1": ("a_c2c2",),
    "family2": ("a_c2c2",),
    "conjugation": ("c2", "c2c2", "s3"),
    "trivial": tuple(ALGEBRAS),
}

FORMS = {"r_alpha": ("a_c2c2",)}


def get_pair(name: str, H: HopfAlgebra, alpha=A) -> ActionPair:
    if name in ("family1", "family2"):
        if H.name != "a_c2c2":
            raise UnknownNameError(f"{name} is defined on a_c2c2, not {H.name}")
        return family_pair(int(name[-1]), alpha)
    if name == "conjugation":
        return conjugation_pair(H)
    if name == "trivial":
        return trivial_pair(H)
    raise UnknownNameError(f"unknown pair {name!r}; known: {', '.join(PAIRS)}")
