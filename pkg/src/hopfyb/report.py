"""Axiom reports and exact map comparison.

Every verifier in the package returns an :class:`AxiomReport`.  A check
compares two linear maps by evaluating both on every basis multi-index in
lexicographic order; the first disagreement becomes the witness.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .scalars import ZERO

__all__ = ["Witness", "Check", "AxiomReport", "compare_maps", "compare_matrices", "timed"]


@dataclass
class Witness:
    index: tuple            # input basis multi-index
    output: tuple | None    # output basis multi-index where the sides differ
    left: str
    right: str
    point: str | None = None  # sample value of a in fast mode

    def to_dict(self) -> dict:
        d = {"index": list(self.index), "output": None if self.output is None else list(self.output),
             "left": self.left, "right": self.right}
        if self.point is not None:
            d["a"] = self.point
        return d

    def describe(self, basis=None) -> str:
        def name(idx):
            if basis is None:
                return "(" + ",".join(map(str, idx)) + ")"
            return "(x)".join(basis[i] for i in idx) if idx else "1"
        at = f" at a={self.point}" if self.point is not None else ""
        out = "" if self.output is None else f" -> {name(self.output)}"
        return f"{name(self.index)}{out}: {self.left} != {self.right}{at}"


@dataclass
class Check:
    name: str
    passed: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.passed


@dataclass
class AxiomReport:
    subject: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0
    basis: list[str] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: AxiomReport, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))
        self.notes.extend(other.notes)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = True) -> dict:
        checks = []
        for c in self.checks:
            w = None
            if c.witness is not None:
                w = c.witness.to_dict()
                w["at"] = c.witness.describe(self.basis)
            checks.append({"name": c.name, "passed": c.passed, "witness": w})
        d = {"subject": self.subject, "passed": self.passed, "checks": checks, "notes": list(self.notes)}
        if timing:
            d["elapsed_ms"] = self.elapsed_ms
        return d

    def format(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{'pass' if c.passed else 'FAIL'}] {c.name}"
            if c.witness is not None:
                line += f"  witness {c.witness.describe(self.basis)}"
            lines.append(line)
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


@contextmanager
def timed(report: AxiomReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)


def _as_key(k) -> tuple:
    return k if isinstance(k, tuple) else (k,)


def _first_mismatch(a: dict, b: dict):
    if a == b:
        return None
    keys = sorted(set(a) | set(b), key=_as_key)
    for k in keys:
        x, y = a.get(k, ZERO), b.get(k, ZERO)
        if x != y:
            return _as_key(k), x, y
    return None


def compare_maps(name: str, lhs: Callable, rhs: Callable, n: int, arity: int) -> Check:
    """Compare two maps given on basis multi-indices.

    ``lhs(*idx)`` and ``rhs(*idx)`` return sparse outputs ``{key: Scalar}``
    with int keys (elements of H) or tuple keys (tensor powers).
    """
    for idx in product(range(n), repeat=arity):
        miss = _first_mismatch(_clean(lhs(*idx)), _clean(rhs(*idx)))
        if miss is not None:
            out, x, y = miss
            return Check(name, False, Witness(idx, out, str(x), str(y)))
    return Check(name, True)


def compare_matrices(name: str, A, B, n: int | None = None) -> Check:
    """Entrywise comparison; indices are split into n-ary multi-indices when
    ``n`` is given."""
    if A.shape != B.shape:
        raise ValueError(f"{name}: shape mismatch {A.shape} vs {B.shape}")
    diff = A.first_difference(B)
    if diff is None:
        return Check(name, True)
    i, j = diff
    if n is None:
        idx, out = (j,), (i,)
    else:
        from .linalg import split_index
        idx = split_index(j, n, _legs(A.cols, n))
        out = split_index(i, n, _legs(A.rows, n))
    return Check(name, False, Witness(idx, out, str(A[i, j]), str(B[i, j])))


def _legs(size: int, n: int) -> int:
    if n == 1:
        return 1
    k = 0
    while size > 1:
        size //= n
        k += 1
    return k


def _clean(d):
    if isinstance(d, dict):
        return {k: v for k, v in d.items() if v}
    return {(): d} if d else {}
