from __future__ import annotations

import functools
import sys

import pytest

from hopfyb import braiding, catalog, transmutation
from hopfyb.matched_pair import conjugation_pair, trivial_pair

# Every verified matched pair the package ships, as (label, algebra, pair name).
CORPUS = [
    ("family1", "a_c2c2", "family1"),
    ("family2", "a_c2c2", "family2"),
    ("conj-c2", "c2", "conjugation"),
    ("conj-c2c2", "c2c2", "conjugation"),
    ("conj-s3", "s3", "conjugation"),
    ("trivial-c2", "c2", "trivial"),
    ("trivial-c2c2", "c2c2", "trivial"),
]
CORPUS_IDS = [c[0] for c in CORPUS]
# S3 as permutations of {0,1,2}, composed as functions: (st)(p) = s(t(p)).
S3_PERMS = {
    "e": (0, 1, 2), "(12)": (1, 0, 2), "(13)": (2, 1, 0),
    "(23)": (0, 2, 1), "(123)": (1, 2, 0), "(132)": (2, 0, 1),
}


def perm_mul(s, t):
    return tuple(s[t[p]] for p in range(len(t)))


def perm_inv(s):
    out = [0] * len(s)
    for p, q in enumerate(s):
        out[q] = p
    return tuple(out)


def group_oracle(hname: str):
    """(elements by basis name, multiplication, inverse) built without the package."""
    if hname == "s3":
        return dict(S3_PERMS), perm_mul, perm_inv
    bits = {"c2": {"1": (0,), "g": (1,)},
            "c2c2": {"1": (0, 0), "g": (1, 0), "h": (0, 1), "gh": (1, 1)}}[hname]
    return bits, lambda s, t: tuple((p + q) % 2 for p, q in zip(s, t)), lambda s: s


INVOLUTIVE = {"family1", "family2", "conj-c2", "conj-c2c2", "trivial-c2", "trivial-c2c2"}


@functools.lru_cache(maxsize=None)
def pair_for(label: str):
    for lab, hname, pname in CORPUS:
        if lab == label:
            return catalog.get_pair(pname, catalog.get_algebra(hname))
    if label == "conj-h4":
        return conjugation_pair(catalog.get_algebra("h4"))
    if label == "trivial-s3":
        return trivial_pair(catalog.get_algebra("s3"))
    raise KeyError(label)


@functools.lru_cache(maxsize=None)
def r_for(label: str):
    return braiding.build_r(pair_for(label), verify=False)


@functools.lru_cache(maxsize=None)
def transmutation_for(label: str):
    return transmutation.build_transmutation(pair_for(label))


@pytest.fixture(params=CORPUS_IDS)
def corpus_label(request):
    return request.param


@pytest.fixture(scope="session")
def A():
    return catalog.get_algebra("a_c2c2")


@pytest.fixture(scope="session")
def S3():
    return catalog.get_algebra("s3")


@functools.lru_cache(maxsize=None)
def dcp_for(label: str):
    return transmutation.double_cross_product(pair_for(label))


@functools.lru_cache(maxsize=None)
def bos_for(label: str):
    return transmutation.bosonization(transmutation_for(label))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
