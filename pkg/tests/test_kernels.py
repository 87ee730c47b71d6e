import json
import os
import subprocess
import sys

import pytest

from manetti import kernels
from manetti.markov import FAMILIES, solutions_up_to
from manetti.singularities import is_t_string, t_string_generate

import oracles


def test_t_scan_small():
    got = kernels.t_string_scan(4, 7, 3)
    expected = {}
    for d in range(1, 4):
        for s in t_string_generate(d, 4):
            if max(s) <= 7:
                expected[s] = d
    assert got == expected
    assert all(is_t_string(s) == d for s, d in got.items())


def test_t_scan_matches_oracle_recognition():
    from itertools import product

    got = kernels.t_string_scan(3, 6, 9)
    expected = {}
    for length in range(1, 4):
        for s in product(range(2, 7), repeat=length):
            d = oracles.t_string_degree(s)
            if d is not None and d <= 9:
                expected[s] = d
    assert got == expected


def test_t_scan_bounds():
    with pytest.raises(ValueError):
        kernels.t_string_scan(0, 5, 1)
    with pytest.raises(ValueError):
        kernels.t_string_scan(40, 12, 1)


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_markov_scan(family):
    eq = FAMILIES[family]
    got = kernels.markov_scan(eq.alpha, eq.beta, eq.gamma, eq.lam, 200)
    assert got == oracles.quadratic_triples(eq.alpha, eq.beta, eq.gamma, eq.lam, 200)
    assert got == solutions_up_to(family, 200)
    assert kernels.markov_scan(1, 1, 1, 3, 0) == set()


_PROBE = """
import json
from manetti import kernels
print(json.dumps({
    "backend": kernels.BACKEND,
    "t": sorted([list(s), d] for s, d in kernels.t_string_scan(6, 9, 4).items()),
    "m": sorted(kernels.markov_scan(1, 1, 2, 4, 300)),
}))
"""


def _probe(disable):
    env = dict(os.environ)
    env.pop("MANETTI_DISABLE_NUMBA", None)
    if disable:
        env["MANETTI_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", _PROBE], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")
def test_backends_agree():
    fast, slow = _probe(False), _probe(True)
    assert fast["backend"] == "numba" and slow["backend"] == "numpy"
    assert fast["t"] == slow["t"]
    assert fast["m"] == slow["m"]
