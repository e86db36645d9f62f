"""Shared fixtures and independent oracles for the test suite.

Oracles here deliberately avoid the library code paths they check:
kernel triviality by exhaustive enumeration, binomial tails by exact
integer sums, roots by scipy's brentq.
"""

from __future__ import annotations

import itertools
from math import comb, log2

import numpy as np
import pytest

from graphqec.graphs import prism_code, wheel_code


def brute_force_kernel_trivial(entries, d: int) -> bool:
    """Check M h = 0 => h = 0 by enumerating all d**cols vectors."""
    arr = np.asarray(entries, dtype=np.int64)
    cols = arr.shape[1]
    assert d**cols <= 10_000, "oracle is gated to small search spaces"
    for h in itertools.product(range(d), repeat=cols):
        if all(v == 0 for v in h):
            continue
        if not np.any((arr @ np.array(h, dtype=np.int64)) % d):
            return False
    return True


def exact_binomial_tail(n: int, start: int, x: float) -> float:
    """Sum_{k=start}^{n} C(n,k) x^k with exact binomial coefficients."""
    return float(sum(comb(n, k) * x**k for k in range(start, n + 1)))


def exact_log2_binomial_tail(n: int, start: int, x: float) -> float:
    return log2(exact_binomial_tail(n, start, x))


def entropy_oracle(r: float) -> float:
    """Binary Shannon entropy, written independently of the library."""
    if r in (0.0, 1.0):
        return 0.0
    return -r * log2(r) - (1.0 - r) * log2(1.0 - r)


@pytest.fixture(scope="session")
def wheel():
    return wheel_code()


@pytest.fixture(scope="session")
def prism():
    return prism_code()
