from __future__ import annotations

import itertools

import numpy as np
import pytest

from gtsubfield.galois import build_field

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def gf4():
    return build_field(2, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def gf8():
    return build_field(2, 3, [1, 1, 0, 1])


@pytest.fixture(scope="session")
def gf9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def gf16():
    return build_field(2, 4, [1, 1, 0, 0, 1])


def brute_weights(gen_residues, p: int) -> list[int]:
    """Weight distribution by multiplying out every message (itertools)."""
    G = np.asarray(gen_residues, dtype=np.int64)
    k, n = G.shape
    counts = [0] * (n + 1)
    for msg in itertools.product(range(p), repeat=k):
        word = np.asarray(msg, dtype=np.int64) @ G % p if k else np.zeros(n, dtype=np.int64)
        counts[int(np.count_nonzero(word))] += 1
    return counts


def poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    """Schoolbook product of coefficient lists reduced by a monic modulus."""
    s = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, s - 1, -1):
        c = prod[d]
        if c:
            for i in range(s + 1):
                prod[d - s + i] = (prod[d - s + i] - c * modulus[i]) % p
    prod = prod[:s] + [0] * max(0, s - len(prod))
    return prod


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
