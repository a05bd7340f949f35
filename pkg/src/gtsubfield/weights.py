"""Exact weight distributions and minimum distances.

Codewords are enumerated as F_p-combinations of F_p-generators (for a code
over GF(p^s) the generators are alpha^a * g_i, a < s). The generators are
split into a "low" block, whose full span is tabulated once, and a "high"
block walked in modular Gray-code order so each step adds a single
generator row to the offset. Binary codewords are bit-packed into uint64
words and weighed with popcount; odd characteristic uses uint8 digit arrays.

When the code is too large to enumerate, its distribution is obtained from
the dual's through the MacWilliams transform, in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .torus import LinearCode

DEFAULT_BUDGET = 1 << 28

# low-table size caps (rows for packed binary, bytes for digit arrays)
_LOW_ROWS_BINARY = 1 << 20
_LOW_BYTES = 1 << 23


class BudgetExceeded(RuntimeError):
    """The code has more codewords than the enumeration budget allows."""


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]
    n: int
    field_order: int

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> int | None:
        """Smallest nonzero weight, or None for the zero code."""
        for w in range(1, len(self.counts)):
            if self.counts[w]:
                return w
        return None

    @property
    def dimension(self) -> int:
        k, t = 0, 1
        while t < self.total:
            t *= self.field_order
            k += 1
        if t != self.total:
            raise ArithmeticError("codeword count is not a power of the alphabet size")
        return k

    def to_json(self) -> list[int]:
        return list(self.counts)


@dataclass(frozen=True)
class DistanceReport:
    d: int | None
    method: str  # "direct", "via_dual", "not_verified" or "zero_code"
    enumerated: int
    cross_checked: bool = False
    distribution: WeightDistribution | None = None

    @property
    def verified(self) -> bool:
        return self.method in ("direct", "via_dual", "zero_code")

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "method": self.method,
            "enumerated": self.enumerated,
            "cross_checked": self.cross_checked,
            "weights": None if self.distribution is None else self.distribution.to_json(),
        }


def codeword_count(code: LinearCode) -> int:
    return code.alphabet**code.k


def _prime_generators(code: LinearCode) -> np.ndarray:
    """F_p-generators as digit arrays of shape (s*k, n, s)."""
    f = code.field
    rows = np.concatenate([np.asarray(f.mul(code.gen, a)) for a in range(f.s)]) if code.k else code.gen
    return f.digits(rows).reshape(len(rows), code.n, f.s)


def _gray_positions(p: int, m: int) -> Iterator[int]:
    """Digit that increments at each step of the modular p-ary Gray code on m digits."""
    for t in range(p**m - 1):
        pos = 0
        while t % p == p - 1:
            t //= p
            pos += 1
        yield pos


def _pack_bits(digits: np.ndarray) -> np.ndarray:
    """(rows, n, s) binary digits -> (rows, s, W) uint64, one bit plane per digit."""
    rows, n, s = digits.shape
    W = (n + 63) // 64
    padded = np.zeros((rows, s, W * 64), dtype=np.uint8)
    padded[:, :, :n] = np.transpose(digits, (0, 2, 1))
    bits = np.packbits(padded.reshape(rows, s, W, 64), axis=-1, bitorder="little")
    return bits.view(np.uint64).reshape(rows, s, W)


def _binary_distribution(gens: np.ndarray, n: int) -> np.ndarray:
    packed = _pack_bits(gens)
    m = len(packed)
    low = min(m, _LOW_ROWS_BINARY.bit_length() - 1)
    table = np.zeros((1,) + packed.shape[1:], dtype=np.uint64)
    for g in packed[:low]:
        table = np.concatenate([table, table ^ g])
    high = packed[low:]
    counts = np.zeros(n + 1, dtype=np.int64)
    offset = np.zeros(packed.shape[1:], dtype=np.uint64)

    def tally(words):
        support = np.bitwise_or.reduce(words, axis=1)  # OR over digit planes
        w = np.bitwise_count(support).sum(axis=-1, dtype=np.int64)
        counts[:] += np.bincount(w, minlength=n + 1)

    tally(table)
    for pos in _gray_positions(2, len(high)):
        offset ^= high[pos]
        tally(table ^ offset)
    return counts


def _digit_distribution(gens: np.ndarray, n: int, p: int) -> np.ndarray:
    m, _, s = gens.shape
    flat = gens.reshape(m, n * s).astype(np.uint8)
    low = 0
    while low < m and p ** (low + 1) * n * s <= _LOW_BYTES:
        low += 1
    table = np.zeros((1, n * s), dtype=np.uint8)
    for g in flat[:low]:
        table = np.concatenate([(table + c * g) % p for c in range(p)])
    high = flat[low:]
    counts = np.zeros(n + 1, dtype=np.int64)
    offset = np.zeros(n * s, dtype=np.uint8)

    def tally(words):
        if s == 1:
            w = np.count_nonzero(words, axis=1)
        else:
            w = np.count_nonzero(words.reshape(len(words), n, s).any(axis=2), axis=1)
        counts[:] += np.bincount(w, minlength=n + 1)

    tally(table)
    scratch = np.empty_like(table)
    for pos in _gray_positions(p, len(high)):
        offset = (offset + high[pos]) % p
        np.add(table, offset, out=scratch)
        scratch[scratch >= p] -= p
        tally(scratch)
    return counts


def weight_distribution(code: LinearCode, budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    """Exact weight distribution by enumerating every codeword."""
    total = codeword_count(code)
    if total > budget:
        raise BudgetExceeded(f"{code.label or 'code'} has {total} codewords, budget is {budget}")
    n = code.n
    if code.k == 0:
        counts = np.zeros(n + 1, dtype=np.int64)
        counts[0] = 1
    else:
        gens = _prime_generators(code)
        if code.field.p == 2:
            counts = _binary_distribution(gens, n)
        else:
            counts = _digit_distribution(gens, n, code.field.p)
    dist = WeightDistribution(tuple(int(c) for c in counts), n, code.alphabet)
    if dist.total != total or dist.counts[0] != 1:
        raise ArithmeticError("enumeration produced an inconsistent distribution")
    return dist


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum((-1) ** h * (q - 1) ** (j - h) * comb(i, h) * comb(n - i, j - h) for h in range(j + 1))


def macwilliams(dual: WeightDistribution, k_primal: int) -> WeightDistribution:
    """Distribution of C from the exact distribution of its dual C^perp."""
    n, q = dual.n, dual.field_order
    size = q ** (n - k_primal)
    if dual.total != size:
        raise ValueError(f"dual distribution sums to {dual.total}, expected {q}^{n - k_primal}")
    out = []
    for j in range(n + 1):
        acc = sum(b * krawtchouk(j, i, n, q) for i, b in enumerate(dual.counts) if b)
        a, rem = divmod(acc, size)
        if rem or a < 0:
            raise ArithmeticError(f"MacWilliams transform gave a non-integral or negative A_{j}")
        out.append(a)
    return WeightDistribution(tuple(out), n, q)


def min_distance(
    code: LinearCode, dual: LinearCode | None = None, budget: int = DEFAULT_BUDGET
) -> DistanceReport:
    """Exact minimum distance, directly or through the dual.

    If both sides fit the budget both are computed and must agree.
    """
    if code.k == 0:
        zero = WeightDistribution((1,) + (0,) * code.n, code.n, code.alphabet)
        return DistanceReport(None, "zero_code", 1, distribution=zero)
    if dual is None and code.field.s == 1:
        from .subfield import annihilator

        dual = annihilator(code)
    fits = codeword_count(code) <= budget
    dual_fits = dual is not None and codeword_count(dual) <= budget

    via = None
    if dual_fits:
        via = macwilliams(weight_distribution(dual, budget), code.k)
    if fits:
        direct = weight_distribution(code, budget)
        if via is not None and via != direct:
            raise ArithmeticError(f"{code.label}: direct and via-dual distributions disagree")
        spent = direct.total + (dual.alphabet**dual.k if via is not None else 0)
        return DistanceReport(direct.min_distance, "direct", spent, via is not None, direct)
    if via is not None:
        return DistanceReport(via.min_distance, "via_dual", codeword_count(dual), False, via)
    return DistanceReport(None, "not_verified", 0)


def pair_distances(
    code: LinearCode, dual: LinearCode, budget: int = DEFAULT_BUDGET, cross_check: bool = True
) -> tuple[DistanceReport, DistanceReport]:
    """Distances of a code and its exact dual from one enumeration.

    The smaller side is enumerated and the other obtained by MacWilliams; with
    ``cross_check`` the larger side is also enumerated when it fits.
    """
    if code.k + dual.k != code.n:
        raise ValueError("codes are not a dual pair (dimensions do not sum to n)")
    small, big = (code, dual) if code.k <= dual.k else (dual, code)
    if codeword_count(small) > budget:
        return DistanceReport(None, "not_verified", 0), DistanceReport(None, "not_verified", 0)
    ds = weight_distribution(small, budget)
    db = macwilliams(ds, big.k)
    checked = False
    spent = ds.total
    if cross_check and codeword_count(big) <= budget:
        direct = weight_distribution(big, budget)
        if direct != db:
            raise ArithmeticError(f"{big.label}: direct and via-dual distributions disagree")
        checked = True
        spent += direct.total
    rs = DistanceReport(ds.min_distance, "direct", ds.total, checked, ds)
    if checked:
        rb = DistanceReport(db.min_distance, "direct", spent - ds.total, True, db)
    else:
        rb = DistanceReport(db.min_distance, "via_dual", ds.total, False, db)
    if small.k == 0:
        rs = DistanceReport(None, "zero_code", 1, checked, ds)
    if big.k == 0:
        rb = DistanceReport(None, "zero_code", 1, checked, db)
    return (rs, rb) if small is code else (rb, rs)
