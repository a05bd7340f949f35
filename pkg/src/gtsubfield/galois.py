"""Table-driven arithmetic in GF(p^s).

Elements are carried as discrete-log indices relative to a fixed primitive
element ``alpha``; the zero element is the sentinel :data:`ZERO` (``-1``).
Addition goes through a Zech-logarithm table, so every operation is a few
array lookups and works elementwise on numpy arrays as well as on ints.

The integer *vector representation* of an element (base-p packing of its
coefficients in the polynomial basis ``1, alpha, ..., alpha^(s-1)``) is
available through :meth:`GaloisField.to_vector`; for elements of the prime
field it is simply the residue in ``0..p-1``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

ZERO = -1

MAX_ORDER = 1 << 16

# Primitive polynomials, coefficients lowest degree first. Conway polynomials
# where known; anything missing is found by _search_primitive (deterministic).
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
}


class FieldError(ValueError):
    """Invalid field parameters or an element outside the expected subfield."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _power_table(p: int, s: int, modulus: Sequence[int]) -> list[int] | None:
    """Successive powers of x modulo ``modulus`` as packed integers.

    Returns None as soon as the powers cycle back to 1 early (x not primitive).
    """
    q = p**s
    if s == 1:
        # x = -modulus[0] in F_p
        root = (-modulus[0]) % p
        if root == 0:
            return None
        powers = [1]
        v = 1
        for _ in range(q - 2):
            v = v * root % p
            if v == 1:
                return None
            powers.append(v)
        return powers
    weights = [p**i for i in range(s)]
    coeffs = [0] * s
    coeffs[0] = 1
    powers = [1]
    for _ in range(q - 2):
        top = coeffs[-1]
        coeffs = [0] + coeffs[:-1]
        if top:
            coeffs = [(c - top * m) % p for c, m in zip(coeffs, modulus[:s])]
        v = sum(c * w for c, w in zip(coeffs, weights))
        if v == 1:
            return None
        powers.append(v)
    return powers


def _search_primitive(p: int, s: int) -> tuple[int, ...]:
    # lexicographic over the non-leading coefficients, constant term nonzero
    for code in range(1, p**s):
        lower = [(code // p**i) % p for i in range(s)]
        if lower[0] == 0:
            continue
        modulus = tuple(lower) + (1,)
        powers = _power_table(p, s, modulus)
        if powers is not None and len(set(powers)) == p**s - 1:
            return modulus
    raise FieldError(f"no primitive polynomial found for p={p}, s={s}")


class GaloisField:
    """The finite field GF(p^s) with log/antilog/Zech tables.

    Parameters
    ----------
    p : int
        Prime characteristic.
    s : int
        Extension degree.
    modulus : sequence of int, optional
        Monic primitive polynomial of degree ``s`` over F_p, lowest degree
        first. Defaults to the pinned entry in :data:`DEFAULT_MODULI`.
    """

    def __init__(self, p: int, s: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if s < 1:
            raise FieldError(f"extension degree must be >= 1, got {s}")
        q = p**s
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds table limit {MAX_ORDER}")
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, s)) or _search_primitive(p, s)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {s}: {modulus}")
        powers = _power_table(p, s, modulus)
        if powers is None or len(set(powers)) != q - 1:
            raise FieldError(f"modulus {modulus} is not primitive over F_{p}")

        self.p = p
        self.s = s
        self.q = q
        self.order = q - 1
        self.modulus = modulus

        N = self.order
        self.exp = np.array(powers, dtype=np.int64)
        log = np.full(q, ZERO, dtype=np.int64)
        log[self.exp] = np.arange(N)
        self.log = log
        digits = np.array([[(v // p**i) % p for i in range(s)] for v in range(q)], dtype=np.int64)
        self._digits = digits
        self._weights = np.array([p**i for i in range(s)], dtype=np.int64)
        # zech[i] = log(1 + alpha^i)
        one = digits[1]
        self.zech = log[((digits[self.exp] + one) % p) @ self._weights]
        self._neg_one = 0 if p == 2 else N // 2
        for arr in (self.exp, self.log, self.zech):
            arr.flags.writeable = False

    def __repr__(self) -> str:
        return f"GaloisField(p={self.p}, s={self.s}, modulus={list(self.modulus)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GaloisField)
            and (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.modulus))

    # ------------------------------------------------------------------
    # element arithmetic (log domain, ZERO = -1)
    # ------------------------------------------------------------------
    def _norm(self, a):
        return a.item() if isinstance(a, np.ndarray) and a.ndim == 0 else a

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.where((a < 0) | (b < 0), ZERO, (a + b) % self.order)
        return self._norm(out)

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        N = self.order
        z = self.zech[(b - a) % N]
        both = np.where(z < 0, ZERO, (a + z) % N)
        out = np.where(a < 0, b, np.where(b < 0, a, both))
        return self._norm(out)

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        out = np.where(a < 0, ZERO, (a + self._neg_one) % self.order)
        return self._norm(out)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a < 0):
            raise ZeroDivisionError("inverse of zero")
        return self._norm((-a) % self.order)

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return self._norm(np.zeros_like(a))
        if e < 0 and np.any(a < 0):
            raise ZeroDivisionError("negative power of zero")
        out = np.where(a < 0, ZERO, (a * e) % self.order)
        return self._norm(out)

    def frobenius(self, a, times: int = 1):
        """``a ** (p ** times)``."""
        return self.pow(a, self.p ** (times % self.s))

    def sum(self, a, axis=None):
        """Field sum of an array of log-domain elements along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if axis is None:
            a = a.reshape(-1)
            axis = 0
        a = np.moveaxis(a, axis, 0)
        acc = np.full(a.shape[1:], ZERO, dtype=np.int64)
        for row in a:
            acc = np.asarray(self.add(acc, row))
        return self._norm(acc)

    # ------------------------------------------------------------------
    # traces and subfields
    # ------------------------------------------------------------------
    def relative_trace(self, a, m: int):
        """Trace from GF(p^s) down to GF(p^m): sum of a^((p^m)^j), j < s/m."""
        if m < 1 or self.s % m:
            raise FieldError(f"{m} does not divide s={self.s}")
        a = np.asarray(a, dtype=np.int64)
        acc = a
        for j in range(1, self.s // m):
            acc = np.asarray(self.add(acc, self.pow(a, self.p ** (m * j))))
        return self._norm(acc)

    def trace(self, a):
        """Absolute trace onto the prime field."""
        return self.relative_trace(a, 1)

    def subfield_primitive(self, m: int) -> int:
        """Log index of alpha^((q-1)/(p^m-1)), a generator of GF(p^m)^*."""
        if m < 1 or self.s % m:
            raise FieldError(f"{m} does not divide s={self.s}")
        return (self.order // (self.p**m - 1)) % self.order

    def in_subfield(self, a, m: int):
        """True where ``a`` is fixed by x -> x^(p^m)."""
        a = np.asarray(a, dtype=np.int64)
        return self._norm(np.asarray(self.pow(a, self.p**m)) == a)

    def multiplicative_order(self, a: int) -> int:
        if a < 0:
            raise FieldError("zero has no multiplicative order")
        from math import gcd

        return self.order // gcd(a, self.order)

    def subfield_elements(self, m: int) -> np.ndarray:
        """All elements of GF(p^m) inside this field, ZERO first."""
        step = self.order // (self.p**m - 1)
        return np.concatenate(([ZERO], np.arange(0, self.order, step)))

    def trace_preimage(self, beta: int, m: int) -> int:
        """Some gamma with relative_trace(gamma, m) == beta (exhaustive search)."""
        els = self.elements()
        hits = np.nonzero(np.asarray(self.relative_trace(els, m)) == beta)[0]
        if len(hits) == 0:
            raise FieldError(f"element {beta} is not in GF({self.p}^{m})")
        return int(els[hits[0]])

    # ------------------------------------------------------------------
    # conversions
    # ------------------------------------------------------------------
    def elements(self) -> np.ndarray:
        """All q elements in log form, ZERO first then alpha^0, alpha^1, ..."""
        return np.arange(-1, self.order, dtype=np.int64)

    def to_vector(self, a):
        """Packed integer (base-p coefficient) representation; zero maps to 0."""
        a = np.asarray(a, dtype=np.int64)
        out = np.where(a < 0, 0, self.exp[np.where(a < 0, 0, a)])
        return self._norm(out)

    def from_vector(self, v):
        v = np.asarray(v, dtype=np.int64)
        return self._norm(self.log[v])

    def digits(self, a) -> np.ndarray:
        """F_p coordinates of ``a`` in the basis 1, alpha, ..., alpha^(s-1); trailing axis of length s."""
        return self._digits[np.asarray(self.to_vector(a))]

    def from_digits(self, d) -> np.ndarray:
        d = np.asarray(d, dtype=np.int64) % self.p
        return self.log[d @ self._weights]

    def to_prime(self, a):
        """Residue mod p of an element lying in the prime field."""
        v = np.asarray(self.to_vector(a))
        if np.any(v >= self.p):
            raise FieldError("element is not in the prime field")
        return self._norm(v)

    def from_prime(self, c):
        c = np.asarray(c, dtype=np.int64) % self.p
        return self._norm(self.log[c])

    def prime_field(self) -> "GaloisField":
        return build_field(self.p, 1)

    def format(self, a: int, symbol: str = "a") -> str:
        if a < 0:
            return "0"
        if a == 0:
            return "1"
        if a == 1:
            return symbol
        return f"{symbol}^{a}"

    def to_json(self) -> dict:
        return {"p": self.p, "s": self.s, "modulus": list(self.modulus)}


@lru_cache(maxsize=None)
def _cached_field(p: int, s: int, modulus: tuple[int, ...] | None) -> GaloisField:
    return GaloisField(p, s, modulus)


def build_field(p: int, s: int = 1, modulus: Sequence[int] | None = None) -> GaloisField:
    """Construct (and cache) GF(p^s); fields are immutable so sharing is safe."""
    return _cached_field(int(p), int(s), None if modulus is None else tuple(int(c) for c in modulus))
