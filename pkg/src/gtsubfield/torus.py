"""Polynomials on the torus (F_q^*)^r, evaluation, and GT codes.

Polynomials live in R = F_q[y_1..y_r] / <y_i^(q-1) - 1>, so exponents are
reduced mod q-1 and every element of R has a unique representative with
support in H. Torus points are enumerated in lex order of their discrete-log
tuples; ``point j`` has coordinates ``(alpha^j_1, ..., alpha^j_r)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd
from typing import Mapping

import numpy as np

from .exponents import ExponentSet, full_lattice, u_perp
from .galois import ZERO, GaloisField
from .linalg import matmul_gf, rank_gf


class SparsePoly:
    """An element of R stored as ``{exponent: log-coefficient}`` with no zero terms."""

    __slots__ = ("field", "r", "terms")

    def __init__(self, field: GaloisField, r: int, terms: Mapping | None = None):
        N = field.order
        acc: dict[tuple[int, ...], int] = {}
        for u, a in (terms or {}).items():
            a = int(a)
            if a < 0:
                continue
            u = tuple(int(c) % N for c in u)
            if len(u) != r:
                raise ValueError(f"exponent {u} does not have {r} coordinates")
            acc[u] = int(field.add(acc[u], a)) if u in acc else a
        self.field = field
        self.r = r
        self.terms = {u: a for u, a in sorted(acc.items()) if a >= 0}

    @classmethod
    def monomial(cls, field: GaloisField, u, coeff: int = 0) -> "SparsePoly":
        return cls(field, len(u), {tuple(u): coeff})

    @classmethod
    def constant(cls, field: GaloisField, r: int, coeff: int = 0) -> "SparsePoly":
        return cls(field, r, {(0,) * r: coeff})

    @property
    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.field == other.field and self.r == other.r and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.r, tuple(self.terms.items())))

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        terms = dict(self.terms)
        for u, a in other.terms.items():
            terms[u] = int(self.field.add(terms.get(u, ZERO), a))
        return SparsePoly(self.field, self.r, terms)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.field, self.r, {u: self.field.neg(a) for u, a in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        N = self.field.order
        terms: dict[tuple[int, ...], int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = tuple((x + y) % N for x, y in zip(u, v))
                terms[w] = int(self.field.add(terms.get(w, ZERO), self.field.mul(a, b)))
        return SparsePoly(self.field, self.r, terms)

    def scale(self, c: int) -> "SparsePoly":
        return SparsePoly(self.field, self.r, {u: self.field.mul(a, c) for u, a in self.terms.items()})

    def power(self, e: int) -> "SparsePoly":
        out = SparsePoly.constant(self.field, self.r)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def format(self, var: str = "y", symbol: str = "a") -> str:
        """Human-readable form, e.g. ``a^5*x^5 + a^10*x^10``."""
        if not self.terms:
            return "0"
        parts = []
        for u, a in self.terms.items():
            mono = []
            for i, e in enumerate(u):
                if e == 0:
                    continue
                name = var if self.r == 1 else f"{var}{i + 1}"
                mono.append(name if e == 1 else f"{name}^{e}")
            coef = self.field.format(a, symbol)
            if not mono:
                parts.append(coef)
            elif coef == "1":
                parts.append("*".join(mono))
            else:
                parts.append("*".join([coef] + mono))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePoly({self.format()})"

    def to_json(self) -> list:
        return [[list(u), a] for u, a in self.terms.items()]


class Torus:
    """Points of (F_q^*)^r as an (n, r) array of discrete logs, lex ordered."""

    def __init__(self, field: GaloisField, r: int):
        self.field = field
        self.r = r
        self.logs = full_lattice(field, r)
        self.logs.flags.writeable = False

    @property
    def n(self) -> int:
        return len(self.logs)

    def __len__(self) -> int:
        return self.n


@lru_cache(maxsize=64)
def torus_points(field: GaloisField, r: int) -> Torus:
    return Torus(field, r)


def monomial_rows(exponents, torus: Torus) -> np.ndarray:
    """Log-domain evaluations of y^u for each row u; never ZERO on the torus."""
    E = np.asarray(exponents, dtype=np.int64).reshape(-1, torus.r)
    return (E @ torus.logs.T) % torus.field.order


def evaluate(f: SparsePoly, torus: Torus) -> np.ndarray:
    """ev(f) = (f(t))_t as a log-domain vector of length (q-1)^r."""
    field = torus.field
    out = np.full(torus.n, ZERO, dtype=np.int64)
    if not f.terms:
        return out
    exps = np.array(list(f.terms), dtype=np.int64)
    coefs = np.array(list(f.terms.values()), dtype=np.int64)
    rows = (monomial_rows(exps, torus) + coefs[:, None]) % field.order
    for row in rows:
        out = field.add(out, row)
    return np.asarray(out)


@dataclass(frozen=True)
class LinearCode:
    """A linear code given by a full-rank generator matrix in log form."""

    field: GaloisField
    gen: np.ndarray
    label: str = ""
    meta: dict = dc_field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return self.gen.shape[1]

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def alphabet(self) -> int:
        return self.field.q

    def symbols(self) -> np.ndarray:
        """Generator matrix in packed integer (vector) representation."""
        return np.asarray(self.field.to_vector(self.gen))

    def residues(self) -> np.ndarray:
        """Generator matrix as residues mod p (prime-field codes only)."""
        if self.field.s != 1:
            raise ValueError("residues() is only defined for prime-field codes")
        return self.symbols()

    def __str__(self) -> str:
        return f"[{self.n},{self.k}]_{self.field.q}"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "field": self.field.to_json(),
            "n": self.n,
            "k": self.k,
            "encoding": "log",
            "rows": self.gen.tolist(),
        }

    def to_text(self) -> str:
        """Plain table: prime-field codes as residues, others as logs with '.' for zero."""
        lines = [f"# {self.label} {self}"]
        if self.field.s == 1:
            for row in self.symbols():
                lines.append("".join(str(int(c)) for c in row))
        else:
            for row in self.gen:
                lines.append(" ".join("." if c < 0 else str(int(c)) for c in row))
        return "\n".join(lines)


def make_code(field: GaloisField, gen, label: str = "", n: int | None = None) -> LinearCode:
    gen = np.asarray(gen, dtype=np.int64)
    if gen.size == 0:
        gen = gen.reshape(0, n if n is not None else (gen.shape[-1] if gen.ndim == 2 else 0))
    rank = rank_gf(field, gen)
    if rank != gen.shape[0]:
        raise ArithmeticError(f"{label}: generator rows are dependent (rank {rank} < {gen.shape[0]})")
    gen.flags.writeable = False
    return LinearCode(field, gen, label)


def gt_code(U: ExponentSet, label: str = "C_U") -> LinearCode:
    """Generalized toric code C_U over F_q: rows ev(y^u), u in U (lex order)."""
    if len(U) == 0:
        raise ValueError("GT code needs a nonempty exponent set")
    torus = torus_points(U.field, U.r)
    return make_code(U.field, monomial_rows(U.elements, torus), label)


def dual_gt_code(U: ExponentSet, label: str = "C_U^perp") -> LinearCode:
    field, r = U.field, U.r
    perp = u_perp(U)
    torus = torus_points(field, r)
    if len(perp) == 0:
        return make_code(field, np.zeros((0, torus.n), dtype=np.int64), label, n=torus.n)
    return make_code(field, monomial_rows(perp.elements, torus), label)


def orthogonal(a: LinearCode, b: LinearCode) -> bool:
    if a.k == 0 or b.k == 0:
        return True
    prod = matmul_gf(a.field, a.gen, b.gen.T)
    return bool(np.all(prod < 0))


def theta_power(f: SparsePoly, i: int) -> SparsePoly:
    """f(y_1, ..., y_r) -> f(y_1^i, ..., y_r^i) for i coprime to q-1."""
    N = f.field.order
    if gcd(i, N) != 1:
        raise ValueError(f"{i} is not coprime to {N}")
    return SparsePoly(f.field, f.r, {tuple(c * i % N for c in u): a for u, a in f.terms.items()})


def theta_scale(f: SparsePoly, alpha) -> SparsePoly:
    """f(y) -> f(alpha_1 y_1, ..., alpha_r y_r); ``alpha`` holds nonzero log indices."""
    alpha = [int(a) for a in alpha]
    if len(alpha) != f.r:
        raise ValueError("scaling tuple has wrong length")
    if any(a < 0 for a in alpha):
        raise ValueError("scaling factors must be nonzero")
    N = f.field.order
    return SparsePoly(
        f.field,
        f.r,
        {u: (a + sum(x * c for x, c in zip(alpha, u))) % N for u, a in f.terms.items()},
    )


def frobenius_poly(f: SparsePoly) -> SparsePoly:
    """f^p in R: coefficient a at u becomes a^p at p*u."""
    p, N = f.field.p, f.field.order
    return SparsePoly(
        f.field,
        f.r,
        {tuple(c * p % N for c in u): f.field.pow(a, p) for u, a in f.terms.items()},
    )


def evaluation_matrix(field: GaloisField, r: int) -> np.ndarray:
    """ev on every monomial of H; square and invertible."""
    torus = torus_points(field, r)
    return monomial_rows(torus.logs, torus)
