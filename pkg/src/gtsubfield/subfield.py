"""Subfield-subcodes D_U = C_U ∩ F_p^n of GT codes and their duals.

The basis comes from the coset polynomials
``f_{I,beta} = beta*y^b + beta^p*y^(pb) + ...`` for each cyclotomic coset
``I`` wholly inside U, with ``beta`` running over ``1, g, ..., g^(n_I - 1)``
for the pinned generator ``g`` of GF(p^{n_I}). The dual uses the cosets that
meet U^perp. :func:`subfield_subcode_oracle` recomputes D_U by brute linear
algebra and shares none of that machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exponents import (
    CyclotomicCoset,
    ExponentSet,
    contained_cosets,
    meeting_cosets,
    u_hat,
    u_perp,
)
from .galois import FieldError, GaloisField
from .linalg import nullspace_mod_p, row_space_basis_mod_p, same_row_space_mod_p
from .torus import LinearCode, SparsePoly, dual_gt_code, evaluate, frobenius_poly, gt_code, make_code, torus_points


@dataclass(frozen=True)
class CosetPolynomial:
    coset: CyclotomicCoset
    beta: int
    poly: SparsePoly

    def format(self, var: str = "y") -> str:
        return self.poly.format(var)


def coset_poly(coset: CyclotomicCoset, beta: int, field: GaloisField) -> CosetPolynomial:
    """f_{I,beta}: support ``coset``, coefficient beta^(p^i) at p^i * leader."""
    beta = int(beta)
    if beta < 0:
        raise FieldError("coset polynomial needs a nonzero leading coefficient")
    if not field.in_subfield(beta, coset.size):
        raise FieldError(
            f"{field.format(beta)} is not in GF({field.p}^{coset.size}); "
            "the polynomial would not evaluate into the prime field"
        )
    terms = {u: field.frobenius(beta, i) for i, u in enumerate(coset.members)}
    return CosetPolynomial(coset, beta, SparsePoly(field, len(coset.leader), terms))


def trace_poly(g: SparsePoly) -> SparsePoly:
    """T(g) = g + g^p + ... + g^(p^(s-1)) in R."""
    out = g
    h = g
    for _ in range(1, g.field.s):
        h = frobenius_poly(h)
        out = out + h
    return out


def coset_basis(coset: CyclotomicCoset, field: GaloisField) -> list[CosetPolynomial]:
    step = field.subfield_primitive(coset.size)
    return [coset_poly(coset, step * j % field.order, field) for j in range(coset.size)]


def subfield_basis(U: ExponentSet) -> list[CosetPolynomial]:
    """Polynomial basis of D_U, ordered by coset leader then beta exponent."""
    return [f for c in contained_cosets(U) for f in coset_basis(c, U.field)]


def dual_subfield_basis(U: ExponentSet) -> list[CosetPolynomial]:
    """Polynomial basis of D_U^perp: cosets meeting U^perp."""
    return [f for c in meeting_cosets(u_perp(U)) for f in coset_basis(c, U.field)]


def _prime_code(field: GaloisField, residues, label: str, n: int) -> LinearCode:
    pf = field.prime_field()
    residues = np.asarray(residues, dtype=np.int64).reshape(-1, n)
    return make_code(pf, pf.from_prime(residues), label, n=n)


def evaluate_basis(polys: list[CosetPolynomial], field: GaloisField, r: int) -> np.ndarray:
    """Evaluations of prime-field-valued polynomials as residues mod p."""
    torus = torus_points(field, r)
    if not polys:
        return np.zeros((0, torus.n), dtype=np.int64)
    rows = np.array([evaluate(f.poly, torus) for f in polys])
    return np.asarray(field.to_prime(rows))


def subfield_subcode(U: ExponentSet, label: str = "D_U") -> LinearCode:
    field = U.field
    n = field.order**U.r
    return _prime_code(field, evaluate_basis(subfield_basis(U), field, U.r), label, n)


def dual_subfield_code(U: ExponentSet, label: str = "D_U^perp") -> LinearCode:
    field = U.field
    n = field.order**U.r
    return _prime_code(field, evaluate_basis(dual_subfield_basis(U), field, U.r), label, n)


def dual_as_subcode(U: ExponentSet, label: str = "D_Uhat") -> LinearCode:
    """D_Û, which coincides with D_U^perp."""
    Uh = u_hat(U)
    n = U.field.order**U.r
    if len(Uh) == 0:
        return _prime_code(U.field, [], label, n)
    return subfield_subcode(Uh, label)


def subfield_subcode_oracle(U: ExponentSet, label: str = "D_U (oracle)") -> LinearCode:
    """C_U ∩ F_p^n by expanding C_U over the basis 1, alpha, ..., alpha^(s-1).

    Each F_q generator row g_i gives s F_p-generators alpha^a * g_i; we keep
    the F_p-combinations whose non-constant digits vanish in every coordinate.
    """
    field = U.field
    p, s = field.p, field.s
    n = field.order**U.r
    if len(U) == 0:
        return _prime_code(field, [], label, n)
    G = gt_code(U).gen
    expanded = np.concatenate([np.asarray(field.mul(G, a)) for a in range(s)])  # (s*k, n)
    digits = field.digits(expanded)  # (s*k, n, s)
    const = digits[:, :, 0]
    if s == 1:
        return _prime_code(field, row_space_basis_mod_p(const, p), label, n)
    higher = digits[:, :, 1:].reshape(len(expanded), -1)
    combos = nullspace_mod_p(higher.T, p)
    if len(combos) == 0:
        return _prime_code(field, [], label, n)
    words = combos @ const % p
    return _prime_code(field, row_space_basis_mod_p(words, p), label, n)


def delsarte_trace_rows(U: ExponentSet) -> np.ndarray:
    """Componentwise traces of alpha^a * (rows of C_U^perp), a < s, as residues."""
    field = U.field
    C = dual_gt_code(U)
    if C.k == 0:
        return np.zeros((0, C.n), dtype=np.int64)
    rows = np.concatenate([np.asarray(field.mul(C.gen, a)) for a in range(field.s)])
    return np.asarray(field.to_prime(field.trace(rows)))


def trace_preimage_poly(f: CosetPolynomial, field: GaloisField) -> SparsePoly:
    """gamma * y^b with T(gamma * y^b) == f, gamma found by exhaustive search."""
    gamma = field.trace_preimage(f.beta, f.coset.size)
    return SparsePoly.monomial(field, f.coset.leader, gamma)


# ----------------------------------------------------------------------
# prime-field code helpers
# ----------------------------------------------------------------------


def annihilator(code: LinearCode, label: str | None = None) -> LinearCode:
    """Exact dual of a prime-field code via the F_p null space."""
    p = code.field.p
    if code.field.s != 1:
        raise ValueError("annihilator() works on prime-field codes")
    basis = nullspace_mod_p(code.residues(), p) if code.k else np.eye(code.n, dtype=np.int64)
    return make_code(code.field, code.field.from_prime(basis), label or f"{code.label}^perp", n=code.n)


def same_row_space(a: LinearCode, b: LinearCode) -> bool:
    if a.field.p != b.field.p or a.n != b.n:
        return False
    return same_row_space_mod_p(a.residues(), b.residues(), a.field.p)


def is_dual_pair(a: LinearCode, b: LinearCode) -> bool:
    """G_a G_b^T = 0 and k_a + k_b = n."""
    p = a.field.p
    if a.k + b.k != a.n:
        return False
    if a.k == 0 or b.k == 0:
        return True
    return not np.any(a.residues() @ b.residues().T % p)


__all__ = [
    "CosetPolynomial",
    "annihilator",
    "coset_basis",
    "coset_poly",
    "delsarte_trace_rows",
    "dual_as_subcode",
    "dual_subfield_basis",
    "dual_subfield_code",
    "evaluate_basis",
    "is_dual_pair",
    "same_row_space",
    "subfield_basis",
    "subfield_subcode",
    "subfield_subcode_oracle",
    "trace_poly",
    "trace_preimage_poly",
]
