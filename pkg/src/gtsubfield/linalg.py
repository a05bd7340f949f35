"""Exact Gaussian elimination over F_p (residue arrays) and GF(q) (log arrays)."""

from __future__ import annotations

import numpy as np

from .galois import ZERO, GaloisField


def rref_mod_p(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of ``M`` over F_p.

    Returns the reduced matrix (zero rows dropped) and its pivot columns.
    """
    R = np.array(M, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    m, n = R.shape
    inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if len(nz) == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = R[row] * inv[R[row, col]] % p
        factors = R[:, col].copy()
        factors[row] = 0
        hit = np.nonzero(factors)[0]
        if len(hit):
            R[hit] = (R[hit] - np.outer(factors[hit], R[row])) % p
        pivots.append(col)
        row += 1
    return R[:row], pivots


def rank_mod_p(M, p: int) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref_mod_p(M, p)[1])


def nullspace_mod_p(M, p: int) -> np.ndarray:
    """Basis (as rows) of {x : M x = 0} over F_p."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref_mod_p(M, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-R[r, f]) % p
    return basis


def row_space_basis_mod_p(M, p: int) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return M.reshape(0, M.shape[-1] if M.ndim == 2 else 0)
    return rref_mod_p(M, p)[0]


def same_row_space_mod_p(A, B, p: int) -> bool:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    ra = rank_mod_p(A, p)
    rb = rank_mod_p(B, p)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank_mod_p(np.vstack([A, B]), p) == ra


def contains_mod_p(A, B, p: int) -> bool:
    """Whether every row of ``B`` lies in the row space of ``A``."""
    B = np.asarray(B, dtype=np.int64)
    if B.size == 0:
        return True
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return not np.any(B % p)
    return rank_mod_p(np.vstack([A, B]), p) == rank_mod_p(A, p)


def matmul_mod_p(A, B, p: int) -> np.ndarray:
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64)) % p


# ----------------------------------------------------------------------
# GF(q), log-domain matrices
# ----------------------------------------------------------------------


def rref_gf(field: GaloisField, M) -> tuple[np.ndarray, list[int]]:
    """Row-reduce a log-domain matrix over ``field``; zero rows dropped."""
    R = np.array(M, dtype=np.int64)
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(R[row:, col] >= 0)[0]
        if len(nz) == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = field.mul(R[row], field.inv(int(R[row, col])))
        others = np.nonzero(R[:, col] >= 0)[0]
        others = others[others != row]
        if len(others):
            # row_i <- row_i - c_i * pivot_row
            factors = field.neg(R[others, col])
            R[others] = field.add(R[others], field.mul(factors[:, None], R[row][None, :]))
        pivots.append(col)
        row += 1
    return R[:row], pivots


def rank_gf(field: GaloisField, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref_gf(field, M)[1])


def matmul_gf(field: GaloisField, A, B) -> np.ndarray:
    """A @ B over ``field`` with log-domain operands."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.full((A.shape[0], B.shape[1]), ZERO, dtype=np.int64)
    for t in range(A.shape[1]):
        out = field.add(out, field.mul(A[:, t, None], B[None, t, :]))
    return np.asarray(out)
