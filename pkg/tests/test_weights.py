import itertools
import time

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gtsubfield.exponents import ExponentSet, full_lattice
from gtsubfield.galois import ZERO, build_field
from gtsubfield.subfield import annihilator, dual_subfield_code, subfield_subcode
from gtsubfield.torus import dual_gt_code, gt_code, make_code
from gtsubfield.weights import (
    BudgetExceeded,
    WeightDistribution,
    _gray_positions,
    macwilliams,
    min_distance,
    pair_distances,
    weight_distribution,
)

from conftest import brute_weights


def prime_code(p, rows, label="test"):
    f = build_field(p)
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, np.shape(rows)[-1])
    return make_code(f, f.from_prime(rows), label, n=rows.shape[1])


def test_repetition():
    W = weight_distribution(prime_code(2, [[1, 1, 1]]))
    assert W.counts == (1, 0, 0, 1) and W.min_distance == 3


def test_macwilliams_examples():
    full = WeightDistribution((1, 3, 3, 1), 3, 2)
    assert macwilliams(full, 0).counts == (1, 0, 0, 0)
    rep = WeightDistribution((1, 0, 0, 1), 3, 2)
    even = macwilliams(rep, 2)
    assert even.counts == tuple(brute_weights([[1, 1, 0], [0, 1, 1]], 2))
    assert even.counts == (1, 0, 3, 0) and even.min_distance == 2


def test_macwilliams_rejects_inconsistent_input():
    with pytest.raises(ValueError):
        macwilliams(WeightDistribution((1, 0, 0, 1), 3, 2), 1)
    with pytest.raises(ArithmeticError):
        macwilliams(WeightDistribution((1, 3, 0, 0), 3, 2), 1)


@pytest.mark.parametrize("p,m", [(2, 5), (3, 4), (5, 2)])
def test_gray_walk_visits_every_combination(p, m):
    state = [0] * m
    seen = {tuple(state)}
    for pos in _gray_positions(p, m):
        state[pos] = (state[pos] + 1) % p
        seen.add(tuple(state))
    assert len(seen) == p**m


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 6), st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_enumeration_matches_brute_force(p, k, n, seed):
    rng = np.random.default_rng(seed)
    rows = rng.integers(0, p, (k, n))
    from gtsubfield.linalg import row_space_basis_mod_p

    basis = row_space_basis_mod_p(rows, p)
    if len(basis) == 0:
        return
    code = prime_code(p, basis)
    assert list(weight_distribution(code).counts) == brute_weights(basis, p)


def test_enumeration_splits_low_and_high_blocks(monkeypatch):
    import gtsubfield.weights as w

    rng = np.random.default_rng(11)
    for p in (2, 3):
        rows = rng.integers(0, p, (7, 20))
        code = prime_code(p, w_basis(rows, p))
        expect = weight_distribution(code)
        monkeypatch.setattr(w, "_LOW_ROWS_BINARY", 1 << 2)
        monkeypatch.setattr(w, "_LOW_BYTES", 20 * p**2)
        assert weight_distribution(code) == expect
        monkeypatch.undo()


def w_basis(rows, p):
    from gtsubfield.linalg import row_space_basis_mod_p

    return row_space_basis_mod_p(rows, p)


def brute_weights_gf(code):
    f = code.field
    counts = [0] * (code.n + 1)
    for msg in itertools.product(f.elements().tolist(), repeat=code.k):
        word = np.full(code.n, ZERO)
        for m, row in zip(msg, code.gen):
            word = f.add(word, f.mul(m, row))
        counts[int(np.count_nonzero(np.asarray(word) >= 0))] += 1
    return counts


@pytest.mark.parametrize("ps,r,U", [((2, 2), 2, [[0, 0], [1, 2]]), ((3, 2), 1, [[0], [3], [5]]), ((2, 3), 1, [[1], [2], [6]])])
def test_extension_field_enumeration(ps, r, U):
    f = build_field(*ps)
    C = gt_code(ExponentSet(U, f, r))
    assert list(weight_distribution(C).counts) == brute_weights_gf(C)


def test_gt_code_macwilliams_over_gf_q(gf8):
    # Reed-Solomon [7,3,5] over GF(8) and its dual [7,4,4]
    U = ExponentSet([[0], [1], [2]], gf8, 1)
    C, Cp = gt_code(U), dual_gt_code(U)
    rc = min_distance(C, Cp)
    assert rc.d == 5 and rc.cross_checked
    assert min_distance(Cp, C).d == 4


def test_budget():
    code = prime_code(2, np.eye(10, dtype=int))
    with pytest.raises(BudgetExceeded):
        weight_distribution(code, budget=512)


def test_min_distance_paths(gf8):
    U = ExponentSet([[1, 0], [2, 0], [4, 0], [0, 1], [0, 2], [0, 4]], gf8, 2)
    D, Dp = subfield_subcode(U), dual_subfield_code(U)
    assert min_distance(D).d == 24
    r = min_distance(Dp, D)
    assert (r.d, r.method) == (3, "via_dual")
    nothing = min_distance(Dp, D, budget=8)
    assert nothing.method == "not_verified" and nothing.d is None


def test_zero_code():
    f = build_field(2)
    z = make_code(f, np.zeros((0, 5), dtype=np.int64), "zero", n=5)
    r = min_distance(z)
    assert r.d is None and r.method == "zero_code"


def test_ix_via_dual(gf8):
    U = [[0, 0], [1, 0], [2, 0], [4, 0], [3, 0], [6, 0], [5, 0], [0, 1], [0, 2], [0, 4], [1, 1], [2, 2], [4, 4],
         [2, 1], [4, 2], [1, 4], [3, 1], [6, 2], [5, 4], [4, 1], [1, 2], [2, 4], [5, 1], [3, 2], [6, 4], [6, 1],
         [5, 2], [3, 4], [0, 3], [0, 6], [0, 5], [1, 3], [2, 6], [4, 5], [2, 3], [4, 6], [1, 5], [3, 3], [6, 6],
         [5, 5], [4, 3], [1, 6], [2, 5], [5, 3], [3, 6], [6, 5]]
    E = ExponentSet(U, gf8, 2)
    D, Dp = subfield_subcode(E), dual_subfield_code(E)
    assert Dp.k == 3
    d = macwilliams(weight_distribution(Dp), D.k)
    assert (D.k, d.min_distance) == (46, 2)


def test_pair_distances_orientation(gf16):
    U = ExponentSet([[i] for i in range(9)], gf16, 1)
    D, Dp = subfield_subcode(U), dual_subfield_code(U)
    a, b = pair_distances(D, Dp)
    assert (a.d, b.d) == (7, 4)
    b2, a2 = pair_distances(Dp, D)
    assert (a2.d, b2.d) == (7, 4)


def test_enumeration_is_reproducible(gf9):
    U = ExponentSet([[5, 0], [7, 0], [5, 5], [7, 7], [0, 0]], gf9, 2)
    D = subfield_subcode(U)
    assert weight_distribution(D) == weight_distribution(D)


def test_binary_performance_2_pow_21(gf8):
    U = [[1, 0], [2, 0], [4, 0], [0, 1], [0, 2], [0, 4], [1, 1], [2, 2], [4, 4], [2, 1], [4, 2], [1, 4], [3, 1],
         [6, 2], [5, 4], [4, 1], [1, 2], [2, 4], [1, 3], [2, 6], [4, 5]]
    D = subfield_subcode(ExponentSet(U, gf8, 2))
    assert D.k == 21
    t = time.perf_counter()
    W = weight_distribution(D)
    assert time.perf_counter() - t < 10
    assert W.min_distance == 12 and W.total == 2**21


def test_annihilator_roundtrip():
    code = prime_code(3, [[1, 0, 2, 1], [0, 1, 1, 1]])
    dual = annihilator(code)
    assert dual.k == 2
    assert macwilliams(weight_distribution(dual), 2) == weight_distribution(code)
