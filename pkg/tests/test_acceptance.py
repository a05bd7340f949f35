"""Acceptance criteria, one test per criterion; a PASS/FAIL line per criterion is
printed in the pytest terminal summary."""

from __future__ import annotations

import time

import numpy as np
import pytest

from gtsubfield.exponents import ExponentSet, all_cosets, full_lattice
from gtsubfield.galois import DEFAULT_MODULI, build_field
from gtsubfield.jobs import run_suite
from gtsubfield.linalg import rank_gf, same_row_space_mod_p
from gtsubfield.subfield import (
    annihilator,
    coset_poly,
    delsarte_trace_rows,
    dual_as_subcode,
    dual_subfield_basis,
    dual_subfield_code,
    evaluate_basis,
    is_dual_pair,
    same_row_space,
    subfield_basis,
    subfield_subcode,
    subfield_subcode_oracle,
)
from gtsubfield.torus import (
    LinearCode,
    dual_gt_code,
    evaluate,
    evaluation_matrix,
    frobenius_poly,
    gt_code,
    theta_power,
    theta_scale,
    torus_points,
)
from gtsubfield.weights import codeword_count, macwilliams, weight_distribution

from conftest import ACCEPTANCE_LINES

N_RANDOM = 200


def record(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def random_sets(seed: int = 2024) -> list[ExponentSet]:
    """200 exponent sets over GF(4), GF(8), GF(9), r in {1, 2}; half coset-closed."""
    rng = np.random.default_rng(seed)
    fields = [build_field(2, 2), build_field(2, 3), build_field(3, 2)]
    out = []
    for i in range(N_RANDOM):
        f = fields[i % 3]
        r = 1 + (i // 3) % 2
        if i % 2 == 0:
            cosets = all_cosets(f, r)
            keep = rng.random(len(cosets)) < rng.uniform(0.1, 0.9)
            elems = [m for c, kp in zip(cosets, keep) if kp for m in c.members]
        else:
            H = full_lattice(f, r)
            elems = H[rng.random(len(H)) < rng.uniform(0.1, 0.9)].tolist()
        if not elems:
            elems = [[0] * r]
        out.append(ExponentSet(elems, f, r))
    return out


@pytest.fixture(scope="module")
def random_us():
    return random_sets()


@pytest.fixture(scope="module")
def gf8_rows():
    t = time.perf_counter()
    rows = run_suite("gf8")
    return rows, time.perf_counter() - t


@pytest.fixture(scope="module")
def gf9_rows():
    t = time.perf_counter()
    rows = run_suite("gf9")
    return rows, time.perf_counter() - t


def test_criterion_1_rs16():
    t = time.perf_counter()
    rows = {r["id"]: r for r in run_suite("rs16")}
    elapsed = time.perf_counter() - t
    want = {k: [15, 1, 15] for k in range(1, 9)}
    want.update({9: [15, 5, 7], 11: [15, 7, 5], 13: [15, 11, 3], 15: [15, 15, 1]})
    bad = [k for k, v in want.items() if rows[f"rs16-k{k}"]["D"] != v]
    record(1, not bad and elapsed < 1.0, f"RS/GF(16) D parameters, mismatches={bad}, {elapsed:.2f}s (< 1 s)")


def test_criterion_2_gf8(gf8_rows):
    rows, elapsed = gf8_rows
    rows = {r["id"]: r for r in rows}
    want = {
        "i": ([49, 6, 24], [49, 43, 3]),
        "iii": ([49, 10, 20], [49, 39, 4]),
        "iv": ([49, 15, 16], [49, 34, 6]),
        "v": ([49, 21, 12], [49, 28, 7]),
        "vi": ([49, 33, 6], [49, 16, 7]),
        "vii": ([49, 34, 6], [49, 15, 12]),
        "viii": ([49, 40, 4], [49, 9, 14]),
        "ix": ([49, 46, 2], [49, 3, 28]),
    }
    bad = []
    for name, (d, dp) in want.items():
        row = rows[f"gf8-{name}"]
        if row["D"] != d or row["Dperp"] != dp:
            bad.append(name)
        # dimension > 28 sides must come from MacWilliams
        for key, meth in (("D", "D_method"), ("Dperp", "Dperp_method")):
            if row[key][1] > 28 and row[meth] != "via_dual":
                bad.append(f"{name}:{key} method {row[meth]}")
    record(2, not bad and elapsed < 60, f"GF(8) r=2 suite, mismatches={bad}, {elapsed:.1f}s (< 60 s)")


def test_criterion_3_gf8_ii(gf8_rows):
    rows = {r["id"]: r for r in gf8_rows[0]}
    row = rows["gf8-ii"]
    f = build_field(2, 3)
    U = ExponentSet([[6, 3], [5, 6], [3, 5], [3, 1], [6, 2], [5, 4], [6, 1], [5, 2], [3, 4]], f, 2)
    # independent route: F_p null space of the oracle subcode
    alt = annihilator(subfield_subcode_oracle(U))
    ok = (
        row["D"][1] + row["Dperp"][1] == 49
        and same_row_space(alt, dual_subfield_code(U))
        and row["published"] == {"D": [49, 9, 20], "Dperp": [49, 39, 3]}
        and "discrepancy" in row["note"]
    )
    record(
        3,
        ok,
        f"GF(8) ii derived D={row['D']} D⊥={row['Dperp']} (published D⊥ [49,39,3] flagged, 9+39 != 49)",
    )


def test_criterion_4_gf9(gf9_rows):
    rows = {r["id"]: r for r in gf9_rows[0]}
    elapsed = gf9_rows[1]
    want = {
        "i": ([64, 4, 42], [64, 60, 2]),
        "ii": ([64, 9, 36], [64, 55, 4]),
        "iii": ([64, 12, 30], [64, 52, 4]),
        "iv": ([64, 50, 5], [64, 14, 27]),
    }
    bad = [n for n, (d, dp) in want.items() if rows[f"gf9-{n}"]["D"] != d or rows[f"gf9-{n}"]["Dperp"] != dp]
    iv = rows["gf9-iv"]
    if iv["D_method"] != "via_dual" or iv["Dperp_method"] != "direct":
        bad.append("iv: primal distance not obtained from the 3^14-word dual")
    record(4, not bad and elapsed < 300, f"GF(9) r=2 suite, mismatches={bad}, {elapsed:.1f}s (< 300 s)")


def test_criterion_5_uprime(gf8_rows, gf9_rows):
    rows = {r["id"]: r for r in gf8_rows[0] + gf9_rows[0]}
    bad = []
    for eid, dim in (("gf8-iii", 16), ("gf8-v", 25), ("gf9-iv", 55)):
        up = rows[eid]["uprime"]
        if not up["same_subcode"]:
            bad.append(f"{eid}: D_U' != D_U")
        if up["C_U_prime"][1] != dim:
            bad.append(f"{eid}: dim C_U' = {up['C_U_prime'][1]}")
        if up["C_distance_method"] != "not_verified":
            bad.append(f"{eid}: unexpectedly enumerated")
    record(5, not bad, f"U' experiments D_U' = D_U; C_U' distances 18/9/4 not desk-verifiable; issues={bad}")


def test_criterion_6_oracle(random_us):
    failures = [i for i, U in enumerate(random_us) if not same_row_space(subfield_subcode(U), subfield_subcode_oracle(U))]
    closed = sum(U.coset_closed for U in random_us)
    record(6, not failures, f"oracle equivalence on {len(random_us)} random U ({closed} coset-closed), failures={failures}")


def test_criterion_7_duality(random_us):
    failures = []
    for i, U in enumerate(random_us):
        D = subfield_subcode(U)
        Dp = dual_subfield_code(U)
        ok = is_dual_pair(D, Dp) and same_row_space(dual_as_subcode(U), Dp)
        ok = ok and same_row_space_mod_p(delsarte_trace_rows(U), Dp.residues(), U.field.p)
        if not ok:
            failures.append(i)
    record(7, not failures, f"G_D G_D⊥^T = 0, k + k⊥ = n, D_Û = span(dual basis), Delsarte trace span; failures={failures}")


def test_criterion_8_structure(random_us):
    issues = []
    for ps in sorted(DEFAULT_MODULI):
        f = build_field(*ps)
        for r in (1, 2) if f.q <= 64 else (1,):
            cosets = all_cosets(f, r)
            members = [m for c in cosets for m in c.members]
            if len(members) != len(set(members)) or len(members) != f.order**r:
                issues.append(f"partition {ps} r={r}")
            if any(f.s % c.size for c in cosets):
                issues.append(f"n_b does not divide s for {ps} r={r}")
    for ps, r in (((2, 2), 1), ((2, 2), 2), ((2, 3), 1), ((3, 2), 1)):
        f = build_field(*ps)
        if rank_gf(f, evaluation_matrix(f, r)) != f.order**r:
            issues.append(f"ev not invertible {ps} r={r}")
    for U in random_us:
        for poly in subfield_basis(U) + dual_subfield_basis(U):
            if frobenius_poly(poly.poly) != poly.poly:
                issues.append("basis polynomial not Frobenius-fixed")
                break
    rng = np.random.default_rng(8)
    fields = [build_field(2, 2), build_field(2, 3), build_field(3, 2), build_field(2, 4)]
    for t in range(100):
        f = fields[t % 4]
        r = 1 + t % 2
        T = torus_points(f, r)
        cosets = all_cosets(f, r)
        c = cosets[rng.integers(len(cosets))]
        sub = f.subfield_elements(c.size)[1:]
        poly = coset_poly(c, int(rng.choice(sub)), f).poly
        units = [i for i in range(1, f.order) if np.gcd(i, f.order) == 1]
        images = [
            theta_power(poly, int(rng.choice(units))),
            theta_scale(poly, rng.integers(0, f.order, r).tolist()),
            frobenius_poly(poly),
        ]
        for g in [poly] + images:
            if np.any(np.asarray(f.to_vector(evaluate(g, T))) >= f.p):
                issues.append(f"isomorphism image leaves F_p (trial {t})")
    record(8, not issues, f"cosets partition, n_b | s, ev invertible, f^p = f, θ_i/θ_α/Frobenius preserve F_p-valued; issues={issues[:5]}")


def _both_sides_small(limit: int = 1 << 20) -> list[tuple[LinearCode, LinearCode]]:
    pairs = []
    f16 = build_field(2, 4)
    for k in range(1, 16):
        U = ExponentSet([[i] for i in range(k)], f16, 1)
        pairs.append((subfield_subcode(U), dual_subfield_code(U)))
    for U in random_sets(seed=99)[:120]:
        D, Dp = subfield_subcode(U), dual_subfield_code(U)
        pairs.append((D, Dp))
        C, Cp = gt_code(U), dual_gt_code(U)
        pairs.append((C, Cp))
    return [(a, b) for a, b in pairs if codeword_count(a) <= limit and codeword_count(b) <= limit]


def test_criterion_9_macwilliams():
    pairs = _both_sides_small()
    bad = 0
    for a, b in pairs:
        wa, wb = weight_distribution(a), weight_distribution(b)
        if macwilliams(wb, a.k) != wa or macwilliams(wa, b.k) != wb:
            bad += 1
        elif macwilliams(macwilliams(wa, b.k), a.k) != wa:
            bad += 1
    record(9, bad == 0 and len(pairs) > 100, f"MacWilliams round trip and direct/via-dual agreement on {len(pairs)} code pairs, mismatches={bad}")
