"""Counting, interpolation and orientation sweeps."""

from __future__ import annotations

import itertools

import pytest

from quiverdec import (
    InsufficientPoints,
    KacCountTable,
    NonIntegerCoefficients,
    TooLarge,
    cartan,
    count_classes_canonical,
    count_classes_stabilizer,
    enumerate_reps,
    gl_order,
    interpolate_kac,
    orientation_sweep,
)
from quiverdec.census import (
    enumerate_gl,
    make_int_polynomial,
    rep_from_index,
    total_states,
)

from conftest import a2, a3_path, jordan, kronecker


def gamma(m):
    return kronecker(m)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def test_enumerate_count_and_order(gf2, gf3):
    reps = list(enumerate_reps(a2(), {"v1": 1, "v2": 1}, gf2))
    assert [r.maps[0].tolist() for r in reps] == [[[0]], [[1]]]

    reps = list(enumerate_reps(kronecker(), {"v1": 1, "v2": 1}, gf2))
    pairs = [(int(r.maps[0][0, 0]), int(r.maps[1][0, 0])) for r in reps]
    # the last entry varies fastest
    assert pairs == [(0, 0), (0, 1), (1, 0), (1, 1)]

    reps = list(enumerate_reps(gamma(3), {"v1": 1, "v2": 1}, gf3))
    assert len(reps) == 27
    assert len({tuple(r.entries().tolist()) for r in reps}) == 27


def test_enumerate_matches_index_decoding(gf3):
    quiver = kronecker()
    alpha = {"v1": 1, "v2": 1}
    for index, rep in enumerate(enumerate_reps(quiver, alpha, gf3)):
        assert rep == rep_from_index(quiver, alpha, gf3, index)


def test_enumerate_cap(gf3):
    with pytest.raises(TooLarge):
        list(enumerate_reps(gamma(3), {"v1": 2, "v2": 2}, gf3, cap=100))


def test_gl_order_matches_bruteforce(gf2, gf3):
    for spec, n in [(gf2, 1), (gf2, 2), (gf3, 1), (gf3, 2)]:
        assert len(enumerate_gl(spec, n)) == gl_order(n, spec.q)
    # inverses really invert
    spec = gf3
    for g, g_inv in enumerate_gl(spec, 2):
        assert spec.matmul(g, g_inv).tolist() == [[1, 0], [0, 1]]


# ---------------------------------------------------------------------------
# the two counting methods
# ---------------------------------------------------------------------------

def test_count_real_root_is_one(gf2, gf3):
    for spec in (gf2, gf3):
        assert count_classes_stabilizer(a2(), {"v1": 1, "v2": 1}, spec) == 1


def test_count_kronecker_delta(gf2):
    assert count_classes_stabilizer(kronecker(), {"v1": 1, "v2": 1}, gf2) == 3


def test_count_gamma3_formula(gf2, gf3):
    # oracle: nonzero triples up to scaling, (q^3 - 1)/(q - 1)
    for spec in (gf2, gf3):
        q = spec.q
        want = (q**3 - 1) // (q - 1)
        assert count_classes_stabilizer(gamma(3), {"v1": 1, "v2": 1}, spec) == want


def test_count_jordan_self_loop(gf2):
    assert count_classes_stabilizer(jordan(), {"v1": 2}, gf2) == 2
    assert count_classes_canonical(jordan(), {"v1": 2}, gf2) == 2


def test_count_non_root_is_zero(gf2):
    assert count_classes_stabilizer(a2(), {"v1": 2, "v2": 1}, gf2) == 0


def test_count_positive_exactly_on_roots(gf2):
    # counts are >= 1 exactly when the dimension vector is a positive root
    from quiverdec import IMAGINARY, REAL, classify

    for quiver in (a2(), kronecker(), gamma(3)):
        cd = cartan(quiver)
        for n1, n2 in itertools.product(range(3), repeat=2):
            if n1 == n2 == 0:
                continue
            alpha = {"v1": n1, "v2": n2}
            verdict = classify(cd, alpha).verdict
            count = count_classes_stabilizer(quiver, alpha, gf2)
            assert (count >= 1) == (verdict in (REAL, IMAGINARY)), (quiver, alpha)


def test_methods_agree(gf2, gf3):
    instances = [
        (a2(), {"v1": 1, "v2": 1}, gf2),
        (a2(), {"v1": 2, "v2": 1}, gf2),
        (kronecker(), {"v1": 1, "v2": 1}, gf2),
        (kronecker(), {"v1": 1, "v2": 1}, gf3),
        (kronecker(), {"v1": 1, "v2": 2}, gf2),
        (kronecker(), {"v1": 2, "v2": 1}, gf2),
        (gamma(3), {"v1": 1, "v2": 1}, gf2),
        (jordan(), {"v1": 1}, gf2),
        (jordan(), {"v1": 2}, gf2),
    ]
    for quiver, alpha, spec in instances:
        fast = count_classes_stabilizer(quiver, alpha, spec)
        slow = count_classes_canonical(quiver, alpha, spec)
        assert fast == slow, (quiver, alpha, spec.q)


def test_count_caps(gf3):
    with pytest.raises(TooLarge):
        count_classes_stabilizer(gamma(3), {"v1": 2, "v2": 2}, gf3, cap=10)
    with pytest.raises(TooLarge):
        count_classes_canonical(kronecker(), {"v1": 2, "v2": 2}, gf3, cap_group=5)


def test_parallel_jobs_agree(gf2):
    quiver = gamma(3)
    alpha = {"v1": 1, "v2": 2}  # 64 states: enough to take the parallel path
    serial = count_classes_stabilizer(quiver, alpha, gf2, jobs=1)
    parallel = count_classes_stabilizer(quiver, alpha, gf2, jobs=2)
    assert serial == parallel
    serial_c = count_classes_canonical(quiver, alpha, gf2, jobs=1)
    parallel_c = count_classes_canonical(quiver, alpha, gf2, jobs=2)
    assert serial_c == parallel_c == serial


# ---------------------------------------------------------------------------
# interpolation
# ---------------------------------------------------------------------------

def test_interpolate_kronecker_delta():
    quiver = kronecker()
    alpha = {"v1": 1, "v2": 1}
    table = KacCountTable.build(quiver, alpha, [(2, 3), (3, 4)])
    poly, diag = interpolate_kac(table, cartan(quiver))
    assert poly.coeffs == (1, 1)
    assert str(poly) == "q + 1"
    assert diag["monic"] and diag["degree_matches"] and diag["degree"] == 1
    assert diag["constant_term"] == 1


def test_interpolate_gamma3():
    quiver = gamma(3)
    alpha = {"v1": 1, "v2": 1}
    table = KacCountTable.build(quiver, alpha, [(2, 7), (3, 13), (4, 21)])
    poly, diag = interpolate_kac(table, cartan(quiver))
    assert str(poly) == "q^2 + q + 1"
    assert diag["expected_degree"] == 2
    assert diag["nonnegative_coefficients"]
    assert diag["constant_term"] == 1


def test_interpolate_constant_with_declared_norm():
    quiver = a2()
    table = KacCountTable.build(quiver, {"v1": 1, "v2": 1}, [(2, 1), (3, 1)])
    poly, diag = interpolate_kac(table, 1)  # declared norm instead of Cartan data
    assert poly.coeffs == (1,)
    assert diag["degree"] == 0 and diag["degree_matches"]


def test_interpolate_insufficient_points():
    quiver = gamma(3)
    table = KacCountTable.build(quiver, {"v1": 1, "v2": 1}, [(2, 7), (3, 13)])
    with pytest.raises(InsufficientPoints):
        interpolate_kac(table, cartan(quiver))  # degree 2 needs 3 points


def test_interpolate_non_integer_coefficients():
    quiver = kronecker()
    table = KacCountTable.build(quiver, {"v1": 1, "v2": 1}, [(2, 3), (4, 4)])
    with pytest.raises(NonIntegerCoefficients):
        interpolate_kac(table, cartan(quiver))


def test_polynomial_formatting():
    assert str(make_int_polynomial([0])) == "0"
    assert str(make_int_polynomial([1, 1, 1])) == "q^2 + q + 1"
    assert str(make_int_polynomial([0, 2])) == "2q"
    assert str(make_int_polynomial([5])) == "5"
    p = make_int_polynomial([1, 1])
    assert p(2) == 3 and p(5) == 6


def test_duplicate_q_rejected():
    with pytest.raises(ValueError):
        KacCountTable.build(a2(), {"v1": 1, "v2": 1}, [(2, 1), (2, 1)])


# ---------------------------------------------------------------------------
# orientation sweeps
# ---------------------------------------------------------------------------

def test_sweep_a2(gf2):
    quiver = a2()
    results = orientation_sweep(
        quiver.vertices, quiver.underlying_pairs(), {"v1": 1, "v2": 1}, gf2
    )
    assert len(results) == 2
    assert {count for _, count in results} == {1}


def test_sweep_kronecker(gf2):
    quiver = kronecker()
    results = orientation_sweep(
        quiver.vertices, quiver.underlying_pairs(), {"v1": 1, "v2": 1}, gf2
    )
    assert len(results) == 4
    assert {count for _, count in results} == {3}


def test_sweep_a3(gf2):
    quiver = a3_path()
    results = orientation_sweep(
        quiver.vertices, quiver.underlying_pairs(), {"v1": 1, "v2": 1, "v3": 1}, gf2
    )
    assert len(results) == 4
    counts = {count for _, count in results}
    assert counts == {1}  # (1,1,1) is a real root of A3


def test_sweep_cap(gf2):
    quiver = gamma(3)
    with pytest.raises(TooLarge):
        orientation_sweep(
            quiver.vertices, quiver.underlying_pairs(), {"v1": 2, "v2": 2}, gf2, cap=100
        )


def test_total_states(gf3):
    assert total_states(gamma(3), {"v1": 1, "v2": 1}, gf3) == 27
