"""Cartan data, reflections, root classification, Schur probing."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverdec import (
    IMAGINARY,
    NOT_POSITIVE_ROOT,
    REAL,
    NegativeCoordinate,
    SelfLoopPresent,
    UnknownVertex,
    VertexMismatch,
    ZeroVector,
    bilinear,
    bilinear2,
    cartan,
    classify,
    norm,
    real_roots_up_to,
    reflect_simple,
    schur_probe,
)
from quiverdec.rep import Quiver

from conftest import a2, a3_path, jordan, kronecker


def gamma(m):
    return kronecker(m)


# ---------------------------------------------------------------------------
# cartan
# ---------------------------------------------------------------------------

def test_cartan_examples():
    assert cartan(a2()).a == ((2, -1), (-1, 2))
    kron = cartan(gamma(2)).a
    assert kron == ((2, -2), (-2, 2))
    # extended Dynkin: det A = 0
    assert kron[0][0] * kron[1][1] - kron[0][1] * kron[1][0] == 0
    assert cartan(gamma(3)).a == ((2, -3), (-3, 2))


def test_cartan_ignores_orientation():
    flipped = Quiver(("v1", "v2"), (("v2", "v1"), ("v1", "v2")))
    assert cartan(flipped).a == cartan(gamma(2)).a


def test_cartan_rejects_self_loops():
    with pytest.raises(SelfLoopPresent):
        cartan(jordan())


# ---------------------------------------------------------------------------
# bilinear form
# ---------------------------------------------------------------------------

def test_bilinear_examples():
    cd = cartan(a2())
    alpha = {"v1": 1, "v2": 1}
    assert bilinear(cd, alpha, alpha) == Fraction(1)

    kd = cartan(gamma(2))
    delta = {"v1": 1, "v2": 1}
    assert bilinear(kd, delta, delta) == Fraction(0)


def test_gamma_m_norm_formula():
    # (alpha | alpha) = n1^2 + n2^2 - m*n1*n2 on the m-arrow quiver
    for m in (1, 2, 3, 4):
        cd = cartan(gamma(m))
        for n1, n2 in itertools.product(range(4), repeat=2):
            alpha = {"v1": n1, "v2": n2}
            assert norm(cd, alpha) == n1 * n1 + n2 * n2 - m * n1 * n2


def test_bilinear_vertex_mismatch():
    cd = cartan(a2())
    with pytest.raises(VertexMismatch):
        bilinear2(cd, {"v1": 1}, {"v1": 1, "v2": 0})


# ---------------------------------------------------------------------------
# reflections
# ---------------------------------------------------------------------------

def test_reflect_examples():
    cd = cartan(a2())
    assert reflect_simple(cd, "v1", {"v1": 0, "v2": 1}) == {"v1": 1, "v2": 1}
    assert reflect_simple(cd, "v1", {"v1": 1, "v2": 0}) == {"v1": -1, "v2": 0}

    kd = cartan(gamma(2))
    assert reflect_simple(kd, "v2", {"v1": 1, "v2": 1}) == {"v1": 1, "v2": 1}


def test_reflect_unknown_vertex():
    with pytest.raises(UnknownVertex):
        reflect_simple(cartan(a2()), "vX", {"v1": 1, "v2": 0})


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_reflection_involution_and_invariance(data):
    quiver = data.draw(st.sampled_from([a2(), gamma(2), gamma(3), a3_path()]))
    cd = cartan(quiver)
    coords = {
        v: data.draw(st.integers(-3, 3), label=f"alpha[{v}]") for v in cd.vertices
    }
    beta = {
        v: data.draw(st.integers(-3, 3), label=f"beta[{v}]") for v in cd.vertices
    }
    for v in cd.vertices:
        assert reflect_simple(cd, v, reflect_simple(cd, v, coords)) == coords
        # the form is Weyl-invariant
        assert bilinear2(cd, reflect_simple(cd, v, coords), reflect_simple(cd, v, beta)) == bilinear2(cd, coords, beta)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def test_classify_a2_real():
    result = classify(cartan(a2()), {"v1": 1, "v2": 1})
    assert result.verdict == REAL
    assert result.norm == 1
    assert len(result.word) == 1
    assert sum(result.core.values()) == 1


def test_classify_kronecker_imaginary_immediate():
    kd = cartan(gamma(2))
    for n in (1, 2, 3):
        result = classify(kd, {"v1": n, "v2": n})
        assert result.verdict == IMAGINARY
        assert result.word == ()
        assert result.core == {"v1": n, "v2": n}


def test_classify_a2_2_1_not_root():
    result = classify(cartan(a2()), {"v1": 2, "v2": 1})
    assert result.verdict == NOT_POSITIVE_ROOT
    assert result.norm == 3


def test_classify_gamma3_1_1_imaginary():
    result = classify(cartan(gamma(3)), {"v1": 1, "v2": 1})
    assert result.verdict == IMAGINARY
    assert result.norm == -1


def test_classify_errors():
    cd = cartan(a2())
    with pytest.raises(ZeroVector):
        classify(cd, {"v1": 0, "v2": 0})
    with pytest.raises(NegativeCoordinate):
        classify(cd, {"v1": -1, "v2": 1})


def test_classify_word_replay_and_norm_signs():
    quivers = [a2(), gamma(2), gamma(3), a3_path()]
    for quiver in quivers:
        cd = cartan(quiver)
        size = len(cd.vertices)
        for coords in itertools.product(range(4), repeat=size):
            if not any(coords):
                continue
            alpha = dict(zip(cd.vertices, coords))
            result = classify(cd, alpha)
            if result.verdict == REAL:
                assert result.norm == 1
            elif result.verdict == IMAGINARY:
                assert result.norm <= 0
            if result.core is not None:
                replayed = dict(result.core)
                for v in reversed(result.word):
                    replayed = reflect_simple(cd, v, replayed)
                assert replayed == alpha


# ---------------------------------------------------------------------------
# real root enumeration
# ---------------------------------------------------------------------------

def test_real_roots_a2():
    roots = real_roots_up_to(cartan(a2()), 2)
    as_tuples = {(r["v1"], r["v2"]) for r in roots}
    assert as_tuples == {(1, 0), (0, 1), (1, 1)}


def test_real_roots_kronecker_bound3():
    # oracle: norm-1 solutions with coordinate sum <= 3 have |n1 - n2| = 1
    expected = {
        (n1, n2)
        for n1, n2 in itertools.product(range(4), repeat=2)
        if n1 + n2 <= 3 and n1 * n1 + n2 * n2 - 2 * n1 * n2 == 1
    }
    roots = real_roots_up_to(cartan(gamma(2)), 3)
    assert {(r["v1"], r["v2"]) for r in roots} == expected == {(1, 0), (0, 1), (1, 2), (2, 1)}


def test_real_roots_gamma3_bound4():
    expected = {
        (n1, n2)
        for n1, n2 in itertools.product(range(5), repeat=2)
        if 0 < n1 + n2 <= 4 and n1 * n1 + n2 * n2 - 3 * n1 * n2 == 1
    }
    roots = real_roots_up_to(cartan(gamma(3)), 4)
    assert {(r["v1"], r["v2"]) for r in roots} == expected == {(1, 0), (0, 1), (1, 3), (3, 1)}


def test_real_roots_agree_with_classifier():
    # every vector in range classifying REAL appears; everything returned
    # classifies REAL
    for quiver, bound in [(a2(), 4), (gamma(2), 4), (a3_path(), 4)]:
        cd = cartan(quiver)
        size = len(cd.vertices)
        found = {tuple(r[v] for v in cd.vertices) for r in real_roots_up_to(cd, bound)}
        expected = set()
        for coords in itertools.product(range(bound + 1), repeat=size):
            if not any(coords) or sum(coords) > bound:
                continue
            if classify(cd, dict(zip(cd.vertices, coords))).verdict == REAL:
                expected.add(coords)
        assert found == expected


# ---------------------------------------------------------------------------
# Schur probing
# ---------------------------------------------------------------------------

def test_schur_probe_a2(gf5):
    min_end, fraction = schur_probe(a2(), {"v1": 1, "v2": 1}, gf5, 100, seed=1)
    assert min_end == 1
    assert fraction > Fraction(1, 2)


def test_schur_probe_two_dim_single_vertex(gf3):
    quiver = Quiver(("v1",), ())
    min_end, fraction = schur_probe(quiver, {"v1": 2}, gf3, 10, seed=0)
    assert min_end == 4  # End is all of M_2 for every sample
    assert fraction == 0


def test_schur_probe_kronecker_fraction(gf2):
    # oracle: of the 4 representations of dimension (1,1) over GF(2),
    # exactly the 3 nonzero ones are absolutely indecomposable
    from quiverdec import decide_abs_indec
    from quiverdec.census import enumerate_reps

    exact = sum(
        decide_abs_indec(rep).absolutely_indecomposable
        for rep in enumerate_reps(kronecker(), {"v1": 1, "v2": 1}, gf2)
    )
    assert exact == 3

    min_end, fraction = schur_probe(kronecker(), {"v1": 1, "v2": 1}, gf2, 50, seed=7)
    assert min_end == 1
    assert fraction >= Fraction(1, 2)
