import random

import pytest

from horoaut import (
    BadFaceStructure,
    DemazureRoot,
    Fan,
    NotComplete,
    NotPrimitiveRay,
    NotSmooth,
    classify_roots,
    demazure_roots,
    demazure_roots_bruteforce,
    projective_space_fan,
    safe_oracle_radius,
    toric_aut_report,
    validate_fan,
)
from horoaut.linalg import invert_unimodular
from helpers import hirzebruch_fan, p1p1_fan, p2_fan, product_fan, random_refined_fans


def roots_of(fan):
    return [r.m for r in demazure_roots(fan)]


# -- validation ---------------------------------------------------------------


def test_p2_valid():
    fan = p2_fan()
    assert fan._validated


def test_two_cones_not_complete():
    with pytest.raises(NotComplete):
        validate_fan(Fan(2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2))))


def test_singular_cone():
    with pytest.raises(NotSmooth) as err:
        validate_fan(Fan(2, ((1, 0), (1, 2)), ((0, 1),)))
    assert "2" in str(err.value)


def test_non_primitive_and_zero_rays():
    with pytest.raises(NotPrimitiveRay):
        validate_fan(Fan(2, ((2, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (2, 0))))
    with pytest.raises(NotPrimitiveRay):
        validate_fan(Fan(2, ((0, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (2, 0))))


def test_duplicate_ray():
    with pytest.raises(BadFaceStructure):
        validate_fan(Fan(2, ((1, 0), (1, 0), (0, 1)), ((0, 2), (1, 2))))


def test_overlapping_cones():
    # second cone sits inside the first: intersection is not a common face
    with pytest.raises(BadFaceStructure):
        validate_fan(Fan(2, ((1, 0), (0, 1), (1, 1)), ((0, 1), (0, 2))))


def test_bad_ray_index():
    with pytest.raises(BadFaceStructure):
        validate_fan(Fan(2, ((1, 0), (0, 1)), ((0, 5),)))


def test_unused_ray():
    with pytest.raises(BadFaceStructure):
        validate_fan(
            Fan(2, ((1, 0), (0, 1), (-1, -1), (5, 7)), ((0, 1), (1, 2), (2, 0)))
        )


def test_lower_dimensional_cone_not_complete():
    with pytest.raises(NotComplete):
        validate_fan(Fan(2, ((1, 0), (-1, 0)), ((0,), (1,))))


def test_dependent_generators_not_smooth():
    with pytest.raises(NotSmooth):
        validate_fan(Fan(2, ((1, 0), (-1, 0), (0, 1)), ((0, 1), (0, 2), (1, 2))))


def test_p1_fan_and_degenerate_point():
    p1 = projective_space_fan(1)
    assert roots_of(p1) == [(-1,), (1,)]
    p0 = projective_space_fan(0)
    assert roots_of(p0) == []
    assert toric_aut_report(p0).dim_aut == 0


# -- Demazure roots: golden sets -----------------------------------------------


def test_p2_roots():
    # brute-force lattice scan, frozen
    assert roots_of(p2_fan()) == [(-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0)]


def test_p1p1_roots():
    assert roots_of(p1p1_fan()) == [(-1, 0), (0, -1), (0, 1), (1, 0)]


def test_f1_roots_and_classification():
    fan = hirzebruch_fan(1)
    assert roots_of(fan) == [(-1, 0), (0, 1), (1, 0), (1, 1)]
    ss, un = classify_roots(demazure_roots(fan))
    assert sorted(r.m for r in ss) == [(-1, 0), (1, 0)]
    assert sorted(r.m for r in un) == [(0, 1), (1, 1)]


def test_distinguished_rays():
    fan = p2_fan()
    for root in demazure_roots(fan):
        pairings = [sum(a * b for a, b in zip(root.m, ray)) for ray in fan.rays]
        assert pairings[root.ray_index] == -1
        assert all(p >= 0 for i, p in enumerate(pairings) if i != root.ray_index)
        assert pairings.count(-1) == 1  # the distinguished ray is unique


def test_classify_empty():
    assert classify_roots(()) == ((), ())


# -- reports -------------------------------------------------------------------


def test_toric_reports():
    rep = toric_aut_report(p2_fan())
    assert (rep.dim_aut, rep.n_semisimple, rep.n_unipotent, rep.reductive) == (8, 6, 0, True)
    rep = toric_aut_report(hirzebruch_fan(1))
    assert (rep.dim_aut, rep.n_semisimple, rep.n_unipotent, rep.reductive) == (6, 2, 2, False)
    rep = toric_aut_report(p1p1_fan())
    assert (rep.dim_aut, rep.n_semisimple, rep.n_unipotent, rep.reductive) == (6, 4, 0, True)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_space_dim_aut(n):
    assert toric_aut_report(projective_space_fan(n)).dim_aut == n * n + 2 * n


# -- oracle --------------------------------------------------------------------


def test_bruteforce_examples():
    assert [r.m for r in demazure_roots_bruteforce(p2_fan(), 1)] == roots_of(p2_fan())
    f1 = hirzebruch_fan(1)
    assert [r.m for r in demazure_roots_bruteforce(f1, 2)] == roots_of(f1)
    assert demazure_roots_bruteforce(p2_fan(), 0) == ()


def test_oracle_equivalence_standard_fans():
    for fan in [p2_fan(), p1p1_fan()] + [hirzebruch_fan(a) for a in range(6)]:
        r = safe_oracle_radius(fan)
        assert set(demazure_roots(fan)) == set(demazure_roots_bruteforce(fan, r))


def test_oracle_equivalence_random_fans():
    for fan in random_refined_fans(12, seed=7):
        r = safe_oracle_radius(fan)
        assert set(demazure_roots(fan)) == set(demazure_roots_bruteforce(fan, r))


# -- structural properties -------------------------------------------------------


def _random_unimodular(rng):
    # product of elementary integer shears and a swap
    mats = [
        [[1, rng.randint(-2, 2)], [0, 1]],
        [[1, 0], [rng.randint(-2, 2), 1]],
        [[0, 1], [1, 0]] if rng.random() < 0.5 else [[1, 0], [0, 1]],
    ]
    out = [[1, 0], [0, 1]]
    for m in mats:
        out = [
            [sum(out[i][k] * m[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)
        ]
    return out


def test_lattice_automorphism_equivariance():
    rng = random.Random(99)
    fan = hirzebruch_fan(2)
    for _ in range(10):
        U = _random_unimodular(rng)
        new_rays = tuple(
            tuple(sum(U[i][j] * ray[j] for j in range(2)) for i in range(2))
            for ray in fan.rays
        )
        moved = validate_fan(Fan(2, new_rays, fan.maximal_cones))
        # characters move by the inverse transpose
        Uinv = invert_unimodular(U)
        expected = {
            tuple(sum(Uinv[j][i] * r.m[j] for j in range(2)) for i in range(2))
            for r in demazure_roots(fan)
        }
        got = {r.m for r in demazure_roots(moved)}
        assert got == expected
        ss0, un0 = classify_roots(demazure_roots(fan))
        ss1, un1 = classify_roots(demazure_roots(moved))
        assert (len(ss0), len(un0)) == (len(ss1), len(un1))


def test_product_fan_roots_are_disjoint_union():
    p1 = projective_space_fan(1)
    p2 = projective_space_fan(2)
    prod = product_fan(p1, p1)
    expected = {(m[0], 0) for m in roots_of(p1)} | {(0, m[0]) for m in roots_of(p1)}
    assert set(roots_of(prod)) == expected
    prod2 = product_fan(p1, p2)
    expected2 = {(m[0], 0, 0) for m in roots_of(p1)} | {
        (0,) + m for m in roots_of(p2)
    }
    assert set(roots_of(prod2)) == expected2


def test_partition_and_negation_closure_random():
    for fan in random_refined_fans(10, seed=3):
        roots = demazure_roots(fan)
        ss, un = classify_roots(roots)
        assert set(ss) | set(un) == set(roots)
        assert not (set(ss) & set(un))
        members = {r.m for r in ss}
        assert members == {tuple(-v for v in m) for m in members}


def test_hidden_validation_is_automatic():
    fan = Fan(2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (2, 0)))
    assert len(demazure_roots(fan)) == 6  # validates on the fly
    bad = Fan(2, ((1, 0), (1, 2)), ((0, 1),))
    with pytest.raises(NotSmooth):
        demazure_roots(bad)
