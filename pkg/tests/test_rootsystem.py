import pytest
from hypothesis import given, strategies as st

from horoaut import (
    AMPLE,
    NEF_NOT_AMPLE,
    NOT_NEF,
    DimensionMismatch,
    InvalidMarking,
    InvalidRank,
    NotACharacterOfP,
    NotDominant,
    ParabolicMarking,
    RootSystemSpec,
    Weight,
    anticanonical_character,
    aut_dim_homogeneous,
    build_root_system,
    coroot_pairing,
    is_dominant,
    line_bundle_positivity,
    weyl_dim,
)
from helpers import reflection_closure_positive_roots

ALL_FACTORS = (
    [("A", l) for l in range(1, 9)]
    + [("B", l) for l in range(2, 9)]
    + [("C", l) for l in range(2, 9)]
    + [("D", l) for l in range(4, 9)]
    + [("E", l) for l in (6, 7, 8)]
    + [("F", 4), ("G", 2)]
)


def classical_positive_root_count(typ, l):
    return {
        "A": l * (l + 1) // 2,
        "B": l * l,
        "C": l * l,
        "D": l * (l - 1),
        "E": {6: 36, 7: 63, 8: 120}[l],
        "F": 24,
        "G": 6,
    }[typ]


def single(typ, rank, torus=0):
    return RootSystemSpec(((typ, rank),), torus)


@pytest.mark.parametrize("typ,l", ALL_FACTORS)
def test_positive_root_counts_and_dim(typ, l):
    ft = build_root_system(single(typ, l)).factors[0]
    # B_2 is stored as C_2; same counts either way
    assert len(ft.pos_roots) == classical_positive_root_count(typ, l)
    assert len(ft.pos_coroots) == classical_positive_root_count(typ, l)
    assert ft.dim == 2 * len(ft.pos_roots) + l


@pytest.mark.parametrize("typ,l", ALL_FACTORS)
def test_positive_roots_match_reflection_closure_oracle(typ, l):
    ft = build_root_system(single(typ, l)).factors[0]
    assert set(ft.pos_roots) == reflection_closure_positive_roots(ft.cartan)
    dual = tuple(tuple(ft.cartan[j][i] for j in range(l)) for i in range(l))
    assert set(ft.pos_coroots) == reflection_closure_positive_roots(dual)


@pytest.mark.parametrize("typ,l", ALL_FACTORS)
def test_simple_roots_present_and_combos_nonnegative(typ, l):
    ft = build_root_system(single(typ, l)).factors[0]
    for i in range(l):
        assert tuple(1 if j == i else 0 for j in range(l)) in ft.pos_roots
    assert all(all(c >= 0 for c in r) for r in ft.pos_roots)
    heights = [sum(r) for r in ft.pos_roots]
    assert heights == sorted(heights)


def test_invalid_ranks_rejected():
    for typ, l in [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3)]:
        with pytest.raises(InvalidRank):
            single(typ, l)
    with pytest.raises(InvalidRank):
        RootSystemSpec((("X", 2),))
    with pytest.raises(InvalidRank):
        RootSystemSpec((), torus_rank=-1)


def test_b2_normalizes_to_c2():
    spec = RootSystemSpec((("B", 2),))
    assert spec.simple_factors == (("C", 2),)
    assert spec.to_internal_node(0, 1) == 2
    assert spec.to_internal_node(0, 2) == 1
    assert spec.to_internal_fw([5, 7]) == (7, 5)
    assert spec == RootSystemSpec((("C", 2),))


def test_node_conversion_bounds():
    spec = RootSystemSpec((("A", 2),))
    with pytest.raises(InvalidMarking):
        spec.to_internal_node(1, 1)
    with pytest.raises(InvalidMarking):
        spec.to_internal_node(0, 3)


def test_marking_validation():
    spec = RootSystemSpec((("A", 2), ("C", 2)))
    m = ParabolicMarking.of(spec, [(0, 1), (1, 2)])
    assert m.flat_indices == frozenset({0, 3})
    with pytest.raises(InvalidMarking):
        ParabolicMarking.of(spec, [(0, 1), (0, 1)])
    with pytest.raises(InvalidMarking):
        ParabolicMarking.of(spec, [(2, 1)])
    with pytest.raises(InvalidMarking):
        ParabolicMarking.of(spec, [(0, 5)])


# -- coroot pairing -----------------------------------------------------------


def test_coroot_pairing_simple_duality_a2():
    tables = build_root_system(single("A", 2))
    simple_coroots = [c for c in tables.pos_coroots if sum(c.coords) == 1]
    w1 = Weight((1, 0))
    assert coroot_pairing(w1, simple_coroots[0]) in (0, 1)
    vals = sorted(coroot_pairing(w1, c) for c in simple_coroots)
    assert vals == [0, 1]
    # highest coroot of A_2 is the sum of the simple coroots
    rho = Weight((1, 1))
    highest = max(tables.pos_coroots, key=lambda c: sum(c.coords))
    assert coroot_pairing(rho, highest) == 2


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_coroot_pairing_reads_fw_coordinate_and_ignores_torus(fw, torus):
    spec = RootSystemSpec((("A", 1), ("C", 2)), torus_rank=2)
    tables = build_root_system(spec)
    w = Weight(tuple(fw), tuple(torus))
    for c in tables.pos_coroots:
        if sum(c.coords) == 1:  # simple coroot
            node = c.vec.index(1)
            assert coroot_pairing(w, c) == fw[node]
        assert coroot_pairing(w, c) == coroot_pairing(Weight(tuple(fw), (0, 0)), c)


def test_coroot_pairing_dimension_mismatch():
    tables = build_root_system(single("A", 2))
    with pytest.raises(DimensionMismatch):
        coroot_pairing(Weight((1,)), tables.pos_coroots[0])


# -- dominance ----------------------------------------------------------------


def test_is_dominant_triples():
    a1 = single("A", 1)
    m = ParabolicMarking.of(a1, [(0, 1)])
    assert is_dominant(Weight((1,)), m) == (True, True, True)
    assert is_dominant(Weight((-1,)), m) == (False, True, False)
    two = RootSystemSpec((("A", 1), ("A", 1)))
    mb = ParabolicMarking.of(two, [(0, 1), (1, 1)])
    assert is_dominant(Weight((1, -1)), mb) == (False, True, False)
    # unmarked node carrying a coefficient
    monly = ParabolicMarking.of(two, [(0, 1)])
    assert is_dominant(Weight((1, 2)), monly) == (True, False, True)


# -- Weyl dimension formula ---------------------------------------------------

FROZEN_WEYL_DIMS = [
    # classical values checked by hand against the product formula
    (("A", 1), (0,), 1),
    (("A", 1), (1,), 2),
    (("A", 2), (1, 0), 3),
    (("A", 2), (1, 1), 8),
    (("A", 3), (0, 1, 0), 6),
    (("C", 2), (1, 0), 4),
    (("C", 2), (0, 1), 5),
    (("B", 3), (1, 0, 0), 7),
    (("G", 2), (1, 0), 7),
    (("G", 2), (0, 1), 14),
    (("E", 6), (1, 0, 0, 0, 0, 0), 27),
]


@pytest.mark.parametrize("factor,fw,expected", FROZEN_WEYL_DIMS)
def test_weyl_dim_frozen_values(factor, fw, expected):
    spec = RootSystemSpec((factor,))
    assert weyl_dim(build_root_system(spec), Weight(fw)) == expected


def test_weyl_dim_multiplies_over_factors():
    spec = RootSystemSpec((("A", 1), ("C", 2)))
    tables = build_root_system(spec)
    assert weyl_dim(tables, Weight((1, 0, 1))) == 2 * 5


def test_weyl_dim_not_dominant():
    tables = build_root_system(single("A", 2))
    with pytest.raises(NotDominant):
        weyl_dim(tables, Weight((1, -1)))


@given(st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_weyl_dim_one_iff_zero_fw(fw):
    spec = RootSystemSpec((("A", 1), ("C", 2)), torus_rank=1)
    tables = build_root_system(spec)
    d = weyl_dim(tables, Weight(tuple(fw), (3,)))
    assert d >= 1
    assert (d == 1) == all(v == 0 for v in fw)


@given(st.lists(st.integers(0, 3), min_size=2, max_size=2), st.integers(-9, 9))
def test_weyl_dim_ignores_torus(fw, t):
    spec = RootSystemSpec((("C", 2),), torus_rank=1)
    tables = build_root_system(spec)
    assert weyl_dim(tables, Weight(tuple(fw), (t,))) == weyl_dim(
        tables, Weight(tuple(fw), (0,))
    )


# -- Aut0(G/P) ----------------------------------------------------------------


def test_aut_dim_empty_marking():
    spec = RootSystemSpec((("A", 3), ("B", 4)))
    assert aut_dim_homogeneous(spec, ParabolicMarking.of(spec, [])) == (0, True)


def test_aut_dim_simple_cases():
    a1 = single("A", 1)
    assert aut_dim_homogeneous(a1, ParabolicMarking.of(a1, [(0, 1)])) == (3, True)
    a2 = single("A", 2)
    assert aut_dim_homogeneous(a2, ParabolicMarking.of(a2, [(0, 1)])) == (8, True)


def test_aut_dim_exceptions():
    cases = [
        ("B", 3, 3, (28, False)),
        ("B", 4, 4, (45, False)),
        ("B", 5, 5, (66, False)),
        ("C", 2, 1, (15, False)),
        ("C", 3, 1, (35, False)),
        ("G", 2, 1, (21, False)),
    ]
    for typ, l, node, want in cases:
        sp = single(typ, l)
        assert aut_dim_homogeneous(sp, ParabolicMarking.of(sp, [(0, node)])) == want


def test_aut_dim_non_exceptional_markings():
    cases = [
        ("B", 3, [1], 21),
        ("B", 3, [2], 21),
        ("B", 4, [2], 36),
        ("C", 2, [2], 10),
        ("C", 3, [2], 21),
        ("C", 3, [3], 21),
        ("G", 2, [2], 14),
        # multi-node markings never trigger the exceptions
        ("B", 3, [1, 3], 21),
        ("C", 2, [1, 2], 10),
        ("G", 2, [1, 2], 14),
    ]
    for typ, l, nodes, dim in cases:
        sp = single(typ, l)
        marking = ParabolicMarking.of(sp, [(0, n) for n in nodes])
        assert aut_dim_homogeneous(sp, marking) == (dim, True)


def test_aut_dim_b2_input_triggers_c2_exception():
    spec = RootSystemSpec((("B", 2),))
    short = spec.to_internal_node(0, 2)  # B_2 node 2 is the short root
    m = ParabolicMarking.of(spec, [(0, short)])
    assert aut_dim_homogeneous(spec, m) == (15, False)
    longm = ParabolicMarking.of(spec, [(0, spec.to_internal_node(0, 1))])
    assert aut_dim_homogeneous(spec, longm) == (10, True)


def test_aut_dim_unmarked_factor_contributes_zero():
    spec = RootSystemSpec((("A", 1), ("E", 6)))
    m = ParabolicMarking.of(spec, [(0, 1)])
    assert aut_dim_homogeneous(spec, m) == (3, True)


def test_aut_dim_mixed_exceptional_product():
    spec = RootSystemSpec((("A", 1), ("G", 2)))
    m = ParabolicMarking.of(spec, [(0, 1), (1, 1)])
    assert aut_dim_homogeneous(spec, m) == (3 + 21, False)


# -- anticanonical character and positivity -----------------------------------


def test_anticanonical_examples():
    a1 = single("A", 1)
    t1 = build_root_system(a1)
    m1 = ParabolicMarking.of(a1, [(0, 1)])
    assert anticanonical_character(t1, m1).fw == (2,)

    a2 = single("A", 2)
    t2 = build_root_system(a2)
    m2 = ParabolicMarking.of(a2, [(0, 1)])
    assert anticanonical_character(t2, m2).fw == (3, 0)

    c2 = single("C", 2)
    t3 = build_root_system(c2)
    m3 = ParabolicMarking.of(c2, [(0, 2)])  # Q^3
    assert anticanonical_character(t3, m3).fw == (0, 3)

    a3 = single("A", 3)
    t4 = build_root_system(a3)
    m4 = ParabolicMarking.of(a3, [(0, 1)])  # P^3
    assert anticanonical_character(t4, m4).fw == (4, 0, 0)

    both = RootSystemSpec((("A", 1), ("A", 1)))
    t5 = build_root_system(both)
    m5 = ParabolicMarking.of(both, [(0, 1), (1, 1)])
    assert anticanonical_character(t5, m5).fw == (2, 2)


@pytest.mark.parametrize("typ,l", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)])
def test_anticanonical_always_ample(typ, l):
    spec = single(typ, l)
    tables = build_root_system(spec)
    for node in range(1, l + 1):
        marking = ParabolicMarking.of(spec, [(0, node)])
        w = anticanonical_character(tables, marking)
        assert line_bundle_positivity(w, marking) == AMPLE
    full = ParabolicMarking.of(spec, [(0, n) for n in range(1, l + 1)])
    assert line_bundle_positivity(anticanonical_character(tables, full), full) == AMPLE


def test_line_bundle_positivity():
    a1 = single("A", 1)
    m = ParabolicMarking.of(a1, [(0, 1)])
    assert line_bundle_positivity(Weight((1,)), m) == AMPLE
    assert line_bundle_positivity(Weight((0,)), m) == NEF_NOT_AMPLE
    two = RootSystemSpec((("A", 1), ("A", 1)))
    mb = ParabolicMarking.of(two, [(0, 1), (1, 1)])
    assert line_bundle_positivity(Weight((1, -1)), mb) == NOT_NEF
    # torus coordinates twist the linearization only
    spec = RootSystemSpec((("A", 1),), torus_rank=1)
    mt = ParabolicMarking.of(spec, [(0, 1)])
    assert line_bundle_positivity(Weight((1,), (-7,)), mt) == AMPLE


def test_line_bundle_positivity_rejects_non_characters():
    a2 = single("A", 2)
    m = ParabolicMarking.of(a2, [(0, 1)])
    with pytest.raises(NotACharacterOfP):
        line_bundle_positivity(Weight((1, 1)), m)
