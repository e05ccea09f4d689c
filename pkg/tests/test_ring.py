import numpy as np
from fusionkit.cyclo import CycNum, quadratic, zeta
from fusionkit.ring import (
    FusionRing,
    balancing_S,
    count_trivial_twists,
    deligne_product,
    fp_dims,
    group_ring,
    near_group_recognize,
    pointed_cyclic,
    ring_from_products,
    sum_of_squares_search,
    trivial_data,
    verify_modular,
    verify_ring,
    verlinde,
)


def test_group_ring_verifies():
    for n in (1, 2, 3, 5):
        r = group_ring(n)
        assert verify_ring(r).ok
        assert r.invertibles() == list(range(n))


def test_verify_ring_catches_broken_tables():
    r = group_ring(3)
    bad = FusionRing(r.labels, r.unit, r.dual, r.N.copy())
    bad.N[1, 1, 0] = 1  # g x g now contains the unit, contradicting dual(g) = g2
    rep = verify_ring(bad)
    assert not rep.ok and "dual" in rep.failures[0]

    broken_assoc = r.N.copy()
    broken_assoc[1, 2, 0], broken_assoc[1, 2, 1] = 0, 1
    rep = verify_ring(FusionRing(r.labels, r.unit, r.dual, broken_assoc))
    assert not rep.ok


def test_ring_from_products():
    r = ring_from_products(
        ["I", "x"], "I",
        {}, {("I", "I"): {"I": 1}, ("I", "x"): {"x": 1}, ("x", "I"): {"x": 1},
            ("x", "x"): {"I": 1, "x": 1}},
    )
    assert verify_ring(r).ok
    fpd = fp_dims(r)
    golden_ratio = (1 + 5 ** 0.5) / 2
    assert abs(fpd.values[1] - golden_ratio) < 1e-9
    assert fpd.exact is None  # not quadratic over sqrt(2) or sqrt(3)


def test_fp_dims_exact_recognition():
    from fusionkit.condense import near_group_ring

    fpd = fp_dims(near_group_ring(3, 6))
    assert fpd.exact is not None
    assert fpd.exact[3] == quadratic(3, 2, 3)
    assert fpd.exact[0] == 1


def test_pointed_cyclic_modular():
    md = pointed_cyclic(3, 1)
    assert md.twists[1] == zeta(3) and md.twists[2] == zeta(3)
    rep = verify_modular(md)
    assert rep.ok, rep.failures
    assert verify_modular(trivial_data()).ok


def test_balancing_s_unit_row_is_dims():
    md = pointed_cyclic(3, 2)
    S = balancing_S(md.ring, md.dims, md.twists)
    assert [S[0][m] for m in range(3)] == [CycNum.one()] * 3


def test_degenerate_braiding_fails_verification():
    # Z2 with the trivial quadratic form is premodular but not modular:
    # the balancing S is the all-ones matrix and the round trip cannot work
    md = pointed_cyclic(2, 0, form_order=1)
    rep = verify_modular(md)
    assert not rep.ok
    assert not np.array_equal(verlinde(md), md.ring.N)


def test_deligne_product_counts_and_dims():
    a = pointed_cyclic(2, 1, form_order=4)
    b = pointed_cyclic(3, 1)
    md = deligne_product(a, b)
    assert md.rank == 6
    assert verify_modular(md).ok
    count, labels = count_trivial_twists(md)
    assert count == 1 and labels == ["I⊠I"]


def test_sum_of_squares_search_enumerates_exactly():
    hits = sum_of_squares_search((24, 12), forced_invertibles=3)
    assert hits == [((2, 1), (2, 1), (2, 1)), ((3, 2),)]
    # no decomposition exists for 6+2*sqrt(3) over three forced invertibles
    assert sum_of_squares_search((6, 2), forced_invertibles=3) == []
    # a group of 4 invertibles and nothing else is the unique way to reach 4
    assert sum_of_squares_search((4, 0), forced_invertibles=4) == [()]
    assert sum_of_squares_search((5, 0), forced_invertibles=4) == []


def test_near_group_recognize():
    from fusionkit.condense import near_group_ring

    assert near_group_recognize(near_group_ring(3, 6)) == (3, 6)
    assert near_group_recognize(near_group_ring(2, 0)) == (2, 0)
    assert near_group_recognize(group_ring(4)) is None
    tambara = near_group_ring(2, 1)  # not of the shape with n = |G| style caveats
    assert near_group_recognize(tambara) == (2, 1)


def test_modular_data_gauss_sums():
    md = pointed_cyclic(3, 1)
    p_plus, p_minus = md.gauss_sums()
    assert p_plus * p_minus == md.global_dim()
