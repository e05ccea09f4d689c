import numpy as np
import pytest

from fusionkit import condense, wzw
from fusionkit.condense import (
    PreconditionFailed,
    condensed_modular_data,
    etale_check,
    induced_fusion,
    local_simples,
    near_group_pipeline,
    near_group_ring,
    orbits,
    prop38_pipeline,
    resolve_split,
)
from fusionkit.cyclo import CycNum, quadratic, zeta
from fusionkit.ring import verify_modular, verify_ring, verlinde
from fusionkit.wzw import AlgebraSpec


def test_etale_check():
    assert etale_check(AlgebraSpec.sl3(9)).ok
    assert etale_check(AlgebraSpec.sl3(3)).ok
    assert not etale_check(AlgebraSpec.sl3(4)).ok
    assert not etale_check(AlgebraSpec.sl2(4)).ok
    with pytest.raises(PreconditionFailed):
        orbits(AlgebraSpec.sl3(7))


def test_orbit_partition_level9():
    free, fixed = orbits(AlgebraSpec.sl3(9))
    assert fixed == [(3, 3)]
    assert len(free) == 18 and 3 * 18 + 1 == 55
    assert all(len(o) == 3 for o in free)


def test_local_simples_level9():
    sims = local_simples(AlgebraSpec.sl3(9))
    assert len(sims) == 9
    kinds = [s.label.kind for s in sims]
    assert kinds.count("split") == 3
    d = quadratic(3, 2, 3)
    third = [s for s in sims if s.label.kind == "split"]
    assert all(s.dim == d and s.twist == zeta(4) for s in third)
    assert sims[0].label.orbit_rep == (0, 0) and sims[0].dim == 1


def test_induced_fusion_family_sums():
    partial = induced_fusion(AlgebraSpec.sl3(9))
    assert partial.orbit_count == 6
    # the fixed point never shows up in products of the unit orbit
    assert partial.family_sums[0].sum() == partial.family_sums[:, 0].sum() == 0
    # every family hit arrives in multiples of 3 by construction
    assert (partial.family_sums % 3 == 0).all()


def test_resolve_split_unique_and_seed_independent():
    spec = AlgebraSpec.sl3(9)
    partial = induced_fusion(spec)
    base = resolve_split(spec, partial)
    assert verify_ring(base).ok
    for seed in (0, 1, 2, 41):
        again = resolve_split(spec, partial, seed=seed)
        assert np.array_equal(again.N, base.N)
    # the canonicalization convention: each split appears in its own square
    for x in ("X1", "X2", "X3"):
        i = base.index(x)
        assert base.N[i, i, i] >= 1


def test_condensed_category_level9(cat9):
    assert [str(s) for s in cat9.simples] == [
        "[0,0]", "[0,3]", "[0,6]", "[1,1]", "[1,4]", "[2,2]", "X1", "X2", "X3"
    ]
    assert verify_modular(cat9.md).ok
    assert np.array_equal(verlinde(cat9.md), cat9.md.ring.N)
    assert cat9.md.global_dim() == quadratic(336, 192, 3)


def test_condensation_level3_gives_pointed_category():
    cat = condensed_modular_data(AlgebraSpec.sl3(3))
    assert len(cat.simples) == 4
    assert all(d == 1 for d in cat.md.dims)
    assert verify_modular(cat.md).ok


def test_near_group_ring_shapes():
    r = near_group_ring(3, 6)
    assert verify_ring(r).ok
    assert r.labels == ("I", "g", "g2", "X")
    ising_like = near_group_ring(2, 0)
    assert verify_ring(ising_like).ok


def test_rejection_oracle_positive_and_negative():
    # the Z3+6 dims do admit a ring; three objects of dim 2+sqrt(3) do not
    good = [CycNum.one()] * 3 + [quadratic(3, 2, 3)]
    assert condense._exists_ring_with_dims(good, bound=6)
    bad = [CycNum.one()] * 3 + [quadratic(2, 1, 3)] * 3
    assert not condense._exists_ring_with_dims(bad, bound=3)


def test_near_group_pipeline(cat9):
    res = near_group_pipeline(cat9)
    assert res.report.ok, res.report.failures
    assert res.trivial_twist_labels == ["I⊠[0,0]", "I⊠[1,4]", "g⊠[2,2]", "g2⊠[2,2]"]
    assert len(res.etale_candidates) == 2
    assert res.decompositions == [((2, 1), (2, 1), (2, 1)), ((3, 2),)]
    assert len(res.report.warnings) == 1 and "3+√3" in res.report.warnings[0]


def test_prop38_pipeline():
    rep = prop38_pipeline()
    assert rep.ok, rep.failures


def test_twist_constancy_on_all_local_orbits():
    for level in (3, 6, 9):
        spec = AlgebraSpec.sl3(level)
        for s in local_simples(spec):
            tws = {wzw.twist(spec, w) for w in s.ambient}
            assert len(tws) == 1
