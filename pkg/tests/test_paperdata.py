import json

import pytest

from fusionkit import paperdata
from fusionkit.cyclo import CycNum, quadratic
from fusionkit.paperdata import MalformedGoldenFile
from fusionkit.ring import verify_ring
from fusionkit.serialize import ring_from_json, ring_to_json


def test_catalog_loads_every_table():
    tables = paperdata.golden_tables()
    assert set(tables) == {
        "lemma3.1", "prop3.2-3.3", "lemma3.4", "prop3.5", "thm3.6",
        "thm3.7", "prop3.8", "thm3.9", "sec3.2", "remark3.11",
    }
    for tab in tables.values():
        assert isinstance(tab["locus"], str) and tab["locus"]


def test_unknown_ring_name():
    with pytest.raises(MalformedGoldenFile):
        paperdata.golden_ring("no-such-ring")


def test_every_golden_ring_verifies():
    for name in ["prop3.2-ring", "thm3.6-near-group", "thm3.7-ring",
                 "prop3.8-ring", "thm3.9-ring"]:
        rep = verify_ring(paperdata.golden_ring(name))
        assert rep.ok, (name, rep.failures)


def test_golden_rings_round_trip_byte_identically():
    for name in ["prop3.2-ring", "thm3.9-ring"]:
        r = paperdata.golden_ring(name)
        blob = json.dumps(ring_to_json(r), sort_keys=True)
        again = json.dumps(ring_to_json(ring_from_json(json.loads(blob))), sort_keys=True)
        assert blob == again


def test_graded_extensions():
    b = paperdata.graded_ring("thm3.7")
    assert b.group_order == 2 and not b.commutative
    rep = paperdata.verify_graded(b)
    assert rep.ok, rep.failures
    assert not paperdata.verify_commutativity(b.ring)

    d = paperdata.graded_ring("thm3.9")
    assert d.group_order == 3 and d.commutative
    rep = paperdata.verify_graded(d)
    assert rep.ok, rep.failures
    assert paperdata.verify_commutativity(d.ring)


def test_graded_dims_satisfy_their_own_additivity():
    # e.g. (1+sqrt3)^2 = 1 + (3+2*sqrt3) inside the Z3-extension table
    gr = paperdata.graded_ring("thm3.9")
    w = gr.ring.index("W1")
    lhs = gr.dims[w] * gr.dims[w]
    rhs = CycNum.zero()
    for k, m in gr.ring.product(w, w).items():
        rhs = rhs + gr.dims[k] * m
    assert lhs == rhs == quadratic(4, 2, 3)


def test_verify_graded_catches_wrong_component_map():
    gr = paperdata.graded_ring("thm3.9")
    comp = list(gr.component_of)
    comp[gr.ring.index("V")] = 2
    broken = paperdata.GradedRing(gr.ring, tuple(comp), gr.group_order,
                                  gr.commutative, gr.dims)
    assert not paperdata.verify_graded(broken).ok


def test_induction_unit_check():
    rep = paperdata.induction_unit_check()
    assert rep.ok, rep.failures
    tab = paperdata._load("sec3.2")
    assert paperdata.dim_value(tab["fpdim_ii"]) == quadratic(72, 36, 3)
    assert paperdata.dim_value(tab["fpdim_a2"]) == quadratic(24, 12, 3)


def test_remark311_checks():
    rep = paperdata.remark311_checks()
    assert rep.ok, rep.failures


def test_known_discrepancy_is_recorded():
    tab = paperdata._load("thm3.6")
    disc = tab["known_discrepancy"]
    assert disc["printed_fpdim_x"] == [3, 1]
    assert disc["derived_fpdim_x"] == [3, 2]


def test_pipeline_comparisons(cat9):
    for fn in (paperdata.check_simples, paperdata.check_structure_constants,
               paperdata.check_twists, paperdata.check_s_matrix):
        rep = fn(cat9)
        assert rep.ok, (fn.__name__, rep.failures)


def test_checks_detect_corruption(cat9, monkeypatch):
    real = paperdata._load

    def corrupt(key):
        tab = real(key)
        if key == "lemma3.4":
            tab = json.loads(json.dumps(tab))
            tab["twist_exponents"]["Y1"] = "1/2"
        return tab

    monkeypatch.setattr(paperdata, "_load", corrupt)
    assert not paperdata.check_twists(cat9).ok
