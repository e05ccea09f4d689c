import contextlib
import io
import json

import jsonschema
import pytest

from fusionkit import cli, paperdata, serialize, wzw
from fusionkit.wzw import AlgebraSpec


def run(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = cli.main(argv)
    return code, out.getvalue()


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        run(["wzw", "--algebra", "sl3"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["wzw", "--algebra", "sl3", "--level", "0", "--dims"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["nonsense"])
    assert e.value.code == 2


def test_wzw_dims_table():
    code, out = run(["wzw", "--algebra", "sl3", "--level", "9", "--dims"])
    assert code == 0
    rows = [l for l in out.splitlines() if l.startswith("(")]
    assert len(rows) == 55
    assert "(1, 1)  3+2√3" in out


def test_wzw_twists_level4():
    code, out = run(["wzw", "--algebra", "sl2", "--level", "4", "--twists"])
    assert code == 0
    assert out.splitlines()[1:] == [
        "(0,)  1", "(1,)  ζ_8", "(2,)  ζ_3", "(3,)  ζ_8^5", "(4,)  1"
    ]


def test_wzw_json_round_trip_and_schema():
    code, out = run(["wzw", "--algebra", "sl2", "--level", "4", "--json", "--s"])
    assert code == 0
    obj = json.loads(out)
    jsonschema.validate(obj, serialize.load_schema())
    md = serialize.modular_from_json(obj)
    want = wzw.modular_data(AlgebraSpec.sl2(4))
    assert md.ring == want.ring
    assert md.dims == want.dims and md.twists == want.twists
    assert md.s_matrix() == want.s_matrix()


def test_condense_errors_exit_1(capsys):
    code = cli.main(["condense", "--algebra", "sl3", "--level", "4"])
    assert code == 1
    assert "not divisible by 3" in capsys.readouterr().err


def test_condense_check_and_json():
    code, out = run(["condense", "--algebra", "sl3", "--level", "9", "--check"])
    assert code == 0
    assert "modular consistency: pass" in out
    code, out = run(["condense", "--algebra", "sl3", "--level", "9", "--json"])
    obj = json.loads(out)
    jsonschema.validate(obj, serialize.load_schema())
    assert len(obj["simples"]) == 9
    md = serialize.modular_from_json(obj["modular"])
    assert md.rank == 9


def test_outputs_are_deterministic():
    _, a = run(["condense", "--algebra", "sl3", "--level", "9", "--json"])
    _, b = run(["condense", "--algebra", "sl3", "--level", "9", "--json"])
    assert a == b
    _, a = run(["verify-paper"])
    _, b = run(["verify-paper"])
    assert a == b


def test_verify_paper_text_report():
    code, out = run(["verify-paper"])
    assert code == 0
    for locus in ["Lemma 3.1", "Proposition 3.3", "Theorem 3.9", "Remark 3.11"]:
        assert f"{locus}: PASS" in out
    assert "Theorem 3.6: WARN" in out
    assert "3+√3" in out
    assert "tensor equivalences" in out  # scope disclaimer for category-level claims


def test_verify_paper_json_schema():
    code, out = run(["verify-paper", "--json"])
    assert code == 0
    obj = json.loads(out)
    jsonschema.validate(obj, serialize.load_schema())
    assert obj["ok"] is True
    statuses = {r["locus"]: r["status"] for r in obj["results"]}
    assert statuses["Theorem 3.6"] == "WARN"
    assert all(s != "FAIL" for s in statuses.values())


def test_verify_paper_fails_on_corrupted_golden(monkeypatch):
    real = paperdata._load

    def corrupt(key):
        tab = real(key)
        if key == "lemma3.1":
            tab = json.loads(json.dumps(tab))
            tab["simples"][1]["dim"] = [3, 1]
        return tab

    monkeypatch.setattr(paperdata, "_load", corrupt)
    code, out = run(["verify-paper"])
    assert code == 1
    assert "Lemma 3.1: FAIL" in out
    assert "dim" in out  # the report names the disagreeing quantity


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    code, out = run(["wzw", "--algebra", "sl2", "--level", "2", "--json",
                     "--output", str(target)])
    assert code == 0 and out == ""
    obj = json.loads(target.read_text())
    jsonschema.validate(obj, serialize.load_schema())
