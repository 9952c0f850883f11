import json

import pytest

from liepar import cli
from liepar.golden import TABLE_NAMES, load_table, run_golden


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_torsion_both_e8(capsys):
    code, out, _ = run(capsys, "torsion", "--type", "E8", "--method", "both")
    assert code == 0
    doc = json.loads(out)
    assert doc["primes"] == [2, 3, 5]
    assert doc["agreement"] is True
    assert doc["seed"] == 0


def test_char_exterior_g2(capsys):
    code, out, _ = run(capsys, "char", "--type", "G2", "--exterior", "w1^2")
    assert code == 0
    doc = json.loads(out)
    got = {s["weight"]: s["multiplicity"] for s in doc["decomposition"]}
    assert got == {"w1": 1, "w2": 1}


def test_char_tensor_e7(capsys):
    code, out, _ = run(capsys, "char", "--type", "E7", "--tensor", "w1,w1")
    assert code == 0
    doc = json.loads(out)
    got = {s["weight"]: s["multiplicity"] for s in doc["decomposition"]}
    assert got == {"2w1": 1, "w1": 1, "w3": 1, "w6": 1, "0": 1}


def test_intform_empty_report(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("[]")
    code, out, _ = run(capsys, "intform", "--in", str(path), "--p", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["strata"] == [] and doc["decomposition_theorem_holds"] is True


def test_intform_report(capsys, tmp_path):
    path = tmp_path / "forms.json"
    path.write_text(json.dumps([{"label": "s", "n": 1, "rows": [[-2]]}]))
    code, out, _ = run(capsys, "intform", "--in", str(path), "--p", "2")
    doc = json.loads(out)
    assert doc["strata"][0]["multiplicity"] == 0
    assert doc["decomposition_theorem_holds"] is False


def test_weyl_reps_tsv(capsys):
    code, out, _ = run(capsys, "weyl", "--type", "A3", "--I", "1,2", "--J", "2,3",
                       "--emit", "reps", "--format", "tsv")
    assert code == 0
    rows = [line for line in out.splitlines() if line and not line.startswith("#")]
    assert len(rows) == 2  # two double cosets


def test_rootsys_emits(capsys):
    code, out, _ = run(capsys, "rootsys", "--type", "E8", "--emit", "minuscule")
    assert code == 0 and json.loads(out)["minuscule"] == []
    code, out, _ = run(capsys, "rootsys", "--type", "G2", "--emit", "h-dual")
    doc = json.loads(out)
    assert doc["h_dual"] == 4 and doc["minimal_orbit_dimension"] == 6


def test_schurweyl_dims(capsys):
    code, out, _ = run(capsys, "schurweyl", "--d", "3", "--p", "2")
    assert code == 0
    assert json.loads(out)["dims"] == [1, 2]


def test_nilpotent(capsys):
    code, out, _ = run(capsys, "nilpotent", "--partition", "2,1", "--n", "3")
    doc = json.loads(out)
    assert doc["dimension"] == 4 and doc["centralizer"] == "GL1 x GL1"


def test_toric_paving(capsys, tmp_path):
    fan = {"rank": 2, "rays": [[1, 0], [1, 1], [1, 2]], "cones": [[0, 1], [1, 2]]}
    tau = {"rank": 2, "rays": [[1, 0], [1, 2]], "cones": [[0, 1]]}
    fan_path, tau_path = tmp_path / "fan.json", tmp_path / "tau.json"
    fan_path.write_text(json.dumps(fan))
    tau_path.write_text(json.dumps(tau))
    code, out, _ = run(capsys, "toric", "--fan", str(fan_path), "--tau", str(tau_path),
                       "--paving", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["poincare"] == [1, 0, 1]
    assert doc["even"] is True and doc["seed"] == 7


def test_domain_error_exit_1(capsys):
    code, _, err = run(capsys, "rootsys", "--type", "E9")
    assert code == 1 and "error" in err


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["rootsys", "--unknown-flag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["not-a-subcommand"])
    assert exc.value.code == 2


def test_byte_identical_output(capsys):
    _, first, _ = run(capsys, "char", "--type", "F4", "--exterior", "w4^2")
    _, second, _ = run(capsys, "char", "--type", "F4", "--exterior", "w4^2")
    assert first == second


def test_seed_in_header_for_every_subcommand(capsys):
    code, out, _ = run(capsys, "schurweyl", "--d", "2", "--p", "2")
    assert json.loads(out)["seed"] == 0


def test_doc_lint_subcommand_descriptions():
    parser = cli.build_parser()
    sub = next(a for a in parser._actions if hasattr(a, "choices") and a.choices)
    expected_keywords = {
        "rootsys": "root",
        "weyl": "quotient",
        "torsion": "torsion",
        "char": "decomposition",
        "intform": "rank",
        "schurweyl": "Gram",
        "nilpotent": "orbit",
        "toric": "paving",
        "golden": "golden",
    }
    assert set(sub.choices) == set(expected_keywords)
    for name, p in sub.choices.items():
        assert p.description and expected_keywords[name] in p.description


def test_golden_suite_passes(capsys):
    code, out, _ = run(capsys, "golden")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True and doc["failures"] == []


def test_golden_corrupted_fixture_fails(tmp_path, capsys):
    import shutil
    from importlib import resources

    src = resources.files("liepar").joinpath("golden_data")
    for name in TABLE_NAMES:
        shutil.copy(str(src.joinpath(f"{name}.json")), tmp_path / f"{name}.json")
    doc = json.loads((tmp_path / "torsion_primes.json").read_text())
    for row in doc["rows"]:
        if row["type"] == "E8":
            row["primes"] = [2, 3, 7]
    (tmp_path / "torsion_primes.json").write_text(json.dumps(doc))
    code, out, err = run(capsys, "golden", "--fixtures", str(tmp_path))
    assert code == 1
    assert "MISMATCH" in err and "E8" in err


def test_golden_tables_have_sources():
    for name in TABLE_NAMES:
        table = load_table(name)
        assert table["source"]


def test_run_golden_report_shape():
    report = run_golden()
    assert report.passed
    assert len(report.outcomes) > 150
