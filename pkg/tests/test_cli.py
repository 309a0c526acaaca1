"""Command line behaviour: report content, determinism, and exit codes."""
from __future__ import annotations

import json

import pytest

from topann.cli import main, parse_monomial_text
from topann.errors import InvalidInputError

SW_INSTANCE = {
    "vars": ["x", "y", "z1", "z2"],
    "J": [
        {"x": 1, "y": 1, "z1": 1},
        {"x": 1, "y": 1, "z2": 1},
    ],
    "a": [{"x": 1}, {"y": 1}],
}


@pytest.fixture
def sw_file(tmp_path):
    path = tmp_path / "sw.json"
    path.write_text(json.dumps(SW_INSTANCE))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cd_command(sw_file, capsys):
    code, out, _ = run_cli(capsys, "--quiet", "cd", sw_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["report"] == "cd"
    assert doc["c"] == 2
    assert doc["field"] == "Q"
    assert {"prime": ["z1", "z2"], "cd": 2} in doc["per_prime"]


def test_ann_bounds_command(sw_file, capsys):
    code, out, _ = run_cli(capsys, "--quiet", "ann-bounds", sw_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["exact"] is True
    assert doc["exactness_reason"] == "all-witnesses-found"
    assert doc["lower"] == [{"z1": 1}, {"z2": 1}]
    assert doc["upper"] == [{"z1": 1}, {"z2": 1}]
    assert doc["heights"]["upper"] == 0 and doc["heights"]["annihilator"] == 0
    assert all(c["holds"] for c in doc["heights"]["checks"])


def test_gamma_command(sw_file, capsys):
    code, out, _ = run_cli(capsys, "--quiet", "gamma", sw_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["torsion_is_zero"] is True
    assert doc["dim_modulo_torsion"] == 3


def test_lynch_fixture_singh_walther(capsys):
    code, out, _ = run_cli(capsys, "--quiet", "lynch", "fixture", "singh-walther")
    assert code == 0
    doc = json.loads(out)
    assert doc["c"] == 2
    assert doc["annihilator"] == [{"z1": 1}, {"z2": 1}]
    assert doc["dim_modulo_torsion"] == 3
    assert doc["dim_modulo_annihilator"] == 2
    assert doc["gap"] == 1
    assert doc["violated"] is True
    assert doc["all_claims_pass"] is True
    assert [c["pass"] for c in doc["claims"]] == [True] * 6


def test_lynch_fixture_bahmanpour(capsys):
    code, out, _ = run_cli(
        capsys, "--quiet", "lynch", "fixture", "bahmanpour", "--d", "7", "--l", "7"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["dim_modulo_torsion"] == 5
    assert doc["dim_modulo_annihilator"] == 4
    assert doc["violated"] is True


def test_lynch_verify_flags(capsys):
    code, out, _ = run_cli(
        capsys, "--quiet", "lynch", "verify",
        "--d", "4", "--X", "1", "--Y", "2", "--Z", "3,4", "--Xp", "1", "--Yp", "2",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["params"]["Z"] == ["u3", "u4"]
    assert doc["gap"] == 1


def test_lynch_search(capsys):
    code, out, _ = run_cli(capsys, "--quiet", "lynch", "search", "--max-d", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["instances"] == 3
    assert doc["all_claims_pass"] is True
    assert doc["violations"] == 1


def test_failing_checklist_exits_1(capsys, monkeypatch):
    import dataclasses

    import topann.cli as cli
    from topann.lynch import ClaimCheck

    real_verify = cli.verify_instance

    def broken_verify(inst, field):
        rep = real_verify(inst, field)
        sabotaged = (ClaimCheck("i", expected=1, computed=2),) + rep.checklist[1:]
        return dataclasses.replace(rep, checklist=sabotaged)

    monkeypatch.setattr(cli, "verify_instance", broken_verify)
    code = main(["--quiet", "lynch", "fixture", "singh-walther"])
    capsys.readouterr()
    assert code == 1


def test_lynch_search_guard_exit_code(capsys):
    code, _, err = run_cli(capsys, "--quiet", "lynch", "search", "--max-d", "9")
    assert code == 3
    assert "guard" in err


def test_oracle_ranks(sw_file, capsys):
    code, out, _ = run_cli(capsys, "--quiet", "oracle", "ranks", sw_file, "--box=-2:1")
    assert code == 0
    doc = json.loads(out)
    assert doc["top_nonvanishing"] == 2
    assert doc["box"] == {"lower": [-2] * 4, "upper": [1] * 4}
    assert all(any(s["ranks"]) for s in doc["nonzero_slices"])


def test_oracle_ann(sw_file, capsys):
    code, out, _ = run_cli(
        capsys, "--quiet", "oracle", "ann", sw_file, "--monomial", "z1", "--i", "2",
        "--box=-3:1",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "annihilates-in-box"
    code, out, _ = run_cli(
        capsys, "--quiet", "oracle", "ann", sw_file, "--monomial", "x", "--i", "2",
        "--box=-3:1",
    )
    assert json.loads(out)["verdict"] == "acts-nonzero"


def test_unit_sum_instance_rejected(tmp_path, capsys):
    bad = dict(SW_INSTANCE)
    bad["a"] = [{}]  # the identity monomial makes a + J the unit ideal
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, _, err = run_cli(capsys, "--quiet", "cd", str(path))
    assert code == 2
    assert "proper" in err


def test_undeclared_variable_rejected(tmp_path, capsys):
    bad = dict(SW_INSTANCE)
    bad["a"] = [{"w": 1}]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, _, err = run_cli(capsys, "--quiet", "cd", str(path))
    assert code == 2
    assert "undeclared" in err


def test_non_squarefree_relations_rejected(tmp_path, capsys):
    bad = dict(SW_INSTANCE)
    bad["J"] = [{"x": 2}]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, _, err = run_cli(capsys, "--quiet", "cd", str(path))
    assert code == 2
    assert "squarefree" in err


@pytest.mark.parametrize(
    "patch",
    [
        {"J": {"x": 1}},                      # not an array
        {"a": ["x"]},                         # monomial is not an object
        {"vars": ["x", "x"]},                 # duplicate names
        {"vars": ["x", 2]},                   # non-string name
        {"box": {"lower": [0, 0]}},           # missing upper
        {"box": {"lower": [0] * 4, "upper": ["a"] * 4}},
    ],
)
def test_malformed_instances_exit_2(tmp_path, capsys, patch):
    bad = dict(SW_INSTANCE)
    bad.update(patch)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    cmd = "oracle" if "box" in patch else "cd"
    argv = ["--quiet", "oracle", "ranks", str(path)] if cmd == "oracle" else ["--quiet", "cd", str(path)]
    code = main(argv)
    err = capsys.readouterr().err
    assert code == 2
    assert "invalid input" in err


def test_field_override_and_report_labels(sw_file, capsys):
    code, out, _ = run_cli(capsys, "--field", "fp:101", "--quiet", "cd", sw_file)
    assert code == 0
    assert json.loads(out)["field"] == "Fp:101"


def test_reports_are_byte_identical(sw_file, capsys):
    _, out1, _ = run_cli(capsys, "--quiet", "ann-bounds", sw_file)
    _, out2, _ = run_cli(capsys, "--quiet", "ann-bounds", sw_file)
    assert out1 == out2


def test_report_round_trip(sw_file, capsys):
    from topann.annihilator import annihilator_bounds
    from topann.cli import load_instance, monomial_from_obj
    from topann.linalg import FieldSpec
    from topann.monomial import minimalize

    _, out, _ = run_cli(capsys, "--quiet", "ann-bounds", sw_file)
    doc = json.loads(out)
    assert json.loads(json.dumps(doc, sort_keys=True, indent=2)) == doc
    # the serialized ideals reconstruct the library values exactly
    inst = load_instance(sw_file, None, None)
    rep = annihilator_bounds(inst.acting, FieldSpec.rationals())
    lower = minimalize(
        [monomial_from_obj(o, inst.names) for o in doc["lower"]], inst.ring.ambient
    )
    assert lower == rep.lower
    assert doc["delta"] == [["z1", "z2"]]


def test_oracle_reports_are_byte_identical(sw_file, capsys):
    _, out1, _ = run_cli(capsys, "--quiet", "oracle", "ranks", sw_file, "--box=-2:1")
    _, out2, _ = run_cli(capsys, "--quiet", "oracle", "ranks", sw_file, "--box=-2:1")
    assert out1 == out2


def test_oracle_guard_exit_code(sw_file, capsys):
    code, _, err = run_cli(
        capsys, "--quiet", "oracle", "ranks", sw_file, "--guard", "1"
    )
    assert code == 3
    assert "guard" in err


def test_summary_and_quiet_modes(sw_file, capsys):
    code, out, _ = run_cli(capsys, "cd", sw_file)
    assert code == 0
    assert "cd = 2" in out  # human summary present after the JSON
    json.loads(out[: out.rindex("}") + 1])
    code, out, _ = run_cli(capsys, "--pretty", "cd", sw_file)
    assert "{" not in out and "cd = 2" in out


def test_parse_monomial_text():
    names = ["x", "y", "z1"]
    assert parse_monomial_text("x*y^2", names).exponents == (1, 2, 0)
    assert parse_monomial_text("1", names).is_identity()
    assert parse_monomial_text("z1", names).exponents == (0, 0, 1)
    with pytest.raises(InvalidInputError):
        parse_monomial_text("w", names)
