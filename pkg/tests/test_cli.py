import json

import pytest
from click.testing import CliRunner

from cli.main import cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


def test_cf_plain(runner):
    result = invoke(runner, "cf", "7/5")
    assert result.exit_code == 0
    assert result.output.strip() == "[1; 2, 2]"
    assert invoke(runner, "cf", "(1+sqrt(5))/2").output.strip() == "[(1)]"


def test_cf_json(runner):
    result = invoke(runner, "cf", "sqrt(3)", "--json")
    payload = json.loads(result.output)
    assert payload == {"alpha": "sqrt(3)", "head": [1], "period": [1, 2], "text": "[1; (1, 2)]"}


def test_json_before_subcommand(runner):
    result = invoke(runner, "--json", "cf", "7/5")
    assert json.loads(result.output)["head"] == [1, 2, 2]


def test_steps(runner):
    assert invoke(runner, "steps", "7/5").output.strip() == "ABAABAAC"
    assert invoke(runner, "steps", "(1+sqrt(5))/2", "--max-steps", "4").output.strip() == "ABAB"
    payload = json.loads(invoke(runner, "steps", "7/5", "--json").output)
    assert payload["halted"] is True


def test_convergents(runner):
    payload = json.loads(invoke(runner, "convergents", "sqrt(2)", "4", "--json").output)
    assert [(c["p"], c["q"]) for c in payload["convergents"]] == [(1, 1), (3, 2), (7, 5), (17, 12)]
    plain = invoke(runner, "convergents", "sqrt(2)", "2").output
    assert plain.splitlines() == ["0\t1/1", "1\t3/2"]
    result = invoke(runner, "convergents", "7/5", "4")
    assert result.exit_code == 1


def test_circles_json_lines(runner):
    result = invoke(runner, "circles", "1", "--generations", "1", "--json")
    assert result.exit_code == 0
    records = [json.loads(line) for line in result.output.splitlines()]
    assert len(records) == 5
    assert records[0]["line_height"] == 0.0
    assert records[0]["label"] is None
    assert [r["label"] for r in records[2:]] == [[1, 0], [1, 1], [0, 1]]


def test_similar(runner):
    payload = json.loads(invoke(runner, "similar", "sqrt(2)", "1+sqrt(2)", "--json").output)
    assert payload["similar"] is True
    assert payload["witness"] == [[1, 1], [0, 1]]
    assert payload["det"] == 1
    plain = invoke(runner, "similar", "sqrt(2)", "sqrt(3)").output
    assert plain.strip() == "similar: no"


def test_symm_cyclic(runner):
    payload = json.loads(invoke(runner, "symm", "(1+sqrt(5))/2", "--json").output)
    assert payload["kind"] == "cyclic"
    assert payload["generator"] == [[1, 1], [1, 0]]
    assert payload["det"] == -1
    assert payload["scale_sq"] == "(3+sqrt(5))/2"
    assert payload["pell"] == {"x": 1, "y": 1, "rhs": -4}
    assert payload["orientation_reversing"] is True
    assert payload["class"] == [1]


def test_symm_strip(runner):
    payload = json.loads(invoke(runner, "symm", "7/5", "--json").output)
    assert payload["kind"] == "strip"
    assert payload["class"] == "strip"
    assert payload["generator"] is None
    plain = invoke(runner, "symm", "7/5").output
    assert "group: D_inf x Z/2 (strip)" in plain


def test_class(runner):
    assert invoke(runner, "class", "(1+sqrt(3))/2").output.strip() == "(1, 2)"
    assert invoke(runner, "class", "13/8").output.strip() == "strip"


def test_replace(runner):
    payload = json.loads(invoke(runner, "replace", "7/5", "--json").output)
    assert payload["trace"] == "ABAABAAC"
    assert [row["ratio_exact"] for row in payload["rows"]] == ["7/5", "2/5", "5/2", "3/2", "1/2", "2", "1", "0"]
    assert payload["rows"][-1]["step"] is None
    plain = invoke(runner, "replace", "7/5").output.splitlines()
    assert plain[0].split("\t")[:2] == ["0", "A"]
    assert plain[-1].split("\t")[1] == "-"


def test_engine_error_exit_code(runner):
    result = invoke(runner, "cf", "0")
    assert result.exit_code == 1
    assert "error:" in result.output


def test_decimals_need_unsafe_approx(runner):
    assert invoke(runner, "cf", "1.5").exit_code == 2
    assert invoke(runner, "cf", "sqrt(x)").exit_code == 2
    assert invoke(runner, "cf", "sqrt(-5)").exit_code == 2
    assert invoke(runner, "cf", "(1+sqrt(0))/2").exit_code == 2
    assert invoke(runner, "cf", "1/0").exit_code == 2
    assert invoke(runner, "--unsafe-approx", "cf", "1.5").stdout.strip() == "[1; 2]"
    assert invoke(runner, "cf", "1.5", "--unsafe-approx").stdout.strip() == "[1; 2]"


def test_out_file(runner, tmp_path):
    target = tmp_path / "cf.txt"
    result = invoke(runner, "cf", "7/5", "--out", str(target))
    assert result.exit_code == 0
    assert target.read_text(encoding="utf-8") == "[1; 2, 2]\n"


def test_render_to_file(runner, tmp_path):
    target = tmp_path / "golden.svg"
    result = invoke(runner, "render", "(1+sqrt(5))/2", "--generations", "3", "--trace", "4", "--out", str(target))
    assert result.exit_code == 0
    assert result.output.startswith("wrote ")
    text = target.read_text(encoding="utf-8")
    assert text.startswith("<?xml")
    assert "#c0c0c0" in text


def test_render_stdout(runner):
    result = invoke(runner, "render", "1+sqrt(2)", "--generations", "2", "--width", "400")
    assert result.exit_code == 0
    assert 'width="400"' in result.output


def test_render_bad_window(runner):
    result = invoke(runner, "render", "1", "--window", "2", "1")
    assert result.exit_code == 2
