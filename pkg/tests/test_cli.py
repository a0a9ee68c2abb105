import json
from importlib import resources

import pytest

from braidhopf import cli
from braidhopf.hopf import load_presentation

DATA = resources.files("braidhopf") / "data"


def path(name):
    return str(DATA / f"{name}.json")


def test_reduce_unitarity(capsys):
    _, code = cli.run(["reduce", path("suq2"), "star(alpha) alpha + star(gamma) gamma - 1"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "0"


def test_reduce_nonzero(capsys):
    _, code = cli.run(["reduce", path("suq2"), "alpha gamma"])
    assert code == 1
    assert capsys.readouterr().out.strip() != "0"


def test_reduce_parse_forms(capsys):
    rep, code = cli.run(["--json", "reduce", path("suq2"), "alpha*gamma - q gamma*alpha",
                         "star(gamma) gamma - gamma star(gamma)", "1"])
    out = json.loads(capsys.readouterr().out)
    assert [r["normal_form"] for r in out["results"]] == ["0", "0", "1"]
    assert code == 1


def test_verify_hopf(capsys):
    assert cli.main(["verify-hopf", path("suq2")]) == 0


def test_transmute_round_trip(tmp_path, capsys):
    out = tmp_path / "suq2b.json"
    assert cli.main(["transmute", path("suq2"), "--beta", path("beta_lambda"), "-o", str(out)]) == 0
    assert cli.main(["verify-braided", str(out)]) == 0
    again = tmp_path / "again.json"
    assert cli.main(["transmute", str(out), "--beta", '{"matrix": [["1"]]}', "-o", str(again)]) == 0
    a, b = load_presentation(str(out)), load_presentation(str(again))
    assert all(not b.reduce(b.parse(a.str(r))) for r in a.relations)
    assert all(not a.reduce(a.parse(b.str(r))) for r in b.relations)


def test_usage_errors(capsys):
    assert cli.main(["no-such-verb"]) == 3
    assert cli.main(["verify-hopf", "/nonexistent.json"]) == 3
    assert cli.main(["verify-braided", path("suq2")]) == 3


def test_examples_json_deterministic(capsys):
    cli.main(["--json", "examples", "verify", "s2plus"])
    first = capsys.readouterr().out
    cli.main(["--json", "examples", "verify", "s2plus"])
    assert capsys.readouterr().out == first
    assert json.loads(first)["schema"] == 1


def test_examples_list(capsys):
    assert cli.main(["examples", "list"]) == 0
    assert "suq2" in capsys.readouterr().out


def test_bosonize_and_theta(tmp_path, capsys):
    out = tmp_path / "bos.json"
    assert cli.main(["bosonize", path("suq2-braided"), "--subgroup", "[[2]]", "--check", "-o", str(out)]) == 0
    assert cli.main(["verify-theta", path("suq2"), "--subgroup", "[[2]]"]) == 0
    assert cli.main(["verify-thm-main", path("suq2"), "--subgroup", "[[2]]", "--beta", path("beta_lambda")]) == 0


def test_ubar(capsys):
    beta = json.dumps({"group": {"rank": 1, "torsion": []}, "scalars": {"cyclotomic": 5}, "matrix": [["zeta(5)"]]})
    assert cli.main(["--json", "ubar", "--x", "[[1],[2],[4]]", "--beta", beta, "--w", "[1]"]) == 0


def test_numeric_verbs(tmp_path, capsys):
    A = json.dumps([[[0, 0], [1, 0]], [[1, 0], [0, 0]]])
    assert cli.main(["--json", "std-form", "-A", A, "-X", "[[1],[-1]]", "--w0", "[0]"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["blocks"][0]["size"] == 2
    assert cli.main(["tl-form", "-A", A]) == 0
    assert cli.main(["tl-form", "-A", A, "--two-torsion"]) == 3
    B = json.dumps([[[0, 0], [0.5 ** 0.5, 0]], [[-(2 ** 0.5), 0], [0, 0]]])
    assert cli.main(["check-mrozinski", "-B", B]) == 0
    I3 = json.dumps([[[float(i == j), 0] for j in range(3)] for i in range(3)])
    assert cli.main(["check-mrozinski", "-B", I3]) == 1
    assert cli.main(["check-bfo", "-A", A, "-X", "[[1],[-1]]", "--w", "[0]", "--beta", "[[[1,0]]]"]) == 0
    args = ["check-iso", "--A1", A, "--X1", "[[1],[-1]]", "--A2", A, "--X2", "[[1],[-1]]",
            "--beta", "[[[1,0]]]", "--w1", "[0]", "--w2", "[0]"]
    assert cli.main(args) == 0
    half = json.dumps([[[0, 0], [2, 0]], [[0.5, 0], [0, 0]]])
    third = json.dumps([[[0, 0], [3, 0]], [[1 / 3, 0], [0, 0]]])
    args[2], args[6] = half, third
    assert cli.main(args) == 1


@pytest.mark.parametrize("verb", ["verify-hopf"])
def test_mutated_fails(tmp_path, verb, capsys):
    data = json.loads((DATA / "suq2.json").read_text())
    data["relations"][-1] = data["relations"][-1].replace("q^2", "q^4")
    f = tmp_path / "m.json"
    f.write_text(json.dumps(data))
    assert cli.main([verb, str(f)]) == 1
