import json
from importlib import resources

import jsonschema
import pytest

from genphi.cli import EXIT_BOUND, EXIT_DOMAIN, EXIT_INCONSISTENT, EXIT_OK, main

SCHEMA = json.loads(resources.files("genphi").joinpath("data/envelope.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    env = json.loads(out)
    jsonschema.validate(env, SCHEMA)
    return code, env


def test_phik_text(capsys):
    assert run(capsys, "phik", "2", "7000")[:2] == (EXIT_OK, "80\n")


def test_phik_three_methods_agree(capsys):
    code, env = run_json(capsys, "phik", "3", "1080000", "--method", "closed,iter,oracle", "--bound", "10000000")
    assert code == EXIT_OK
    assert env["result"] == {"closed": 160, "iter": 160, "oracle": 160}
    assert env["provenance"] == ["closed-form", "iteration", "oracle"]


def test_decompose_forms(capsys):
    assert run(capsys, "decompose", "2", "7000", "--form", "invariant")[1].strip() == "Z2 x Z2 x Z20"
    code, env = run_json(capsys, "decompose", "3", "64", "--method", "oracle")
    assert env["result"]["orders"] == [2]


def test_iphi_and_phiproduct(capsys):
    assert run(capsys, "iphi", "2", "7000")[1].strip() == "640"
    code, env = run_json(capsys, "phiproduct", "5", "8", "9", "13", "18", "22")
    assert code == EXIT_OK
    assert env["result"] == {"expansion": 414720, "direct": 414720}


def test_solve(capsys):
    code, env = run_json(capsys, "solve", "phik-one", "--k", "2", "--max", "1000")
    assert env["result"]["solutions"] == [1, 2, 3, 4, 6, 8, 12, 24]
    assert env["result"]["comparison"]["agrees"]
    code, env = run_json(capsys, "solve", "eq-k3", "--max", "500", "--reading", "literal")
    assert 3 in env["result"]["comparison"]["not_classified"]


def test_verify_published_suite_is_registered(capsys):
    code, env = run_json(capsys, "verify", "--suite", "published")
    assert code == EXIT_OK
    (report,) = env["reports"]
    assert all(m["known"] == "example-u3-z1080000" for m in report["mismatches"])


def test_json_is_deterministic(capsys):
    first = run(capsys, "decompose", "4", "5040", "--json")[1]
    second = run(capsys, "decompose", "4", "5040", "--json")[1]
    assert first == second


@pytest.mark.parametrize("argv, code", [
    (["phik", "2", "0"], EXIT_DOMAIN),
    (["phik", "-1", "5"], EXIT_DOMAIN),
    (["phik", "2", "x"], EXIT_DOMAIN),
    (["phik", "2", "10", "--method", "guess"], EXIT_DOMAIN),
    (["phiproduct"], EXIT_DOMAIN),
    (["iphi", "1", str(2**89 - 1)], EXIT_DOMAIN),  # prime beyond the certified range
    (["phik", "3", "1080000", "--method", "oracle", "--bound", "1000"], EXIT_BOUND),
    (["solve", "eq-k2", "--max", str(10**8)], EXIT_BOUND),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code


def test_disagreement_exits_3(capsys, monkeypatch):
    import genphi.cli as cli

    monkeypatch.setattr(cli, "phi_k", lambda n, k: 0)
    assert run(capsys, "phik", "2", "10", "--method", "closed,iter")[0] == EXIT_INCONSISTENT
