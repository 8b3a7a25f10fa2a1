"""
    Command Line Handler Tests

    table     dimorphic, mersenne, beta, csv, --out, range errors
    verify    single identity, --all, fault injection, determinism
    eval      rational points, malformed literals
    mersenne-prime

    Every command runs in-process through index.main, which
    returns the exit code instead of exiting.
"""

import json

import pytest
import config
from handlers.base import CliConfig
from index import main
from utils import decoder


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv(config.CONFIG_ENV, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


# -------------
#  table
# -------------


def test_table_dimorphic(capsys):
    code, out = run(capsys, "table", "dimorphic", "--n-max", "3")
    assert code == config.EXIT_OK
    table = decoder.table_from_dict(json.loads(out))
    assert [str(value) for value in table.values] == ["0", "1", "3 + (-1)λ", "7 + (-9)λ + 2λ^2"]


def test_table_mersenne(capsys):
    code, out = run(capsys, "table", "mersenne", "--n-max", "4")
    assert code == config.EXIT_OK
    assert json.loads(out)["values"] == ["0", "1", "3", "7", "15"]


def test_table_beta(capsys):
    code, out = run(capsys, "table", "beta", "--n-max", "0", "--format", "csv")
    assert code == config.EXIT_OK
    assert out == "n,value\n0,1\n"

    code, out = run(capsys, "table", "beta", "--n-max", "4", "--method", "theorem1")
    assert code == config.EXIT_OK
    assert json.loads(out)["method"] == "theorem1"


def test_table_roundtrip(capsys):
    code, out = run(capsys, "table", "beta", "--n-max", "6")
    assert code == config.EXIT_OK
    table = decoder.table_from_dict(decoder.to_json(out))
    assert decoder.dumps(decoder.table_to_dict(table)) == out


def test_table_triangle_csv(capsys):
    code, out = run(capsys, "table", "stirling2", "--n-max", "3", "--format", "csv")
    assert code == config.EXIT_OK
    assert out == "n,0,1,2,3\n0,1,,,\n1,0,1,,\n2,0,1,1,\n3,0,1,3,1\n"


def test_table_out(capsys, tmp_path):
    path = tmp_path / "mersenne.csv"
    code, out = run(capsys, "table", "mersenne", "--n-max", "2", "--format", "csv", "--out", str(path))
    assert code == config.EXIT_OK
    assert out == ""
    assert path.read_bytes() == b"n,value\n0,0\n1,1\n2,3\n"


def test_table_usage_errors(capsys):
    assert main(["table", "fibonacci"]) == config.EXIT_USAGE
    assert main(["table", "beta", "--n-max", "-1"]) == config.EXIT_USAGE
    assert main(["table", "beta", "--n-max", "24"]) == config.EXIT_USAGE  # order 24 < 25
    assert main(["table", "beta", "--n-max", "24", "--order", "25", "--format", "csv"]) == config.EXIT_OK
    assert main(["table", "mersenne", "--method", "classic"]) == config.EXIT_USAGE
    capsys.readouterr()


# -------------
#  verify
# -------------


def test_verify_trivial(capsys):
    code, out = run(capsys, "verify", "theorem1", "--n-max", "0")
    assert code == config.EXIT_OK
    doc = json.loads(out)
    assert doc["allPass"] is True
    assert doc["reports"] == [
        {"identity": "THEOREM1", "results": [{"n": 0, "pass": True, "residual": None}], "allPass": True}
    ]


def test_verify_all(capsys):
    code, out = run(capsys, "verify", "--all", "--n-max", "10")
    assert code == config.EXIT_OK
    doc = json.loads(out)
    assert doc["allPass"] is True
    assert len(doc["reports"]) == 19


def test_verify_deterministic(capsys):
    first = run(capsys, "verify", "--all", "--n-max", "6")
    second = run(capsys, "verify", "--all", "--n-max", "6", "--workers", "4")
    assert first == second
    assert decoder.dumps(decoder.batch_to_dict(decoder.batch_from_dict(json.loads(first[1])))) == first[1]


def test_verify_fault(capsys):
    code, out = run(capsys, "verify", "theorem1", "eq19_recurrence", "--n-max", "3", "--inject-fault")
    assert code == config.EXIT_FAILURE
    doc = json.loads(out)
    assert doc["allPass"] is False
    theorem1 = next(report for report in doc["reports"] if report["identity"] == "THEOREM1")
    assert theorem1["results"][1]["residual"] == {"terms": [{"dl": 1, "dx": 0, "num": "1", "den": "1"}]}


def test_verify_fault_trivial_range(capsys):
    code, _ = run(capsys, "verify", "theorem1", "--n-max", "0", "--inject-fault")
    assert code == config.EXIT_OK


def test_verify_csv_out(capsys, tmp_path):
    path = tmp_path / "report.csv"
    code, _ = run(capsys, "verify", "eq5_stirling", "--n-max", "2", "--format", "csv", "--out", str(path))
    assert code == config.EXIT_OK
    assert path.read_text() == (
        "identity,n,pass,residual\nEQ5_STIRLING,0,true,0\nEQ5_STIRLING,1,true,0\nEQ5_STIRLING,2,true,0\n"
    )


def test_verify_usage_errors(capsys):
    assert main(["verify"]) == config.EXIT_USAGE
    assert main(["verify", "theorem9"]) == config.EXIT_USAGE
    assert main(["verify", "theorem1", "--n-max", "30"]) == config.EXIT_USAGE
    capsys.readouterr()


def test_verify_order(capsys):
    # eq20_reciprocal runs to n=10 by default
    assert main(["verify", "eq20_reciprocal", "--order", "3"]) == config.EXIT_USAGE
    assert capsys.readouterr().out == ""
    code, out = run(capsys, "verify", "eq20_reciprocal", "--n-max", "3", "--order", "4")
    assert code == config.EXIT_OK
    assert [result["n"] for result in json.loads(out)["reports"][0]["results"]] == [1, 2, 3]


# -------------
#  eval
# -------------


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["eval", "beta", "2", "--lambda", "0", "--x", "0"], "1/6"),
        (["eval", "dimorphic", "5", "--lambda", "0"], "31"),
        (["eval", "gff", "3", "--lambda", "1", "--x", "3"], "6"),
        (["eval", "beta", "1", "--lambda", "1/3"], "x + (-1/3)"),
        (["eval", "dimorphic", "2", "--lambda=-1/2"], "7/2"),
        (["eval", "mersenne", "61", "--lambda", "5", "--order", "62"], "2305843009213693951"),
    ],
)
def test_eval(capsys, argv, expected):
    code, out = run(capsys, *argv)
    assert code == config.EXIT_OK
    assert out == expected + "\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "beta", "2", "--lambda", "0.5"],
        ["eval", "beta", "2", "--lambda", "1/0"],
        ["eval", "beta", "2"],
        ["eval", "stirling2", "2", "--lambda", "0"],
        ["eval", "fibonacci", "2", "--lambda", "0"],
        ["eval", "beta", "40", "--lambda", "0"],
        ["eval", "mersenne", "61", "--lambda", "5"],
        ["eval", "beta", "4", "--lambda", "0", "--order", "4"],
    ],
)
def test_eval_usage_errors(capsys, argv):
    assert main(argv) == config.EXIT_USAGE
    assert capsys.readouterr().out == ""


# -------------
#  mersenne-prime
# -------------


def test_mersenne_prime(capsys):
    code, out = run(capsys, "mersenne-prime", "7", "11", "4", "2")
    assert code == config.EXIT_OK
    assert out == "7: true\n11: false\n4: false\n2: true\n"

    code, out = run(capsys, "mersenne-prime", "--n-max", "31")
    assert out.split() == ["2", "3", "5", "7", "13", "17", "19", "31"]

    assert main(["mersenne-prime", "1"]) == config.EXIT_USAGE
    assert main(["mersenne-prime"]) == config.EXIT_USAGE


# -------------
#  configuration
# -------------


def test_config_file(capsys, monkeypatch, tmp_path):
    path = tmp_path / "conf.yml"
    path.write_text("truncation_order: 30\nn_max:\n  mersenne: 3\noutput_format: csv\n")
    monkeypatch.setenv(config.CONFIG_ENV, str(path))

    conf = CliConfig.load()
    assert conf.truncation_order == 30
    assert conf.family_n_max("mersenne") == 3
    assert conf.family_n_max("beta") == config.N_MAX["beta"]

    code, out = run(capsys, "table", "mersenne")
    assert code == config.EXIT_OK
    assert out == "n,value\n0,0\n1,1\n2,3\n3,7\n"
    code, out = run(capsys, "table", "mersenne", "--format", "json")
    assert json.loads(out)["to"] == 3


def test_config_file_bad(capsys, monkeypatch, tmp_path):
    path = tmp_path / "conf.json"
    path.write_text('{"output_format": "xml"}')
    monkeypatch.setenv(config.CONFIG_ENV, str(path))
    assert main(["table", "mersenne"]) == config.EXIT_USAGE

    monkeypatch.setenv(config.CONFIG_ENV, str(tmp_path / "missing.yml"))
    assert main(["table", "mersenne"]) == config.EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_config_defaults():
    conf = CliConfig.load({})
    assert conf.truncation_order == config.TRUNCATION_ORDER
    assert conf.override(workers=None, output_format="csv").output_format == "csv"
    assert conf.override(workers=None).workers == config.VERIFY_WORKERS
    assert conf.check_order(23) == 24
