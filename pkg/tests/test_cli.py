import json

import pytest

from classprod.alt_group import enumerate_alt_classes, parse_class
from classprod.characters import parse_char
from classprod.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_degree_command(capsys):
    code, out, _ = run_cli(capsys, "degree", "--n", "10", "--partition", "9,1")
    assert code == 0 and out.strip() == "9"


def test_partitions_command_json(capsys):
    code, out, _ = run_cli(capsys, "partitions", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 5
    assert payload["partitions"][0] == [4]


def test_classes_round_trip_json(capsys):
    code, out, _ = run_cli(capsys, "classes", "--n", "7", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    names = [row["name"] for row in payload["classes"]]
    assert [parse_class(name) for name in names] == list(enumerate_alt_classes(7))


def test_char_value_command(capsys):
    code, out, _ = run_cli(
        capsys, "char-value", "--n", "4", "--char", "2,2+", "--class", "3,1+"
    )
    assert code == 0 and out.strip() == "-1/2 + 1/2*sqrt(-3)"
    code, out, _ = run_cli(
        capsys,
        "char-value", "--n", "4", "--char", "2,2+", "--class", "3,1-",
        "--format", "json",
    )
    payload = json.loads(out)
    assert payload["value"] == {"rational": "-1/2", "coeff": "-1/2", "radicand": -3}
    # character names parse back
    assert parse_char(payload["char"]).name == "2,2+"


def test_delta_command(capsys):
    code, out, _ = run_cli(capsys, "delta", "--n", "8", "--class", "2,2,2,2")
    assert code == 0 and out.strip() == "4"


def test_contains_both_modes(capsys):
    code, out, _ = run_cli(
        capsys,
        "contains", "--n", "5", "--a", "3,1,1", "--b", "3,1,1", "--g", "5+",
        "--mode", "both",
    )
    assert code == 0 and out.strip() == "true"
    code, out, _ = run_cli(
        capsys,
        "contains", "--n", "5", "--a", "1,1,1,1,1", "--b", "3,1,1", "--g", "5+",
    )
    assert code == 0 and out.strip() == "false"


def test_product_bare_exceptional_union(capsys):
    # the bare name "5" is the union of both split classes; squared it
    # covers Alt(5)
    code, out, _ = run_cli(
        capsys, "product", "--n", "5", "--a", "5", "--b", "5", "--mode", "both",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == len(enumerate_alt_classes(5))


def test_covering_command(capsys):
    code, out, _ = run_cli(
        capsys,
        "covering", "--n", "8", "--class", "2,2,2,2", "--max-k", "5",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["covering_number"] == 4
    assert payload["missing_at_k_minus_1"]


def test_dvir_command(capsys):
    code, out, _ = run_cli(capsys, "dvir", "--n", "7", "--format", "json")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_excon_command(capsys):
    code, out, _ = run_cli(capsys, "excon", "--n", "7", "--mode", "both", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [p["part"] for p in payload["parts"]] == [1, 2, 3, 4]


def test_delta_report_command(capsys):
    code, out, _ = run_cli(
        capsys, "delta-report", "--n", "8", "--gamma", "1/2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    names = [row["class"] for row in payload["rows"]]
    assert "2,2,2,2" not in names
    assert "7,1+" in names


def test_verify_theorem_deterministic(capsys):
    args = ["verify-theorem", "--n", "6", "--epsilon", "1/10", "--format", "json"]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["total"] == payload["covered"] + sum(
        1 for q in payload["quadruples"] if not q["covered"]
    )


def test_usage_errors_exit_1(capsys):
    code, _, err = run_cli(capsys, "degree", "--n", "10", "--partition", "3,4")
    assert code == 1 and "weakly decreasing" in err
    code, _, err = run_cli(capsys, "degree", "--n", "10", "--partition", "5,3")
    assert code == 1 and "not a partition of" in err
    code, _, err = run_cli(capsys, "contains", "--n", "5", "--a", "3,1,1", "--b", "3,1,1", "--g", "5")
    assert code == 0  # bare exceptional g: both split classes must be present
    code, _, err = run_cli(capsys, "nonsense")
    assert code == 1
    code, _, err = run_cli(capsys, "verify-theorem", "--n", "6", "--epsilon", "zero")
    assert code == 1


def test_capability_errors_exit_3(capsys):
    code, _, err = run_cli(capsys, "covering", "--n", "9", "--class", "9+", "--mode", "oracle")
    assert code == 3 and "n <= 8" in err
    code, _, err = run_cli(capsys, "product", "--n", "20", "--a", "20", "--b", "20")
    assert code == 3
    code, _, err = run_cli(capsys, "partitions", "--n", "80")
    assert code == 3


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0


def test_jobs_do_not_change_output():
    # fresh interpreters so the parallel path actually computes the masks
    import subprocess
    import sys

    args = ["-m", "classprod.cli", "dvir", "--n", "9", "--format", "json"]
    serial = subprocess.run(
        [sys.executable, *args, "--jobs", "1"], capture_output=True, text=True
    )
    parallel = subprocess.run(
        [sys.executable, *args, "--jobs", "3"], capture_output=True, text=True
    )
    assert serial.returncode == parallel.returncode == 0
    assert serial.stdout == parallel.stdout
    assert json.loads(serial.stdout)["passed"] is True
