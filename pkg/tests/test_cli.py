import json
import subprocess
import sys

import pytest

from ramseykit import EdgeColoring, count_mono, parse_pattern, split_coloring
from ramseykit.cli import canonical_json, main


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_writes_parseable_file(tmp_path, capsys) -> None:
    out = tmp_path / "c.rmc"
    code, stdout, _ = run_cli(capsys, "construct", "--split", "6,2", "--out", str(out))
    assert code == 0
    assert "n=8" in stdout
    assert EdgeColoring.parse(out.read_bytes()) == split_coloring(6, 2)


def test_construct_with_flips(tmp_path, capsys) -> None:
    out = tmp_path / "c.rmc"
    code, _, _ = run_cli(
        capsys, "construct", "--split", "6,2", "--flip", "0,1", "--out", str(out)
    )
    assert code == 0
    parsed = EdgeColoring.parse(out.read_bytes())
    assert parsed == split_coloring(6, 2, flips=[(0, 1)])


def test_construct_json_report_is_canonical(tmp_path, capsys) -> None:
    out = tmp_path / "c.rmc"
    code, stdout, _ = run_cli(
        capsys, "construct", "--split", "6,2", "--out", str(out), "--json"
    )
    assert code == 0
    report = json.loads(stdout)
    assert canonical_json(report) == stdout.rstrip("\n")
    assert report["command"] == "construct"
    assert report["inputs"]["split"] == [6, 2]
    assert isinstance(report["wall_time_s"], float)


@pytest.fixture()
def split_file(tmp_path):
    path = tmp_path / "c62.rmc"
    path.write_bytes(split_coloring(6, 2).serialize())
    return path


def test_count_reports_per_color_and_total(split_file, capsys) -> None:
    code, stdout, _ = run_cli(
        capsys, "count", "--in", str(split_file), "--pattern", "P_6", "--json"
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["results"]["red"] == "0"
    assert report["results"]["blue"] == "360"
    assert report["results"]["total"] == "360"
    assert report["results"]["provenance"] == "exact"


def test_count_single_color_omits_total(split_file, capsys) -> None:
    code, stdout, _ = run_cli(
        capsys,
        "count",
        "--in",
        str(split_file),
        "--pattern",
        "P_6",
        "--color",
        "blue",
        "--json",
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["results"]["blue"] == "360"
    assert "total" not in report["results"]
    assert "red" not in report["results"]


def test_count_json_is_byte_stable(split_file, capsys) -> None:
    _, first, _ = run_cli(
        capsys, "count", "--in", str(split_file), "--pattern", "C_6", "--json"
    )
    _, second, _ = run_cli(
        capsys, "count", "--in", str(split_file), "--pattern", "C_6", "--json"
    )
    a, b = json.loads(first), json.loads(second)
    a.pop("wall_time_s"), b.pop("wall_time_s")
    assert canonical_json(a) == canonical_json(b)


def test_count_missing_file_is_a_usage_error(tmp_path, capsys) -> None:
    code, _, stderr = run_cli(
        capsys, "count", "--in", str(tmp_path / "nope.rmc"), "--pattern", "P_4"
    )
    assert code == 2
    assert stderr


def test_count_oversized_host_exits_with_capability_error(tmp_path, capsys) -> None:
    path = tmp_path / "big.rmc"
    path.write_bytes(split_coloring(20, 10).serialize())
    code, _, stderr = run_cli(capsys, "count", "--in", str(path), "--pattern", "P_6")
    assert code == 2
    assert "capability" in stderr


def test_count_bad_pattern_is_a_usage_error(split_file, capsys) -> None:
    code, _, stderr = run_cli(
        capsys, "count", "--in", str(split_file), "--pattern", "Q_9"
    )
    assert code == 2
    assert stderr


def test_search_exhaustive_reports_exact_minimum(capsys) -> None:
    code, stdout, _ = run_cli(
        capsys, "search", "--pattern", "S_3", "--n", "6", "--exhaustive", "--json"
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["results"]["best_count"] == "6"
    assert report["results"]["exact"] is True
    assert report["results"]["provenance"] == "exact"


def test_search_anneal_requires_a_seed(capsys) -> None:
    code, _, stderr = run_cli(
        capsys, "search", "--pattern", "P_6", "--n", "8", "--anneal"
    )
    assert code == 2
    assert "seed" in stderr


def test_search_anneal_writes_a_consistent_witness(tmp_path, capsys) -> None:
    out = tmp_path / "w.rmc"
    code, stdout, _ = run_cli(
        capsys,
        "search",
        "--pattern",
        "P_6",
        "--n",
        "8",
        "--anneal",
        "--seed",
        "1",
        "--out",
        str(out),
        "--json",
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["results"]["provenance"] == "upper-bound"
    witness = EdgeColoring.parse(out.read_bytes())
    assert count_mono(witness, parse_pattern("P_6")) == int(
        report["results"]["best_count"]
    )


def test_search_exhaustive_on_large_host_suggests_annealing(capsys) -> None:
    code, _, stderr = run_cli(
        capsys, "search", "--pattern", "P_6", "--n", "8", "--exhaustive"
    )
    assert code == 2
    assert "anneal" in stderr


def test_verify_prints_one_line_per_check(capsys) -> None:
    code, stdout, _ = run_cli(capsys, "verify", "--suite", "formulas")
    assert code == 0
    lines = stdout.strip().splitlines()
    assert all(line.startswith("PASS formulas/") for line in lines[:-1])
    passed, total = lines[-1].split()[0].split("/")
    assert passed == total
    assert len(lines) - 1 == int(total)


def test_verify_json_reports_zero_failures(capsys) -> None:
    code, stdout, _ = run_cli(capsys, "verify", "--suite", "structure", "--json")
    assert code == 0
    report = json.loads(stdout)
    assert report["results"]["failed"] == 0
    assert report["results"]["passed"] >= 1


def test_verify_unknown_suite_is_a_usage_error(capsys) -> None:
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_threads_env_fallback(split_file, capsys, monkeypatch) -> None:
    monkeypatch.setenv("RML_THREADS", "2")
    code, stdout, _ = run_cli(
        capsys,
        "search",
        "--pattern",
        "K3",
        "--n",
        "6",
        "--anneal",
        "--seed",
        "3",
        "--restarts",
        "2",
        "--steps",
        "400",
    )
    assert code == 0
    assert "upper bound" in stdout or "anneal" in stdout


def test_module_entry_point_smoke() -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "ramseykit.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip()
