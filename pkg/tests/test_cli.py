import json

import pytest

from equicolor import parse_coloring, parse_instance
from equicolor.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def gen_instance(tmp_path, capsys, name="g.txt", **kwargs):
    path = tmp_path / name
    argv = ["gen", "random", "--output", str(path)]
    for key, value in kwargs.items():
        argv += [f"--{key}", str(value)]
    code, _, _ = run_cli(capsys, *argv)
    assert code == 0
    return path


def test_gen_parse_round_trip(tmp_path, capsys):
    path = gen_instance(tmp_path, capsys, n=20, delta=3, seed=9)
    text = path.read_text()
    g = parse_instance(text)
    assert g.n == 20 and g.max_degree() <= 3


def test_gen_is_deterministic(tmp_path, capsys):
    a = gen_instance(tmp_path, capsys, "a.txt", n=15, delta=2, seed=4)
    b = gen_instance(tmp_path, capsys, "b.txt", n=15, delta=2, seed=4)
    assert a.read_bytes() == b.read_bytes()


def test_color_and_verify_pipeline(tmp_path, capsys):
    inst = gen_instance(tmp_path, capsys, n=18, delta=3, seed=0)
    out = tmp_path / "c.txt"
    code, _, _ = run_cli(capsys, "color", "--algo", "2eq1", "--k", "4",
                         "--input", str(inst), "--output", str(out))
    assert code == 0
    coloring = parse_coloring(out.read_text())
    assert coloring.k == 4

    code, stdout, _ = run_cli(capsys, "verify", "--input", str(inst),
                              "--coloring", str(out), "--threshold", "2/1")
    assert code == 0
    assert stdout.strip() != "inf"


def test_verify_detects_improper_coloring(tmp_path, capsys):
    inst = tmp_path / "g.txt"
    inst.write_text("p wgraph 2 1\nv 0 1/1\nv 1 1/1\ne 0 1\n")
    col = tmp_path / "c.txt"
    col.write_text("k 2\nc 0 0 1\nc 1\n")
    code, _, stderr = run_cli(capsys, "verify", "--input", str(inst),
                              "--coloring", str(col))
    assert code == 1
    record = json.loads(stderr.strip())
    assert record["error"] == "ImproperColoring"


def test_verify_threshold_failure(tmp_path, capsys):
    inst = tmp_path / "g.txt"
    inst.write_text("p wgraph 3 0\nv 0 5/1\nv 1 5/1\nv 2 1/1\n")
    col = tmp_path / "c.txt"
    col.write_text("k 2\nc 0 0 1\nc 1 2\n")
    # removing one 5 leaves 5 against the weight-1 class: factor 5
    code, stdout, _ = run_cli(capsys, "verify", "--input", str(inst),
                              "--coloring", str(col), "--threshold", "2/1")
    assert code == 1
    assert stdout.strip() == "5/1"


def test_exit_code_usage_error(capsys):
    code, _, stderr = run_cli(capsys, "color", "--algo", "eps-eq1", "--k", "5",
                              "--input", "/nonexistent")
    assert code == 64  # missing --eps reported before reading the input
    assert json.loads(capsys.readouterr().err or stderr)["error"] == "UsageError"


def test_exit_code_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("p wgraph 1 0\nv 0 huh\n")
    code, _, stderr = run_cli(capsys, "verify", "--input", str(bad),
                              "--coloring", str(bad))
    assert code == 65
    assert json.loads(stderr.strip())["error"] == "FormatError"


def test_exit_code_precondition(tmp_path, capsys):
    inst = gen_instance(tmp_path, capsys, n=12, delta=3, seed=1)
    code, _, stderr = run_cli(capsys, "color", "--algo", "2eq1", "--k", "2",
                              "--input", str(inst))
    assert code == 2
    assert json.loads(stderr.strip())["error"] == "PreconditionViolated"


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, stderr = run_cli(capsys, "frobnicate")
    assert code == 64


def test_oracle_min_alpha_and_witnessless_modes(tmp_path, capsys):
    inst = tmp_path / "g.txt"
    inst.write_text("p wgraph 4 3\nv 0 1/1\nv 1 1/1\nv 2 1/1\nv 3 1/1\n"
                    "e 0 1\ne 1 2\ne 2 3\n")
    code, stdout, _ = run_cli(capsys, "oracle", "min-alpha",
                              "--input", str(inst), "--k", "2")
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0] == "min-alpha 1/2"
    assert lines[1] == "exhausted yes"

    code, stdout, _ = run_cli(capsys, "oracle", "chromatic",
                              "--input", str(inst))
    assert code == 0 and stdout.strip() == "chromatic 2"

    code, stdout, _ = run_cli(capsys, "oracle", "mwis", "--input", str(inst))
    assert code == 0
    assert stdout.splitlines()[0] == "mwis-weight 2/1"


def test_mc_class_prob(tmp_path, capsys):
    inst = tmp_path / "g.txt"
    inst.write_text("p wgraph 3 1\nv 0 1/1\nv 1 1/1\nv 2 1/1\ne 0 1\n")
    code, stdout, _ = run_cli(capsys, "mc", "class-prob", "--input", str(inst),
                              "--k", "4", "--trials", "600", "--seed", "3")
    assert code == 0
    lines = stdout.splitlines()
    assert len(lines) == 3 and all(line.endswith("ok") for line in lines)


def test_mc_tail(capsys):
    code, stdout, _ = run_cli(capsys, "mc", "tail", "--t", "2/1",
                              "--trials", "400", "--seed", "0")
    assert code == 0
    lines = stdout.splitlines()
    assert [line.split()[0] for line in lines] == [
        "independent", "copied-pair", "cycle",
    ]
    assert all(line.endswith("ok") for line in lines)


def test_bench_outputs(tmp_path, capsys):
    out = tmp_path / "bench"
    code, _, _ = run_cli(capsys, "bench", "--output-dir", str(out),
                         "--sizes", "40", "--delta", "2", "--no-runtime")
    assert code == 0
    csv_path = out / "bench.csv"
    assert csv_path.exists()
    assert (out / "factor.png").exists()
    header = csv_path.read_text().splitlines()[0]
    assert "algo" in header and "factor" in header


def test_color_partition_mode(tmp_path, capsys):
    inst = tmp_path / "g.txt"
    lines = ["p wgraph 12 0"] + [f"v {i} 1/1" for i in range(12)]
    inst.write_text("\n".join(lines) + "\n")
    part = tmp_path / "p.txt"
    part.write_text("part 4 0 1 2 3\npart 8 4 5 6 7 8 9 10 11\n")
    out = tmp_path / "c.txt"
    code, _, _ = run_cli(capsys, "color", "--algo", "partition", "--k", "4",
                         "--input", str(inst), "--partition", str(part),
                         "--output", str(out))
    assert code == 0
    code, stdout, _ = run_cli(capsys, "verify", "--input", str(inst),
                              "--coloring", str(out), "--mode", "partition",
                              "--partition", str(part))
    assert code == 0 and stdout.strip() == "ok"
