import csv

from planehunt.cli import run
from planehunt.engine import SimConfig, simulate
from planehunt.experiments import sweep_static, write_rows_csv
from planehunt.geometry import Point
from planehunt.searcher import static_plan
from planehunt.target import inert


def test_simulate_static_example(capsys):
    code = run(["simulate", "--algo", "static", "--target", "1,0", "--r", "0.5"])
    out = capsys.readouterr().out
    assert code == 0
    assert "sensed=True" in out
    assert "cost=2.5" in out


def test_simulate_matches_library(capsys):
    run(["simulate", "--target", "0.7,-0.2", "--r", "0.3", "--max-diagonal", "3"])
    out = capsys.readouterr().out
    lib = simulate(static_plan(), inert(Point(0.7, -0.2)), SimConfig(r=0.3, max_diagonal=3))
    assert f"cost={lib.cost:.9g}" in out
    assert f"diagonal={lib.diagonal}" in out


def test_simulate_waypoints_file(tmp_path, capsys):
    wp = tmp_path / "wp.txt"
    wp.write_text("v 1.0\n0 2 0\n1 1 0\n")
    code = run(["simulate", "--waypoints", str(wp), "--r", "0.5", "--max-diagonal", "3"])
    assert code == 0
    assert "sensed=True" in capsys.readouterr().out


def test_simulate_requires_one_target_source(capsys):
    code = run(["simulate", "--r", "0.5"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_sweep_static_golden_against_library(tmp_path):
    out = tmp_path / "cli.csv"
    code = run([
        "sweep-static", "--D", "1,2,4", "--r", "0.25,0.0625",
        "--samples", "5", "--seed", "7", "--out", str(out),
    ])
    assert code == 0
    golden = tmp_path / "lib.csv"
    write_rows_csv(sweep_static([1.0, 2.0, 4.0], [0.25, 0.0625], 5, 7), str(golden))
    assert out.read_bytes() == golden.read_bytes()
    with open(out) as fh:
        assert sum(1 for _ in csv.reader(fh)) == 31  # header + 3*2*5 rows


def test_sweep_dynamic_runs(tmp_path):
    out = tmp_path / "dyn.csv"
    code = run([
        "sweep-dynamic", "--v", "0,1", "--r", "0.25",
        "--D", "1", "--samples", "3", "--seed", "7", "--out", str(out),
    ])
    assert code == 0
    assert out.exists()


def test_sweep_guard_violation_exit_2(capsys):
    code = run(["sweep-static", "--D", "64", "--r", "0.25", "--samples", "1", "--seed", "0"])
    assert code == 2
    assert "guard" in capsys.readouterr().err


def test_impossibility_table(capsys):
    code = run(["impossibility", "--c", "2", "--d", "1", "--m-max", "12"])
    out = capsys.readouterr().out
    assert code == 0
    assert "crossover_m=1" in out
    assert "*" in out  # crossover row marked


def test_adversary_report(capsys):
    code = run(["adversary", "--i", "2", "--max-cost", "10", "--grid-res", "64"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("j D_j r_j")
    assert len(lines) == 3


def test_export_svg(tmp_path, capsys):
    out = tmp_path / "t.svg"
    code = run(["export-svg", "--max-cost", "10", "--out", str(out)])
    assert code == 0
    assert out.exists()


def test_unknown_flag_exits_2(capsys):
    assert run(["simulate", "--bogus", "1"]) == 2


def test_help_lists_flags(capsys):
    code = run(["simulate", "--help"])
    out = capsys.readouterr().out
    assert code == 0
    assert "--r" in out and "length units" in out
