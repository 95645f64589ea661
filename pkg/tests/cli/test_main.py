import csv
import json
from pathlib import Path

import numpy as np
import pytest
import yaml
from typer.testing import CliRunner

from hyperrank.cli.main import app
from hyperrank.config import load_configuration
from hyperrank.file_io.write import write_hypergraph
from hyperrank.hypergraph import UniformHypergraph

runner = CliRunner()


def read_table(path: Path) -> list[dict[str, str]]:
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


@pytest.fixture
def toy_files(tmp_path: Path, toy_hypergraph, toy_v) -> tuple[Path, Path]:
    """Toy hypergraph file and teleportation vector file."""
    hg = tmp_path / "toy.hg"
    write_hypergraph(hg, toy_hypergraph)
    v = tmp_path / "v.txt"
    v.write_text("# teleportation\n" + "\n".join(str(x) for x in toy_v) + "\n")
    return hg, v


def solve_args(hg: Path, out: Path, *extra: str) -> list[str]:
    return ["solve", "-i", str(hg), "-o", str(out), *extra]


def test_solve(tmp_path: Path, toy_files, toy_solution):
    hg, v = toy_files
    out = tmp_path / "results" / "y.csv"

    result = runner.invoke(app, solve_args(hg, out, "--alpha", "0.2", "--v", str(v)))
    assert result.exit_code == 0

    rows = read_table(out)
    assert [int(row["vertex"]) for row in rows] == list(range(1, 10))
    y = np.array([float(row["y"]) for row in rows])
    np.testing.assert_allclose(y, toy_solution, atol=5e-4)

    summary = json.loads(out.with_suffix(".json").read_text())
    assert summary["converged"] is True
    assert summary["model"] == "mlppr"
    assert (summary["n"], summary["k"], summary["m"]) == (9, 3, 9)
    assert summary["config"]["alpha"] == 0.2
    assert summary["sum_y"] == pytest.approx(y.sum())
    for key in ("iterations", "residual_step", "residual_eq", "varsigma", "work"):
        assert key in summary


def test_solve_models_agree(tmp_path: Path, toy_files):
    """Test that the normalized multi-linear solution matches the stochastic one."""
    hg, v = toy_files
    solutions = {}
    for model in ("mlppr", "mpr"):
        out = tmp_path / f"{model}.csv"
        result = runner.invoke(
            app,
            solve_args(
                hg, out, "--alpha", "0.2", "--v", str(v), "--model", model,
                "--tol-step", "1e-12",
            ),
        )
        assert result.exit_code == 0
        solutions[model] = np.array([float(row["y"]) for row in read_table(out)])

    y, x = solutions["mlppr"], solutions["mpr"]
    assert x.sum() == pytest.approx(1.0)
    np.testing.assert_allclose(y / y.sum(), x, atol=1e-8)


def test_solve_no_damping(tmp_path: Path, toy_files, toy_v):
    hg, v = toy_files
    out = tmp_path / "y.csv"
    summary = tmp_path / "summary.json"

    result = runner.invoke(
        app,
        solve_args(hg, out, "--alpha", "0", "--v", str(v), "--summary", str(summary)),
    )
    assert result.exit_code == 0
    y = np.array([float(row["y"]) for row in read_table(out)])
    np.testing.assert_allclose(y, toy_v)
    assert summary.exists()
    assert not out.with_suffix(".json").exists()


def test_solve_threads(tmp_path: Path, toy_files, toy_solution, monkeypatch):
    hg, v = toy_files
    out = tmp_path / "y.csv"
    monkeypatch.setenv("HYPERRANK_THREADS", "2")

    result = runner.invoke(app, solve_args(hg, out, "--alpha", "0.2", "--v", str(v)))
    assert result.exit_code == 0
    summary = json.loads(out.with_suffix(".json").read_text())
    assert summary["config"]["threads"] == 2


def test_solve_not_converged(tmp_path: Path, toy_files):
    hg, _ = toy_files
    out = tmp_path / "y.csv"

    result = runner.invoke(
        app, solve_args(hg, out, "--alpha", "0.85", "--max-iter", "1")
    )
    assert result.exit_code == 3
    assert "did not converge" in result.output
    # outputs are written anyway
    assert out.exists()
    assert json.loads(out.with_suffix(".json").read_text())["converged"] is False


def test_solve_missing_input(tmp_path: Path):
    result = runner.invoke(
        app, solve_args(tmp_path / "missing.hg", tmp_path / "y.csv", "--alpha", "0.5")
    )
    assert result.exit_code == 2
    assert "Error" in result.output


@pytest.mark.parametrize(
    "extra",
    [
        ["--alpha", "1.0"],
        ["--alpha", "0.5", "--v", "uniform", "--shift", "-1"],
    ],
)
def test_solve_invalid_parameters(tmp_path: Path, toy_files, extra: list[str]):
    """Test that invalid parameter values are data errors."""
    hg, _ = toy_files
    result = runner.invoke(app, solve_args(hg, tmp_path / "y.csv", *extra))
    assert result.exit_code == 2


def test_solve_invalid_vector(tmp_path: Path, toy_files):
    hg, _ = toy_files
    v = tmp_path / "short.txt"
    v.write_text("0.5\n0.5\n")

    result = runner.invoke(
        app, solve_args(hg, tmp_path / "y.csv", "--alpha", "0.5", "--v", str(v))
    )
    assert result.exit_code == 2


@pytest.mark.parametrize(
    "args",
    [
        ["solve", "-o", "y.csv", "--alpha", "0.5"],
        ["solve", "-i", "toy.hg", "-o", "y.csv", "--alpha", "half"],
        ["solve", "-i", "toy.hg", "-o", "y.csv", "--alpha", "0.5", "--model", "gpr"],
        ["partition", "-i", "toy.hg", "-o", "parts.csv", "--parts", "1"],
        ["unknown"],
    ],
)
def test_usage_errors(args: list[str]):
    result = runner.invoke(app, args)
    assert result.exit_code == 1


@pytest.fixture
def two_cliques_file(tmp_path: Path, two_cliques) -> Path:
    h, _ = two_cliques
    path = tmp_path / "cliques.hg"
    write_hypergraph(path, h)
    return path


def test_partition(tmp_path: Path, two_cliques_file: Path):
    out = tmp_path / "parts.csv"
    hcurve = tmp_path / "curves" / "h.csv"
    compare = tmp_path / "compare.csv"

    result = runner.invoke(
        app,
        [
            "partition",
            "-i",
            str(two_cliques_file),
            "-o",
            str(out),
            "--hcurve",
            str(hcurve),
            "--compare",
            str(compare),
        ],
    )
    assert result.exit_code == 0

    labels = [int(row["part"]) for row in read_table(out)]
    assert sorted(set(labels)) == [0, 1]
    assert len(set(labels[:5])) == 1
    assert len(set(labels[5:])) == 1

    h = [float(row["h"]) for row in read_table(hcurve)]
    assert len(h) == 9
    assert min(h) == pytest.approx(3 * (1 / 32 + 1 / 31))

    methods = [row["method"] for row in read_table(compare)]
    assert sorted(set(methods)) == ["gpr", "mlppr", "mpr", "random"]
    assert len(methods) == 4 * 9


def test_partition_gpr_four_parts(tmp_path: Path, four_cliques):
    h, planted = four_cliques
    path = tmp_path / "four.hg"
    write_hypergraph(path, h)
    out = tmp_path / "parts.csv"

    result = runner.invoke(
        app,
        ["partition", "-i", str(path), "-o", str(out), "--parts", "4", "--method",
         "gpr"],
    )
    assert result.exit_code == 0

    labels = np.array([int(row["part"]) for row in read_table(out)])
    assert len(set(labels)) == 4
    for block in range(4):
        assert len(set(labels[planted == block])) == 1


SNAP = """# Directed graph: toy.txt
# FromNodeId\tToNodeId
10\t20
20\t30
30\t10
10\t20
30\t30
30\t40
40\t50
50\t60
"""


def test_motifs(tmp_path: Path):
    snap = tmp_path / "toy.txt"
    snap.write_text(SNAP)
    out = tmp_path / "d3c.hg"
    stats = tmp_path / "stats.json"
    ids = tmp_path / "ids.csv"

    result = runner.invoke(
        app,
        ["motifs", "-s", str(snap), "-o", str(out), "--stats", str(stats), "--ids",
         str(ids)],
    )
    assert result.exit_code == 0

    lines = out.read_text().splitlines()
    assert lines[0] == "k=3 directed=0 n=3"
    assert [sorted(map(int, line.split()[:3])) for line in lines[1:]] == [[1, 2, 3]]

    payload = json.loads(stats.read_text())
    assert payload["raw_nodes"] == 6
    assert payload["raw_arcs"] == 6
    assert payload["self_loops"] == 1
    assert payload["duplicates"] == 1
    assert (payload["nodes"], payload["arcs"], payload["d3cs"]) == (3, 3, 1)

    assert [int(row["node_id"]) for row in read_table(ids)] == [10, 20, 30]


def test_motifs_without_cycles(tmp_path: Path):
    snap = tmp_path / "path.txt"
    snap.write_text("1\t2\n2\t3\n")

    result = runner.invoke(
        app, ["motifs", "-s", str(snap), "-o", str(tmp_path / "d3c.hg")]
    )
    assert result.exit_code == 2


def test_subspace_is_reproducible(tmp_path: Path):
    """Test that the same seed writes the same table."""
    tables = []
    for run in range(2):
        out = tmp_path / f"run{run}.csv"
        result = runner.invoke(
            app,
            ["subspace", "-o", str(out), "-n", "20", "--repeats", "2", "--method",
             "gpr", "--points-dir", str(tmp_path / f"points{run}")],
        )
        assert result.exit_code == 0
        tables.append(out.read_bytes())

    assert tables[0] == tables[1]
    header = tables[0].decode().splitlines()[0]
    assert header == "n,method,success_ratio,seed"
    rows = read_table(tmp_path / "run0.csv")
    assert [(row["n"], row["method"], row["seed"]) for row in rows] == [
        ("20", "gpr", "0"),
        ("20", "gpr", "1"),
    ]
    assert all(0 <= float(row["success_ratio"]) <= 1 for row in rows)
    assert sorted(p.name for p in (tmp_path / "points0").iterdir()) == [
        "points_n20_seed0.csv",
        "points_n20_seed1.csv",
    ]


def test_subspace_invalid_size(tmp_path: Path):
    result = runner.invoke(app, ["subspace", "-o", str(tmp_path / "s.csv"), "-n", "10"])
    assert result.exit_code == 2


def test_perturb(tmp_path: Path, toy_files):
    hg, v = toy_files
    out = tmp_path / "perturb.csv"

    result = runner.invoke(
        app,
        ["perturb", "-i", str(hg), "--alpha", "0.2", "-o", str(out), "--v", str(v),
         "--sigma-grid", "1e-3:1e-2", "--trials", "5", "--target", "v", "--target",
         "tensor"],
    )
    assert result.exit_code == 0

    rows = read_table(out)
    assert [(float(row["sigma"]), row["mode"]) for row in rows] == [
        (pytest.approx(1e-3), "v"),
        (pytest.approx(1e-3), "tensor"),
        (pytest.approx(1e-2), "v"),
        (pytest.approx(1e-2), "tensor"),
    ]
    for row in rows:
        assert int(row["violations"]) == 0
        assert float(row["max_dy"]) <= float(row["bound"])


@pytest.mark.parametrize("grid", ["1e-3", "a:b", "1e-3:1e-2:x"])
def test_perturb_invalid_grid(tmp_path: Path, toy_files, grid: str):
    hg, _ = toy_files
    result = runner.invoke(
        app,
        ["perturb", "-i", str(hg), "--alpha", "0.2", "-o", str(tmp_path / "p.csv"),
         "--sigma-grid", grid],
    )
    assert result.exit_code == 1


def test_perturb_without_contraction(tmp_path: Path, toy_files):
    hg, _ = toy_files
    result = runner.invoke(
        app,
        ["perturb", "-i", str(hg), "--alpha", "0.5", "-o", str(tmp_path / "p.csv")],
    )
    assert result.exit_code == 2


def write_config(path: Path, **sections) -> Path:
    path.write_text(yaml.safe_dump({"experiment_name": "cli", **sections}))
    return path


def test_solve_without_alpha(tmp_path: Path, toy_files):
    hg, _ = toy_files
    result = runner.invoke(app, solve_args(hg, tmp_path / "y.csv"))
    assert result.exit_code == 1


def test_solve_from_config(tmp_path: Path, toy_files):
    """Test that typed options override the configuration file."""
    hg, v = toy_files
    config = write_config(
        tmp_path / "run.yml", solver_config={"alpha": 0.2, "tol_step": 1e-12}
    )

    out = tmp_path / "file.csv"
    result = runner.invoke(
        app, solve_args(hg, out, "--v", str(v), "--config", str(config))
    )
    assert result.exit_code == 0
    used = json.loads(out.with_suffix(".json").read_text())["config"]
    assert (used["alpha"], used["tol_step"]) == (0.2, 1e-12)

    out = tmp_path / "typed.csv"
    result = runner.invoke(
        app,
        solve_args(hg, out, "--v", str(v), "--config", str(config), "--alpha", "0.3"),
    )
    assert result.exit_code == 0
    used = json.loads(out.with_suffix(".json").read_text())["config"]
    assert (used["alpha"], used["tol_step"]) == (0.3, 1e-12)


def test_solve_threads_precedence(tmp_path: Path, toy_files, monkeypatch):
    hg, _ = toy_files
    monkeypatch.setenv("HYPERRANK_THREADS", "2")
    config = write_config(tmp_path / "run.yml", solver_config={"threads": 3})

    out = tmp_path / "file.csv"
    result = runner.invoke(
        app, solve_args(hg, out, "--alpha", "0.2", "--config", str(config))
    )
    assert result.exit_code == 0
    assert json.loads(out.with_suffix(".json").read_text())["config"]["threads"] == 3

    out = tmp_path / "typed.csv"
    result = runner.invoke(
        app,
        solve_args(
            hg, out, "--alpha", "0.2", "--config", str(config), "--threads", "4"
        ),
    )
    assert result.exit_code == 0
    assert json.loads(out.with_suffix(".json").read_text())["config"]["threads"] == 4


def test_saved_config_reproduces_run(tmp_path: Path, toy_files):
    hg, v = toy_files
    saved = tmp_path / "configs" / "solve.yml"
    first = tmp_path / "first.csv"
    result = runner.invoke(
        app,
        solve_args(
            hg, first, "--alpha", "0.2", "--v", str(v), "--model", "mpr",
            "--save-config", str(saved),
        ),
    )
    assert result.exit_code == 0

    config = load_configuration(saved)
    assert config.experiment_name == "solve"
    assert config.solver_config.alpha == 0.2
    assert config.solver_config.model == "mpr"

    second = tmp_path / "second.csv"
    result = runner.invoke(
        app, solve_args(hg, second, "--v", str(v), "--config", str(saved))
    )
    assert result.exit_code == 0
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.parametrize(
    "content",
    [
        "experiment_name: cli\nsolver_config: [",
        "experiment_name: cli\nsolver_config:\n  alpha: 2.0\n",
        "solver_config:\n  alpha: 0.2\n",
    ],
)
def test_solve_invalid_config(tmp_path: Path, toy_files, content: str):
    hg, _ = toy_files
    config = tmp_path / "run.yml"
    config.write_text(content)

    result = runner.invoke(
        app, solve_args(hg, tmp_path / "y.csv", "--config", str(config))
    )
    assert result.exit_code == 2


def test_solve_missing_config(tmp_path: Path, toy_files):
    hg, _ = toy_files
    result = runner.invoke(
        app,
        solve_args(
            hg, tmp_path / "y.csv", "--config", str(tmp_path / "missing.yml")
        ),
    )
    assert result.exit_code == 2


def test_partition_threads(tmp_path: Path, two_cliques_file: Path):
    """Test that threaded orderings write the same parts."""
    tables = []
    for threads in ("1", "2"):
        out = tmp_path / f"parts{threads}.csv"
        result = runner.invoke(
            app,
            ["partition", "-i", str(two_cliques_file), "-o", str(out), "--threads",
             threads],
        )
        assert result.exit_code == 0
        tables.append(out.read_bytes())

    assert tables[0] == tables[1]


def test_partition_from_config(tmp_path: Path, four_cliques):
    h, planted = four_cliques
    path = tmp_path / "four.hg"
    write_hypergraph(path, h)
    config = write_config(
        tmp_path / "run.yml", partition_config={"parts": 4, "ordering": "gpr"}
    )
    saved = tmp_path / "saved.yml"
    out = tmp_path / "parts.csv"

    result = runner.invoke(
        app,
        ["partition", "-i", str(path), "-o", str(out), "--config", str(config),
         "--save-config", str(saved)],
    )
    assert result.exit_code == 0

    labels = np.array([int(row["part"]) for row in read_table(out)])
    assert len(set(labels)) == 4
    saved_config = load_configuration(saved)
    assert saved_config.experiment_name == "cli"
    assert saved_config.partition_config.ordering == "gpr"


def test_motifs_threads(tmp_path: Path):
    snap = tmp_path / "toy.txt"
    snap.write_text(SNAP)
    outputs = []
    for threads in ("1", "3"):
        out = tmp_path / f"d3c{threads}.hg"
        result = runner.invoke(
            app, ["motifs", "-s", str(snap), "-o", str(out), "--threads", threads]
        )
        assert result.exit_code == 0
        outputs.append(out.read_text())

    assert outputs[0] == outputs[1]


def test_subspace_from_config(tmp_path: Path):
    config = write_config(
        tmp_path / "run.yml",
        subspace_config={"n": [20], "methods": ["gpr"], "repeats": 2, "seed": 3},
    )

    out = tmp_path / "file.csv"
    result = runner.invoke(app, ["subspace", "-o", str(out), "--config", str(config)])
    assert result.exit_code == 0
    assert [(row["n"], row["method"], row["seed"]) for row in read_table(out)] == [
        ("20", "gpr", "3"),
        ("20", "gpr", "4"),
    ]

    out = tmp_path / "typed.csv"
    result = runner.invoke(
        app,
        ["subspace", "-o", str(out), "--config", str(config), "--repeats", "1",
         "--threads", "2"],
    )
    assert result.exit_code == 0
    assert [row["seed"] for row in read_table(out)] == ["3"]


def test_perturb_from_config(tmp_path: Path, toy_files):
    hg, v = toy_files
    config = write_config(
        tmp_path / "run.yml",
        solver_config={"alpha": 0.2},
        perturbation_config={
            "sigma_min": 1e-3,
            "sigma_max": 1e-2,
            "n_sigma": 2,
            "targets": ["v"],
            "trials": 3,
        },
    )
    saved = tmp_path / "saved.yml"
    out = tmp_path / "perturb.csv"

    result = runner.invoke(
        app,
        ["perturb", "-i", str(hg), "-o", str(out), "--v", str(v), "--config",
         str(config), "--save-config", str(saved), "--threads", "2"],
    )
    assert result.exit_code == 0

    rows = read_table(out)
    assert [row["mode"] for row in rows] == ["v", "v"]
    assert all(int(row["violations"]) == 0 for row in rows)

    saved_config = load_configuration(saved)
    assert saved_config.solver_config.alpha == 0.2
    assert saved_config.perturbation_config.trials == 3
    assert saved_config.perturbation_config.threads == 2


def test_perturb_without_alpha(tmp_path: Path, toy_files):
    hg, _ = toy_files
    result = runner.invoke(
        app, ["perturb", "-i", str(hg), "-o", str(tmp_path / "p.csv")]
    )
    assert result.exit_code == 1
