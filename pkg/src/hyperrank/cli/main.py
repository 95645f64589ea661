"""
Module for CLI functionality and entrypoint.

Contains the CLI entrypoint, the `run` function, and the subcommands `solve`,
`partition`, `motifs`, `subspace` and `perturb`. Every command reads its inputs from
files, writes plot-ready CSV tables and prints diagnostics to standard error.

Commands that have a configuration section accept `--config`, a YAML configuration
whose section provides the defaults of the command, and `--save-config`, which
writes the configuration actually used. Options typed on the command line take
precedence over the file.

Exit codes are 0 on success, 1 on usage errors, 2 on data errors and 3 when a solver
did not converge.
"""

import math
from pathlib import Path
from typing import Annotated, Optional

import click
import typer

from ..config import PartitionConfig, PerturbationConfig, SolverConfig, SubspaceConfig
from ..config.support import (
    SupportedCorrection,
    SupportedData,
    SupportedModel,
    SupportedOrdering,
    SupportedPerturbationTarget,
)
from ..file_io.read import get_read_func
from ..file_io.write import get_write_func, write_csv, write_json
from ..motifs import d3c_hypergraph, filter_network
from ..partition import bipartition, h_curves, part_labels, recursive_partition
from ..perturb import perturbation_experiment
from ..solver import PageRankProblem, solve as solve_problem
from ..subspace import generate_instance, success_ratio_sweep
from ..utils import check_path_exists, get_logger, resolve_threads
from .utils import (
    EXIT_NOT_CONVERGED,
    HyperRankGroup,
    data_errors,
    ensure_parent,
    load_config_file,
    load_vector,
    merge_options,
    parse_sigma_grid,
    save_config_file,
)

logger = get_logger(__name__)

app = typer.Typer(
    cls=HyperRankGroup,
    help="Multi-linear pseudo-PageRank on uniform hypergraphs: solve, partition, "
    "extract motif hypergraphs and run the clustering and perturbation experiments.",
    pretty_exceptions_show_locals=False,
    add_completion=False,
)

InputOption = Annotated[
    Path,
    typer.Option(
        "--input",
        "-i",
        help="Path to a hyperedge list file (.hg).",
        file_okay=True,
        dir_okay=False,
    ),
]

ThreadsOption = Annotated[
    Optional[int],
    typer.Option(help="Contraction threads, by default HYPERRANK_THREADS or 1.", min=1),
]

ConfigOption = Annotated[
    Optional[Path],
    typer.Option(
        "--config",
        help="YAML configuration providing the defaults of the command.",
        file_okay=True,
        dir_okay=False,
    ),
]

SaveConfigOption = Annotated[
    Optional[Path],
    typer.Option(
        "--save-config",
        help="Directory or .yml file receiving the configuration of the run.",
        callback=ensure_parent,
    ),
]

VectorOption = Annotated[
    str,
    typer.Option(
        "--v",
        help="Teleportation vector: 'uniform' or a file with one entry per line.",
    ),
]


def _require_alpha(alpha: Optional[float]) -> float:
    if alpha is None:
        raise click.UsageError("Missing option '--alpha' (or a --config file).")
    return alpha


@app.command()
def solve(  # numpydoc ignore=PR01
    ctx: typer.Context,
    input_path: InputOption,
    out: Annotated[
        Path,
        typer.Option(
            "--out",
            "-o",
            help="CSV file receiving the solution.",
            callback=ensure_parent,
        ),
    ],
    alpha: Annotated[
        Optional[float], typer.Option(help="Damping probability in [0, 1).")
    ] = None,
    v: VectorOption = "uniform",
    model: Annotated[
        SupportedModel, typer.Option(help="Problem to solve.")
    ] = SupportedModel.MLPPR,
    correction: Annotated[
        SupportedCorrection,
        typer.Option(help="Dangling correction of the multi-linear PageRank tensor."),
    ] = SupportedCorrection.IMPLICIT,
    tol_step: Annotated[
        float, typer.Option(help="Relative step tolerance.")
    ] = 1e-8,
    tol_eq: Annotated[
        float, typer.Option(help="Relative equation residual tolerance.")
    ] = 1e-10,
    max_iter: Annotated[
        int, typer.Option(help="Maximum number of iterations.", min=1)
    ] = 100_000,
    shift: Annotated[
        float, typer.Option(help="Shift of the multi-linear PageRank iteration.")
    ] = 0.0,
    summary: Annotated[
        Optional[Path],
        typer.Option(
            help="JSON summary, by default next to the solution with a .json suffix.",
            callback=ensure_parent,
        ),
    ] = None,
    threads: ThreadsOption = None,
    config_path: ConfigOption = None,
    save_config: SaveConfigOption = None,
):
    """Solve the PageRank problem of a hypergraph."""
    with data_errors():
        loaded = load_config_file(config_path)
        values = merge_options(
            ctx,
            loaded.solver_config if loaded is not None else None,
            {
                "model": ("model", model.value),
                "alpha": ("alpha", alpha),
                "tol_step": ("tol_step", tol_step),
                "tol_eq": ("tol_eq", tol_eq),
                "max_iter": ("max_iter", max_iter),
                "shift": ("shift", shift),
                "correction": ("correction", correction.value),
                "threads": ("threads", threads),
            },
        )
        values["alpha"] = _require_alpha(values["alpha"])
        values["threads"] = resolve_threads(values["threads"])
        config = SolverConfig(**values)
        save_config_file(save_config, loaded, "solve", solver_config=config)

        h = get_read_func(SupportedData.HYPERGRAPH)(check_path_exists(input_path))
        problem = PageRankProblem.from_hypergraph(
            h,
            alpha=config.alpha,
            v=load_vector(v, h.n),
            model=config.model,
            correction=config.correction,
        )
        report = solve_problem(problem, config)

        write_csv(
            out,
            ("vertex", "y"),
            ((i + 1, repr(float(value))) for i, value in enumerate(report.y)),
        )
        write_json(
            summary if summary is not None else out.with_suffix(".json"),
            {
                "input": str(input_path),
                "n": h.n,
                "k": h.k,
                "m": h.m,
                "v": v,
                "config": config.model_dump(),
                **report.summary(),
            },
        )

    if not report.converged:
        typer.echo(
            f"Error: {config.model} solver did not converge in {report.iterations} "
            f"iterations (step residual {report.residual_step:.3e}).",
            err=True,
        )
        raise typer.Exit(code=EXIT_NOT_CONVERGED)


@app.command()
def partition(  # numpydoc ignore=PR01
    ctx: typer.Context,
    input_path: InputOption,
    out: Annotated[
        Path,
        typer.Option(
            "--out",
            "-o",
            help="CSV file receiving the part of every vertex.",
            callback=ensure_parent,
        ),
    ],
    parts: Annotated[int, typer.Option(help="Number of parts.", min=2)] = 2,
    method: Annotated[
        SupportedOrdering, typer.Option(help="Vertex ordering method.")
    ] = SupportedOrdering.MLPPR,
    alpha: Annotated[
        float, typer.Option(help="Damping probability of the ordering.")
    ] = 0.99,
    seed: Annotated[int, typer.Option(help="Seed.", min=0)] = 0,
    hcurve: Annotated[
        Optional[Path],
        typer.Option(
            help="CSV file receiving the sweep values of the first bipartition.",
            callback=ensure_parent,
        ),
    ] = None,
    compare: Annotated[
        Optional[Path],
        typer.Option(
            help="CSV file receiving the sweep values of every ordering method.",
            callback=ensure_parent,
        ),
    ] = None,
    threads: ThreadsOption = None,
    config_path: ConfigOption = None,
    save_config: SaveConfigOption = None,
):
    """Partition a 3-uniform hypergraph by recursive sweep cuts."""
    with data_errors():
        loaded = load_config_file(config_path)
        values = merge_options(
            ctx,
            loaded.partition_config if loaded is not None else None,
            {
                "alpha": ("alpha", alpha),
                "ordering": ("method", method.value),
                "parts": ("parts", parts),
                "seed": ("seed", seed),
                "threads": ("threads", threads),
            },
        )
        if loaded is not None:
            values["eig_tol"] = loaded.partition_config.eig_tol
            values["eig_max_iter"] = loaded.partition_config.eig_max_iter
        config = PartitionConfig(**values)
        save_config_file(save_config, loaded, "partition", partition_config=config)
        workers = resolve_threads(config.threads)

        h = get_read_func(SupportedData.HYPERGRAPH)(check_path_exists(input_path))
        found = recursive_partition(h, config.parts, config=config)
        labels = part_labels(found, h.n)
        write_csv(
            out,
            ("vertex", "part"),
            ((i + 1, int(label)) for i, label in enumerate(labels)),
        )
        logger.info(f"Wrote {len(found)} parts of {h.n} vertices to {out}.")

        if hcurve is not None:
            cut = bipartition(
                h,
                alpha=config.alpha,
                method=config.ordering,
                seed=config.seed,
                eig_tol=config.eig_tol,
                eig_max_iter=config.eig_max_iter,
                threads=workers,
            )
            write_csv(
                hcurve,
                ("i", "h"),
                ((i + 1, repr(float(value))) for i, value in enumerate(cut.h)),
            )

        if compare is not None:
            curves = h_curves(h, alpha=config.alpha, seed=config.seed, threads=workers)
            write_csv(
                compare,
                ("method", "i", "h"),
                (
                    (name, i + 1, repr(float(value)))
                    for name, cut in curves.items()
                    for i, value in enumerate(cut.h)
                ),
            )


@app.command()
def motifs(  # numpydoc ignore=PR01
    snap: Annotated[
        Path,
        typer.Option(
            "--snap",
            "-s",
            help="Directed edge list in the SNAP text format.",
            file_okay=True,
            dir_okay=False,
        ),
    ],
    out: Annotated[
        Path,
        typer.Option(
            "--out",
            "-o",
            help="Hyperedge list file (.hg) receiving the motif hypergraph.",
            callback=ensure_parent,
        ),
    ],
    stats: Annotated[
        Optional[Path],
        typer.Option(
            help="JSON file receiving filter statistics.", callback=ensure_parent
        ),
    ] = None,
    ids: Annotated[
        Optional[Path],
        typer.Option(
            help="CSV file mapping hypergraph vertices to network node ids.",
            callback=ensure_parent,
        ),
    ] = None,
    threads: ThreadsOption = None,
):
    """Build the directed 3-cycle hypergraph of a network."""
    with data_errors():
        g = get_read_func(SupportedData.SNAP)(check_path_exists(snap))
        filtered, d3cs = filter_network(g, threads=resolve_threads(threads))
        h = d3c_hypergraph(filtered, d3cs)
        get_write_func("hypergraph")(out, h)

        if ids is not None:
            write_csv(
                ids,
                ("vertex", "node_id"),
                ((i + 1, int(node)) for i, node in enumerate(filtered.node_ids)),
            )
        if stats is not None:
            write_json(
                stats,
                {
                    "input": str(snap),
                    "raw_nodes": g.n,
                    "raw_arcs": g.m,
                    "self_loops": g.stats.self_loops,
                    "duplicates": g.stats.duplicates,
                    "nodes": filtered.n,
                    "arcs": filtered.m,
                    "d3cs": h.m,
                },
            )


@app.command()
def subspace(  # numpydoc ignore=PR01
    ctx: typer.Context,
    out: Annotated[
        Path,
        typer.Option(
            "--out",
            "-o",
            help="CSV file receiving one success ratio per size, method and seed.",
            callback=ensure_parent,
        ),
    ],
    n: Annotated[
        Optional[list[int]],
        typer.Option("--n", "-n", help="Instance size, may be repeated."),
    ] = None,
    seed: Annotated[int, typer.Option(help="First seed.", min=0)] = 0,
    repeats: Annotated[
        int, typer.Option(help="Number of seeds per size.", min=1)
    ] = 1,
    method: Annotated[
        Optional[list[SupportedOrdering]],
        typer.Option(help="Ordering method (mlppr, mpr or gpr), may be repeated."),
    ] = None,
    parts: Annotated[int, typer.Option(help="Number of clusters.", min=2)] = 4,
    noise_scale: Annotated[
        float, typer.Option(help="Standard deviation of the point noise.", min=0.0)
    ] = math.sqrt(0.5),
    points_dir: Annotated[
        Optional[Path],
        typer.Option(
            help="Directory receiving every generated point set as CSV.",
            file_okay=False,
            dir_okay=True,
        ),
    ] = None,
    threads: ThreadsOption = None,
    config_path: ConfigOption = None,
    save_config: SaveConfigOption = None,
):
    """Cluster noisy points on lines and score the clusters."""
    with data_errors():
        loaded = load_config_file(config_path)
        config = SubspaceConfig(
            **merge_options(
                ctx,
                loaded.subspace_config if loaded is not None else None,
                {
                    "n": ("n", n if n else [100]),
                    "repeats": ("repeats", repeats),
                    "seed": ("seed", seed),
                    "noise_scale": ("noise_scale", noise_scale),
                    "methods": (
                        "method",
                        [m.value for m in method] if method else ["mlppr"],
                    ),
                    "parts": ("parts", parts),
                    "threads": ("threads", threads),
                },
            )
        )
        save_config_file(save_config, loaded, "subspace", subspace_config=config)

        if points_dir is not None:
            points_dir.mkdir(parents=True, exist_ok=True)
            write_points = get_write_func("points")
            for size in config.n:
                for instance_seed in range(config.seed, config.seed + config.repeats):
                    write_points(
                        points_dir / f"points_n{size}_seed{instance_seed}.csv",
                        generate_instance(
                            size, seed=instance_seed, noise_scale=config.noise_scale
                        ),
                    )

        write_csv(
            out,
            ("n", "method", "success_ratio", "seed"),
            (
                (record.n, record.method, repr(record.success_ratio), record.seed)
                for record in success_ratio_sweep(config)
            ),
        )


@app.command()
def perturb(  # numpydoc ignore=PR01
    ctx: typer.Context,
    input_path: InputOption,
    out: Annotated[
        Path,
        typer.Option(
            "--out",
            "-o",
            help="CSV file receiving one row per magnitude and target.",
            callback=ensure_parent,
        ),
    ],
    alpha: Annotated[
        Optional[float], typer.Option(help="Damping probability in [0, 1).")
    ] = None,
    sigma_grid: Annotated[
        str,
        typer.Option(
            help="Log grid of magnitudes 'min:max', one point per decade, or "
            "'min:max:count'."
        ),
    ] = "1e-4:1e-1",
    trials: Annotated[
        int, typer.Option(help="Random perturbations per grid point.", min=1)
    ] = 100,
    target: Annotated[
        Optional[list[SupportedPerturbationTarget]],
        typer.Option(help="Perturbed data, may be repeated."),
    ] = None,
    v: VectorOption = "uniform",
    seed: Annotated[int, typer.Option(help="Master seed.", min=0)] = 0,
    tensor_budget_factor: Annotated[
        float,
        typer.Option(
            help="Ratio of the tensor perturbation to the magnitude.", min=0.0
        ),
    ] = 4.0,
    threads: ThreadsOption = None,
    config_path: ConfigOption = None,
    save_config: SaveConfigOption = None,
):
    """Compare observed solution changes with the perturbation bound.

    The damping probability falls back to the solver section of `--config`.
    """
    sigma_min, sigma_max, n_sigma = parse_sigma_grid(sigma_grid)
    targets = [t.value for t in target] if target else ["both", "v", "tensor"]
    with data_errors():
        loaded = load_config_file(config_path)
        config = PerturbationConfig(
            **merge_options(
                ctx,
                loaded.perturbation_config if loaded is not None else None,
                {
                    "sigma_min": ("sigma_grid", sigma_min),
                    "sigma_max": ("sigma_grid", sigma_max),
                    "n_sigma": ("sigma_grid", n_sigma),
                    "targets": ("target", targets),
                    "trials": ("trials", trials),
                    "seed": ("seed", seed),
                    "tensor_budget_factor": (
                        "tensor_budget_factor",
                        tensor_budget_factor,
                    ),
                    "threads": ("threads", threads),
                },
            )
        )
        base = loaded.solver_config if loaded is not None else None
        damping = merge_options(ctx, base, {"alpha": ("alpha", alpha)})["alpha"]
        solver = SolverConfig(
            **{
                **(base.model_dump() if base is not None else {}),
                "alpha": _require_alpha(damping),
            }
        )
        save_config_file(
            save_config,
            loaded,
            "perturb",
            solver_config=solver,
            perturbation_config=config,
        )

        h = get_read_func(SupportedData.HYPERGRAPH)(check_path_exists(input_path))
        problem = PageRankProblem.from_hypergraph(
            h, alpha=solver.alpha, v=load_vector(v, h.n)
        )
        rows = perturbation_experiment(config, problem)
        write_csv(
            out,
            ("sigma", "mode", "mean_dy", "max_dy", "bound", "violations"),
            (
                (
                    repr(row.sigma),
                    row.mode,
                    repr(row.mean_dy),
                    repr(row.max_dy),
                    repr(row.bound),
                    row.violations,
                )
                for row in rows
            ),
        )


def run():
    """CLI Entry point."""
    app()
