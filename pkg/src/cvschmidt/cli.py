"""Command-line front end.

Every command renders one deterministic table (or JSON report) built from
the library modules: closed-form weights vs. grid results, mode curves,
spectrum decomposition of a state file, numeric mutual information, the
thermal sweep, the coincidence Monte Carlo, and the information report.

Numbers are serialized with 17 significant digits in CSV and as lossless
shortest round-trip literals in JSON, so both formats parse to identical
values.  Exit codes: 0 success, 1 invalid input, 2 numerical failure.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass
from typing import NamedTuple

import click
import numpy as np

from . import gaussian_model as gm
from .discretize import build_grid, read_state_file, sample_state, shannon_mi_numeric
from .epr_sim import run_coincidence_experiment
from .errors import DomainError, NumericalError, StateFileError
from .information import info_report
from .schmidt import decompose, entanglement_entropy, schmidt_number
from .thermo import ThermoPoint
from .util import format_float


@dataclass(frozen=True)
class RunConfig:
    """Validated inputs for one command invocation."""

    command: str
    params: gm.GaussianParams | None = None
    n: int = 100
    span: float = 6.0
    count: int | None = None
    log_base: str = "e"
    output_format: str = "csv"
    output_path: str | None = None
    grids: tuple[int, ...] = ()
    state_file: str | None = None
    n_symbols: int = 1
    weights: tuple[float, ...] | None = None
    K: float | None = None
    trials: int = 100000
    seed: int = 0
    beta_min: float = 1e-3
    beta_max: float = 50.0
    points: int = 200


class Table(NamedTuple):
    columns: list
    rows: list


def _cell(value):
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    return str(value)


def _render_csv(table: Table) -> str:
    lines = [",".join(str(c) for c in table.columns)]
    for row in table.rows:
        parts = []
        for value in row:
            value = _cell(value)
            parts.append(format_float(value) if isinstance(value, float) else str(value))
        lines.append(",".join(parts))
    return "\n".join(lines) + "\n"


def _render_json(table: Table) -> str:
    payload = {
        "columns": [str(c) for c in table.columns],
        "rows": [[_cell(v) for v in row] for row in table.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def _emit(config: RunConfig, table: Table) -> None:
    text = _render_json(table) if config.output_format == "json" else _render_csv(table)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _emit_json(config: RunConfig, payload: dict) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _gaussian_pipeline(params: gm.GaussianParams, n: int, span: float):
    grid = build_grid(params, n, span)
    return sample_state(lambda a, b: gm.wavefunction(params, a, b), grid)


def cmd_table1(config: RunConfig) -> Table:
    """Closed-form weights and Schmidt number next to grid results."""
    params = config.params
    count = config.count or 6
    theory_K = params.schmidt_number
    theory = gm.analytic_weights(theory_K, count)
    numeric = {}
    for n in config.grids:
        spectrum = decompose(_gaussian_pipeline(params, n, config.span))
        numeric[n] = (spectrum.weights, schmidt_number(spectrum.weights))
    columns = ["k", "theory"] + [f"n{n}" for n in config.grids]
    rows = []
    for k in range(count):
        if theory[k] == 0.0:
            continue
        row = [k + 1, theory[k]]
        for n in config.grids:
            weights = numeric[n][0]
            row.append(float(weights[k]) if k < weights.size else 0.0)
        rows.append(row)
    rows.append(["K", theory_K] + [numeric[n][1] for n in config.grids])
    return Table(columns, rows)


def cmd_modes(config: RunConfig) -> Table:
    """Analytic and grid mode curves, sign-aligned per curve for plotting."""
    params = config.params
    count = config.count or 4
    if count > config.n:
        raise DomainError(f"cannot report {count} modes from an n={config.n} grid")
    state = _gaussian_pipeline(params, config.n, config.span)
    spectrum = decompose(state)
    grid = state.grid
    columns = ["axis", "k", "x", "analytic", "numeric"]
    rows = []
    for axis, x, modes, dx in (
        (1, grid.midpoints1, spectrum.modes1, grid.dx1),
        (2, grid.midpoints2, spectrum.modes2, grid.dx2),
    ):
        scale = 1.0 / math.sqrt(dx)
        for k in range(count):
            pair = gm.analytic_mode_pair(params, k, grid.midpoints1, grid.midpoints2)
            analytic = pair[axis - 1]
            numeric = modes[:, k] * scale
            if float(np.dot(numeric, analytic)) < 0.0:
                numeric = -numeric
            for j in range(x.size):
                rows.append([axis, k, float(x[j]), float(analytic[j]), float(numeric[j])])
    return Table(columns, rows)


def cmd_decompose(config: RunConfig) -> Table:
    """Spectrum of a state file plus K, entropy, and the information report."""
    state = read_state_file(config.state_file)
    spectrum = decompose(state)
    weights = spectrum.weights
    K = schmidt_number(weights)
    entropy = entanglement_entropy(weights, config.log_base)
    report = info_report(K, config.n_symbols)
    shown = weights if config.count is None else weights[: config.count]
    rows = [[k, float(w)] for k, w in enumerate(shown)]
    rows.extend(
        [
            ["K", K],
            ["S", entropy],
            ["n_symbols", report.n_symbols],
            ["I_bits", report.I_bits],
            ["I_nats", report.I_nats],
            ["W", report.W],
            ["w_log_space", int(report.w_log_space)],
            ["p_coincidence", report.p_coincidence],
        ]
    )
    return Table(["k", "lambda_k"], rows)


def cmd_mutual_info(config: RunConfig) -> Table:
    """Numeric mutual information of the sampled Gaussian vs. log K."""
    state = _gaussian_pipeline(config.params, config.n, config.span)
    numeric = shannon_mi_numeric(state.probabilities(), config.log_base)
    analytic = gm.shannon_mi_gaussian(config.params.rho, config.log_base)
    rows = [
        ["n", config.n],
        ["span", float(config.span)],
        ["log_base", config.log_base],
        ["mi_numeric", numeric],
        ["mi_analytic", analytic],
        ["abs_error", abs(numeric - analytic)],
    ]
    return Table(["quantity", "value"], rows)


def cmd_thermo(config: RunConfig) -> Table:
    """Log-spaced sweep of the temperature bridge."""
    if config.beta_max < config.beta_min:
        raise DomainError("beta-max must be >= beta-min")
    if config.points < 1:
        raise DomainError(f"points must be >= 1, got {config.points}")
    betas = np.geomspace(config.beta_min, config.beta_max, config.points)
    rows = []
    for beta in betas:
        point = ThermoPoint(float(beta))
        rows.append(
            [
                point.beta,
                point.schmidt_number(),
                point.rho_squared(),
                point.entropy(config.log_base),
            ]
        )
    return Table(["beta", "K", "rho_squared", "entropy"], rows)


def cmd_simulate(config: RunConfig) -> dict:
    """Coincidence Monte Carlo report."""
    report = run_coincidence_experiment(
        list(config.weights), config.n_symbols, config.trials, config.seed
    )
    return {
        "n_symbols": report.n_symbols,
        "trials": report.trials,
        "hits": report.hits,
        "p_hat": report.p_hat,
        "p_theory": report.p_theory,
        "std_err": report.std_err,
        "seed": report.seed,
    }


def cmd_info(config: RunConfig) -> Table:
    """Information report for a Schmidt number and sample size."""
    report = info_report(config.K, config.n_symbols)
    rows = [
        ["K", report.K],
        ["n_symbols", report.n_symbols],
        ["I_bits", report.I_bits],
        ["I_nats", report.I_nats],
        ["W", report.W],
        ["w_log_space", int(report.w_log_space)],
        ["p_coincidence", report.p_coincidence],
    ]
    return Table(["field", "value"], rows)


def _params_options(fn):
    for option in reversed(
        [
            click.option("--rho", type=float, default=0.9, show_default=True,
                         help="Correlation coefficient in (-1, 1)."),
            click.option("--m1", type=float, default=1.0, show_default=True,
                         help="Mean of axis 1."),
            click.option("--m2", type=float, default=-1.0, show_default=True,
                         help="Mean of axis 2."),
            click.option("--sigma1", type=float, default=2.0, show_default=True,
                         help="Standard deviation of axis 1."),
            click.option("--sigma2", type=float, default=1.0, show_default=True,
                         help="Standard deviation of axis 2."),
        ]
    ):
        fn = option(fn)
    return fn


def _output_options(fn):
    for option in reversed(
        [
            click.option("--format", "output_format", type=click.Choice(["csv", "json"]),
                         default="csv", show_default=True, help="Output rendering."),
            click.option("--output", "output_path", type=click.Path(dir_okay=False),
                         default=None, help="Write to a file instead of stdout."),
        ]
    ):
        fn = option(fn)
    return fn


_BASE_OPTION = click.option(
    "--base", "log_base", type=click.Choice(["2", "e"]), default="e",
    show_default=True, help="Logarithm base for entropies and information."
)


@click.group()
def cli():
    """Schmidt spectra of discretized bipartite states, with exact Gaussian references."""


@cli.command("table1")
@_params_options
@click.option("--grids", default="30,50,100", show_default=True,
              help="Comma-separated grid sizes.")
@click.option("--span", type=float, default=6.0, show_default=True,
              help="Half-width of the grid box in standard deviations.")
@click.option("--count", type=int, default=6, show_default=True,
              help="Number of leading weights to report.")
@_output_options
def table1_command(rho, m1, m2, sigma1, sigma2, grids, span, count, output_format, output_path):
    """Compare closed-form Schmidt weights with grid computations."""
    try:
        grid_sizes = tuple(int(g) for g in grids.split(",") if g.strip())
    except ValueError as exc:
        raise click.BadParameter(f"--grids must be comma-separated integers: {exc}")
    if not grid_sizes:
        raise click.BadParameter("--grids must name at least one grid size")
    config = RunConfig(
        command="table1",
        params=gm.GaussianParams(m1=m1, m2=m2, sigma1=sigma1, sigma2=sigma2, rho=rho),
        span=span,
        count=count,
        grids=grid_sizes,
        output_format=output_format,
        output_path=output_path,
    )
    _emit(config, cmd_table1(config))


@cli.command("modes")
@_params_options
@click.option("--n", type=int, default=100, show_default=True, help="Grid cells per axis.")
@click.option("--span", type=float, default=6.0, show_default=True,
              help="Half-width of the grid box in standard deviations.")
@click.option("--count", type=int, default=4, show_default=True,
              help="Number of leading mode pairs to emit.")
@_output_options
def modes_command(rho, m1, m2, sigma1, sigma2, n, span, count, output_format, output_path):
    """Emit analytic and grid Schmidt mode curves on the grid midpoints."""
    config = RunConfig(
        command="modes",
        params=gm.GaussianParams(m1=m1, m2=m2, sigma1=sigma1, sigma2=sigma2, rho=rho),
        n=n,
        span=span,
        count=count,
        output_format=output_format,
        output_path=output_path,
    )
    _emit(config, cmd_modes(config))


@cli.command("decompose")
@click.argument("state_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--n-symbols", type=int, default=1, show_default=True,
              help="Sample size for the information report.")
@click.option("--count", type=int, default=None,
              help="Limit the number of spectrum rows (default: all).")
@_BASE_OPTION
@_output_options
def decompose_command(state_file, n_symbols, count, log_base, output_format, output_path):
    """Decompose a state file into its Schmidt spectrum and summary scalars."""
    config = RunConfig(
        command="decompose",
        state_file=state_file,
        n_symbols=n_symbols,
        count=count,
        log_base=log_base,
        output_format=output_format,
        output_path=output_path,
    )
    _emit(config, cmd_decompose(config))


@cli.command("mutual-info")
@_params_options
@click.option("--n", type=int, default=200, show_default=True, help="Grid cells per axis.")
@click.option("--span", type=float, default=8.0, show_default=True,
              help="Half-width of the grid box in standard deviations.")
@_BASE_OPTION
@_output_options
def mutual_info_command(rho, m1, m2, sigma1, sigma2, n, span, log_base,
                        output_format, output_path):
    """Numeric mutual information of the discretized Gaussian vs. log K."""
    config = RunConfig(
        command="mutual-info",
        params=gm.GaussianParams(m1=m1, m2=m2, sigma1=sigma1, sigma2=sigma2, rho=rho),
        n=n,
        span=span,
        log_base=log_base,
        output_format=output_format,
        output_path=output_path,
    )
    _emit(config, cmd_mutual_info(config))


@cli.command("thermo")
@click.option("--beta-min", type=float, default=1e-3, show_default=True,
              help="Smallest beta in the sweep.")
@click.option("--beta-max", type=float, default=50.0, show_default=True,
              help="Largest beta in the sweep.")
@click.option("--points", type=int, default=200, show_default=True,
              help="Number of log-spaced sweep points.")
@_BASE_OPTION
@_output_options
def thermo_command(beta_min, beta_max, points, log_base, output_format, output_path):
    """Sweep the temperature bridge: beta, K, rho_squared, entropy."""
    config = RunConfig(
        command="thermo",
        beta_min=beta_min,
        beta_max=beta_max,
        points=points,
        log_base=log_base,
        output_format=output_format,
        output_path=output_path,
    )
    _emit(config, cmd_thermo(config))


@cli.command("simulate")
@click.option("--rho", type=float, default=None,
              help="Build geometric weights from this correlation coefficient.")
@click.option("--weights-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Plain text file with one weight per line (normalized on load).")
@click.option("--n", "n_symbols", type=int, default=1, show_default=True,
              help="Symbols per string.")
@click.option("--trials", type=int, default=100000, show_default=True,
              help="Number of string pairs to draw.")
@click.option("--seed", type=int, default=0, show_default=True, help="RNG seed.")
@click.option("--output", "output_path", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON report to a file instead of stdout.")
def simulate_command(rho, weights_file, n_symbols, trials, seed, output_path):
    """Monte Carlo estimate of the accidental-coincidence probability."""
    if (rho is None) == (weights_file is None):
        raise click.UsageError("exactly one of --rho or --weights-file is required")
    if rho is not None:
        weights = gm.truncated_weights(gm.schmidt_number_from_rho(rho))
    else:
        weights = _load_weights_file(weights_file)
    config = RunConfig(
        command="simulate",
        weights=tuple(weights),
        n_symbols=n_symbols,
        trials=trials,
        seed=seed,
        output_path=output_path,
    )
    _emit_json(config, cmd_simulate(config))


@cli.command("info")
@click.option("--K", "K", type=float, default=None, help="Schmidt number (>= 1).")
@click.option("--rho", type=float, default=None,
              help="Correlation coefficient; K is derived from it.")
@click.option("--n-symbols", type=int, default=1, show_default=True,
              help="Sample size the information refers to.")
@_output_options
def info_command(K, rho, n_symbols, output_format, output_path):
    """Information report: bits, nats, microstates, coincidence probability."""
    if (K is None) == (rho is None):
        raise click.UsageError("exactly one of --K or --rho is required")
    if K is None:
        K = gm.schmidt_number_from_rho(rho)
    config = RunConfig(
        command="info",
        K=K,
        n_symbols=n_symbols,
        output_format=output_format,
        output_path=output_path,
    )
    _emit(config, cmd_info(config))


def _load_weights_file(path) -> list[float]:
    weights = []
    with open(path, "r", encoding="utf-8") as fh:
        for i, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                weights.append(float(text))
            except ValueError:
                raise DomainError(f"invalid weight {text!r} on line {i} of {path}")
    if not weights:
        raise DomainError(f"no weights found in {path}")
    arr = np.asarray(weights, dtype=float)
    if np.any(arr < 0.0) or not np.all(np.isfinite(arr)):
        raise DomainError("weights must be finite and nonnegative")
    total = float(arr.sum())
    if abs(total - 1.0) > 1e-6:
        raise DomainError(f"weights sum to {total!r}; expected 1 within 1e-6")
    return list(arr / total)


def main(argv=None) -> int:
    """Dispatch, mapping exceptions to exit codes (1 input, 2 numerical)."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except (StateFileError, DomainError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except NumericalError as exc:
        click.echo(f"numerical error: {exc}", err=True)
        return 2
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
