"""Command-line front end for the pricing-game experiments."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
from click.core import ParameterSource

from .errors import ConfigError
from .experiment import (ExperimentConfig, rows_to_csv, rows_to_json,
                         run_equilibrium, run_fixed_price, run_monte_carlo,
                         summary_to_csv, summary_to_json)

_FLAG_TO_FIELD = {
    "seed": "seed",
    "trials": "trials",
    "nt": "n_t",
    "eves": "n_eves",
    "sigma2": "sigma2",
    "sigma_e2": "sigma_e2",
    "lambda1": "lambda1",
    "power": "total_power",
    "tol": "tol",
}

_OPTIONS = [
    click.option("--seed", type=int, default=1, show_default=True,
                 help="Base seed; trial t runs on an independent derived stream."),
    click.option("--trials", type=int, default=5, show_default=True,
                 help="Number of channel realizations."),
    click.option("--nt", type=int, default=3, show_default=True,
                 help="Transmit antennas."),
    click.option("--eves", type=int, default=2, show_default=True,
                 help="Eavesdroppers (each with a dedicated jammer)."),
    click.option("--sigma2", type=float, default=0.1, show_default=True,
                 help="Legitimate-user noise variance."),
    click.option("--sigma-e2", type=float, default=0.1, show_default=True,
                 help="Eavesdropper noise variance."),
    click.option("--lambda1", type=float, default=5.0, show_default=True,
                 help="Unit price charged for secrecy rate."),
    click.option("--mu", type=str, default=None,
                 help="Comma-separated fixed interference prices."),
    click.option("--power", type=float, default=1.0, show_default=True,
                 help="Total transmit power budget."),
    click.option("--out", type=click.Path(dir_okay=False, path_type=Path),
                 default=None, help="Write the report here instead of stdout."),
    click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                 default="csv", show_default=True, help="Report format."),
    click.option("--tol", type=float, default=1e-3, show_default=True,
                 help="Agreement tolerance for derivation vs simulation columns."),
    click.option("--config", "config_path",
                 type=click.Path(exists=True, dir_okay=False, path_type=Path),
                 default=None,
                 help="JSON file with config fields; explicit flags override it."),
]

_CONFIG_FIELDS = {"seed", "trials", "n_t", "n_eves", "sigma2", "sigma_e2",
                  "lambda1", "prices", "total_power", "mode", "tol"}


def experiment_options(fn):
    for option in reversed(_OPTIONS):
        fn = option(fn)
    return fn


def _parse_prices(text: str) -> tuple:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"cannot parse --mu {text!r}: {exc}") from exc


def _build_config(ctx, mode: str, params: dict) -> ExperimentConfig:
    values = {}
    if params["config_path"] is not None:
        loaded = json.loads(Path(params["config_path"]).read_text())
        unknown = set(loaded) - _CONFIG_FIELDS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        loaded.pop("mode", None)  # the subcommand decides the mode
        values.update(loaded)
    for flag, fieldname in _FLAG_TO_FIELD.items():
        explicit = ctx.get_parameter_source(flag) == ParameterSource.COMMANDLINE
        if explicit or fieldname not in values:
            values[fieldname] = params[flag]
    if ctx.get_parameter_source("mu") == ParameterSource.COMMANDLINE:
        values["prices"] = _parse_prices(params["mu"])
    elif "prices" not in values:
        values["prices"] = (1.0, 3.0)
    values["mode"] = mode
    return ExperimentConfig(**values)


def _emit(text: str, out: Path | None) -> None:
    if out is not None:
        out.write_text(text)
    else:
        click.echo(text, nl=False)


def _run(ctx, mode: str, params: dict) -> None:
    try:
        config = _build_config(ctx, mode, params)
        as_json = params["fmt"] == "json"
        if mode == "fixed_price":
            rows = run_fixed_price(config)
            text = rows_to_json(rows) if as_json else rows_to_csv(rows, config)
            flagged = any(not row.within_tol for row in rows)
        elif mode == "equilibrium":
            rows = run_equilibrium(config)
            text = rows_to_json(rows) if as_json else rows_to_csv(rows, config)
            flagged = any(not row.within_tol for row in rows)
        else:
            summary = run_monte_carlo(config)
            text = summary_to_json(summary) if as_json else summary_to_csv(summary)
            flagged = False
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(2)
    _emit(text, params["out"])
    if flagged:
        sys.exit(3)


@click.group()
def main():
    """Simulate the jammer-pricing game: fixed-price power buys,
    pricing equilibria and Monte Carlo sweeps over random channels."""


@main.command("fixed")
@experiment_options
@click.pass_context
def fixed(ctx, **params):
    """Fixed-price rows: closed-form vs simulated power allocation."""
    _run(ctx, "fixed_price", params)


@main.command("equilibrium")
@experiment_options
@click.pass_context
def equilibrium(ctx, **params):
    """Equilibrium rows: optimal uniform price, revenues, deviation checks."""
    _run(ctx, "equilibrium", params)


@main.command("montecarlo")
@experiment_options
@click.pass_context
def montecarlo(ctx, **params):
    """Aggregate equilibrium statistics over many channel draws."""
    _run(ctx, "monte_carlo", params)
