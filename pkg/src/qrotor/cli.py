"""Command-line interface for qrotor."""

import functools
import logging
import sys
from pathlib import Path
from typing import List, Optional

import click

from qrotor import __version__
from qrotor.algebra.generators import dump_matrix, suq2_generators
from qrotor.algebra.verify import run_suite
from qrotor.core.config import load_config
from qrotor.core.errors import QRotorError
from qrotor.core.types import (
    Band,
    DeformationParameter,
    DeformedParams,
    FitConfig,
    HolmbergLipasParams,
    LevelDataset,
    ModelKind,
    Regime,
    RotorParams,
    SpinLabel,
)
from qrotor.fitting.data import load_branches, load_bundled_levels, load_levels, reduce_branches
from qrotor.fitting.optimize import fit as fit_model
from qrotor.fitting.optimize import fit_all
from qrotor.reporting.tables import (
    format_parameter_table,
    format_prediction_table,
    prediction_frame,
    residual_frame,
    rounded_prediction_frame,
    spectrum_document,
    spectrum_frame,
    write_csv,
    write_json,
)
from qrotor.series.expansions import (
    ITO_MAX_TERMS,
    ito_approx_expansion,
    ito_exact_expansion,
    suq2_approx_expansion,
    suq2_exact_expansion,
)
from qrotor.spectra.models import spectrum_table

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NOT_CONVERGED = 3

MODEL_CHOICES = [kind.value for kind in ModelKind]
DEFAULT_SUQ2_TERMS = 40


def handle_input_errors(func):
    """Report library and I/O errors on stderr and exit with EXIT_INPUT_ERROR."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (QRotorError, FileNotFoundError, ValueError, KeyError) as exc:
            click.echo(f"Error: {exc}", err=True)
            sys.exit(EXIT_INPUT_ERROR)
    return wrapper


def _parse_floats(value: str) -> List[float]:
    try:
        return [float(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got '{value}'")


def _parse_ells(value: str) -> List[int]:
    """Parse "start:stop:step" (stop inclusive) or a comma-separated list."""
    try:
        if ":" in value:
            parts = [int(item) for item in value.split(":")]
            if len(parts) == 2:
                parts.append(1)
            start, stop, step = parts
            if step <= 0:
                raise ValueError
            return list(range(start, stop + 1, step))
        return [int(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise click.BadParameter(f"expected start:stop:step or a comma-separated list, got '{value}'")


def _load_fit_config(config: Optional[str]) -> FitConfig:
    return load_config(config) if config else FitConfig()


def _load_data(data: Optional[str]) -> LevelDataset:
    return load_levels(data) if data else load_bundled_levels()


@click.group()
@click.version_option(version=__version__, prog_name="qrotor")
@click.option("--verbose", "-v", count=True, help="Increase log verbosity (-v info, -vv debug)")
def cli(verbose: int):
    """qrotor - q-deformed rotational spectra, verification and fits."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@click.option("--ell-max", type=int, required=True, help="Largest spin to check (<= 64)")
@click.option("--tau", "taus", required=True, help="Comma-separated deformations, e.g. 0.05,0.2")
@click.option("--regime", type=click.Choice(["real", "phase"]), default="real", show_default=True)
@click.option("--config", type=click.Path(), help="YAML file with thresholds")
@click.option("--output", "-o", type=click.Path(), help="Write the JSON report here instead of stdout")
@click.option("--dump-dir", type=click.Path(), help="Also dump generator matrices as text")
@handle_input_errors
def verify(ell_max: int, taus: str, regime: str, config: Optional[str],
           output: Optional[str], dump_dir: Optional[str]):
    """Check every algebra and tensor-operator identity numerically.

    Example:
        qrotor verify --ell-max 4 --tau 0.1,0.2
    """
    tau_list = _parse_floats(taus)
    report = run_suite(ell_max, tau_list, Regime(regime), _load_fit_config(config))

    if dump_dir:
        _dump_generators(Path(dump_dir), ell_max, tau_list, Regime(regime))

    text = write_json(report.to_dict(), output)
    if output:
        click.echo(f"Report saved to: {output}")
    else:
        click.echo(text, nl=False)

    if not report.passed:
        for failure in report.failures:
            click.echo(f"FAILED {failure}", err=True)
        sys.exit(EXIT_VERIFY_FAILED)


def _dump_generators(directory: Path, ell_max: int, taus: List[float], regime: Regime) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for tau in taus:
        p = DeformationParameter(regime, tau, ell_max)
        for two_ell in range(2 * ell_max + 1):
            ell = SpinLabel(two_ell)
            try:
                generators = suq2_generators(ell, p)
            except QRotorError:
                continue
            for name, op in zip(("Lp", "Lm", "L0"), generators):
                path = directory / f"{regime.value}_tau{tau:g}_2l{two_ell}_{name}.txt"
                path.write_text(dump_matrix(op) + "\n")


@cli.command()
@click.option("--model", "model", type=click.Choice(MODEL_CHOICES), required=True)
@click.option("--A", "A", type=float, help="Rotational constant A (models I-III)")
@click.option("--tau", type=float, help="Deformation tau (models I, Ip, II, IIp)")
@click.option("--B", "B", type=float, help="Centrifugal term B (model III)")
@click.option("--a", "a", type=float, help="Energy scale a (model IV)")
@click.option("--b", "b", type=float, help="Stiffness b (model IV)")
@click.option("--ells", default="2:18:2", show_default=True, help="start:stop:step or list")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--output", "-o", type=click.Path(), help="Output file (default: stdout)")
@handle_input_errors
def spectrum(model: str, A: Optional[float], tau: Optional[float], B: Optional[float],
             a: Optional[float], b: Optional[float], ells: str, fmt: str, output: Optional[str]):
    """Evaluate a model spectrum.

    Example:
        qrotor spectrum --model II --A 20.559 --tau 0.00623 --ells 2:18:2
    """
    kind = ModelKind(model)
    if kind is ModelKind.III:
        required, params = ("A", "B"), (A, B)
    elif kind is ModelKind.IV:
        required, params = ("a", "b"), (a, b)
    else:
        required, params = ("A", "tau"), (A, tau)
    missing = [name for name, value in zip(required, params) if value is None]
    if missing:
        raise click.UsageError(f"Model {kind.value} needs --{' --'.join(missing)}")

    if kind is ModelKind.III:
        model_params = RotorParams(A=A, B=B)
    elif kind is ModelKind.IV:
        model_params = HolmbergLipasParams(a=a, b=b)
    else:
        model_params = DeformedParams(A=A, tau=tau)

    table = spectrum_table(kind, model_params, _parse_ells(ells))
    if fmt == "json":
        text = write_json(spectrum_document(kind, model_params, table), output)
    else:
        text = write_csv(spectrum_frame(table), output)
    if not output:
        click.echo(text, nl=False)


@cli.command()
@click.option("--family", type=click.Choice(["suq2", "ito"]), required=True)
@click.option("--tau", type=float, required=True)
@click.option("--terms", type=int, help="Number of coefficients (default: 40 for suq2, 31 for ito)")
@click.option("--approx", is_flag=True, help="Expand the sinus / hyperbolic tangent formula instead")
@click.option("--output", "-o", type=click.Path(), help="Output CSV (default: stdout)")
@handle_input_errors
def expand(family: str, tau: float, terms: Optional[int], approx: bool, output: Optional[str]):
    """Emit l(l+1) expansion coefficients as CSV (n, coefficient).

    Example:
        qrotor expand --family ito --tau 0.00623 --terms 20
    """
    builders = {
        ("suq2", False): suq2_exact_expansion,
        ("suq2", True): suq2_approx_expansion,
        ("ito", False): ito_exact_expansion,
        ("ito", True): ito_approx_expansion,
    }
    if terms is None:
        terms = ITO_MAX_TERMS if family == "ito" else DEFAULT_SUQ2_TERMS
    coefficients = builders[(family, approx)](tau, terms)
    text = write_csv(coefficients.to_frame(), output)
    if not output:
        click.echo(text, nl=False)


@cli.command()
@click.option("--branches", type=click.Path(), required=True, help="CSV with branch,ell,wavenumber_cm1")
@click.option("--band", type=click.Choice([band.value for band in Band]), default="v0", show_default=True)
@click.option("--output", "-o", type=click.Path(), help="Output level CSV (default: stdout)")
@handle_input_errors
def ingest(branches: str, band: str, output: Optional[str]):
    """Reduce R/P branch lines to rotational levels.

    Example:
        qrotor ingest --branches lines.csv --band v0 -o levels.csv
    """
    data = reduce_branches(load_branches(branches), Band(band))
    text = write_csv(data.to_frame(), output)
    if output:
        click.echo(f"Saved {len(data)} levels to: {output}")
    else:
        click.echo(text, nl=False)


@cli.command()
@click.option("--data", type=click.Path(), help="Level CSV (default: bundled HF v=0 levels)")
@click.option("--model", "model", type=click.Choice(MODEL_CHOICES + ["all"]), default="all", show_default=True)
@click.option("--output", "-o", type=click.Path(), help="FitResult JSON output")
@click.option("--residuals", type=click.Path(),
              help="Residual CSV (a directory when fitting all models)")
@click.option("--config", type=click.Path(), help="YAML file with fit settings")
@handle_input_errors
def fit(data: Optional[str], model: str, output: Optional[str],
        residuals: Optional[str], config: Optional[str]):
    """Fit one model, or all six, to a level dataset.

    Example:
        qrotor fit --model II -o fit.json --residuals residuals.csv
    """
    dataset = _load_data(data)
    settings = _load_fit_config(config)

    if model == "all":
        results = fit_all(dataset, config=settings)
        click.echo(format_parameter_table(results))
        if output:
            write_json([r.to_dict() for r in results], output)
        if residuals:
            for result in results:
                write_csv(residual_frame(dataset, result),
                          Path(residuals) / f"residuals_{result.kind.value}.csv")
    else:
        results = [fit_model(ModelKind(model), dataset, settings)]
        text = write_json(results[0].to_dict(), output)
        if not output:
            click.echo(text, nl=False)
        if residuals:
            write_csv(residual_frame(dataset, results[0]), residuals)

    failed = [r for r in results if not r.converged]
    if failed:
        for result in failed:
            click.echo(f"Model {result.kind.label} did not converge "
                       f"after {result.iterations} evaluations: {result.message}", err=True)
        sys.exit(EXIT_NOT_CONVERGED)


@cli.command()
@click.option("--data", type=click.Path(), help="Level CSV (default: bundled HF v=0 levels)")
@click.option("--output-dir", "-o", type=click.Path(), help="Write parameters.txt, predictions.txt, predictions.csv, fits.json")
@click.option("--config", type=click.Path(), help="YAML file with fit settings")
@handle_input_errors
def report(data: Optional[str], output_dir: Optional[str], config: Optional[str]):
    """Fit all models and tabulate their predictions next to the data.

    Example:
        qrotor report -o results/hf
    """
    dataset = _load_data(data)
    results = fit_all(dataset, config=_load_fit_config(config))
    frame = prediction_frame(dataset, results)
    table = format_prediction_table(frame)
    click.echo(table)

    if output_dir:
        out = Path(output_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "parameters.txt").write_text(format_parameter_table(results) + "\n")
        (out / "predictions.txt").write_text(table + "\n")
        write_csv(rounded_prediction_frame(frame), out / "predictions.csv")
        write_json([r.to_dict() for r in results], out / "fits.json")
        click.echo(f"\nResults saved to: {out}")

    if not all(r.converged for r in results):
        sys.exit(EXIT_NOT_CONVERGED)


if __name__ == "__main__":
    cli()
