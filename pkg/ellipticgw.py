"""Main CLI entry point for ellipticgw."""

from pathlib import Path
from typing import Dict, List, Optional
import click
from constants import (
    DEFAULT_G_MAX,
    DEFAULT_N_MAX,
    DEFAULT_ORDER,
    EXIT_CROSS_CHECK_FAILED,
    EXIT_VERIFICATION_FAILED,
    FAULT_HOOKS,
    CORRUPTED_E4_NORMALISER,
    MAX_RECOGNITION_WEIGHT,
    ORDER_ENV_VAR,
    REPORT_FORMATS,
    TABLE_FORMATS,
)
from errors import EllipticGwError, InsufficientOrder, InvalidSurface, OddWeight, SeriesParseError
from gw import EllipticSurfaceCalculator, SurfaceParams
from numtheory import Eisenstein, eisenstein
from quasimodular import prefactor_check, ramanujan_check, recognize
from relative import export_table_json, verify_relative_tables
from series import IdentityReport, Series, compare_series
from utils import PDFReportGenerator, VerificationSummary, build_table_document, print_console_report

TABLE_PROVENANCE = ['closed form (tG\')^g F0', 'genus recursion from the F0 ODE']


def validate_surface(ctx, param, value):
    """Reject surfaces outside E(n), n >= 1, before any computation starts."""
    if value is None:
        return value
    try:
        SurfaceParams(value).validate()
    except InvalidSurface as e:
        raise click.BadParameter(str(e))
    return value


def progress(quiet: bool, message: str) -> None:
    if not quiet:
        click.echo(message, err=True)


def order_option(func):
    return click.option('--order', type=click.IntRange(min=0), default=DEFAULT_ORDER, envvar=ORDER_ENV_VAR,
                        show_default=True,
                        help=f'Truncation order of every series. Env: {ORDER_ENV_VAR}')(func)


def write_payload(payload: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(payload if payload.endswith('\n') else payload + '\n')
    else:
        click.echo(payload, nl=not payload.endswith('\n'))


def cross_check(calculator: EllipticSurfaceCalculator, g_max: int) -> Optional[IdentityReport]:
    """Compare the closed form against the genus recursion; return the first failure."""
    for g in range(g_max + 1):
        report = compare_series(f'F{g} closed form = genus recursion', calculator.n,
                                calculator.fg_closed(g), calculator.fg_recursive(g))
        if not report.verified:
            return report
    return None


def run_suite(n_max: int, g_max: int, order: int, fault: Optional[str], quiet: bool) -> List[IdentityReport]:
    """Run every identity family for E(1)..E(n_max) plus the surface-independent checks."""
    faults = [fault] if fault else None
    reports: List[IdentityReport] = []
    for n in range(1, n_max + 1):
        progress(quiet, f"Verifying E({n})...")
        calculator = EllipticSurfaceCalculator(n, order, faults=faults)
        progress(quiet, "  - generating function identities...")
        reports.extend(calculator.verify_all(g_max))
        progress(quiet, "  - relative invariant tables...")
        reports.extend(verify_relative_tables(calculator, g_max))

    progress(quiet, "Verifying quasimodular identities...")
    overrides = None
    if fault == 'e4':
        overrides = {Eisenstein.E4: eisenstein(Eisenstein.E4, order, normaliser=CORRUPTED_E4_NORMALISER)}
    reports.extend(ramanujan_check(order, eisenstein_overrides=overrides))
    reports.append(prefactor_check(order))
    return reports


@click.group()
def cli():
    """Exact Gromov-Witten generating functions of the elliptic surfaces E(n).

    Examples:
    \b
        ellipticgw table --n 1 --g-max 2 --order 16 --format csv
        ellipticgw verify --n-max 3 --g-max 4 --order 32
        ellipticgw recognize series.txt --weight 4
        ellipticgw rows --n 2
    """


@cli.command()
@click.option('--n', 'n', type=int, required=True, callback=validate_surface,
              help='Surface index of E(n); n >= 1.')
@click.option('--g-max', type=click.IntRange(min=0), default=DEFAULT_G_MAX, show_default=True,
              help='Highest genus to tabulate.')
@order_option
@click.option('--format', 'fmt', type=click.Choice(TABLE_FORMATS), default='json', show_default=True,
              help='Output format.')
@click.option('--out', type=click.Path(dir_okay=False, writable=True), help='Output file. Default: stdout')
@click.option('--quiet', '-q', is_flag=True, help='Suppress progress messages.')
@click.option('--inject-fault', type=click.Choice(FAULT_HOOKS), hidden=True)
@click.pass_context
def table(ctx, n, g_max, order, fmt, out, quiet, inject_fault):
    """Emit the F_g coefficient table of E(n) for g <= G_MAX and d <= ORDER."""
    try:
        calculator = EllipticSurfaceCalculator(n, order, faults=[inject_fault] if inject_fault else None)
        progress(quiet, f"Computing F_g for E({n}), g <= {g_max}, order {order}...")
        gw_table = calculator.gw_table(g_max)

        progress(quiet, "Cross-checking against the genus recursion...")
        failure = cross_check(calculator, g_max)
        if failure is not None:
            click.echo(f"Error: table cross-check failed: {failure.describe()}", err=True)
            ctx.exit(EXIT_CROSS_CHECK_FAILED)

        document = build_table_document(gw_table, n, TABLE_PROVENANCE)
        write_payload(document.to_json() if fmt == 'json' else document.to_csv(), out)
        if out:
            progress(quiet, f"✓ Table written: {out}")
    except EllipticGwError as e:
        click.echo(f"Error: {str(e)}", err=True)
        ctx.exit(EXIT_CROSS_CHECK_FAILED)


@cli.command()
@click.option('--n-max', type=click.IntRange(min=1), default=DEFAULT_N_MAX, show_default=True,
              help='Verify E(1) through E(N_MAX).')
@click.option('--g-max', type=click.IntRange(min=0), default=DEFAULT_G_MAX, show_default=True,
              help='Highest genus for the genus induction checks.')
@order_option
@click.option('--format', 'fmt', type=click.Choice(REPORT_FORMATS), default='text', show_default=True,
              help='Report printed to stdout: human-readable text or JSON.')
@click.option('--out', type=click.Path(dir_okay=False, writable=True), help='Write the JSON report to this file.')
@click.option('--pdf', type=click.Path(dir_okay=False, writable=True), help='Also render the report as PDF.')
@click.option('--quiet', '-q', is_flag=True, help='Suppress progress messages.')
@click.option('--inject-fault', type=click.Choice(FAULT_HOOKS), hidden=True)
@click.pass_context
def verify(ctx, n_max, g_max, order, fmt, out, pdf, quiet, inject_fault):
    """Run the identity verification suite; exit 1 if any identity fails."""
    settings: Dict = {'n_max': n_max, 'g_max': g_max, 'order': order, 'fault': inject_fault}
    try:
        reports = run_suite(n_max, g_max, order, inject_fault, quiet)
    except EllipticGwError as e:
        click.echo(f"Error: {str(e)}", err=True)
        ctx.exit(EXIT_CROSS_CHECK_FAILED)

    if fmt == 'json':
        click.echo(VerificationSummary.to_json(reports, settings))
    else:
        print_console_report(reports, settings)

    if out:
        Path(out).write_text(VerificationSummary.to_json(reports, settings) + '\n')
        progress(quiet, f"✓ JSON report written: {out}")
    if pdf:
        progress(quiet, "Generating PDF report...")
        PDFReportGenerator().generate_report(reports, pdf, settings)
        progress(quiet, f"✓ PDF report written: {pdf}")

    failure = VerificationSummary.first_failure(reports)
    if failure is not None:
        click.echo(f"Error: identity '{failure.identity_name}' failed"
                   f"{'' if failure.n is None else f' for E({failure.n})'} at d={failure.failed_degree}: "
                   f"lhs={failure.lhs}, rhs={failure.rhs}", err=True)
        ctx.exit(EXIT_VERIFICATION_FAILED)


@cli.command(name='recognize')
@click.argument('series_file', type=click.File('r'))
@click.option('--weight', type=click.IntRange(min=0, max=MAX_RECOGNITION_WEIGHT), required=True,
              help='Even weight of the quasimodular form to look for.')
def recognize_command(series_file, weight):
    """Express the series in SERIES_FILE ('-' for stdin) as a polynomial in E2, E4, E6."""
    try:
        s = Series.from_text(series_file.read())
    except SeriesParseError as e:
        raise click.BadParameter(str(e), param_hint='SERIES_FILE')

    try:
        result = recognize(s, weight)
    except OddWeight as e:
        raise click.BadParameter(str(e), param_hint='--weight')
    except InsufficientOrder as e:
        raise click.BadParameter(str(e), param_hint='SERIES_FILE')

    click.echo(result.to_text())


@cli.command()
@click.option('--n', 'n', type=int, callback=validate_surface,
              help='Sample the E(n) rows at genus 1 for this surface.')
def rows(n):
    """Print the relative invariant value table as JSON."""
    click.echo(export_table_json(n))


if __name__ == "__main__":
    cli()
