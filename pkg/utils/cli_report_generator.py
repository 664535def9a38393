"""CLI console report generator for ellipticgw."""

from typing import Dict, List
import click
from constants import REPORT_WIDTH, SECTION_SEPARATOR
from series import IdentityReport
from utils.report_helpers import RationalFormatting, VerificationSummary


def print_console_report(reports: List[IdentityReport], settings: Dict):
    """Print the formatted verification report to stdout.

    Args:
        reports: IdentityReports in suite order
        settings: Run settings (n_max, g_max, order, and fault if any)
    """
    click.echo("\n" + SECTION_SEPARATOR)
    click.echo("ELLIPTIC SURFACE GW IDENTITY REPORT".center(REPORT_WIDTH))
    click.echo(SECTION_SEPARATOR)
    click.echo(f"Surfaces: E(1) .. E({settings['n_max']})   Genus <= {settings['g_max']}   "
               f"Order: {settings['order']}")
    if settings.get('fault'):
        click.echo(f"Fault hook enabled: {settings['fault']}")
    click.echo(SECTION_SEPARATOR)

    # 1. SUMMARY
    verified = VerificationSummary.count_verified(reports)
    click.echo("\n🎯 SUMMARY")
    click.echo("-" * 40)
    click.echo(f"Identities checked: {len(reports)}")
    click.echo(f"Verified: {verified}")
    click.echo(f"Failed: {len(reports) - verified}")

    # 2. PER-SURFACE RESULTS
    for label, group in VerificationSummary.group_by_surface(reports).items():
        click.echo(f"\n📐 {label.upper()}")
        click.echo("-" * 40)
        for report in group:
            click.echo(f"  {VerificationSummary.status_marker(report)} {report.identity_name}")
            if not report.verified:
                lhs = '-' if report.lhs is None else RationalFormatting.format_rational(report.lhs)
                rhs = '-' if report.rhs is None else RationalFormatting.format_rational(report.rhs)
                click.echo(f"       first difference at d={report.failed_degree}: lhs={lhs}, rhs={rhs}")

    # 3. FIRST FAILURE
    failure = VerificationSummary.first_failure(reports)
    click.echo("\n" + SECTION_SEPARATOR)
    if failure is None:
        click.echo(f"✓ All {len(reports)} identities verified through order {settings['order']}")
    else:
        click.echo(f"⚠️  First failure: {failure.describe()}")
    click.echo(SECTION_SEPARATOR)
