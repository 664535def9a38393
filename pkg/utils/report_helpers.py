"""Shared utility functions for the table emitter and the console and PDF reports."""

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional
from constants import CSV_HEADER, SCHEMA_VERSION
from gw.table import GwTable
from series import IdentityReport


class RationalFormatting:
    """Exact rational <-> string conversion. Floats never appear."""

    @staticmethod
    def format_rational(value) -> str:
        """Render a rational as "p/q", or "p" when q = 1.

        Args:
            value: Fraction or int

        Returns:
            Canonical string form
        """
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    @staticmethod
    def parse_rational(text: str) -> Fraction:
        """Parse "p" or "p/q" back into a Fraction.

        Raises:
            ValueError: for decimal points, exponents or other malformed input
        """
        text = str(text).strip()
        if any(ch in text for ch in '.eE'):
            raise ValueError(f"Rational value '{text}' must be written as p or p/q")
        return Fraction(text)


@dataclass
class TableDocument:
    """Serializable table of F_g coefficients for one surface E(n)."""

    surface_n: int
    genus_range: List[int]
    order: int
    rows: List[Dict[str, object]] = field(default_factory=list)
    provenance: List[str] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def values(self) -> Dict[tuple, Fraction]:
        """(g, d) -> exact value, for comparisons between emissions."""
        return {(row['g'], row['d']): RationalFormatting.parse_rational(row['value']) for row in self.rows}

    def to_dict(self) -> Dict:
        return asdict(self)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> 'TableDocument':
        """Parse a document emitted by to_json.

        Raises:
            ValueError: on a schema version this code does not write, or a
                malformed row value
        """
        data = json.loads(text)
        version = data.get('schema_version')
        if version != SCHEMA_VERSION:
            raise ValueError(f"Unsupported table schema version '{version}', expected '{SCHEMA_VERSION}'")
        rows = []
        for row in data.get('rows', []):
            value = RationalFormatting.parse_rational(row['value'])
            rows.append({'g': int(row['g']), 'd': int(row['d']),
                         'value': RationalFormatting.format_rational(value)})
        return cls(
            surface_n=int(data['surface_n']),
            genus_range=[int(g) for g in data['genus_range']],
            order=int(data['order']),
            rows=rows,
            provenance=list(data.get('provenance', [])),
            schema_version=version,
        )

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        for row in self.rows:
            writer.writerow([row['g'], row['d'], row['value']])
        return buffer.getvalue()

    @staticmethod
    def values_from_csv(text: str) -> Dict[tuple, Fraction]:
        """Read back the (g, d) -> value map of a CSV emission."""
        reader = csv.DictReader(io.StringIO(text))
        return {(int(row['g']), int(row['d'])): RationalFormatting.parse_rational(row['value']) for row in reader}


def build_table_document(table: GwTable, n: int, provenance: Iterable[str]) -> TableDocument:
    """Turn one surface's GwTable entries into a TableDocument, g then d ascending."""
    rows = [{'g': g, 'd': d, 'value': RationalFormatting.format_rational(value)} for g, d, value in table.rows(n)]
    return TableDocument(
        surface_n=n,
        genus_range=table.genera(n),
        order=table.order,
        rows=rows,
        provenance=list(provenance),
    )


class VerificationSummary:
    """Counting and lookup helpers over lists of IdentityReports."""

    @staticmethod
    def count_verified(reports: List[IdentityReport]) -> int:
        return sum(1 for report in reports if report.verified)

    @staticmethod
    def first_failure(reports: List[IdentityReport]) -> Optional[IdentityReport]:
        """Return the first failed report in suite order, or None."""
        return next((report for report in reports if not report.verified), None)

    @staticmethod
    def group_by_surface(reports: List[IdentityReport]) -> Dict[str, List[IdentityReport]]:
        """Group reports under "E(n)" headings; surface-independent ones go under "common"."""
        groups: Dict[str, List[IdentityReport]] = {}
        for report in reports:
            label = 'common' if report.n is None else f"E({report.n})"
            groups.setdefault(label, []).append(report)
        return groups

    @staticmethod
    def status_marker(report: IdentityReport) -> str:
        return "✅" if report.verified else "❌"

    @staticmethod
    def to_json(reports: List[IdentityReport], settings: Dict, indent: Optional[int] = 2) -> str:
        """Machine-readable verification report."""
        return json.dumps({
            'schema_version': SCHEMA_VERSION,
            'settings': settings,
            'verified': all(report.verified for report in reports),
            'identities': [report.to_dict() for report in reports],
        }, indent=indent)
