"""Report and serialization utilities for ellipticgw."""

from .report_helpers import RationalFormatting, TableDocument, VerificationSummary, build_table_document
from .pdf_report_generator import PDFReportGenerator
from .cli_report_generator import print_console_report

__all__ = [
    'RationalFormatting',
    'TableDocument',
    'VerificationSummary',
    'build_table_document',
    'PDFReportGenerator',
    'print_console_report',
]
