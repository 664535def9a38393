"""PDF report generator for the identity verification suite."""

from datetime import datetime
from typing import Dict, List
from xml.sax.saxutils import escape
from reportlab.lib import colors
from reportlab.lib.colors import HexColor
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle
from reportlab.platypus.flowables import HRFlowable
from series import IdentityReport
from utils.report_helpers import RationalFormatting, VerificationSummary


class PDFReportGenerator:
    """Generates PDF reports from lists of IdentityReports."""

    def __init__(self):
        """Initialize the PDF generator."""
        self.styles = getSampleStyleSheet()
        self.custom_styles = self._create_custom_styles()

        self.header_color = HexColor('#1F3A5F')
        self.accent_color = HexColor('#3C7A89')
        self.row_color = HexColor('#EEF2F5')
        self.grid_color = HexColor('#6B7A89')
        self.failure_color = HexColor('#F4CCCC')

    def _create_custom_styles(self) -> Dict:
        """Create custom paragraph styles."""
        styles = {}

        styles['CustomTitle'] = ParagraphStyle(
            'CustomTitle',
            parent=self.styles['Heading1'],
            fontSize=22,
            spaceAfter=24,
            alignment=1,
            textColor=HexColor('#1F3A5F')
        )

        styles['SectionHeader'] = ParagraphStyle(
            'SectionHeader',
            parent=self.styles['Heading2'],
            fontSize=15,
            spaceAfter=10,
            spaceBefore=18,
            textColor=HexColor('#3C7A89')
        )

        styles['Cell'] = ParagraphStyle(
            'Cell',
            parent=self.styles['Normal'],
            fontSize=8,
            leading=10
        )

        return styles

    def generate_report(self, reports: List[IdentityReport], output_filename: str, settings: Dict) -> None:
        """Write the verification report as a PDF.

        Args:
            reports: IdentityReports in suite order
            output_filename: Output PDF filename
            settings: Run settings shown on the title page
        """
        doc = SimpleDocTemplate(
            output_filename,
            pagesize=A4,
            rightMargin=54,
            leftMargin=54,
            topMargin=54,
            bottomMargin=18
        )

        story = []
        story.extend(self._create_title_page(settings))
        story.extend(self._create_summary(reports))
        for label, group in VerificationSummary.group_by_surface(reports).items():
            story.extend(self._create_surface_section(label, group))

        doc.build(story)

    def _create_title_page(self, settings: Dict) -> List:
        story = []
        story.append(Paragraph("Elliptic Surface GW Identity Report", self.custom_styles['CustomTitle']))
        story.append(Spacer(1, 20))

        run = (f"Surfaces E(1) to E({settings['n_max']}), genus up to {settings['g_max']}, "
               f"truncation order {settings['order']}")
        story.append(Paragraph(run, self.styles['Normal']))
        if settings.get('fault'):
            story.append(Paragraph(f"Fault hook enabled: {settings['fault']}", self.styles['Normal']))
        story.append(Spacer(1, 12))

        generated_at = f"Generated on: {datetime.now().strftime('%B %d, %Y at %I:%M %p')}"
        story.append(Paragraph(generated_at, self.styles['Normal']))

        story.append(HRFlowable(width="100%", thickness=1, lineCap='round',
                                color=self.accent_color, spaceBefore=16, spaceAfter=16))
        return story

    def _create_summary(self, reports: List[IdentityReport]) -> List:
        """Create the summary section."""
        story = [Paragraph("Summary", self.custom_styles['SectionHeader'])]

        verified = VerificationSummary.count_verified(reports)
        failure = VerificationSummary.first_failure(reports)
        summary_data = [
            ["Identities checked", str(len(reports))],
            ["Verified", str(verified)],
            ["Failed", str(len(reports) - verified)],
            ["First failure", failure.identity_name if failure else "None"],
        ]

        summary_table = Table(summary_data, colWidths=[2.2 * inch, 4 * inch])
        summary_table.setStyle(TableStyle([
            ('BACKGROUND', (0, 0), (0, -1), self.row_color),
            ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
            ('FONTNAME', (0, 0), (0, -1), 'Helvetica-Bold'),
            ('GRID', (0, 0), (-1, -1), 1, self.grid_color)
        ]))

        story.append(summary_table)
        story.append(Spacer(1, 16))
        return story

    def _create_surface_section(self, label: str, reports: List[IdentityReport]) -> List:
        """One table per surface: identity, status, first differing degree."""
        story = [Paragraph(label if label != 'common' else "Surface-independent identities",
                           self.custom_styles['SectionHeader'])]

        data = [["Identity", "Status", "d", "lhs", "rhs"]]
        failed_rows = []
        for index, report in enumerate(reports, start=1):
            data.append([
                Paragraph(escape(report.identity_name), self.custom_styles['Cell']),
                report.status.value,
                "" if report.failed_degree is None else str(report.failed_degree),
                "" if report.lhs is None else RationalFormatting.format_rational(report.lhs),
                "" if report.rhs is None else RationalFormatting.format_rational(report.rhs),
            ])
            if not report.verified:
                failed_rows.append(index)

        table = Table(data, colWidths=[3.4 * inch, 0.8 * inch, 0.4 * inch, 0.9 * inch, 0.9 * inch], repeatRows=1)
        style = [
            ('BACKGROUND', (0, 0), (-1, 0), self.header_color),
            ('TEXTCOLOR', (0, 0), (-1, 0), colors.white),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, -1), 8),
            ('VALIGN', (0, 0), (-1, -1), 'MIDDLE'),
            ('BACKGROUND', (0, 1), (-1, -1), self.row_color),
            ('GRID', (0, 0), (-1, -1), 0.5, self.grid_color)
        ]
        for row in failed_rows:
            style.append(('BACKGROUND', (0, row), (-1, row), self.failure_color))
        table.setStyle(TableStyle(style))

        story.append(table)
        story.append(Spacer(1, 12))
        return story
