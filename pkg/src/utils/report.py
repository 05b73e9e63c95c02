"""
Report generation utilities for verification runs and CLI output.
"""
import json
from datetime import datetime
from typing import Any, Iterable, List, Sequence

from jinja2 import Environment

from ..core.bijection import CorrespondenceRow, TraceStep
from ..core.models import VerificationReport
from ..core.perms import Permutation
from ..core.series import TruncatedEgf

HTML_TEMPLATE = """<!DOCTYPE html>
<html>
<head>
<title>Verification Report: {{ report.suite }}</title>
<style>
body { font-family: monospace; line-height: 1.4; margin: 20px; }
h1, h2 { color: #333; margin: 1em 0 0.5em 0; }
h1 { border-bottom: 2px solid #333; padding-bottom: 0.2em; }
h2 { border-bottom: 1px solid #666; }
table { border-collapse: collapse; width: 100%; margin: 1em 0; }
th, td { text-align: left; padding: 0.3em 1em; font-family: monospace; }
th { border-bottom: 1px solid #666; }
.pass { color: #28a745; }
.fail { color: #dc3545; }
</style>
</head>
<body>
<h1>Verification Report</h1>
<p>Generated: {{ generated }}</p>
<p>Suite: {{ report.suite }}, max n: {{ report.max_n }}</p>
<h2>Summary</h2>
<p class="{{ 'pass' if report.passed else 'fail' }}">
{{ report.checks | length }} checks, {{ report.passed_count }} passed, {{ report.failed_count }} failed
</p>
<h2>Checks</h2>
<table>
<tr><th>Check</th><th>Identity</th><th>Range</th><th>Status</th><th>Detail</th></tr>
{% for check in report.checks %}
<tr>
<td>{{ check.name }}</td>
<td>{{ check.anchor }}</td>
<td>{{ check.n_range }}</td>
<td class="{{ check.status }}">{{ check.status | upper }}</td>
<td>{{ check.detail }}</td>
</tr>
{% endfor %}
</table>
</body>
</html>
"""

_environment = Environment(autoescape=True)


def format_set(values: Iterable[int]) -> str:
    return '{' + ', '.join(str(v) for v in sorted(values)) + '}'


class ReportGenerator:
    @staticmethod
    def generate_html_report(report: VerificationReport) -> str:
        """Generate HTML report from verification results."""
        template = _environment.from_string(HTML_TEMPLATE)
        return template.render(
            report=report,
            generated=datetime.now().strftime('%Y-%m-%d %H:%M:%S'),
        )

    @staticmethod
    def generate_text_report(report: VerificationReport) -> str:
        lines = [
            f"Verification report: suite={report.suite}, max_n={report.max_n}",
            "=" * 60,
        ]
        lines.extend(check.summary for check in report.checks)
        lines.extend([
            "=" * 60,
            f"Summary: {len(report.checks)} checks, {report.passed_count} passed, "
            f"{report.failed_count} failed",
        ])
        return '\n'.join(lines)

    @staticmethod
    def to_json(payload: Any) -> str:
        return json.dumps(payload, indent=2)

    @staticmethod
    def format_series(series: TruncatedEgf, mismatches: Sequence[int]) -> List[str]:
        """`n: coefficient [ok]` per line, flagging indices where the closed form disagrees."""
        bad = set(mismatches)
        return [
            f"{n}: {coeff} [{'mismatch' if n in bad else 'ok'}]"
            for n, coeff in enumerate(series)
        ]

    @staticmethod
    def format_transport(source: Permutation, image: Permutation) -> List[str]:
        """Statistics and sets carried from sigma to its image."""
        return [
            f"(jump, des) = ({source.stat('jump')}, {source.stat('des')})  ->  "
            f"(exc, drop) = ({image.stat('exc')}, {image.stat('drop')})",
            f"Lbar = {format_set(source.set_stat('Lbar'))}  ->  F = {format_set(image.set_stat('F'))}",
            f"Jumpbar = {format_set(source.set_stat('Jumpbar'))}  ->  "
            f"Excbar = {format_set(image.set_stat('Excbar'))}",
        ]

    @staticmethod
    def format_trace(steps: Sequence[TraceStep]) -> List[str]:
        lines = []
        for step in steps:
            if step.slot:
                lines.append(f"{step.size}: slot {step.slot} ({step.label}) at leaf {step.leaf}: "
                             f"{step.labeling}  |  {step.tree}")
            else:
                lines.append(f"{step.size}: {step.labeling}  |  {step.tree}")
        return lines

    @staticmethod
    def format_table(rows: Sequence[CorrespondenceRow]) -> List[str]:
        headers = ['I', 'sigma', 'phi(sigma)', 'cycles', '(jump,des)', '(exc,drop)']
        cells = [
            [
                format_set(row.subset),
                str(row.source),
                str(row.image),
                str(row.image.to_cycles()),
                '({},{})'.format(*row.source_stats),
                '({},{})'.format(*row.image_stats),
            ]
            for row in rows
        ]
        widths = [max(len(line[i]) for line in [headers] + cells) for i in range(len(headers))]
        return [
            '  '.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
            for line in [headers] + cells
        ]
