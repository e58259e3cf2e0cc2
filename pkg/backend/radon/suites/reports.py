"""Suite reports: rows of checked identities written as CSV or JSON."""
import csv
import io
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path

from rest_framework.renderers import JSONRenderer

from padic.cyclotomic import format_value

logger = logging.getLogger(__name__)

OK = 'ok'
FAIL = 'fail'
POLE = 'pole'
SKIPPED = 'skipped'

PADIC_HEADER = (
    'identity', 'q', 'n', 'case', 'point', 'left', 'right', 'status',
)
ARCHIMEDEAN_HEADER = (
    'module', 'n', 'k', 'p', 'q', 's', 'r', 'value_quad', 'value_formula',
    'abs_err', 'rel_err', 'tolerance', 'status',
)
SUPPORT_HEADER = (
    'module', 'family', 'case', 'grid_h', 'component_polygon',
    'dual_polygon', 'value', 'expected', 'tolerance', 'status',
)
MELLIN_HEADER = (
    'module', 'n', 'k', 'p', 'q', 's', 'value_quad', 'value_formula',
    'abs_err', 'rel_err',
)


def exact_text(value):
    """p-adic values: Fractions and cyclotomic numbers as exact strings."""
    return format_value(value)


def float_text(value):
    if value is None:
        return ''
    if isinstance(value, complex):
        if value.imag == 0:
            return repr(value.real)
        return repr(value)
    value = float(value)
    if math.isnan(value):
        return 'nan'
    return repr(value)


def polygon_text(vertices):
    """Vertices as "(x, y) (x, y) ..."; exact coordinates stay exact."""
    if vertices is None:
        return ''
    return ' '.join(
        '(' + ', '.join(_coordinate_text(c) for c in vertex) + ')'
        for vertex in vertices
    )


def _coordinate_text(value):
    if isinstance(value, float):
        return float_text(value)
    return exact_text(value)


def status(ok):
    return OK if ok else FAIL


@dataclass
class Report:
    suite: str
    header: tuple
    config: dict
    rows: list = field(default_factory=list)

    def add(self, **row):
        self.rows.append(
            {column: str(row.get(column, '')) for column in self.header}
        )

    def extend(self, rows):
        for row in rows:
            self.add(**row)

    def sorted_rows(self):
        return sorted(
            self.rows,
            key=lambda row: tuple(row[column] for column in self.header),
        )

    @property
    def passed(self):
        return all(row.get('status', OK) != FAIL for row in self.rows)

    def first_failure(self):
        for row in self.sorted_rows():
            if row.get('status') == FAIL:
                return row
        return None

    def as_dict(self):
        return {
            'suite': self.suite,
            'config': self.config,
            'rows': self.sorted_rows(),
            'passed': self.passed,
        }


def render_csv(report):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(report.header)
    for row in report.sorted_rows():
        writer.writerow([row[column] for column in report.header])
    return buffer.getvalue()


def render_json(report):
    content = JSONRenderer().render(
        report.as_dict(), renderer_context={'indent': 2}
    )
    return content.decode('utf-8') + '\n'


RENDERERS = {
    'csv': render_csv,
    'json': render_json,
}


def render_report(report, output_format):
    return RENDERERS[output_format](report)


def write_report(report, output_format, path=None):
    """Render the report and write it to ``path`` when one is given."""
    content = render_report(report, output_format)
    if path:
        Path(path).write_text(content, encoding='utf-8')
        logger.info(
            'Отчет %s записан в %s (%d строк)',
            report.suite, path, len(report.rows),
        )
    return content
