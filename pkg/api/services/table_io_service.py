"""
CSV and JSON serialization of count tables and distribution reports.

CSV: header ``alphabet_size,n,k,count,exact_count,total``, one row per
(n, k) with every k in 1..n, LF line endings. JSON mirrors the same fields,
adds the identity results and the optional extended CDF, and writes every
rational as numerator/denominator decimal strings. Output is byte-stable for
equal input; ``report_from_json`` reads a whole report back, tables,
identity results and extended CDF included.
"""
import csv
import io
import json
import logging
from fractions import Fraction
from pathlib import Path

from .distribution_service import CountTable, DistributionReport
from .exceptions import InvalidInputError, TableUnavailableError
from .verification_service import IdentityResult

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['alphabet_size', 'n', 'k', 'count', 'exact_count', 'total']
FORMAT_CSV = 'csv'
FORMAT_JSON = 'json'


def fraction_to_dict(value):
    value = Fraction(value)
    return {'numerator': str(value.numerator), 'denominator': str(value.denominator)}


def fraction_from_dict(data):
    return Fraction(int(data['numerator']), int(data['denominator']))


def tables_to_csv(tables):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for table in sorted(tables, key=lambda t: (t.alphabet_size, t.length)):
        for k in table.support:
            writer.writerow([table.alphabet_size, table.length, k,
                             table.count(k), table.exact_count(k), table.total])
    return buffer.getvalue()


def tables_from_csv(text):
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_COLUMNS:
        raise InvalidInputError(f"CSV header must be {','.join(CSV_COLUMNS)}, got {reader.fieldnames}")
    grouped = {}
    for line_number, row in enumerate(reader, start=2):
        try:
            alphabet_size, n, k = int(row['alphabet_size']), int(row['n']), int(row['k'])
            count, exact_count, total = int(row['count']), int(row['exact_count']), int(row['total'])
        except (TypeError, ValueError):
            raise InvalidInputError(f"Malformed CSV row at line {line_number}") from None
        if total != alphabet_size ** n:
            raise InvalidInputError(f"Row at line {line_number} has total {total}, expected {alphabet_size ** n}")
        counts, exact_counts = grouped.setdefault((alphabet_size, n), ({}, {}))
        if k in counts:
            raise InvalidInputError(f"Duplicate row for a={alphabet_size}, n={n}, k={k} at line {line_number}")
        counts[k] = count
        exact_counts[k] = exact_count
    return [
        CountTable(alphabet_size=alphabet_size, length=n, counts=counts, exact_counts=exact_counts)
        for (alphabet_size, n), (counts, exact_counts) in sorted(grouped.items())
    ]


def table_to_dict(table, with_probabilities=True):
    data = {
        'alphabet_size': table.alphabet_size,
        'n': table.length,
        'total': str(table.total),
        'rows': [
            {'k': k, 'count': table.count(k), 'exact_count': table.exact_count(k)}
            for k in table.support
        ],
    }
    if with_probabilities:
        data['pmf'] = [dict(k=k, **fraction_to_dict(table.pmf(k))) for k in table.support]
        data['exact_pmf'] = [dict(k=k, **fraction_to_dict(table.exact_pmf(k))) for k in table.support]
        data['cdf'] = [dict(k=k, **fraction_to_dict(table.cdf(k))) for k in table.support]
        data['exact_mass'] = fraction_to_dict(table.exact_mass())
        data['non_exact_mass'] = fraction_to_dict(table.non_exact_mass())
    return data


def table_from_dict(data):
    try:
        alphabet_size, n = int(data['alphabet_size']), int(data['n'])
        rows = data['rows']
        ks = [int(row['k']) for row in rows]
        counts = {int(row['k']): int(row['count']) for row in rows}
        exact_counts = {int(row['k']): int(row['exact_count']) for row in rows}
    except (KeyError, TypeError, ValueError):
        raise InvalidInputError("Malformed table entry in JSON document") from None
    if len(ks) != len(counts):
        raise InvalidInputError(f"Table for a={alphabet_size}, n={n} repeats a complexity row")
    if 'total' in data and int(data['total']) != alphabet_size ** n:
        raise InvalidInputError(f"Table for n={n} has total {data['total']}, expected {alphabet_size ** n}")
    return CountTable(alphabet_size=alphabet_size, length=n, counts=counts, exact_counts=exact_counts)


def report_to_dict(tables, identity_results=None, extended_cdf=None):
    tables = sorted(tables, key=lambda t: (t.alphabet_size, t.length))
    document = {
        'alphabet_size': tables[0].alphabet_size if tables else None,
        'tables': [table_to_dict(table) for table in tables],
    }
    if identity_results is not None:
        document['identity_results'] = [result.to_dict() for result in identity_results]
    if extended_cdf is not None:
        document['extended_cdf'] = {
            'n': tables[-1].length + 1,
            'cdf': [dict(k=k, **fraction_to_dict(value)) for k, value in sorted(extended_cdf.items())],
        }
    return document


def tables_to_json(tables, identity_results=None, extended_cdf=None):
    return json.dumps(report_to_dict(tables, identity_results, extended_cdf), indent=2) + '\n'


def _parse_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"Invalid JSON table document: {exc}") from None


def _tables_from_document(document):
    entries = document.get('tables') if isinstance(document, dict) else document
    if not isinstance(entries, list):
        raise InvalidInputError("JSON table document must contain a 'tables' list")
    return [table_from_dict(entry) for entry in entries]


def tables_from_json(text):
    return _tables_from_document(_parse_json(text))


def report_from_json(text):
    """Read a document written by ``tables_to_json`` back into a DistributionReport."""
    document = _parse_json(text)
    if not isinstance(document, dict):
        raise InvalidInputError("JSON report must be an object with a 'tables' list")
    tables = sorted(_tables_from_document(document), key=lambda t: (t.alphabet_size, t.length))
    if not tables:
        raise InvalidInputError("JSON report holds no tables")
    try:
        identity_results = [IdentityResult.from_dict(entry) for entry in document.get('identity_results', [])]
        extended_cdf = None
        if 'extended_cdf' in document:
            extended = document['extended_cdf']
            if int(extended['n']) != tables[-1].length + 1:
                raise InvalidInputError(
                    f"Extended CDF is for n={extended['n']}, expected {tables[-1].length + 1}"
                )
            extended_cdf = {int(entry['k']): fraction_from_dict(entry) for entry in extended['cdf']}
    except (KeyError, TypeError, ValueError, ZeroDivisionError):
        raise InvalidInputError("Malformed identity results or extended CDF in JSON report") from None
    return DistributionReport(
        alphabet_size=tables[0].alphabet_size,
        tables=tables,
        identity_results=identity_results,
        extended_cdf=extended_cdf,
    )


def validate_tables(tables, origin='table file'):
    """Raise unless every table is consistent and each (alphabet size, length) appears once."""
    problems = []
    seen = set()
    for table in tables:
        key = (table.alphabet_size, table.length)
        if key in seen:
            problems.append(f"a={table.alphabet_size}, n={table.length}: duplicate table")
        seen.add(key)
        problems.extend(f"a={table.alphabet_size}, n={table.length}: {problem}"
                        for problem in table.check_invariants())
    if problems:
        raise InvalidInputError(f"Inconsistent tables in {origin}: {'; '.join(problems)}")
    return tables


def detect_format(path, fmt=None):
    if fmt:
        if fmt not in (FORMAT_CSV, FORMAT_JSON):
            raise InvalidInputError(f"Unknown table format {fmt!r}")
        return fmt
    suffix = Path(path).suffix.lower()
    if suffix == '.json':
        return FORMAT_JSON
    if suffix == '.csv':
        return FORMAT_CSV
    raise InvalidInputError(f"Cannot tell the table format of {path}; use .csv or .json")


def load_tables(path, fmt=None):
    path = Path(path)
    if not path.exists():
        raise InvalidInputError(f"Table file not found: {path}")
    fmt = detect_format(path, fmt)
    text = path.read_text(encoding='utf-8')
    tables = tables_from_json(text) if fmt == FORMAT_JSON else tables_from_csv(text)
    logger.info(f"Loaded {len(tables)} table(s) from {path}")
    return tables


def dump_tables(tables, fmt, identity_results=None, extended_cdf=None):
    if fmt == FORMAT_JSON:
        return tables_to_json(tables, identity_results, extended_cdf)
    if fmt == FORMAT_CSV:
        return tables_to_csv(tables)
    raise InvalidInputError(f"Unknown table format {fmt!r}")


class TableFileSource:
    """Table lookup over a CSV or JSON file, usable as a randomness-test table source"""

    def __init__(self, path, fmt=None):
        self.path = path
        tables = validate_tables(load_tables(path, fmt), origin=str(path))
        self.tables = {(table.alphabet_size, table.length): table for table in tables}

    def __call__(self, alphabet_size, length):
        try:
            return self.tables[(alphabet_size, length)]
        except KeyError:
            raise TableUnavailableError(
                f"{self.path} has no table for alphabet size {alphabet_size}, length {length}"
            ) from None
