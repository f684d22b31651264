"""Serialization of family tables and parsing of user SCC-family files."""

from __future__ import annotations

import csv
import io
import json
from typing import List, Optional

from .catalog import FamilyTable
from .coeffring import POLYNOMIAL, CoeffMode, CoeffPoly
from .series import EGF, Series


class FamilyFileError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def table_to_csv(table: FamilyTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.header())
    writer.writerows(table.compact_rows())
    return buf.getvalue()


def table_to_json(table: FamilyTable) -> str:
    cols = table.header()
    rows = []
    for row in table.compact_rows():
        rec = dict(zip(cols, row))
        rec["count"] = str(rec["count"])
        rows.append(rec)
    doc = {"family": table.family, "mode": table.mode, "order": table.order, "rows": rows}
    return json.dumps(doc, indent=2) + "\n"


def rows_from_csv(text: str) -> List[tuple]:
    """Normalized ``(n, m, p, count)`` tuples, ``None`` for absent columns."""
    reader = csv.DictReader(io.StringIO(text))
    return [_normalize(rec) for rec in reader]


def rows_from_json(text: str) -> List[tuple]:
    return [_normalize(rec) for rec in json.loads(text)["rows"]]


def _normalize(rec) -> tuple:
    def get(key):
        v = rec.get(key)
        return None if v is None else int(v)

    return (get("n"), get("m"), get("p"), int(rec["count"]))


def parse_family_file(text: str, max_n: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """Parse ``n: c_0 c_1 ... c_M`` lines into an EGF in ``z`` and ``w``.

    ``c_m`` is the number of family members with ``n`` vertices and ``m``
    edges. Missing ``n`` means no members; ``#`` starts a comment.
    """
    coeffs: List[Optional[CoeffPoly]] = [None] * (max_n + 1)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise FamilyFileError(lineno, "expected 'n: c_0 c_1 ...'")
        try:
            n = int(head)
            values = [int(tok) for tok in body.split()]
        except ValueError:
            raise FamilyFileError(lineno, "non-integer entry") from None
        if n < 0:
            raise FamilyFileError(lineno, "negative vertex count")
        if any(v < 0 for v in values):
            raise FamilyFileError(lineno, "negative count")
        if n < len(coeffs) and coeffs[n] is not None:
            raise FamilyFileError(lineno, f"duplicate entry for n={n}")
        if len(values) > n * (n - 1) + 1 and any(values[n * (n - 1) + 1:]):
            raise FamilyFileError(lineno, f"edge count above n(n-1) for n={n}")
        if n > max_n:
            continue
        coeffs[n] = CoeffPoly.from_w_coeffs(values)
    filled = [c if c is not None else CoeffPoly() for c in coeffs]
    return Series(EGF, filled, mode)


def format_family_file(a: Series) -> str:
    """Inverse of :func:`parse_family_file` for a polynomial-mode EGF."""
    lines = []
    for n, c in enumerate(a.coeffs):
        if not c:
            continue
        values = [c.coeff(m) for m in range(c.deg_w() + 1)]
        lines.append(f"{n}: " + " ".join(str(v) for v in values))
    return "\n".join(lines) + "\n"
