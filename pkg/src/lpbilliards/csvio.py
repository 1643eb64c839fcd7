"""CSV persistence of orbit records.

Reals are written with ``repr`` (shortest round-trip decimal, at most 17
significant digits) so that parsing reproduces them bit for bit.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .classification import MorseSignature, RotationNumber
from .errors import BilliardError
from .runner import OrbitRecord

TAIL_COLUMNS = [
    "alpha", "beta", "perimeter", "n_plus", "n_minus", "n_zero",
    "rot_num", "rot_den", "first_seed_index",
]


class CsvFormatError(BilliardError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class OrbitRow:
    p: float
    record: OrbitRecord


def header(n: int) -> list[str]:
    return ["p", "N"] + [f"theta_{i}" for i in range(n)] + TAIL_COLUMNS


def fmt(x: float) -> str:
    return repr(float(x))


def render_row(p: float, rec: OrbitRecord) -> list[str]:
    sig, rot = rec.signature, rec.rotation
    return (
        [fmt(p), str(rec.n)]
        + [fmt(t) for t in rec.theta]
        + [fmt(rec.alpha), fmt(rec.beta), fmt(rec.perimeter)]
        + [str(v) for v in (sig.n_plus, sig.n_minus, sig.n_zero, rot.r, rot.s, rec.first_seed_index)]
    )


def render(p: float, records: Iterable[OrbitRecord], n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header(n))
    for rec in records:
        w.writerow(render_row(p, rec))
    return buf.getvalue()


def write_csv(path, p: float, records, n: int) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render(p, records, n))


def parse(text: str) -> list[OrbitRow]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise CsvFormatError(1, "missing header")
    head = rows[0]
    if len(head) < 2 + 2 + len(TAIL_COLUMNS) or head[:2] != ["p", "N"]:
        raise CsvFormatError(1, "unrecognised header")
    n = len(head) - 2 - len(TAIL_COLUMNS)
    if head != header(n):
        raise CsvFormatError(1, "unrecognised header")
    out = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(head):
            raise CsvFormatError(lineno, f"expected {len(head)} fields, got {len(row)}")
        try:
            p = float(row[0])
            if int(row[1]) != n:
                raise ValueError("N column disagrees with header")
            theta = np.array([float(v) for v in row[2:2 + n]])
            alpha, beta, per = (float(v) for v in row[2 + n:5 + n])
            npl, nmi, nze, r, s, first = (int(v) for v in row[5 + n:])
        except ValueError as exc:
            raise CsvFormatError(lineno, str(exc)) from None
        rec = OrbitRecord(theta, alpha, beta, per, MorseSignature(npl, nmi, nze),
                          RotationNumber(r, s), first)
        out.append(OrbitRow(p, rec))
    return out


def read_csv(path) -> list[OrbitRow]:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse(fh.read())
