"""Table documents for V(m) (x) V(n) and their JSON, CSV and text renderings.

Exact values travel as strings: integers bare, rationals as ``p/q`` in lowest
terms with the sign on the numerator.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .clebsch_gordan import cg_matrix, normalizer
from .normalized import format_rational
from .projectors import (
    decompose_via_projectors,
    projector,
    projector_factorization,
    summands_in_weight,
    tridiagonal_ef,
    weight_eigenvalues,
)
from .weight_basis import coordinate_matrix, weight_space_rows, window

FORMAT_VERSION = "1"


@dataclass(frozen=True)
class TableBlock:
    k: int
    sign: int
    normalizer: int
    coordinates: tuple[tuple[int, ...], ...]
    clebsch_gordan: tuple[tuple[Fraction, ...], ...]

    @property
    def prefactor(self) -> Fraction:
        return Fraction(1, self.sign * self.normalizer)


@dataclass(frozen=True)
class TableDocument:
    m: int
    n: int
    blocks: tuple[TableBlock, ...]
    format_version: str = FORMAT_VERSION


def build_table(m: int, n: int, only_k: int | None = None) -> TableDocument:
    if m < 0 or n < 0:
        raise ValueError(f"m and n must be nonnegative, got {m}, {n}")
    ks = range(min(m, n) + 1)
    if only_k is not None:
        if only_k not in ks:
            raise ValueError(f"k={only_k} outside 0..{min(m, n)}")
        ks = [only_k]
    blocks = []
    for k in ks:
        coords = coordinate_matrix(m, n, k)
        blocks.append(
            TableBlock(k, (-1) ** k, normalizer(m, n, k), coords.entries, cg_matrix(m, n, k, coords).entries)
        )
    return TableDocument(m, n, tuple(blocks))


def su2_labels(m: int, n: int, k: int, i: int, j: int) -> tuple[Fraction, ...]:
    """Half-integer labels (j1, j2, j, m1, m2) for display."""
    return (
        Fraction(m, 2), Fraction(n, 2), Fraction(m + n, 2) - k, Fraction(m, 2) - i, Fraction(n, 2) - j,
    )


# JSON

def _strings(rows) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in rows]


def table_to_dict(doc: TableDocument) -> dict:
    return {
        "format_version": doc.format_version,
        "m": str(doc.m),
        "n": str(doc.n),
        "blocks": [
            {
                "k": str(b.k),
                "sign": str(b.sign),
                "normalizer": str(b.normalizer),
                "coordinates": _strings(b.coordinates),
                "clebsch_gordan": _strings(b.clebsch_gordan),
            }
            for b in doc.blocks
        ],
    }


def table_to_json(doc: TableDocument) -> str:
    return json.dumps(table_to_dict(doc), indent=1) + "\n"


def table_from_json(text: str) -> TableDocument:
    data = json.loads(text)
    if data.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {data.get('format_version')!r}")
    blocks = tuple(
        TableBlock(
            int(b["k"]),
            int(b["sign"]),
            int(b["normalizer"]),
            tuple(tuple(int(v) for v in row) for row in b["coordinates"]),
            tuple(tuple(Fraction(v) for v in row) for row in b["clebsch_gordan"]),
        )
        for b in data["blocks"]
    )
    return TableDocument(int(data["m"]), int(data["n"]), blocks, data["format_version"])


# CSV

def table_to_csv(doc: TableDocument, labels: bool = False) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = ["m", "n", "k", "i", "j", "c", "C"]
    if labels:
        header += ["su2_j1", "su2_j2", "su2_j", "su2_m1", "su2_m2"]
    writer.writerow(header)
    for b in doc.blocks:
        for i, j in window(doc.m, doc.n, b.k):
            q = i + j - b.k
            row = [doc.m, doc.n, b.k, i, j, b.coordinates[i][q], format_rational(b.clebsch_gordan[i][q])]
            if labels:
                row += [format_rational(x) for x in su2_labels(doc.m, doc.n, b.k, i, j)]
            writer.writerow(row)
    return out.getvalue()


# plain text

def format_matrix(rows) -> list[str]:
    cells = [[format_rational(v) for v in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return ["[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells]


def _side_by_side(left: list[str], prefactor: str, right: list[str]) -> list[str]:
    mid = (len(left) - 1) // 2
    pad = len(prefactor)
    lines = []
    for r, (a, b) in enumerate(zip(left, right)):
        label = prefactor if r == mid else " " * pad
        lines.append(f"{a}   {label} {b}".rstrip())
    return lines


def table_to_pretty(doc: TableDocument) -> str:
    m, n = doc.m, doc.n
    lines = [f"V({m}) x V({n})"]
    for b in doc.blocks:
        lines.append("")
        lines.append(f"k={b.k}: V({m + n - 2 * b.k}) in V({m}) x V({n}), D={b.normalizer}")
        divisor = b.sign * b.normalizer
        rotated = [[int(v * divisor) for v in row] for row in b.clebsch_gordan]
        lines += _side_by_side(format_matrix(b.coordinates), format_rational(b.prefactor), format_matrix(rotated))
    return "\n".join(lines) + "\n"


# weight-space projectors

@dataclass(frozen=True)
class ProjectorDocument:
    m: int
    n: int
    p: int
    ks: tuple[int, ...]
    format_version: str = FORMAT_VERSION

    @property
    def rows(self) -> list[int]:
        return list(weight_space_rows(self.m, self.n, self.p))


def build_projectors(m: int, n: int, p: int, only_k: int | None = None) -> ProjectorDocument:
    present = summands_in_weight(m, n, p)
    if only_k is not None:
        if only_k not in present:
            raise ValueError(f"k={only_k} not present in weight space p={p}")
        present = [only_k]
    # descending k lists the smallest summand first
    return ProjectorDocument(m, n, p, tuple(sorted(present, reverse=True)))


def projectors_to_dict(doc: ProjectorDocument) -> dict:
    m, n, p = doc.m, doc.n, doc.p
    eig = weight_eigenvalues(m, n, p)
    data = {
        "format_version": doc.format_version,
        "m": str(m),
        "n": str(n),
        "p": str(p),
        "weight": str(m + n - 2 * p),
        "basis_i": [str(i) for i in doc.rows],
        "ef_matrix": _strings(tridiagonal_ef(m, n, p).entries),
        "projectors": [],
    }
    for k in doc.ks:
        col, row = projector_factorization(m, n, p, k)
        data["projectors"].append(
            {
                "k": str(k),
                "summand": str(m + n - 2 * k),
                "eigenvalue": str(eig[k]),
                "matrix": _strings(projector(m, n, p, k).entries),
                "coordinate_column": [format_rational(v) for v in col],
                "clebsch_gordan_row": [format_rational(v) for v in row],
            }
        )
    if len(doc.ks) == len(eig):
        data["decompositions"] = [
            {
                "basis_index": str(idx),
                "components": {
                    str(k): [format_rational(v) for v in vec]
                    for k, vec in sorted(decompose_via_projectors(m, n, p, idx).items(), reverse=True)
                },
            }
            for idx in range(len(doc.rows))
        ]
    return data


def projectors_to_json(doc: ProjectorDocument) -> str:
    return json.dumps(projectors_to_dict(doc), indent=1) + "\n"


def _vector(values) -> str:
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


def _vector_over_common(values) -> str:
    """(a, b, ...)/d with d the least common denominator, so 9/70, -5/70 stay aligned."""
    d = lcm(*(Fraction(v).denominator for v in values))
    if d == 1:
        return _vector(values)
    return _vector([int(v * d) for v in values]) + f"/{d}"


def projectors_to_pretty(doc: ProjectorDocument) -> str:
    m, n, p = doc.m, doc.n, doc.p
    eig = weight_eigenvalues(m, n, p)
    rows = doc.rows
    lines = [
        f"weight space p={p} of V({m}) x V({n}): weight {m + n - 2 * p}, "
        f"basis f^i phi_{m} x f^({p}-i) phi_{n} for i = {rows[0]}..{rows[-1]}",
        "",
        "ef matrix:",
        *format_matrix(tridiagonal_ef(m, n, p).entries),
        "",
        "eigenvalues: " + ", ".join(f"V({m + n - 2 * k}): {eig[k]}" for k in sorted(eig, reverse=True)),
    ]
    for k in doc.ks:
        mat = projector(m, n, p, k)
        d = mat.common_denominator()
        col, row = projector_factorization(m, n, p, k)
        lines += [
            "",
            f"P_V({m + n - 2 * k}) = {format_rational(Fraction(1, d))} *",
            *format_matrix(mat.integer_entries(d)),
            f"  = column {_vector(col)} times row {_vector_over_common(row)}",
        ]
    if len(doc.ks) == len(eig):
        for idx in range(len(rows)):
            unit = [int(r == idx) for r in range(len(rows))]
            lines += ["", f"decomposition of basis vector {_vector(unit)}:"]
            for k, vec in sorted(decompose_via_projectors(m, n, p, idx).items(), reverse=True):
                lines.append(f"  V({m + n - 2 * k}): {_vector(vec)}")
    return "\n".join(lines) + "\n"
