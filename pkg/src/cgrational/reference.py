"""Published worked example for V(3) (x) V(4), used by the verify suites.

Integer tables are stored as printed: coordinate tables, then the
Clebsch-Gordan tables as (prefactor, integer table).
"""

from __future__ import annotations

from fractions import Fraction

from .clebsch_gordan import cg_matrix
from .projectors import decompose_via_projectors, projector, projector_factorization, tridiagonal_ef, weight_eigenvalues
from .report import Report
from .weight_basis import coordinate_matrix

COORDINATES_3_4 = {
    0: [[1, 1, 1, 1, 1, 0, 0, 0],
        [0, 1, 2, 3, 4, 5, 0, 0],
        [0, 0, 1, 3, 6, 10, 15, 0],
        [0, 0, 0, 1, 4, 10, 20, 35]],
    1: [[3, 3, 3, 3, 0, 0],
        [-4, -1, 2, 5, 8, 0],
        [0, -4, -5, -3, 2, 10],
        [0, 0, -4, -9, -12, -10]],
    2: [[3, 3, 3, 0],
        [-6, -3, 0, 3],
        [6, 0, -3, -3],
        [0, 6, 6, 3]],
    3: [[1, 1],
        [-2, -1],
        [3, 1],
        [-4, -1]],
}

CLEBSCH_GORDAN_3_4 = {
    0: (Fraction(1, 35), [[35, 20, 10, 4, 1, 0, 0, 0],
                          [0, 15, 10, 6, 3, 1, 0, 0],
                          [0, 0, 5, 4, 3, 2, 1, 0],
                          [0, 0, 0, 1, 1, 1, 1, 1]]),
    1: (Fraction(-1, 70), [[-10, -12, -9, -4, 0, 0],
                           [10, 2, -3, -5, -4, 0],
                           [0, 8, 5, 2, -1, -4],
                           [0, 0, 3, 3, 3, 3]]),
    2: (Fraction(1, 45), [[3, 6, 6, 0],
                          [-3, -3, 0, 6],
                          [3, 0, -3, -6],
                          [0, 3, 3, 3]]),
    3: (Fraction(-1, 10), [[-1, -4],
                           [1, 3],
                           [-1, -2],
                           [1, 1]]),
}

EF_MATRIX_3_4_3 = [[7, 3, 0, 0], [6, 10, 4, 0], [0, 6, 9, 3], [0, 0, 4, 4]]

EIGENVALUES_3_4_3 = {3: 1, 2: 4, 1: 9, 0: 16}

PROJECTORS_3_4_3 = {
    3: (Fraction(1, 10), [[1, -1, 1, -1], [-2, 2, -2, 2], [3, -3, 3, -3], [-4, 4, -4, 4]]),
    2: (Fraction(1, 5), [[2, -1, 0, 1], [-2, 1, 0, -1], [0, 0, 0, 0], [4, -2, 0, 2]]),
    1: (Fraction(1, 70), [[27, 9, -15, -9], [18, 6, -10, -6], [-45, -15, 25, 15], [-36, -12, 20, 12]]),
    0: (Fraction(1, 35), [[4, 6, 4, 1], [12, 18, 12, 3], [12, 18, 12, 3], [4, 6, 4, 1]]),
}

# components of the third basis vector (0, 0, 1, 0) of the weight-1 space
DECOMPOSITION_3_4_3_2 = {
    3: [Fraction(1, 10), Fraction(-1, 5), Fraction(3, 10), Fraction(-2, 5)],
    2: [Fraction(0)] * 4,
    1: [Fraction(-3, 14), Fraction(-1, 7), Fraction(5, 14), Fraction(2, 7)],
    0: [Fraction(4, 35), Fraction(12, 35), Fraction(12, 35), Fraction(4, 35)],
}

FACTORIZATION_3_4_3_1 = (
    [3, 2, -5, -4],
    [Fraction(9, 70), Fraction(3, 70), Fraction(-5, 70), Fraction(-3, 70)],
)


def _scaled(prefactor: Fraction, rows: list[list[int]]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(prefactor * v for v in row) for row in rows)


def verify_worked_example() -> Report:
    """Compare the V(3) (x) V(4) tables and weight-1 projectors with the printed values."""
    report = Report()
    fam = "worked_example"
    tables = report.check(fam, "tables_3_4")
    for k, rows in COORDINATES_3_4.items():
        coords = coordinate_matrix(3, 4, k)
        tables.record(coords.entries == tuple(map(tuple, rows)), ("coordinates", k))
        prefactor, ints = CLEBSCH_GORDAN_3_4[k]
        tables.record(cg_matrix(3, 4, k).entries == _scaled(prefactor, ints), ("clebsch_gordan", k))

    proj = report.check(fam, "projectors_3_4_3")
    proj.record(tridiagonal_ef(3, 4, 3).entries == _scaled(Fraction(1), EF_MATRIX_3_4_3), "ef")
    proj.record(weight_eigenvalues(3, 4, 3) == EIGENVALUES_3_4_3, "eigenvalues")
    for k, (prefactor, ints) in PROJECTORS_3_4_3.items():
        proj.record(projector(3, 4, 3, k).entries == _scaled(prefactor, ints), ("projector", k))
    proj.record(decompose_via_projectors(3, 4, 3, 2) == DECOMPOSITION_3_4_3_2, "decomposition")
    col, row = projector_factorization(3, 4, 3, 1)
    proj.record((col, row) == FACTORIZATION_3_4_3_1, "factorization")
    return report
