"""Weight-space projectors built from the operator ef.

On the weight space spanned by B_p = {f^i phi_m (x) f^(p-i) phi_n}, ef acts
by a tridiagonal matrix whose eigenvalues are distinct, one per summand
V(m+n-2k) meeting that weight.  The spectral projector onto each eigenline
is a product of shifted, rescaled copies of that matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .clebsch_gordan import cg_matrix
from .report import Report
from .weight_basis import coordinate_matrix, weight_space_rows


@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[Fraction | int]]) -> RationalMatrix:
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, size: int) -> RationalMatrix:
        return cls.of([[int(r == c) for c in range(size)] for r in range(size)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls.of([[0] * cols for _ in range(rows)])

    @classmethod
    def outer(cls, column: Sequence[Fraction | int], row: Sequence[Fraction | int]) -> RationalMatrix:
        return cls.of([[Fraction(a) * b for b in row] for a in column])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, pos: tuple[int, int]) -> Fraction:
        r, c = pos
        return self.entries[r][c]

    def column(self, c: int) -> list[Fraction]:
        return [row[c] for row in self.entries]

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries))
        )

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return self + other.scale(-1)

    def scale(self, s: Fraction | int) -> RationalMatrix:
        return RationalMatrix(tuple(tuple(a * s for a in row) for row in self.entries))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        return RationalMatrix(
            tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols) for row in self.entries)
        )

    def _echelon(self) -> tuple[list[list[Fraction]], int, int]:
        """Row-reduce a copy; returns (rows, rank, sign of the row swaps)."""
        a = [list(row) for row in self.entries]
        rank, sign = 0, 1
        for c in range(self.cols):
            pivot = next((r for r in range(rank, self.rows) if a[r][c] != 0), None)
            if pivot is None:
                continue
            if pivot != rank:
                a[rank], a[pivot] = a[pivot], a[rank]
                sign = -sign
            for r in range(rank + 1, self.rows):
                if a[r][c]:
                    f = a[r][c] / a[rank][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
            rank += 1
        return a, rank, sign

    def rank(self) -> int:
        return self._echelon()[1]

    def determinant(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a, rank, sign = self._echelon()
        if rank < self.rows:
            return Fraction(0)
        det = Fraction(sign)
        for d in range(self.rows):
            det *= a[d][d]
        return det

    def common_denominator(self) -> int:
        return lcm(*(v.denominator for row in self.entries for v in row)) if self.entries else 1

    def integer_entries(self, scale: int) -> tuple[tuple[int, ...], ...]:
        out = tuple(tuple(v * scale for v in row) for row in self.entries)
        if any(v.denominator != 1 for row in out for v in row):
            raise ValueError(f"scale {scale} does not clear all denominators")
        return tuple(tuple(int(v) for v in row) for row in out)


def _check_weight(m: int, n: int, p: int) -> None:
    if m < 0 or n < 0 or not 0 <= p <= m + n:
        raise ValueError(f"weight index p={p} outside 0..{m + n} for V({m}) (x) V({n})")


def summands_in_weight(m: int, n: int, p: int) -> list[int]:
    """The k for which V(m+n-2k) has a vector in weight space p, ascending."""
    _check_weight(m, n, p)
    return [k for k in range(min(m, n) + 1) if k <= p <= m + n - k]


def tridiagonal_ef(m: int, n: int, p: int) -> RationalMatrix:
    """Matrix of ef on B_p; column r holds the image of the r-th basis vector."""
    _check_weight(m, n, p)
    rows = list(weight_space_rows(m, n, p))
    pos = {i: r for r, i in enumerate(rows)}
    grid = [[0] * len(rows) for _ in rows]
    for i in rows:
        j = p - i
        col = pos[i]
        grid[col][col] = (i + 1) * (m - i) + (j + 1) * (n - j)
        if i - 1 in pos:
            grid[pos[i - 1]][col] = i * (m - i + 1)
        if i + 1 in pos:
            grid[pos[i + 1]][col] = j * (n - j + 1)
    return RationalMatrix.of(grid)


def ef_eigenvalue(m: int, n: int, k: int, p: int) -> int:
    if m < 0 or n < 0 or not 0 <= k <= min(m, n) or not k <= p <= m + n - k:
        raise ValueError(f"V({m + n - 2 * k}) has no vector in weight space p={p}")
    return (m + n - p - k) * (p - k + 1)


def casimir_scalar(n: int) -> int:
    """Scalar by which 8 times the Casimir element acts on V(n)."""
    if n < 0:
        raise ValueError(f"negative highest weight {n}")
    return n * (n + 2)


def weight_eigenvalues(m: int, n: int, p: int) -> dict[int, int]:
    """Eigenvalue of ef on each summand present in weight space p, keyed by k."""
    eig = {k: ef_eigenvalue(m, n, k, p) for k in summands_in_weight(m, n, p)}
    if len(set(eig.values())) != len(eig):
        raise ArithmeticError(f"repeated ef eigenvalue in weight space {(m, n, p)}: {eig}")
    return eig


def projector(m: int, n: int, p: int, k: int) -> RationalMatrix:
    """Spectral projector of ef onto the V(m+n-2k) line in weight space p."""
    eig = weight_eigenvalues(m, n, p)
    if k not in eig:
        raise ValueError(f"V({m + n - 2 * k}) has no vector in weight space p={p}")
    mat = tridiagonal_ef(m, n, p)
    size = mat.rows
    ident = RationalMatrix.identity(size)
    out = ident
    for k2 in sorted(eig):
        if k2 == k:
            continue
        factor = (mat - ident.scale(eig[k2])).scale(Fraction(1, eig[k] - eig[k2]))
        out = out @ factor
    return out


def projector_factorization(m: int, n: int, p: int, k: int) -> tuple[list[int], list[Fraction]]:
    """Coordinate column and Clebsch-Gordan row whose outer product is the projector."""
    if k not in summands_in_weight(m, n, p):
        raise ValueError(f"V({m + n - 2 * k}) has no vector in weight space p={p}")
    coords = coordinate_matrix(m, n, k)
    return coords.weight_vector(p), cg_matrix(m, n, k, coords).weight_row(p)


def decompose_via_projectors(m: int, n: int, p: int, basis_index: int) -> dict[int, list[Fraction]]:
    """Component of the basis_index-th vector of B_p in each summand, keyed by k."""
    size = len(weight_space_rows(m, n, p))
    if not 0 <= basis_index < size:
        raise ValueError(f"basis index {basis_index} outside 0..{size - 1}")
    return {k: projector(m, n, p, k).column(basis_index) for k in summands_in_weight(m, n, p)}


def verify_projectors(m: int, n: int) -> Report:
    report = Report()
    fam = "projectors"
    idem = report.check(fam, "idempotent")
    resolve = report.check(fam, "sum_to_identity")
    annihilate = report.check(fam, "mutually_annihilating")
    eigen = report.check(fam, "eigen_relation")
    roots = report.check(fam, "characteristic_roots")
    casimir = report.check(fam, "casimir_consistency")
    rank1 = report.check(fam, "rank_one")
    factor = report.check(fam, "outer_product_factorization")
    for p in range(m + n + 1):
        mat = tridiagonal_ef(m, n, p)
        size = mat.rows
        ident = RationalMatrix.identity(size)
        eig = weight_eigenvalues(m, n, p)
        roots.record(
            len(eig) == size and all((mat - ident.scale(lam)).determinant() == 0 for lam in eig.values()),
            (m, n, p),
        )
        projs = {k: projector(m, n, p, k) for k in eig}
        total = RationalMatrix.zeros(size, size)
        for k, pk in projs.items():
            w = m + n - 2 * p
            casimir.record(4 * eig[k] + w * w - 2 * w == casimir_scalar(m + n - 2 * k), (m, n, p, k))
            idem.record(pk @ pk == pk, (m, n, p, k))
            scaled = pk.scale(eig[k])
            eigen.record(mat @ pk == scaled and pk @ mat == scaled, (m, n, p, k))
            rank1.record(pk.rank() == 1, (m, n, p, k))
            col, row = projector_factorization(m, n, p, k)
            factor.record(RationalMatrix.outer(col, row) == pk, (m, n, p, k))
            for k2, pk2 in projs.items():
                if k2 != k:
                    annihilate.record(pk @ pk2 == RationalMatrix.zeros(size, size), (m, n, p, k, k2))
            total = total + pk
        resolve.record(total == ident, (m, n, p))
    return report
