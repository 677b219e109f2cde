"""Rational Clebsch-Gordan coefficients and their orthogonality relations.

``cg(m, n, k, i, j)`` is the coefficient of f^(i+j-k) phi_{m,n,k} when the
tensor basis vector f^i phi_m (x) f^j phi_n is expanded over the summands
V(m+n-2k).  It is read off the coordinate table of the same summand,
rotated by a half turn and divided by (-1)^k D(m, n, k).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial, multinomial, multinomial_star
from .report import Report
from .weight_basis import (
    CoordinateMatrix,
    check_structural,
    coord,
    coordinate_matrix,
    weight_space_rows,
)


@functools.lru_cache(maxsize=4096)
def normalizer(m: int, n: int, k: int) -> int:
    """D(m, n, k), the pairing constant between extremal vectors of V(m+n-2k)."""
    check_structural(m, n, k)
    d = binomial(m + n - k + 1, k) * binomial(m + n - 2 * k, m - k)
    alt = Fraction(m + n - k + 1, m + n - 2 * k + 1) * multinomial(
        m + n - k, m - k, n - k, k
    )
    if alt != d:
        raise ArithmeticError(f"normalizer forms disagree at {(m, n, k)}: {d} != {alt}")
    return d


def cg(m: int, n: int, k: int, i: int, j: int) -> Fraction:
    check_structural(m, n, k)
    return Fraction((-1) ** k * coord(m, n, k, m - i, n - j), normalizer(m, n, k))


def cg_via_weyl(m: int, n: int, k: int, i: int, j: int) -> Fraction:
    """Same coefficient, from c(i, j) itself and a ratio of multinomials."""
    check_structural(m, n, k)
    c = coord(m, n, k, i, j)
    if c == 0:
        return Fraction(0)
    t = m + n - k
    return Fraction(
        multinomial_star(t, m - i, n - j) * c,
        multinomial_star(t, i, j) * normalizer(m, n, k),
    )


@dataclass(frozen=True)
class CGMatrix:
    """(m+1) x (m+n-2k+1) table; entry (i, i+j-k) holds C(m, n, k, i, j)."""

    m: int
    n: int
    k: int
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.m + 1, self.m + self.n - 2 * self.k + 1

    @property
    def divisor(self) -> int:
        """(-1)^k D(m, n, k); the table is the rotated integer table over this."""
        return (-1) ** self.k * normalizer(self.m, self.n, self.k)

    def __getitem__(self, pos: tuple[int, int]) -> Fraction:
        row, col = pos
        return self.entries[row][col]

    def at(self, i: int, j: int) -> Fraction:
        q = i + j - self.k
        rows, cols = self.shape
        if not (0 <= i < rows and 0 <= q < cols):
            return Fraction(0)
        return self.entries[i][q]

    def column(self, q: int) -> list[Fraction]:
        return [row[q] for row in self.entries]

    def weight_row(self, p: int) -> list[Fraction]:
        return [self.entries[i][p - self.k] for i in weight_space_rows(self.m, self.n, p)]

    def integer_entries(self) -> tuple[tuple[int, ...], ...]:
        """The integer table that, divided by :attr:`divisor`, gives the entries."""
        d = self.divisor
        return tuple(tuple(int(x * d) for x in row) for row in self.entries)


def rotate_half_turn(rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(reversed(r)) for r in reversed(rows))


def cg_matrix(m: int, n: int, k: int, coords: CoordinateMatrix | None = None) -> CGMatrix:
    if coords is None:
        coords = coordinate_matrix(m, n, k)
    divisor = (-1) ** k * normalizer(m, n, k)
    rotated = rotate_half_turn(coords.entries)
    return CGMatrix(
        m, n, k, tuple(tuple(Fraction(v, divisor) for v in row) for row in rotated)
    )


@dataclass(frozen=True)
class Decomposition:
    """Coefficients C(m, n, k, i, j) for k = 0..min(m, n), zeros included."""

    m: int
    n: int
    i: int
    j: int
    components: tuple[Fraction, ...]

    def summand_vectors(self) -> dict[int, list[Fraction]]:
        """Component of the basis vector in each V(m+n-2k), as weight-space coordinates."""
        p = self.i + self.j
        out = {}
        for k, coeff in enumerate(self.components):
            if k <= p <= self.m + self.n - k:
                col = coordinate_matrix(self.m, self.n, k).weight_vector(p)
                out[k] = [coeff * c for c in col]
        return out


def decompose(m: int, n: int, i: int, j: int) -> Decomposition:
    if m < 0 or n < 0 or not (0 <= i <= m and 0 <= j <= n):
        raise ValueError(f"basis vector ({i}, {j}) does not exist in V({m}) (x) V({n})")
    comps = tuple(cg(m, n, k, i, j) for k in range(min(m, n) + 1))
    return Decomposition(m, n, i, j, comps)


def verify_orthogonality(m: int, n: int) -> Report:
    """Exhaustively check both families of orthogonality relations for V(m) (x) V(n)."""
    report = Report()
    fam = "orthogonality"
    ks = range(min(m, n) + 1)
    cms = [coordinate_matrix(m, n, k) for k in ks]
    cgs = [cg_matrix(m, n, k, cms[k]) for k in ks]
    ds = [normalizer(m, n, k) for k in ks]

    dims = report.check(fam, "dimension_count")
    dims.record(sum(m + n - 2 * k + 1 for k in ks) == (m + 1) * (n + 1), (m, n))

    pairing = report.check(fam, "weight_dual_pairing")
    complete = report.check(fam, "summand_completeness")
    extremal = report.check(fam, "extremal_pairing")
    normalized = report.check(fam, "normalized_completeness")

    for p in range(m + n + 1):
        rows = list(weight_space_rows(m, n, p))
        present = [k for k in ks if k <= p <= m + n - k]
        for k in present:
            for k2 in present:
                total = sum((cms[k].at(i, p - i) * cgs[k2].at(i, p - i) for i in rows), Fraction(0))
                pairing.record(total == (k == k2), (m, n, p, k, k2))
                total = sum(cms[k].at(i, p - i) * cms[k2].at(m - i, n - p + i) for i in rows)
                want = (-1) ** k * ds[k] if k == k2 else 0
                extremal.record(total == want, (m, n, p, k, k2))
        for i in rows:
            j = p - i
            for i2 in rows:
                j2 = p - i2
                total = sum((cms[k].at(i, j) * cgs[k].at(i2, j2) for k in ks), Fraction(0))
                complete.record(total == (i == i2), (m, n, i, j, i2, j2))
                total = sum(
                    ((-1) ** k * cgs[k].at(m - i, n - j) * cgs[k].at(i2, j2) * ds[k] for k in ks),
                    Fraction(0),
                )
                normalized.record(total == (i == i2), (m, n, i, j, i2, j2))
    return report
