"""Integer coordinates of weight vectors in V(m) (x) V(n).

``c(m, n, k, i, j)`` is the coordinate of the tensor basis vector
f^i phi_m (x) f^j phi_n in the weight vector f^(i+j-k) phi_{m,n,k} of the
summand V(m+n-2k).  Three independent routes are provided: the Pascal
recurrence table (:func:`coordinate_matrix`), two closed alternating sums
(:func:`coord`, :func:`coord_racah`) and a power-series extraction
(:func:`coord_generating_function`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .combinatorics import binomial


class IndexTuple(NamedTuple):
    m: int
    n: int
    k: int
    i: int
    j: int

    @property
    def p(self) -> int:
        return self.i + self.j

    def is_structural(self) -> bool:
        return self.m >= 0 and self.n >= 0 and 0 <= self.k <= min(self.m, self.n)

    def is_valid(self) -> bool:
        """Structural validity plus the window 0<=i<=m, 0<=j<=n, k<=i+j<=m+n-k."""
        m, n, k, i, j = self
        return (
            self.is_structural()
            and 0 <= i <= m
            and 0 <= j <= n
            and k <= i + j <= m + n - k
        )


def check_structural(m: int, n: int, k: int) -> None:
    if m < 0 or n < 0 or not 0 <= k <= min(m, n):
        raise ValueError(f"need m, n >= 0 and 0 <= k <= min(m, n), got m={m} n={n} k={k}")


def check_window(m: int, n: int, k: int, i: int, j: int) -> None:
    check_structural(m, n, k)
    if not IndexTuple(m, n, k, i, j).is_valid():
        raise ValueError(f"indices {(m, n, k, i, j)} lie outside the weight window")


def window(m: int, n: int, k: int):
    """Yield every window-valid (i, j) for the summand k, ordered by i then j."""
    for i in range(m + 1):
        for j in range(max(0, k - i), min(n, m + n - k - i) + 1):
            yield i, j


def weight_space_rows(m: int, n: int, p: int) -> range:
    """Admissible i for the weight space spanned by f^i phi_m (x) f^(p-i) phi_n."""
    return range(max(0, p - n), min(m, p) + 1)


def highest_weight_coords(m: int, n: int, k: int) -> list[int]:
    check_structural(m, n, k)
    return [(-1) ** l * binomial(m - l, k - l) * binomial(n - k + l, l) for l in range(k + 1)]


def lowest_weight_coords(m: int, n: int, k: int) -> list[int]:
    check_structural(m, n, k)
    scale = binomial(m + n - 2 * k, m - k)
    return [(-1) ** l * scale for l in range(k + 1)]


@dataclass(frozen=True)
class CoordinateMatrix:
    """(m+1) x (m+n-2k+1) table; entry (i, i+j-k) holds c(m, n, k, i, j)."""

    m: int
    n: int
    k: int
    entries: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.m + 1, self.m + self.n - 2 * self.k + 1

    def __getitem__(self, pos: tuple[int, int]) -> int:
        row, col = pos
        return self.entries[row][col]

    def at(self, i: int, j: int) -> int:
        """c(i, j), zero off the window."""
        q = i + j - self.k
        rows, cols = self.shape
        if not (0 <= i < rows and 0 <= q < cols and 0 <= j <= self.n):
            return 0
        return self.entries[i][q]

    def column(self, q: int) -> list[int]:
        return [row[q] for row in self.entries]

    def weight_vector(self, p: int) -> list[int]:
        """Coordinates of f^(p-k) phi_{m,n,k} in the weight basis for p."""
        return [self.entries[i][p - self.k] for i in weight_space_rows(self.m, self.n, p)]


def coordinate_matrix(m: int, n: int, k: int) -> CoordinateMatrix:
    """Build the coordinate table by Pascal's recurrence.

    The leftmost column is seeded with the highest weight coordinates and the
    top-row value is carried rightwards.  Each remaining entry is the sum of
    its left neighbour and the entry diagonally up-left (an upper-case L).
    The lower-left corner stays zero, and the positions mirroring it under a
    half-turn rotation are cleared at the end.
    """
    check_structural(m, n, k)
    rows, cols = m + 1, m + n - 2 * k + 1
    grid = [[0] * cols for _ in range(rows)]
    for row, value in enumerate(highest_weight_coords(m, n, k)):
        grid[row][0] = value
    for q in range(1, cols):
        grid[0][q] = grid[0][0]
    for q in range(1, cols):
        for i in range(1, rows):
            grid[i][q] = grid[i][q - 1] + grid[i - 1][q - 1]
    for i in range(rows):
        for q in range(cols):
            if i > q + k:
                grid[rows - 1 - i][cols - 1 - q] = 0
    return CoordinateMatrix(m, n, k, tuple(tuple(r) for r in grid))


def coord_unrestricted(m: int, n: int, k: int, i: int, j: int) -> int:
    """The alternating triple-binomial sum with no window cut-off.

    On the window this is c(m, n, k, i, j).  Off the window it keeps the
    value of the generating-function coefficient, which is what the
    cross-summand recurrences need.
    """
    return sum(
        (-1) ** l
        * binomial(i + j - k, i - l)
        * binomial(m - l, k - l)
        * binomial(n - k + l, l)
        for l in range(k + 1)
    )


def coord(m: int, n: int, k: int, i: int, j: int) -> int:
    """c(m, n, k, i, j) by the alternating sum; 0 off the window."""
    check_structural(m, n, k)
    if not IndexTuple(m, n, k, i, j).is_valid():
        return 0
    return coord_unrestricted(m, n, k, i, j)


def coord_racah(m: int, n: int, k: int, i: int, j: int) -> int:
    """c(m, n, k, i, j) by the alternative sum over C(m-i, k-l) C(n-j, l)."""
    check_structural(m, n, k)
    if not IndexTuple(m, n, k, i, j).is_valid():
        return 0
    return sum(
        (-1) ** l
        * binomial(i + j - k, i - l)
        * binomial(m - i, k - l)
        * binomial(n - j, l)
        for l in range(k + 1)
    )


# Truncated bivariate series: s[a][b] is the coefficient of x^a y^b.

def _series_denominator(m: int, n: int, k: int, xdeg: int, ydeg: int) -> list[list[int]]:
    """1 / ((1-x)^(m-k+1) (1+y)^(n-k+1)) up to x^xdeg y^ydeg."""
    s = [[0] * (ydeg + 1) for _ in range(xdeg + 1)]
    s[0][0] = 1
    for _ in range(m - k + 1):
        # divide by (1 - x): running sum along x
        for a in range(1, xdeg + 1):
            for b in range(ydeg + 1):
                s[a][b] += s[a - 1][b]
    for _ in range(n - k + 1):
        # divide by (1 + y): t_b = s_b - t_(b-1)
        for a in range(xdeg + 1):
            for b in range(1, ydeg + 1):
                s[a][b] -= s[a][b - 1]
    return s


def _times_x_plus_y(s: list[list[int]]) -> list[list[int]]:
    xdeg, ydeg = len(s) - 1, len(s[0]) - 1
    out = [[0] * (ydeg + 1) for _ in range(xdeg + 1)]
    for a in range(xdeg + 1):
        for b in range(ydeg + 1):
            v = 0
            if a:
                v += s[a - 1][b]
            if b:
                v += s[a][b - 1]
            out[a][b] = v
    return out


def coord_generating_function(m: int, n: int, k: int, i: int, j: int) -> int:
    """Coefficient of x^j y^i in (x+y)^(i+j-k) / ((1-x)^(m-k+1) (1+y)^(n-k+1))."""
    check_window(m, n, k, i, j)
    s = _series_denominator(m, n, k, j, i)
    for _ in range(i + j - k):
        s = _times_x_plus_y(s)
    return s[j][i]


def generating_function_matrix(m: int, n: int, k: int) -> CoordinateMatrix:
    """Every window coefficient by series extraction, laid out like the Pascal table.

    The denominator series is expanded once to degree n in x and m in y, then
    multiplied by (x+y) one weight at a time.
    """
    check_structural(m, n, k)
    rows, cols = m + 1, m + n - 2 * k + 1
    grid = [[0] * cols for _ in range(rows)]
    s = _series_denominator(m, n, k, n, m)
    for q in range(cols):
        if q:
            s = _times_x_plus_y(s)
        p = q + k
        for i in weight_space_rows(m, n, p):
            grid[i][q] = s[p - i][i]
    return CoordinateMatrix(m, n, k, tuple(tuple(r) for r in grid))
