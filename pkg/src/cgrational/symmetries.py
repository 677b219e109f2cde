"""Regge symbols, their 72-element symmetry group, and the recurrence audit.

A window-valid index tuple (m, n, k, i, j) is encoded as the 3x3 grid

    n-k    m-k    k
    i      j      m+n-i-j-k
    m-i    n-j    i+j-k

whose rows and columns all sum to m+n-k.  Row permutations, column
permutations and transposition act on grids, and hence on index tuples.
Coefficient relations are known for four generators; factors for the other
group elements are obtained by composing along a generator word.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinatorics import binomial, multinomial, multinomial_star
from .report import Report
from .weight_basis import IndexTuple, check_window, coord, coord_unrestricted, window

Grid = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

GENERATORS = ("C12", "Transpose", "R13", "R23")
RELATION_GENERATORS = ("C12", "ModifiedTranspose", "R13", "R23")


@dataclass(frozen=True)
class ReggeSymbol:
    grid: Grid

    def __post_init__(self):
        g = self.grid
        if len(g) != 3 or any(len(r) != 3 for r in g):
            raise ValueError("Regge symbol must be 3x3")
        if any(v < 0 for r in g for v in r):
            raise ValueError(f"Regge symbol has a negative entry: {g}")
        sums = {sum(r) for r in g} | {sum(col) for col in zip(*g)}
        if len(sums) != 1:
            raise ValueError(f"Regge symbol rows and columns must share one sum: {g}")

    @classmethod
    def _trusted(cls, grid: Grid) -> ReggeSymbol:
        # grids built from a valid window tuple or permuted from a valid symbol
        obj = object.__new__(cls)
        object.__setattr__(obj, "grid", grid)
        return obj

    @property
    def line_sum(self) -> int:
        return sum(self.grid[0])

    def transposed(self) -> ReggeSymbol:
        return ReggeSymbol(tuple(zip(*self.grid)))


def regge_symbol(m: int, n: int, k: int, i: int, j: int) -> ReggeSymbol:
    check_window(m, n, k, i, j)
    return ReggeSymbol._trusted(
        (
            (n - k, m - k, k),
            (i, j, m + n - i - j - k),
            (m - i, n - j, i + j - k),
        )
    )


def symbol_to_indices(symbol: ReggeSymbol) -> IndexTuple:
    g = symbol.grid
    k = g[0][2]
    t = IndexTuple(g[0][1] + k, g[0][0] + k, k, g[1][0], g[1][1])
    # the grid is determined by its first row and two middle entries
    if regge_symbol(*t) != symbol:
        raise ValueError(f"grid {g} is not a Regge symbol")
    return t


@dataclass(frozen=True)
class ReggeElement:
    """Permute rows, permute columns, then optionally transpose.

    ``row_permutation[r]`` names the source row placed at position r, and
    likewise for columns.
    """

    row_permutation: tuple[int, int, int] = (0, 1, 2)
    column_permutation: tuple[int, int, int] = (0, 1, 2)
    transposed: bool = False

    def apply(self, symbol: ReggeSymbol) -> ReggeSymbol:
        g = symbol.grid
        rp, cp = self.row_permutation, self.column_permutation
        h = tuple(tuple(g[rp[r]][cp[c]] for c in range(3)) for r in range(3))
        if self.transposed:
            h = tuple(zip(*h))
        return ReggeSymbol._trusted(h)

    def __matmul__(self, other: ReggeElement) -> ReggeElement:
        """Composition: ``(a @ b).apply(s) == a.apply(b.apply(s))``."""
        return _element_by_image(self.apply(other.apply(_PROBE)))

    def inverse(self) -> ReggeElement:
        for e in all_elements():
            if (e @ self) == IDENTITY:
                return e
        raise AssertionError("group element without inverse")


# all rows and columns sum to 15 and all nine entries differ, so the action is faithful
_PROBE = ReggeSymbol(((2, 7, 6), (9, 5, 1), (4, 3, 8)))
IDENTITY = ReggeElement()

GENERATOR_ELEMENTS = {
    "C12": ReggeElement(column_permutation=(1, 0, 2)),
    "Transpose": ReggeElement(transposed=True),
    "R13": ReggeElement(row_permutation=(2, 1, 0)),
    "R23": ReggeElement(row_permutation=(0, 2, 1)),
    # Transpose, then swap rows 2,3 and columns 2,3
    "ModifiedTranspose": ReggeElement((0, 2, 1), (0, 2, 1), True),
}


@functools.cache
def all_elements() -> tuple[ReggeElement, ...]:
    perms = list(itertools.permutations(range(3)))
    return tuple(
        ReggeElement(rp, cp, t) for t in (False, True) for rp in perms for cp in perms
    )


@functools.cache
def _image_table() -> dict[Grid, ReggeElement]:
    return {e.apply(_PROBE).grid: e for e in all_elements()}


def _element_by_image(image: ReggeSymbol) -> ReggeElement:
    return _image_table()[image.grid]


def transform_indices(m: int, n: int, k: int, i: int, j: int, generator: str) -> IndexTuple:
    """Index map of a generator (C12, Transpose, R13, R23; also ModifiedTranspose)."""
    check_window(m, n, k, i, j)
    if generator == "C12":
        out = IndexTuple(n, m, k, j, i)
    elif generator == "Transpose":
        out = IndexTuple(m, m + n - i - k, m - i, m - k, j)
    elif generator == "R13":
        out = IndexTuple(n - k + i, m - k + j, i + j - k, i, j)
    elif generator == "R23":
        out = IndexTuple(m, n, k, m - i, n - j)
    elif generator == "ModifiedTranspose":
        out = IndexTuple(m, n - k + i, i, k, i + j - k)
    else:
        raise ValueError(f"unknown generator {generator!r}")
    return out


def related_coord(generator: str, m: int, n: int, k: int, i: int, j: int) -> tuple[IndexTuple, Fraction]:
    """Image tuple t' and factor f with c(t') = f * c(m, n, k, i, j)."""
    t = transform_indices(m, n, k, i, j, generator)
    s = m + n - k
    if generator == "C12":
        factor = Fraction((-1) ** k)
    elif generator == "ModifiedTranspose":
        factor = Fraction(binomial(m - k + j, m - i), binomial(m - k + j, m - k))
    elif generator == "R13":
        factor = Fraction(
            (-1) ** i * multinomial(s, m - i, n - j, i + j - k), multinomial(s, m - k, n - k, k)
        )
    elif generator == "R23":
        factor = Fraction(
            (-1) ** k * multinomial_star(s, m - i, n - j), multinomial_star(s, i, j)
        )
    else:
        raise ValueError(f"no coefficient relation for generator {generator!r}")
    return t, factor


def weyl_factor(m: int, n: int, k: int, i: int, j: int) -> Fraction:
    """R23 factor rebuilt from w(f^p phi_m) = (-1)^p p!/(m-p)! f^(m-p) phi_m on each piece."""
    check_window(m, n, k, i, j)
    q = i + j - k
    return Fraction(
        (-1) ** k * factorial(m + n - k - i - j) * factorial(i) * factorial(j),
        factorial(q) * factorial(m - i) * factorial(n - j),
    )


@functools.cache
def _words() -> dict[ReggeElement, tuple[str, ...]]:
    """Shortest word in the relation generators for each group element (BFS, fixed order)."""
    words = {IDENTITY: ()}
    queue = deque([IDENTITY])
    while queue:
        e = queue.popleft()
        for name in RELATION_GENERATORS:
            nxt = GENERATOR_ELEMENTS[name] @ e
            if nxt not in words:
                words[nxt] = words[e] + (name,)
                queue.append(nxt)
    return words


def element_word(element: ReggeElement) -> tuple[str, ...]:
    """Generators to apply, first to last, to realise ``element``."""
    return _words()[element]


def related_coord_element(element: ReggeElement, m: int, n: int, k: int, i: int, j: int) -> tuple[IndexTuple, Fraction]:
    """Composite relation c(element . t) = factor * c(t) along :func:`element_word`."""
    t = IndexTuple(m, n, k, i, j)
    check_window(*t)
    factor = Fraction(1)
    for name in element_word(element):
        t, f = related_coord(name, *t)
        factor *= f
    expected = symbol_to_indices(element.apply(regge_symbol(m, n, k, i, j)))
    if t != expected:
        raise AssertionError(f"word {element_word(element)} does not realise {element}")
    return t, factor


def regge_orbit(m: int, n: int, k: int, i: int, j: int) -> set[IndexTuple]:
    s = regge_symbol(m, n, k, i, j)
    return {symbol_to_indices(e.apply(s)) for e in all_elements()}


def verify_regge(m: int, n: int) -> Report:
    report = Report()
    fam = "regge"
    sums = report.check(fam, "symbol_line_sums")
    roundtrip = report.check(fam, "symbol_roundtrip")
    involution = report.check(fam, "involutions")
    table_rows = report.check(fam, "table_matches_symbol")
    relations = {g: report.check(fam, f"relation_{g}") for g in RELATION_GENERATORS}
    weyl = report.check(fam, "weyl_factor")
    orbit_sizes = report.check(fam, "orbit_size_divides_72")
    orbit_closure = report.check(fam, "orbit_closure")
    composite = report.check(fam, "composite_factors")
    seen: set[IndexTuple] = set()
    for k in range(min(m, n) + 1):
        for i, j in window(m, n, k):
            t = IndexTuple(m, n, k, i, j)
            sym = regge_symbol(*t)
            line = {sum(r) for r in sym.grid} | {sum(c) for c in zip(*sym.grid)}
            sums.record(line == {m + n - k}, t)
            roundtrip.record(symbol_to_indices(sym) == t, t)
            c = coord(*t)
            for g in GENERATORS + ("ModifiedTranspose",):
                image = transform_indices(*t, g)
                table_rows.record(symbol_to_indices(GENERATOR_ELEMENTS[g].apply(sym)) == image, (g, t))
                if g in GENERATORS:
                    involution.record(transform_indices(*image, g) == t, (g, t))
            for g in RELATION_GENERATORS:
                image, factor = related_coord(g, *t)
                relations[g].record(coord(*image) == factor * c, t)
            weyl.record(weyl_factor(*t) == related_coord("R23", *t)[1], t)
            if t in seen:
                continue
            orbit = regge_orbit(*t)
            seen |= orbit
            orbit_sizes.record(72 % len(orbit) == 0 and all(u.is_valid() for u in orbit), t)
            # closure under the generators is closure under the whole group
            closed = all(transform_indices(*u, g) in orbit for u in orbit for g in GENERATORS)
            orbit_closure.record(closed, t)
            for e in all_elements():
                image, factor = related_coord_element(e, *t)
                composite.record(coord(*image) == factor * c, (e, t))
    return report


def verify_orbit_factors(m: int, n: int, k: int, i: int, j: int) -> Report:
    """Check closure and the composed coefficient factor for all 72 elements."""
    report = Report()
    closure = report.check("regge", "orbit_closure_all_elements")
    factors = report.check("regge", "composite_factors")
    orbit = regge_orbit(m, n, k, i, j)
    c = coord(m, n, k, i, j)
    for e in all_elements():
        image, factor = related_coord_element(e, m, n, k, i, j)
        factors.record(coord(*image) == factor * c, (e, (m, n, k, i, j)))
        for u in orbit:
            closure.record(symbol_to_indices(e.apply(regge_symbol(*u))) in orbit, (e, u))
    return report


def verify_recurrences(m: int, n: int) -> Report:
    """Pascal, reverse and the four cross-summand recurrences for V(m) (x) V(n).

    Pascal's rule and the outer split/raise recurrences need a previous weight,
    so they are checked for i+j > k.  Terms of the cross-summand recurrences
    that fall outside their own window are read from the unrestricted sum.
    """
    report = Report()
    fam = "recurrences"
    pascal = report.check(fam, "pascal")
    reverse = report.check(fam, "reverse")
    drop_m = report.check(fam, "outer_lower_first")
    drop_n = report.check(fam, "outer_lower_second")
    split = report.check(fam, "outer_split")
    raise_ = report.check(fam, "outer_raise")

    def structural(a, b, c):
        return a >= 0 and b >= 0 and 0 <= c <= min(a, b)

    u = coord_unrestricted
    for k in range(min(m, n) + 1):
        for i, j in window(m, n, k):
            t = (m, n, k, i, j)
            c = coord(*t)
            q = i + j - k
            if q >= 1:
                pascal.record(c == coord(m, n, k, i, j - 1) + coord(m, n, k, i - 1, j), t)
            lhs = (q + 1) * (m + n - 2 * k - q) * c
            rhs = (i + 1) * (m - i) * coord(m, n, k, i + 1, j) + (j + 1) * (n - j) * coord(m, n, k, i, j + 1)
            reverse.record(lhs == rhs, t)
            if structural(m - 1, n, k) and structural(m - 1, n - 1, k - 1):
                drop_m.record(c == u(m - 1, n, k, i, j) + u(m - 1, n - 1, k - 1, i, j - 1), t)
            if structural(m, n - 1, k) and structural(m - 1, n - 1, k - 1):
                drop_n.record(c == u(m, n - 1, k, i, j) - u(m - 1, n - 1, k - 1, i - 1, j), t)
            if q >= 1 and structural(m - 1, n, k) and structural(m, n - 1, k):
                split.record(c == u(m - 1, n, k, i - 1, j) + u(m, n - 1, k, i, j - 1), t)
            if q >= 1 and structural(m + 1, n, k + 1) and structural(m, n + 1, k + 1):
                raise_.record(c == u(m + 1, n, k + 1, i, j) - u(m, n + 1, k + 1, i, j), t)
    return report
