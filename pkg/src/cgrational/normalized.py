"""Classical (unitary) Clebsch-Gordan coefficients as exact signed square roots.

Values are of the form s * sqrt(q) with s in {-1, 0, 1} and q a nonnegative
rational.  Three routes compute them: Wigner's alternating sum, Racah's
alternating sum, and rescaling the rational coefficient by norms of the
weight vectors involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt
from typing import Iterable

from .clebsch_gordan import cg, normalizer
from .combinatorics import binomial, factorial, multinomial, multinomial_star
from .report import Report
from .weight_basis import IndexTuple, check_structural, check_window, coord, window


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class SignedSqrtRational:
    """The real number ``sign * sqrt(radicand)``."""

    sign: int
    radicand: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.sign not in (-1, 0, 1) or self.radicand < 0:
            raise ValueError(f"bad signed square root ({self.sign}, {self.radicand})")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign must be 0 exactly when the radicand is 0")

    @classmethod
    def from_rational(cls, q: Fraction | int) -> SignedSqrtRational:
        q = Fraction(q)
        return cls((q > 0) - (q < 0), q * q)

    @classmethod
    def from_parts(cls, sign_source: Fraction | int, radicand: Fraction) -> SignedSqrtRational:
        """sign(sign_source) * sqrt(radicand), collapsing to zero as needed."""
        s = (sign_source > 0) - (sign_source < 0)
        return cls(s, Fraction(radicand) if s else Fraction(0))

    def __neg__(self) -> SignedSqrtRational:
        return SignedSqrtRational(-self.sign, self.radicand)

    def __mul__(self, other: SignedSqrtRational) -> SignedSqrtRational:
        if not isinstance(other, SignedSqrtRational):
            other = SignedSqrtRational.from_rational(other)
        return SignedSqrtRational(self.sign * other.sign, self.radicand * other.radicand)

    __rmul__ = __mul__

    def squared(self) -> Fraction:
        return self.radicand

    def is_rational(self) -> bool:
        return rational_sqrt(self.radicand) is not None

    def to_rational(self) -> Fraction:
        root = rational_sqrt(self.radicand)
        if root is None:
            raise ArithmeticError(f"{self} is irrational")
        return self.sign * root

    def __float__(self) -> float:
        return self.sign * float(self.radicand) ** 0.5

    def to_decimal(self, digits: int) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 5
            value = (Decimal(self.radicand.numerator) / Decimal(self.radicand.denominator)).sqrt()
            value = self.sign * value
        return round(value, digits)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        return f"{'+' if self.sign > 0 else '-'}sqrt({format_rational(self.radicand)})"

    @classmethod
    def parse(cls, text: str) -> SignedSqrtRational:
        text = text.strip()
        if text == "0":
            return cls(0, Fraction(0))
        if text[0] not in "+-" or not text[1:].startswith("sqrt(") or not text.endswith(")"):
            raise ValueError(f"not a signed square root: {text!r}")
        return cls(1 if text[0] == "+" else -1, Fraction(text[6:-1]))


def exact_sum(terms: Iterable[SignedSqrtRational]) -> SignedSqrtRational:
    """Sum of signed square roots, when the result is itself one.

    Terms are grouped by the class of their radicand modulo rational squares;
    square roots from distinct classes are linearly independent over the
    rationals, so the sum is exact once each group collapses to a rational
    multiple of one representative root.  A sum with two or more surviving
    groups is not of the form s*sqrt(q) and raises ArithmeticError.
    """
    groups: list[tuple[Fraction, Fraction]] = []  # (representative radicand, coefficient)
    for t in terms:
        if t.sign == 0:
            continue
        for idx, (rep, coeff) in enumerate(groups):
            ratio = rational_sqrt(t.radicand / rep)
            if ratio is not None:
                groups[idx] = (rep, coeff + t.sign * ratio)
                break
        else:
            groups.append((t.radicand, Fraction(t.sign)))
    live = [(rep, coeff) for rep, coeff in groups if coeff != 0]
    if not live:
        return SignedSqrtRational(0, Fraction(0))
    if len(live) > 1:
        raise ArithmeticError("sum of square roots from independent classes")
    rep, coeff = live[0]
    return SignedSqrtRational.from_parts(coeff, rep * coeff * coeff)


def basis_norm_sq(m: int, i: int) -> Fraction:
    """Squared Hermitian norm i!/(m-i)! of f^i phi_m."""
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got i={i} m={m}")
    return Fraction(factorial(i), factorial(m - i))


def summand_norm_sq(m: int, n: int, k: int, i: int, j: int) -> Fraction:
    """Squared norm of f^(i+j-k) phi_{m,n,k}."""
    check_window(m, n, k, i, j)
    return Fraction(factorial(i + j - k) * normalizer(m, n, k), factorial(m + n - i - j - k))


@dataclass(frozen=True)
class NormData:
    basis_norm_sq: Fraction
    summand_norm_sq: Fraction


def norm_data(m: int, n: int, k: int, i: int, j: int) -> NormData:
    return NormData(
        basis_norm_sq(m, i) * basis_norm_sq(n, j), summand_norm_sq(m, n, k, i, j)
    )


_ZERO = SignedSqrtRational(0, Fraction(0))


def wigner(m: int, n: int, k: int, i: int, j: int) -> SignedSqrtRational:
    check_structural(m, n, k)
    if not IndexTuple(m, n, k, i, j).is_valid():
        return _ZERO
    t = m + n - k
    s = sum(
        (-1) ** l * binomial(i + j - k, i - l) * binomial(m - l, k - l) * binomial(n - k + l, l)
        for l in range(k + 1)
    )
    r = Fraction(
        (m + n - 2 * k + 1) * multinomial_star(t, m - i, n - j),
        (t + 1) * multinomial(t, m - k, n - k, k) * multinomial_star(t, i, j),
    )
    return SignedSqrtRational.from_parts(s, r * s * s)


def racah_normalized(m: int, n: int, k: int, i: int, j: int) -> SignedSqrtRational:
    check_structural(m, n, k)
    if not IndexTuple(m, n, k, i, j).is_valid():
        return _ZERO
    t = m + n - k
    s = sum(
        (-1) ** l * binomial(k, l) * binomial(m - k, i - l) * binomial(n - k, j - k + l)
        for l in range(k + 1)
    )
    r = Fraction(
        (m + n - 2 * k + 1) * multinomial(t, m - k, n - k, k),
        (t + 1) * multinomial_star(t, m - i, n - j) * multinomial_star(t, i, j),
    )
    return SignedSqrtRational.from_parts(s, r * s * s)


def wigner_via_rational(m: int, n: int, k: int, i: int, j: int) -> SignedSqrtRational:
    """Rescale the rational coefficient by ||summand vector|| / (||u_i|| ||v_j||)."""
    check_structural(m, n, k)
    if not IndexTuple(m, n, k, i, j).is_valid():
        return _ZERO
    c = cg(m, n, k, i, j)
    norms = norm_data(m, n, k, i, j)
    return SignedSqrtRational.from_parts(c, norms.summand_norm_sq / norms.basis_norm_sq * c * c)


def verify_normalized(m: int, n: int, unitarity: bool = True) -> Report:
    report = Report()
    fam = "normalized"
    by_norms = report.check(fam, "wigner_equals_norm_rescaling")
    by_racah = report.check(fam, "wigner_equals_racah")
    signs = report.check(fam, "sign_matches_rational")
    table: dict[tuple[int, int, int], SignedSqrtRational] = {}
    for k in range(min(m, n) + 1):
        for i, j in window(m, n, k):
            w = wigner(m, n, k, i, j)
            table[k, i, j] = w
            by_norms.record(w == wigner_via_rational(m, n, k, i, j), (m, n, k, i, j))
            by_racah.record(w == racah_normalized(m, n, k, i, j), (m, n, k, i, j))
            c = coord(m, n, k, m - i, n - j) * (-1) ** k
            signs.record(w.sign == (c > 0) - (c < 0), (m, n, k, i, j))
    if unitarity:
        ortho = report.check(fam, "orthonormality")
        for p in range(m + n + 1):
            present = [k for k in range(min(m, n) + 1) if k <= p <= m + n - k]
            pairs = [(i, p - i) for i in range(max(0, p - n), min(m, p) + 1)]
            for k in present:
                for k2 in present:
                    total = exact_sum(
                        table.get((k, i, j), _ZERO) * table.get((k2, i, j), _ZERO)
                        for i, j in pairs
                    )
                    ok = total.is_rational() and total.to_rational() == (k == k2)
                    ortho.record(ok, (m, n, p, k, k2))
    return report
