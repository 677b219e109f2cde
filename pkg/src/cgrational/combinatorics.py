"""Exact binomial and multinomial coefficients.

Every function here follows the zero convention used throughout the package:
a binomial or multinomial symbol with a negative entry is 0, so summations can
run over a full index range and let out-of-range terms vanish silently.
"""

from __future__ import annotations

import math
import threading

FACTORIAL_CACHE_CAP = 256

_factorials: list[int] = [1]
_factorial_lock = threading.Lock()


def factorial(n: int) -> int:
    """n! for n >= 0, memoized up to ``FACTORIAL_CACHE_CAP``."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n > FACTORIAL_CACHE_CAP:
        return math.factorial(n)
    if n >= len(_factorials):
        with _factorial_lock:
            # another thread may have extended the table while we waited
            while len(_factorials) <= n:
                _factorials.append(_factorials[-1] * len(_factorials))
    return _factorials[n]


def binomial(a: int, b: int) -> int:
    """a choose b, or 0 when a < 0, b < 0 or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def multinomial(total: int, a: int, b: int, c: int) -> int:
    """total! / (a! b! c!), or 0 if any lower entry is negative.

    With all entries nonnegative the lower entries must add up to ``total``;
    anything else is a malformed call rather than a vanishing term.
    """
    if a < 0 or b < 0 or c < 0:
        return 0
    if a + b + c != total:
        raise ValueError(f"multinomial entries {a}+{b}+{c} do not sum to {total}")
    return factorial(total) // (factorial(a) * factorial(b) * factorial(c))


def multinomial_star(total: int, a: int, b: int) -> int:
    """Multinomial with the third lower entry filled in as total - a - b."""
    return multinomial(total, a, b, total - a - b)


def chu_vandermonde_lhs(r: int, s: int, k: int) -> int:
    """Alternating sum  sum_l (-1)^l C(k, l) C(r+s-k+l, s-k+l)  for l = 0..k."""
    if r < 0 or s < 0 or not 0 <= k <= min(r, s):
        raise ValueError(f"need r, s >= 0 and 0 <= k <= min(r, s), got {(r, s, k)}")
    return sum(
        (-1) ** l * binomial(k, l) * binomial(r + s - k + l, s - k + l)
        for l in range(k + 1)
    )


def chu_vandermonde_rhs(r: int, s: int, k: int) -> int:
    """Closed form (-1)^k C(r+s-k, s) of :func:`chu_vandermonde_lhs`."""
    if r < 0 or s < 0 or not 0 <= k <= min(r, s):
        raise ValueError(f"need r, s >= 0 and 0 <= k <= min(r, s), got {(r, s, k)}")
    return (-1) ** k * binomial(r + s - k, s)


def binomial_series_convolution(m: int, n: int, k: int) -> int:
    """sum_{r+s=k} C(m-r, m-k) C(n-s, n-k); equals C(m+n-k+1, k)."""
    return sum(binomial(m - r, m - k) * binomial(n - (k - r), n - k) for r in range(k + 1))


def summand_dimensions(m: int, n: int) -> list[int]:
    """Dimensions m+n-2k+1 of the irreducible summands of V(m) (x) V(n)."""
    return [m + n - 2 * k + 1 for k in range(min(m, n) + 1)]
