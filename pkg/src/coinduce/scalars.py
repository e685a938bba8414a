"""Exact rational arithmetic: Bernoulli numbers and the path-weight table c(k, n).

All coefficients in this package are `fractions.Fraction` values; nothing is
ever evaluated in floating point.  Bernoulli numbers are generated from the
binomial recurrence

    sum_{j=0}^{n} C(n+1, j) * b_j = 0        (n >= 1),  b_0 = 1,

which fixes the "first" convention b_1 = -1/2.  The engines that consume
these numbers record the convention in :mod:`coinduce.conventions`; the
companion value b_1 = +1/2 is exposed for the calibration search.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

try:  # fast exact rationals for the hot loops; Fraction is the API type
    from gmpy2 import mpq as fastq
except ImportError:  # pragma: no cover
    fastq = Fraction

__all__ = ["bernoulli", "bernoulli_plus", "c_coeff", "factorial", "fastq", "as_fraction"]


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(int(v.numerator), int(v.denominator))

_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number under the b_1 = -1/2 convention, memoized."""
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    while len(_bernoulli_cache) <= n:
        m = len(_bernoulli_cache)
        # recurrence closure: b_m = -1/(m+1) * sum_{j<m} C(m+1, j) b_j
        s = sum(comb(m + 1, j) * _bernoulli_cache[j] for j in range(m))
        _bernoulli_cache.append(Fraction(-s, m + 1))
    return _bernoulli_cache[n]


def bernoulli_plus(n: int) -> Fraction:
    """n-th Bernoulli number under the opposite b_1 = +1/2 convention."""
    b = bernoulli(n)
    return -b if n == 1 else b


_c_cache: dict[tuple[int, int, bool], Fraction] = {}


def c_coeff(k: int, n: int, plus_convention: bool = False) -> Fraction:
    """Path weight c(k, n) = sum_{k <= i <= n} b_{n-i} / (i! (n-i)!).

    `plus_convention` selects b_1 = +1/2; the shipped engines use the default
    b_1 = -1/2, pinned by the engine-equivalence calibration.
    """
    if not 0 <= k <= n:
        raise ValueError(f"c(k, n) requires 0 <= k <= n, got k={k}, n={n}")
    key = (k, n, plus_convention)
    got = _c_cache.get(key)
    if got is None:
        b = bernoulli_plus if plus_convention else bernoulli
        got = sum(
            (Fraction(b(n - i), factorial(i) * factorial(n - i)) for i in range(k, n + 1)),
            Fraction(0),
        )
        _c_cache[key] = got
    return got
