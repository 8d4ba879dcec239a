"""A_m and dual lattices, exact LDL data and short-vector enumeration."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import floor, isqrt

Matrix = tuple[tuple[Fraction, ...], ...]


@lru_cache(maxsize=None)
def a_gram(m: int) -> Matrix:
    """Gram matrix of A_m: 2 on the diagonal, -1 for neighbours."""
    if m < 1:
        raise ValueError("lattice rank must be positive")
    return tuple(
        tuple(Fraction(2 if i == j else (-1 if abs(i - j) == 1 else 0)) for j in range(m))
        for i in range(m)
    )


@lru_cache(maxsize=None)
def a_gram_inverse(m: int) -> Matrix:
    """Inverse Gram matrix of A_m: min(i,j)(m+1-max(i,j))/(m+1), 1-based."""
    return tuple(
        tuple(Fraction(min(i, j) * (m + 1 - max(i, j)), m + 1) for j in range(1, m + 1))
        for i in range(1, m + 1)
    )


def glue_vector(m: int) -> tuple[Fraction, ...]:
    """lambda = M^{-1} e_1 = (m, m-1, ..., 1)/(m+1)."""
    return tuple(Fraction(m - i, m + 1) for i in range(m))


def quadratic_form(gram, v) -> Fraction:
    return sum((gram[i][j] * v[i] * v[j] for i in range(len(v)) for j in range(len(v))), Fraction(0))


def is_positive_definite(gram) -> bool:
    try:
        ldl(tuple(tuple(Fraction(x) for x in row) for row in gram))
    except ValueError:
        return False
    return True


@lru_cache(maxsize=None)
def ldl(gram: Matrix):
    """Exact decomposition Q(x) = sum_i d_i (x_i + sum_{j>i} mu[i][j] x_j)^2.

    Raises ValueError unless the form is positive definite.
    """
    m = len(gram)
    a = [list(map(Fraction, row)) for row in gram]
    d = [Fraction(0)] * m
    mu = [[Fraction(0)] * m for _ in range(m)]
    # G = U^T D U with U unit upper triangular; square i involves x_i..x_{m-1}
    for i in range(m):
        s = a[i][i] - sum(d[k] * mu[k][i] ** 2 for k in range(i))
        if s <= 0:
            raise ValueError("Gram matrix is not positive definite")
        d[i] = s
        for j in range(i + 1, m):
            t = a[i][j] - sum(d[k] * mu[k][i] * mu[k][j] for k in range(i))
            mu[i][j] = t / s
    return tuple(d), tuple(tuple(r) for r in mu)


def enumerate_short_vectors(gram, bound, shift=None):
    """Yield (v, Q(v - shift)) for all integer v with Q(v - shift) <= bound.

    Q is the positive definite form of ``gram`` (rational entries allowed).
    Every vector is produced exactly once.
    """
    g = tuple(tuple(Fraction(x) for x in row) for row in gram)
    m = len(g)
    d, mu = ldl(g)
    s = tuple(Fraction(x) for x in shift) if shift is not None else (Fraction(0),) * m
    bound = Fraction(bound)
    v = [0] * m
    y = [Fraction(0)] * m  # y = v - shift

    def rec(i, rem):
        # square i is d_i (y_i + sum_{j>i} mu_ij y_j)^2; x_{m-1} is fixed first
        t = sum((mu[i][j] * y[j] for j in range(i + 1, m)), Fraction(0))
        # need d_i (y_i + t)^2 <= rem, y_i = v_i - s_i
        c = s[i] - t
        r2 = rem / d[i]
        lo = floor(c - _sqrt_upper(r2)) - 1
        hi = floor(c + _sqrt_upper(r2)) + 1
        for vi in range(lo, hi + 1):
            yi = vi - s[i]
            val = d[i] * (yi + t) ** 2
            if val > rem:
                continue
            v[i] = vi
            y[i] = yi
            if i == 0:
                yield tuple(v), bound - rem + val
            else:
                yield from rec(i - 1, rem - val)

    yield from rec(m - 1, bound)


def _sqrt_upper(x: Fraction) -> Fraction:
    """A rational >= sqrt(x) (for x >= 0), within 1 of it."""
    if x <= 0:
        return Fraction(0)
    n = x.numerator * x.denominator
    return Fraction(isqrt(n) + 1, x.denominator)
