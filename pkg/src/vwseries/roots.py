"""Exact square roots of the leading coefficients met in branch choices.

Only a small family of radicands is supported: a cyclotomic number c is
written as t * rho * w^2 with t a squarefree integer dividing 30 (either
sign), rho in {1, 5 + 2 sqrt5, 5 - 2 sqrt5} and w in Q, Q(sqrt2),
Q(sqrt3) or Q(sqrt5).  That covers every discriminant and square-root
argument of the closed forms.  The returned root is the principal one
(positive real part, or positive imaginary part on the imaginary axis)
under zeta_N -> exp(2 pi i / N).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .cyclotomic import CyclotomicScalar, as_scalar, epsilon, imag_unit, lcm, sqrt2, sqrt3, sqrt5


def rational_sqrt(x) -> Fraction | None:
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    a, b = isqrt(p), isqrt(q)
    if a * a == p and b * b == q:
        return Fraction(a, b)
    return None


@lru_cache(maxsize=None)
def _int_root(t: int) -> CyclotomicScalar:
    """sqrt(t) for squarefree t | 30, t may be negative."""
    out = CyclotomicScalar.rational(1)
    n = abs(t)
    for p, root in ((2, sqrt2), (3, sqrt3), (5, sqrt5)):
        if n % p == 0:
            out = out * root()
    if t < 0:
        out = out * imag_unit()
    return out


@lru_cache(maxsize=None)
def _rho_roots():
    """(rho, sqrt(rho)) for the golden-field radicands 5 +- 2 sqrt5."""
    e = epsilon(5)
    i = imag_unit()
    s5 = sqrt5()
    d1 = e - epsilon(5, -1)
    d2 = epsilon(5, 2) - epsilon(5, -2)
    plus = (5 + 2 * s5, -(i * d1 * (1 + s5)) * Fraction(1, 2))
    minus = (5 - 2 * s5, (i * d2 * (1 - s5)) * Fraction(1, 2))
    return [(CyclotomicScalar.rational(1), CyclotomicScalar.rational(1)), plus, minus]


@lru_cache(maxsize=None)
def _negating_power(n: int, d: int) -> int:
    """Some k with zeta_n -> zeta_n^k sending sqrt(d) to -sqrt(d)."""
    root = _int_root(d).embed(n)
    for k in range(2, n):
        if gcd(k, n) == 1 and root.galois_apply(k) == -root:
            return k
    raise ValueError(f"no automorphism negates sqrt({d}) in conductor {n}")


def _split_quadratic(c: CyclotomicScalar, d: int):
    """(x, y) rational with c = x + y sqrt(d), or None."""
    root = _int_root(d)
    n = lcm(c.conductor, root.conductor)
    ce, re_ = c.embed(n), root.embed(n)
    k = _negating_power(n, d)
    cs = ce.galois_apply(k)
    x = (ce + cs) * Fraction(1, 2)
    y = (ce - cs) * re_.inverse() * Fraction(1, 2)
    if not (x.is_rational() and y.is_rational()):
        return None
    x, y = x.to_rational(), y.to_rational()
    if not (CyclotomicScalar.rational(x) + re_ * y == ce):
        return None
    return x, y


def _sqrt_in_quadratic(c: CyclotomicScalar, d: int):
    """A root of c inside Q(sqrt d), or None."""
    if c.is_rational():
        r = rational_sqrt(c.to_rational())
        if r is not None:
            return CyclotomicScalar.rational(r)
        r = rational_sqrt(c.to_rational() / d)
        if r is not None:
            return _int_root(d) * r
        return None
    xy = _split_quadratic(c, d)
    if xy is None:
        return None
    x, y = xy
    s = rational_sqrt(x * x - d * y * y)
    if s is None:
        return None
    for p2 in ((x + s) / 2, (x - s) / 2):
        p = rational_sqrt(p2)
        if p is None or p == 0:
            continue
        q = y / (2 * p)
        return CyclotomicScalar.rational(p) + _int_root(d) * q
    return None


def principal(root: CyclotomicScalar) -> CyclotomicScalar:
    z = complex(root)
    scale = max(abs(z), 1e-300)
    if z.real > 1e-9 * scale or (abs(z.real) <= 1e-9 * scale and z.imag > 0):
        return root
    return -root


_TWISTS = [t * s for t in (1, 2, 3, 5, 6, 10, 15, 30) for s in (1, -1)]


def field_sqrt(c) -> CyclotomicScalar:
    """Principal square root of c; ArithmeticError outside the supported family."""
    c = as_scalar(c)
    if c.is_zero():
        return c
    for rho, rho_root in _rho_roots():
        base = c * rho.inverse()
        for t in _TWISTS:
            w2 = base * Fraction(1, t)
            for d in (5, 2, 3):
                w = _sqrt_in_quadratic(w2, d)
                if w is not None:
                    root = w * _int_root(t) * rho_root
                    if root * root == c:
                        return principal(root)
    raise ArithmeticError(f"no square root of {c} in the supported radicand family")
