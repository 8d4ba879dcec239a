"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored by its coordinates in the power basis
1, z, ..., z^(phi(N)-1), where z = exp(2 pi i / N), reduced modulo the
N-th cyclotomic polynomial.  Elements with different conductors are
combined in the field of the lcm conductor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from flint import fmpq, fmpq_poly, fmpz_poly


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def to_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, int):
        return fmpq(x)
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, str):
        f = Fraction(x)
        return fmpq(f.numerator, f.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, fmpq):
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> fmpq_poly:
    return fmpq_poly(fmpz_poly.cyclotomic(n))


@lru_cache(maxsize=None)
def power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of z^j for j = 0..n-1 (integers, since Phi_n is monic)."""
    phi = euler_phi(n)
    mod = cyclotomic_poly(n)
    rows = []
    for j in range(n):
        c = (fmpq_poly([0] * j + [1]) % mod).coeffs()
        c = [int(v) for v in c] + [0] * (phi - len(c))
        rows.append(tuple(c))
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_row(n: int) -> tuple[Fraction, ...]:
    # normalized trace Tr(z^j)/phi(n); it is compatible with field embeddings
    phi = euler_phi(n)
    row = []
    for j in range(phi):
        d = n // gcd(j, n)
        mu = _moebius(d)
        row.append(Fraction(mu, euler_phi(d)))
    return tuple(row)


def _moebius(n: int) -> int:
    res, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    if n > 1:
        res = -res
    return res


class CyclotomicScalar:
    """Element of Q(zeta_N) in the reduced power basis."""

    __slots__ = ("conductor", "_p")

    def __init__(self, conductor: int, coords=(), *, _poly: fmpq_poly | None = None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        if _poly is None:
            _poly = fmpq_poly([to_fmpq(c) for c in coords])
        if _poly.degree() >= euler_phi(conductor):
            _poly = _poly % cyclotomic_poly(conductor)
        self._p = _poly

    # construction helpers
    @classmethod
    def rational(cls, x, conductor: int = 1) -> "CyclotomicScalar":
        return cls(conductor, [x])

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CyclotomicScalar":
        """exp(2 pi i k / n)."""
        return cls(n, power_table(n)[k % n])

    @classmethod
    def root_of_unity(cls, frac) -> "CyclotomicScalar":
        """exp(2 pi i frac) for a rational frac."""
        f = to_fraction(frac)
        return cls.zeta(f.denominator, f.numerator)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        c = [to_fraction(v) for v in self._p.coeffs()]
        return tuple(c + [Fraction(0)] * (euler_phi(self.conductor) - len(c)))

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_rational(self) -> bool:
        return self._p.degree() <= 0

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return to_fraction(self._p[0])

    def embed(self, m: int) -> "CyclotomicScalar":
        """The same number viewed in Q(zeta_m); requires conductor | m."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ValueError(f"cannot embed Q(zeta_{n}) into Q(zeta_{m})")
        if self.is_rational():
            return CyclotomicScalar(m, _poly=self._p)
        s = m // n
        tab = power_table(m)
        acc = [fmpq(0)] * euler_phi(m)
        for j, c in enumerate(self._p.coeffs()):
            if c:
                for i, t in enumerate(tab[(j * s) % m]):
                    if t:
                        acc[i] += c * t
        return CyclotomicScalar(m, _poly=fmpq_poly(acc))

    def _common(self, other) -> tuple["CyclotomicScalar", "CyclotomicScalar"]:
        if not isinstance(other, CyclotomicScalar):
            other = CyclotomicScalar(1, [other])
        if self.conductor == other.conductor:
            return self, other
        if other.is_rational():
            return self, CyclotomicScalar(self.conductor, _poly=other._p)
        if self.is_rational():
            return CyclotomicScalar(other.conductor, _poly=self._p), other
        m = lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        a, b = self._common(other)
        return CyclotomicScalar(a.conductor, _poly=a._p + b._p)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.conductor, _poly=-self._p)

    def __sub__(self, other):
        a, b = self._common(other)
        return CyclotomicScalar(a.conductor, _poly=a._p - b._p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        return CyclotomicScalar(a.conductor, _poly=a._p * b._p)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicScalar(self.conductor, _poly=fmpq_poly([1 / self._p[0]]))
        g, s, _ = self._p.xgcd(cyclotomic_poly(self.conductor))
        return CyclotomicScalar(self.conductor, _poly=s / g[0])

    def __truediv__(self, other):
        a, b = self._common(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicScalar(self.conductor, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, (CyclotomicScalar, int, Fraction, fmpq)):
            return NotImplemented
        a, b = self._common(other)
        return a._p == b._p

    def __hash__(self):
        return hash(self.normalized_trace())

    def normalized_trace(self) -> Fraction:
        row = _trace_row(self.conductor)
        return sum((to_fraction(c) * row[j] for j, c in enumerate(self._p.coeffs())), Fraction(0))

    def galois_apply(self, k: int) -> "CyclotomicScalar":
        """Image under zeta_N -> zeta_N^k."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"k={k} is not coprime to the conductor {n}")
        if self.is_rational():
            return self
        tab = power_table(n)
        acc = [fmpq(0)] * euler_phi(n)
        for j, c in enumerate(self._p.coeffs()):
            if c:
                for i, t in enumerate(tab[(j * k) % n]):
                    if t:
                        acc[i] += c * t
        return CyclotomicScalar(n, _poly=fmpq_poly(acc))

    def conjugate(self) -> "CyclotomicScalar":
        return self.galois_apply(-1)

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coords": [str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, d: dict) -> "CyclotomicScalar":
        return cls(int(d["conductor"]), [Fraction(c) for c in d["coords"]])

    def __repr__(self):
        if self.is_rational():
            return str(self.to_rational())
        terms = []
        for j, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*z{self.conductor}^{j}")
        return " + ".join(terms)

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * z**j for j, c in enumerate(self.coords))


ONE = CyclotomicScalar(1, [1])
ZERO = CyclotomicScalar(1, [])


def as_scalar(x) -> CyclotomicScalar:
    if isinstance(x, CyclotomicScalar):
        return x
    return CyclotomicScalar(1, [x])


def epsilon(r: int, k: int = 1) -> CyclotomicScalar:
    """epsilon_r^k with epsilon_r = exp(2 pi i / r)."""
    return CyclotomicScalar.zeta(r, k)


def imag_unit() -> CyclotomicScalar:
    return CyclotomicScalar.zeta(4)


def sqrt2() -> CyclotomicScalar:
    # zeta_8 + zeta_8^{-1}
    return CyclotomicScalar.zeta(8) + CyclotomicScalar.zeta(8, -1)


def sqrt3() -> CyclotomicScalar:
    # zeta_12 + zeta_12^{-1}
    return CyclotomicScalar.zeta(12) + CyclotomicScalar.zeta(12, -1)


def sqrt5() -> CyclotomicScalar:
    # -2(e - e^{-1})^2 - 5 with e = epsilon_5
    d = epsilon(5) - epsilon(5, -1)
    return -2 * d * d - 5


def golden_ratio() -> CyclotomicScalar:
    return (1 + sqrt5()) * Fraction(1, 2)
