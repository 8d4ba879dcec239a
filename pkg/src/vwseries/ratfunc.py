"""Coefficients of refined series: elements of Q(zeta_N)(Y), Y = y^(1/2).

RatY is a reduced rational function in Y over Q, with powers of Y pulled
out into an integer exponent.  YFunc stacks phi(N) of them as power-basis
coordinates over Q(zeta_N).
"""

from __future__ import annotations

from fractions import Fraction

from flint import fmpq, fmpq_poly

from .cyclotomic import (
    CyclotomicScalar,
    as_scalar,
    euler_phi,
    lcm,
    power_table,
    to_fmpq,
    to_fraction,
)

_ONE = fmpq_poly([1])
_ZERO = fmpq_poly([])


def _strip_y(p: fmpq_poly) -> tuple[fmpq_poly, int]:
    c = p.coeffs()
    k = 0
    while k < len(c) and not c[k]:
        k += 1
    return (p.right_shift(k) if k else p), k


def _reverse(p: fmpq_poly) -> fmpq_poly:
    return fmpq_poly(list(reversed(p.coeffs())))


class RatY:
    """num/den * Y^k with gcd(num, den) = 1, den monic, Y dividing neither."""

    __slots__ = ("num", "den", "k")

    def __init__(self, num: fmpq_poly, den: fmpq_poly = _ONE, k: int = 0, reduced: bool = False):
        if not reduced:
            if num.is_zero():
                num, den, k = _ZERO, _ONE, 0
            else:
                num, a = _strip_y(num)
                den, b = _strip_y(den)
                k += a - b
                if den.degree() > 0:
                    g = num.gcd(den)
                    if g.degree() > 0:
                        num = num / g
                        den = den / g
                lc = den.leading_coefficient()
                if lc != 1:
                    num = num / lc
                    den = den / lc
        self.num, self.den, self.k = num, den, k

    @classmethod
    def const(cls, c) -> "RatY":
        return cls(fmpq_poly([to_fmpq(c)]))

    @classmethod
    def laurent(cls, terms: dict) -> "RatY":
        """From {Y-exponent: rational}."""
        terms = {int(e): c for e, c in terms.items() if c}
        if not terms:
            return cls(_ZERO)
        lo = min(terms)
        c = [fmpq(0)] * (max(terms) - lo + 1)
        for e, v in terms.items():
            c[e - lo] = to_fmpq(v)
        return cls(fmpq_poly(c), _ONE, lo)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.degree() == 0

    def is_const(self) -> bool:
        return self.is_zero() or (self.k == 0 and self.den.degree() == 0 and self.num.degree() == 0)

    def __add__(self, o: "RatY") -> "RatY":
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        k = min(self.k, o.k)
        a = self.num.left_shift(self.k - k) if self.k > k else self.num
        b = o.num.left_shift(o.k - k) if o.k > k else o.num
        if self.den == o.den:
            return RatY(a + b, self.den, k)
        return RatY(a * o.den + b * self.den, self.den * o.den, k)

    def __neg__(self) -> "RatY":
        return RatY(-self.num, self.den, self.k, reduced=True)

    def __sub__(self, o: "RatY") -> "RatY":
        return self + (-o)

    def __mul__(self, o: "RatY") -> "RatY":
        if self.is_zero() or o.is_zero():
            return RatY(_ZERO)
        if self.den.degree() == 0 and o.den.degree() == 0:
            return RatY(self.num * o.num, _ONE, self.k + o.k, reduced=True)
        return RatY(self.num * o.num, self.den * o.den, self.k + o.k)

    def scale(self, c: fmpq) -> "RatY":
        if not c:
            return RatY(_ZERO)
        return RatY(self.num * c, self.den, self.k, reduced=True)

    def inverse(self) -> "RatY":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatY(self.den, self.num, -self.k)

    def __eq__(self, o) -> bool:
        return self.k == o.k and self.num == o.num and self.den == o.den

    def at_one(self) -> fmpq:
        d = self.den(1)
        if d == 0:
            raise ZeroDivisionError("pole at y = 1")
        return self.num(1) / d

    def invert_y(self) -> "RatY":
        """Y -> 1/Y."""
        if self.is_zero():
            return self
        k = -self.k - self.num.degree() + self.den.degree()
        return RatY(_reverse(self.num), _reverse(self.den), k)

    def subs_power(self, m: int) -> "RatY":
        """Y -> Y^m for a positive integer m."""
        from .puiseux import _inflate

        return RatY(_inflate(self.num, m), _inflate(self.den, m), self.k * m)

    def laurent_terms(self) -> dict:
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        d = self.den[0]
        return {self.k + i: to_fraction(c / d) for i, c in enumerate(self.num.coeffs()) if c}

    def __repr__(self):
        if self.is_laurent():
            t = self.laurent_terms()
            return " + ".join(f"{c}*Y^{e}" for e, c in sorted(t.items())) or "0"
        return f"({self.num})/({self.den})*Y^{self.k}"


class YFunc:
    """Element of Q(zeta_N)(Y) as phi(N) RatY coordinates."""

    __slots__ = ("conductor", "coords")

    def __init__(self, conductor: int, coords):
        self.conductor = conductor
        self.coords = tuple(coords)

    @classmethod
    def zero(cls) -> "YFunc":
        return cls(1, [RatY(_ZERO)])

    @classmethod
    def const(cls, c) -> "YFunc":
        c = as_scalar(c)
        return cls(c.conductor, [RatY.const(x) for x in c.coords])

    @classmethod
    def laurent(cls, terms: dict) -> "YFunc":
        """From {Y-exponent: CyclotomicScalar or rational}."""
        terms = {e: as_scalar(c) for e, c in terms.items()}
        N = 1
        for c in terms.values():
            N = lcm(N, c.conductor)
        phi = euler_phi(N)
        cols = [{} for _ in range(phi)]
        for e, c in terms.items():
            for i, x in enumerate(c.embed(N).coords):
                if x:
                    cols[i][e] = x
        return cls(N, [RatY.laurent(col) for col in cols])._reduce_conductor()

    def _reduce_conductor(self) -> "YFunc":
        if self.conductor != 1 and all(c.is_zero() for c in self.coords[1:]):
            return YFunc(1, [self.coords[0]])
        return self

    def embed(self, m: int) -> "YFunc":
        n = self.conductor
        if n == m:
            return self
        s = m // n
        tab = power_table(m)
        out = [RatY(_ZERO)] * euler_phi(m)
        for j, c in enumerate(self.coords):
            if c.is_zero():
                continue
            for i, t in enumerate(tab[(j * s) % m]):
                if t:
                    out[i] = out[i] + c.scale(fmpq(t))
        return YFunc(m, out)

    def _pair(self, o: "YFunc"):
        if self.conductor == o.conductor:
            return self, o, self.conductor
        m = lcm(self.conductor, o.conductor)
        return self.embed(m), o.embed(m), m

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, o: "YFunc") -> "YFunc":
        a, b, m = self._pair(o)
        return YFunc(m, [x + y for x, y in zip(a.coords, b.coords)])._reduce_conductor()

    def __neg__(self) -> "YFunc":
        return YFunc(self.conductor, [-c for c in self.coords])

    def __sub__(self, o: "YFunc") -> "YFunc":
        return self + (-o)

    def __mul__(self, o: "YFunc") -> "YFunc":
        a, b, m = self._pair(o)
        if m == 1:
            return YFunc(1, [a.coords[0] * b.coords[0]])
        phi = euler_phi(m)
        buckets = {}
        for i, x in enumerate(a.coords):
            if x.is_zero():
                continue
            for j, y in enumerate(b.coords):
                if y.is_zero():
                    continue
                p = x * y
                buckets[i + j] = buckets[i + j] + p if (i + j) in buckets else p
        out = [RatY(_ZERO)] * phi
        tab = power_table(m)
        for k, p in buckets.items():
            if k < phi:
                out[k] = out[k] + p
            else:
                for i, t in enumerate(tab[k % m]):
                    if t:
                        out[i] = out[i] + p.scale(fmpq(t))
        return YFunc(m, out)._reduce_conductor()

    def scale(self, c) -> "YFunc":
        return self * YFunc.const(c)

    def galois_apply(self, k: int) -> "YFunc":
        n = self.conductor
        if n == 1:
            return self
        tab = power_table(n)
        out = [RatY(_ZERO)] * euler_phi(n)
        for j, c in enumerate(self.coords):
            if c.is_zero():
                continue
            for i, t in enumerate(tab[(j * k) % n]):
                if t:
                    out[i] = out[i] + c.scale(fmpq(t))
        return YFunc(n, out)

    def inverse(self) -> "YFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.conductor == 1:
            return YFunc(1, [self.coords[0].inverse()])
        n = self.conductor
        # a^{-1} = prod_{sigma != 1} sigma(a) / Norm(a)
        conj = None
        for k in range(2, n + 1):
            if _coprime(k, n) and k % n != 1:
                g = self.galois_apply(k)
                conj = g if conj is None else conj * g
        norm = self * conj
        if norm.conductor != 1:
            raise ArithmeticError("norm did not land in Q(Y)")
        return conj * YFunc(1, [norm.coords[0].inverse()])

    def __eq__(self, o) -> bool:
        a, b, _ = self._pair(o)
        return all(x == y for x, y in zip(a.coords, b.coords))

    def at_one(self) -> CyclotomicScalar:
        return CyclotomicScalar(self.conductor, [c.at_one() if not c.is_zero() else 0 for c in self.coords])

    def invert_y(self) -> "YFunc":
        return YFunc(self.conductor, [c.invert_y() for c in self.coords])

    def subs_power(self, m: int) -> "YFunc":
        return YFunc(self.conductor, [c.subs_power(m) for c in self.coords])

    def is_laurent(self) -> bool:
        return all(c.is_laurent() for c in self.coords)

    def is_scalar(self) -> bool:
        return all(c.is_const() for c in self.coords)

    def laurent_terms(self) -> dict:
        """{Y-exponent: CyclotomicScalar}; requires a Laurent polynomial."""
        out = {}
        for i, c in enumerate(self.coords):
            for e, v in c.laurent_terms().items():
                out.setdefault(e, [Fraction(0)] * len(self.coords))[i] = v
        return {e: CyclotomicScalar(self.conductor, v) for e, v in out.items()}

    def sqrt(self, value_at_one=None, const_root=None) -> "YFunc":
        """Square root of c * f(Y)^2 type elements.

        The constant factor's root is fixed by ``value_at_one`` (the desired
        value of the root at y = 1) or directly by ``const_root``.
        """
        base = next((c for c in self.coords if not c.is_zero()), None)
        if base is None:
            return self
        ratios = []
        for c in self.coords:
            if c.is_zero():
                ratios.append(Fraction(0))
                continue
            r = c * base.inverse()
            if not r.is_const():
                raise ArithmeticError("coefficient is not a scalar multiple of a rational function")
            ratios.append(to_fraction(r.num[0]))
        cscal = CyclotomicScalar(self.conductor, ratios)
        if base.k % 2:
            raise ArithmeticError("odd power of Y in a square root")
        prod = base.num * base.den
        lc = prod.leading_coefficient()
        try:
            sp = (prod / lc).sqrt()
        except Exception as exc:
            raise ArithmeticError(f"not a square in Q(Y): {base}") from exc
        f = RatY(sp, base.den, base.k // 2)
        target = cscal * lc  # need a root of this constant
        if const_root is None:
            if value_at_one is None:
                raise ValueError("need value_at_one or const_root")
            f1 = f.at_one()
            if f1 == 0:
                raise ArithmeticError("cannot match the branch at y = 1")
            const_root = as_scalar(value_at_one) * CyclotomicScalar(1, [to_fraction(1 / f1)])
        const_root = as_scalar(const_root)
        if not (const_root * const_root == target):
            raise ArithmeticError("square-root branch does not square correctly")
        return YFunc(1, [f]) * YFunc.const(const_root)

    def __repr__(self):
        if self.conductor == 1:
            return repr(self.coords[0])
        return " + ".join(f"[{c}]*z{self.conductor}^{i}" for i, c in enumerate(self.coords) if not c.is_zero()) or "0"


def _coprime(a: int, b: int) -> bool:
    from math import gcd

    return gcd(a, b) == 1
