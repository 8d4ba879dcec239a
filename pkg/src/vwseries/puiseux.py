"""Truncated Puiseux series in q with cyclotomic coefficients.

A series is stored as q^shift * sum_k c_k x^k with x = q^(1/step).  Each
coefficient c_k lives in Q(zeta_N); the k-th coefficients of all
power-basis coordinates are kept together as one fmpq_poly per
coordinate, so multiplication is phi(N)^2 polynomial products followed
by reduction of zeta powers.

``order`` is the exclusive truncation cutoff: terms with exponent >= order
are unknown.  ``order=None`` marks an exact (finite) series.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, gcd

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

_ZERO_POLY = fmpq_poly([])


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _add_order(o, v):
    return None if o is None else o + v


def _inflate(p: fmpq_poly, m: int) -> fmpq_poly:
    if m == 1 or p.degree() <= 0:
        return p
    c = p.coeffs()
    out = [0] * ((len(c) - 1) * m + 1)
    out[::m] = c
    return fmpq_poly(out)


def _deflate(p: fmpq_poly, m: int) -> fmpq_poly:
    if m == 1 or p.degree() <= 0:
        return p
    return fmpq_poly(p.coeffs()[::m])


def _poly_val(p: fmpq_poly):
    if p.is_zero():
        return None
    c = p.coeffs()
    for i, v in enumerate(c):
        if v:
            return i


def _vmul(a, b, n: int | None, N: int):
    """Product of coordinate vectors in Q(zeta_N)[x], truncated to n terms."""
    phi = euler_phi(N)
    buckets = {}
    for i, p in enumerate(a):
        if p.is_zero():
            continue
        for j, r in enumerate(b):
            if r.is_zero():
                continue
            prod = p.mul_low(r, n) if n is not None else p * r
            k = i + j
            buckets[k] = buckets[k] + prod if k in buckets else prod
    out = [_ZERO_POLY] * phi
    tab = power_table(N)
    for k, p in buckets.items():
        if k < phi:
            out[k] = out[k] + p
        else:
            for m, t in enumerate(tab[k % N]):
                if t:
                    out[m] = out[m] + t * p
    return out


def _vscale(a, c: CyclotomicScalar, N: int):
    """Coordinate vector a (in Q(zeta_N)) times the scalar c (conductor | N)."""
    cc = c.embed(N).coords if c.conductor != N else c.coords
    scal = [fmpq_poly([to_fmpq(x)]) for x in cc]
    return _vmul(a, scal, None, N)


def _vembed(a, n: int, m: int):
    if n == m:
        return list(a)
    s = m // n
    tab = power_table(m)
    out = [_ZERO_POLY] * euler_phi(m)
    for j, p in enumerate(a):
        if p.is_zero():
            continue
        for i, t in enumerate(tab[(j * s) % m]):
            if t:
                out[i] = out[i] + t * p
    return out


def _vtrunc(a, n):
    return [p.truncate(n) if n is not None else p for p in a]


def _slots(order, shift, step) -> int | None:
    if order is None:
        return None
    return max(0, ceil((order - shift) * step))


class PuiseuxSeries:
    """Immutable truncated series sum c_e q^e, e in Q, c_e in Q(zeta_N)."""

    __slots__ = ("conductor", "shift", "step", "polys", "order")

    def __init__(self, conductor, shift, step, polys, order):
        # raw constructor; use the classmethods or _make for normalization
        self.conductor = conductor
        self.shift = shift
        self.step = step
        self.polys = tuple(polys)
        self.order = order

    # ---- construction -------------------------------------------------
    @classmethod
    def _make(cls, N, shift, step, polys, order) -> "PuiseuxSeries":
        shift = Fraction(shift)
        order = None if order is None else Fraction(order)
        n = _slots(order, shift, step)
        polys = _vtrunc(polys, n)
        vals = [v for v in (_poly_val(p) for p in polys) if v is not None]
        if not vals:
            return cls(N, order if order is not None else Fraction(0), 1,
                       [_ZERO_POLY] * euler_phi(N), order)
        k = min(vals)
        if k:
            polys = [p.right_shift(k) for p in polys]
            shift += Fraction(k, step)
        g = step
        for p in polys:
            if g == 1:
                break
            if p.degree() > 0:
                g = gcd(g, p.deflation()[1])
        if g > 1:
            polys = [_deflate(p, g) for p in polys]
            step //= g
        # drop conductor to 1 when everything is rational
        if N != 1 and all(p.is_zero() for p in polys[1:]):
            polys, N = [polys[0]], 1
        return cls(N, shift, step, polys, order)

    @classmethod
    def zero(cls, order=None) -> "PuiseuxSeries":
        return cls._make(1, 0, 1, [_ZERO_POLY], order)

    @classmethod
    def one(cls) -> "PuiseuxSeries":
        return cls.monomial(1, 0)

    @classmethod
    def monomial(cls, coeff, exponent=0, order=None) -> "PuiseuxSeries":
        c = as_scalar(coeff)
        e = Fraction(exponent)
        polys = [fmpq_poly([to_fmpq(x)]) for x in c.coords]
        return cls._make(c.conductor, e, 1, polys, order)

    @classmethod
    def from_list(cls, coeffs, shift=0, step=1, order=None) -> "PuiseuxSeries":
        """q^shift * sum_k coeffs[k] q^(k/step); coefficients rational or cyclotomic."""
        if all(not isinstance(c, CyclotomicScalar) for c in coeffs):
            return cls._make(1, shift, step, [fmpq_poly([to_fmpq(c) for c in coeffs])], order)
        N = 1
        for c in coeffs:
            N = lcm(N, as_scalar(c).conductor)
        rows = [as_scalar(c).embed(N).coords for c in coeffs]
        phi = euler_phi(N)
        polys = [fmpq_poly([to_fmpq(r[i]) for r in rows]) for i in range(phi)]
        return cls._make(N, shift, step, polys, order)

    @classmethod
    def from_terms(cls, terms: dict, order=None) -> "PuiseuxSeries":
        """Build from an association exponent -> coefficient."""
        terms = {Fraction(e): as_scalar(c) for e, c in terms.items()}
        terms = {e: c for e, c in terms.items() if not c.is_zero()}
        if not terms:
            return cls.zero(order)
        s = min(terms)
        step = 1
        for e in terms:
            step = lcm(step, (e - s).denominator)
        N = 1
        for c in terms.values():
            N = lcm(N, c.conductor)
        phi = euler_phi(N)
        size = max(int((e - s) * step) for e in terms) + 1
        cols = [[fmpq(0)] * size for _ in range(phi)]
        for e, c in terms.items():
            k = int((e - s) * step)
            for i, x in enumerate(c.embed(N).coords):
                cols[i][k] = to_fmpq(x)
        return cls._make(N, s, step, [fmpq_poly(col) for col in cols], order)

    # ---- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.polys)

    def is_exact(self) -> bool:
        return self.order is None

    @property
    def grid(self) -> int:
        return lcm(self.step, self.shift.denominator)

    @property
    def valuation(self) -> Fraction | None:
        """Exponent of the leading term; None for the zero series."""
        return None if self.is_zero() else self.shift

    def _val_bound(self):
        # valuation, or the truncation order as a lower bound for zero series
        return self.shift if not self.is_zero() else self.order

    def _slot_coeff(self, k: int) -> CyclotomicScalar:
        return CyclotomicScalar(self.conductor, [p[k] for p in self.polys])

    def leading_coefficient(self) -> CyclotomicScalar:
        if self.is_zero():
            raise ValueError("zero series has no leading coefficient")
        return self._slot_coeff(0)

    def terms(self) -> dict:
        """Association exponent -> nonzero CyclotomicScalar."""
        out = {}
        length = max((p.length() for p in self.polys), default=0)
        for k in range(length):
            c = self._slot_coeff(k)
            if not c.is_zero():
                out[self.shift + Fraction(k, self.step)] = c
        return out

    def coefficient_at(self, e) -> CyclotomicScalar:
        e = Fraction(e)
        if self.order is not None and e >= self.order:
            raise ValueError(f"exponent {e} is beyond the truncation order {self.order}")
        if self.is_zero():
            return CyclotomicScalar(1, [])
        k = (e - self.shift) * self.step
        if k < 0 or k.denominator != 1:
            return CyclotomicScalar(1, [])
        return self._slot_coeff(int(k))

    def is_rational(self) -> bool:
        return self.conductor == 1 or all(p.is_zero() for p in self.polys[1:])

    def rational_coefficients(self, start, stop, step=1) -> list[Fraction]:
        """Rational coefficients at exponents start, start+step, ... < stop."""
        out = []
        e = Fraction(start)
        while e < stop:
            out.append(self.coefficient_at(e).to_rational())
            e += Fraction(step)
        return out

    # ---- alignment ------------------------------------------------------
    def embed(self, m: int) -> "PuiseuxSeries":
        if m == self.conductor:
            return self
        if m % self.conductor:
            raise ValueError("conductor does not divide target")
        return PuiseuxSeries(m, self.shift, self.step,
                             _vembed(self.polys, self.conductor, m), self.order)

    def _frame(self, N, step, shift):
        """Coordinate polys of self in conductor N, x = q^(1/step), origin q^shift."""
        polys = _vembed(self.polys, self.conductor, N)
        m = step // self.step
        off = (self.shift - shift) * step
        assert off.denominator == 1 and off >= 0
        off = int(off)
        return [(_inflate(p, m)).left_shift(off) if off else _inflate(p, m) for p in polys]

    @staticmethod
    def _common(a: "PuiseuxSeries", b: "PuiseuxSeries"):
        N = lcm(a.conductor, b.conductor)
        step = lcm(lcm(a.step, b.step), (a.shift - b.shift).denominator)
        return N, step

    # ---- ring operations ----------------------------------------------
    @staticmethod
    def _coerce(x) -> "PuiseuxSeries":
        if isinstance(x, PuiseuxSeries):
            return x
        return PuiseuxSeries.monomial(x, 0)

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero() and other.is_zero():
            return PuiseuxSeries.zero(_min_order(self.order, other.order))
        if self.is_zero():
            return other.truncate(self.order)
        if other.is_zero():
            return self.truncate(other.order)
        N, step = self._common(self, other)
        s = min(self.shift, other.shift)
        pa = self._frame(N, step, s)
        pb = other._frame(N, step, s)
        order = _min_order(self.order, other.order)
        n = _slots(order, s, step)
        return PuiseuxSeries._make(N, s, step, [x.truncate(n) + y.truncate(n) if n is not None else x + y
                                                for x, y in zip(pa, pb)], order)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries(self.conductor, self.shift, self.step, [-p for p in self.polys], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self.scale(as_scalar(other))
        va, vb = self._val_bound(), other._val_bound()
        order = _min_order(_add_order(self.order, vb), _add_order(other.order, va))
        if self.is_zero() or other.is_zero():
            return PuiseuxSeries.zero(order)
        N = lcm(self.conductor, other.conductor)
        step = lcm(self.step, other.step)
        s = self.shift + other.shift
        pa = self._frame(N, step, self.shift)
        pb = other._frame(N, step, other.shift)
        n = _slots(order, s, step)
        return PuiseuxSeries._make(N, s, step, _vmul(pa, pb, n, N), order)

    def __rmul__(self, other):
        return self.scale(as_scalar(other))

    def scale(self, c) -> "PuiseuxSeries":
        c = as_scalar(c)
        if c.is_zero():
            return PuiseuxSeries.zero(self.order)
        if c.is_rational():
            r = to_fmpq(c.to_rational())
            return PuiseuxSeries(self.conductor, self.shift, self.step,
                                 [p * r for p in self.polys], self.order)
        N = lcm(self.conductor, c.conductor)
        polys = _vembed(self.polys, self.conductor, N)
        return PuiseuxSeries._make(N, self.shift, self.step, _vscale(polys, c, N), self.order)

    def shift_by(self, e) -> "PuiseuxSeries":
        """Multiply by q^e."""
        e = Fraction(e)
        return PuiseuxSeries._make(self.conductor, self.shift + e, self.step, self.polys,
                                   _add_order(self.order, e))

    def truncate(self, order) -> "PuiseuxSeries":
        if order is None:
            return self
        order = Fraction(order)
        if self.order is not None and self.order <= order:
            return self
        return PuiseuxSeries._make(self.conductor, self.shift, self.step, self.polys, order)

    def _unit_part(self, n):
        """(c0, polys of self/(c0 q^shift)) to n slots; leading slot equals 1."""
        c0 = self.leading_coefficient()
        polys = list(self.polys)
        if not (c0 == 1):
            polys = _vscale(polys, c0.inverse(), self.conductor)
        return c0, _vtrunc(polys, n)

    def invert(self, order=None) -> "PuiseuxSeries":
        """Multiplicative inverse.  ``order`` is needed only for exact non-monomials."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of the zero series")
        s = self.shift
        out_order = None if self.order is None else self.order - 2 * s
        if out_order is None:
            if all(p.degree() <= 0 for p in self.polys):
                c0 = self.leading_coefficient().inverse()
                return PuiseuxSeries.monomial(c0, -s)
            if order is None:
                raise ValueError("an order is required to invert an exact non-monomial series")
            out_order = Fraction(order)
        elif order is not None:
            out_order = min(out_order, Fraction(order))
        n = _slots(out_order, -s, self.step)
        N = self.conductor
        c0, f = self._unit_part(n)
        h = _newton_inverse(f, n, N)
        res = PuiseuxSeries._make(N, -s, self.step, h, out_order)
        return res.scale(c0.inverse()) if not (c0 == 1) else res

    def __truediv__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self.scale(as_scalar(other).inverse())
        if other.is_exact() and not self.is_exact() and any(p.degree() > 0 for p in other.polys):
            # the inverse of an exact divisor only needs the dividend's precision
            if other.is_zero():
                raise ZeroDivisionError("division by the zero series")
            need = self.order - other.shift - self._val_bound()
            return self * other.invert(order=need)
        return self * other.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported; use sqrt for halves")
        if k < 0:
            return self.invert() ** (-k)
        result = PuiseuxSeries.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    int_pow = __pow__

    def sqrt(self, leading_root, grid: int | None = None) -> "PuiseuxSeries":
        """Square root whose leading coefficient is ``leading_root``."""
        if self.is_zero():
            raise ValueError("square root of the zero series")
        root = as_scalar(leading_root)
        c0 = self.leading_coefficient()
        if not (root * root == c0):
            raise ValueError(f"leading root {root} does not square to {c0}")
        half = self.shift / 2
        if grid is not None and (half * grid).denominator != 1:
            raise ValueError(f"valuation {self.shift} is odd on the grid 1/{grid}")
        if self.order is None and all(p.degree() <= 0 for p in self.polys):
            return PuiseuxSeries.monomial(root, half)
        if self.order is None:
            raise ValueError("square root of an exact non-monomial needs a truncation")
        out_order = self.order - half
        n = _slots(out_order, half, self.step)
        N = lcm(self.conductor, root.conductor)
        _, f = self._unit_part(n)
        f = _vembed(f, self.conductor, N)
        g = _newton_inverse_sqrt(f, n, N)
        y = _vmul(f, g, n, N)
        return PuiseuxSeries._make(N, half, self.step, y, out_order).scale(root)

    # ---- substitutions ----------------------------------------------------
    def rescale_and_phase(self, scale=1, phase=0) -> "PuiseuxSeries":
        """q^e -> exp(2 pi i phase e) q^(scale e)."""
        scale = Fraction(scale)
        phase = Fraction(phase)
        if scale <= 0:
            raise ValueError("scale must be positive")
        out = self
        if phase:
            out = out._phase(phase)
        if scale != 1:
            p, q = scale.numerator, scale.denominator
            out = PuiseuxSeries._make(out.conductor, out.shift * scale, out.step * q,
                                      [_inflate(x, p) for x in out.polys],
                                      None if out.order is None else out.order * scale)
        return out

    def _phase(self, rho: Fraction) -> "PuiseuxSeries":
        if self.is_zero():
            return self
        a = rho / self.step  # phase increment per slot
        base = rho * self.shift
        N = lcm(lcm(self.conductor, a.denominator), base.denominator)
        polys = _vembed(self.polys, self.conductor, N)
        b = a.denominator
        out = [_ZERO_POLY] * euler_phi(N)
        for j in range(b):
            part = []
            for p in polys:
                c = p.coeffs()
                sub = [0] * len(c)
                sub[j::b] = c[j::b]
                part.append(fmpq_poly(sub))
            if all(x.is_zero() for x in part):
                continue
            z = CyclotomicScalar.root_of_unity(base + a * j)
            moved = _vscale(part, z, N)
            out = [x + y for x, y in zip(out, moved)]
        return PuiseuxSeries._make(N, self.shift, self.step, out, self.order)

    def subs_power(self, scale) -> "PuiseuxSeries":
        return self.rescale_and_phase(scale, 0)

    def galois_apply(self, k: int) -> "PuiseuxSeries":
        N = self.conductor
        if gcd(k, N) != 1:
            raise ValueError(f"k={k} is not coprime to the conductor {N}")
        if N == 1:
            return self
        tab = power_table(N)
        out = [_ZERO_POLY] * euler_phi(N)
        for j, p in enumerate(self.polys):
            if p.is_zero():
                continue
            for i, t in enumerate(tab[(j * k) % N]):
                if t:
                    out[i] = out[i] + t * p
        return PuiseuxSeries._make(N, self.shift, self.step, out, self.order)

    # ---- comparison ---------------------------------------------------
    def first_difference(self, other, order=None):
        """First exponent (below the common order) where the series differ, or None."""
        other = self._coerce(other)
        bound = _min_order(self.order, other.order)
        bound = _min_order(bound, None if order is None else Fraction(order))
        d = (self - other).truncate(bound) if bound is not None else self - other
        if d.is_zero():
            return None
        return d.shift

    def agrees_with(self, other, order=None) -> bool:
        return self.first_difference(other, order) is None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicScalar)):
            other = self._coerce(other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    # ---- transcendental helpers for unit series -----------------------
    def log(self) -> "PuiseuxSeries":
        """log of a series 1 + O(q^(1/step)); needs finite order."""
        if self.shift != 0 or not (self.leading_coefficient() == 1):
            raise ValueError("log needs a series with constant term 1")
        n = _slots(self.order, 0, self.step)
        N = self.conductor
        f = list(self.polys)
        inv = _newton_inverse(f, n, N)
        df = [p.derivative() for p in f]
        g = _vmul(df, inv, n, N)
        g = [p.integral() for p in g]
        return PuiseuxSeries._make(N, 0, self.step, g, self.order)

    def exp(self) -> "PuiseuxSeries":
        """exp of a series with positive valuation; needs finite order."""
        if not self.is_zero() and self.shift <= 0:
            raise ValueError("exp needs positive valuation")
        if self.order is None:
            raise ValueError("exp needs a finite order")
        step = self.step
        base = self._frame(self.conductor, step, Fraction(0)) if not self.is_zero() else \
            [_ZERO_POLY] * euler_phi(self.conductor)
        n = _slots(self.order, 0, step)
        N = self.conductor
        g = [fmpq_poly([1])] + [_ZERO_POLY] * (euler_phi(N) - 1)
        prec = 1
        while prec < n:
            prec = min(2 * prec, n)
            lg = PuiseuxSeries._make(N, 0, step, _vtrunc(g, prec), Fraction(prec, step)).log()
            lg_p = lg._frame(N, step, Fraction(0)) if not lg.is_zero() else [_ZERO_POLY] * euler_phi(N)
            lg_p = lg_p + [_ZERO_POLY] * (euler_phi(N) - len(lg_p))
            e = [(b.truncate(prec) - c.truncate(prec)) for b, c in zip(base, lg_p)]
            e[0] = e[0] + 1
            g = _vmul(g, e, prec, N)
        return PuiseuxSeries._make(N, 0, step, g, self.order)

    # ---- serialization -------------------------------------------------
    def to_json(self) -> dict:
        return {
            "grid": self.grid,
            "order": None if self.order is None else str(self.order),
            "terms": [[str(e), c.to_json()] for e, c in sorted(self.terms().items())],
        }

    @classmethod
    def from_json(cls, d: dict) -> "PuiseuxSeries":
        terms = {Fraction(e): CyclotomicScalar.from_json(c) for e, c in d["terms"]}
        order = None if d.get("order") is None else Fraction(d["order"])
        return cls.from_terms(terms, order)

    def __repr__(self):
        items = sorted(self.terms().items())
        shown = items[:8]
        body = " + ".join(f"({c})*q^{e}" for e, c in shown) or "0"
        if len(items) > 8:
            body += " + ..."
        if self.order is not None:
            body += f" + O(q^{self.order})"
        return body


def _newton_inverse(f, n: int, N: int):
    """Inverse of a coordinate vector with leading slot 1, to n slots."""
    phi = euler_phi(N)
    h = [fmpq_poly([1])] + [_ZERO_POLY] * (phi - 1)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        fh = _vmul(_vtrunc(f, prec), h, prec, N)
        e = [-p for p in fh]
        e[0] = e[0] + 1
        corr = _vmul(h, e, prec, N)
        h = [a + b for a, b in zip(h, corr)]
    return _vtrunc(h, n)


def _newton_inverse_sqrt(f, n: int, N: int):
    """f^(-1/2) for a coordinate vector with leading slot 1, to n slots."""
    phi = euler_phi(N)
    g = [fmpq_poly([1])] + [_ZERO_POLY] * (phi - 1)
    half = fmpq(1, 2)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        g2 = _vmul(g, g, prec, N)
        fg2 = _vmul(_vtrunc(f, prec), g2, prec, N)
        e = [-p for p in fg2]
        e[0] = e[0] + 1
        corr = _vmul(g, e, prec, N)
        g = [a + half * b for a, b in zip(g, corr)]
    return _vtrunc(g, n)


def solve_quadratic(a, b, c, branch_root, order=None):
    """Roots (X_plus, X_minus) = (-b +- sqrt(b^2 - 4ac)) / (2a).

    ``branch_root`` is the leading coefficient of the chosen square root of
    the discriminant.
    """
    a, b, c = (PuiseuxSeries._coerce(x) for x in (a, b, c))
    disc = b * b - 4 * a * c
    if order is not None:
        disc = disc.truncate(order)
    root = disc.sqrt(branch_root)
    plus = (-b + root) / (2 * a)
    minus = (-b - root) / (2 * a)
    return plus, minus
