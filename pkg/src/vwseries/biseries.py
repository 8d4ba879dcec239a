"""Truncated q-series with coefficients in Q(zeta_N)(y^(1/2)).

Used for the K-theoretic (y-refined) objects.  The layout mirrors
PuiseuxSeries (shift, step, order) but the coefficient list is a plain
Python list of YFunc values, so arithmetic is quadratic in the number of
slots.  y-exponents live on the half-integer grid: Y = y^(1/2).
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, gcd

from .cyclotomic import CyclotomicScalar, as_scalar, lcm
from .puiseux import PuiseuxSeries
from .ratfunc import YFunc

Y_GRID = 2


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _slots(order, shift, step):
    if order is None:
        return None
    return max(0, ceil((order - shift) * step))


class BiSeries:
    """sum_k c_k(Y) q^(shift + k/step) + O(q^order)."""

    __slots__ = ("shift", "step", "coeffs", "order")
    y_grid = Y_GRID

    def __init__(self, shift, step, coeffs, order):
        self.shift = shift
        self.step = step
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def _make(cls, shift, step, coeffs, order) -> "BiSeries":
        shift = Fraction(shift)
        order = None if order is None else Fraction(order)
        coeffs = list(coeffs)
        n = _slots(order, shift, step)
        if n is not None:
            coeffs = coeffs[:n]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        k = 0
        while k < len(coeffs) and coeffs[k].is_zero():
            k += 1
        if k == len(coeffs):
            return cls(order if order is not None else Fraction(0), 1, [], order)
        coeffs = coeffs[k:]
        shift += Fraction(k, step)
        g = step
        for i, c in enumerate(coeffs):
            if g == 1:
                break
            if i and not c.is_zero():
                g = gcd(g, i)
        if g > 1:
            coeffs = coeffs[::g]
            step //= g
        return cls(shift, step, coeffs, order)

    # ---- construction ---------------------------------------------------
    @classmethod
    def zero(cls, order=None) -> "BiSeries":
        return cls._make(0, 1, [], order)

    @classmethod
    def monomial(cls, coeff, q_exp=0, y_terms=None, order=None) -> "BiSeries":
        """coeff * q^q_exp * (Laurent polynomial given by {Y-exponent: c} or 1)."""
        c = YFunc.laurent(y_terms) if y_terms is not None else YFunc.const(1)
        return cls._make(q_exp, 1, [c * YFunc.const(coeff)], order)

    @classmethod
    def from_puiseux(cls, s: PuiseuxSeries) -> "BiSeries":
        terms = s.terms()
        if not terms:
            return cls.zero(s.order)
        shift = s.shift
        out = {}
        for e, c in terms.items():
            out[int((e - shift) * s.step)] = YFunc.const(c)
        n = max(out) + 1
        coeffs = [out.get(i, YFunc.zero()) for i in range(n)]
        return cls._make(shift, s.step, coeffs, s.order)

    @classmethod
    def from_double_terms(cls, terms: dict, order=None) -> "BiSeries":
        """From {(q-exponent, Y-exponent): coefficient}."""
        by_q = {}
        for (qe, ye), c in terms.items():
            by_q.setdefault(Fraction(qe), {})[int(ye)] = c
        if not by_q:
            return cls.zero(order)
        s = min(by_q)
        step = 1
        for e in by_q:
            step = lcm(step, (e - s).denominator)
        n = max(int((e - s) * step) for e in by_q) + 1
        coeffs = [YFunc.zero()] * n
        for e, d in by_q.items():
            coeffs[int((e - s) * step)] = YFunc.laurent(d)
        return cls._make(s, step, coeffs, order)

    # ---- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def _val_bound(self):
        return self.shift if self.coeffs else self.order

    @property
    def valuation(self):
        return self.shift if self.coeffs else None

    def leading_coefficient(self) -> YFunc:
        if not self.coeffs:
            raise ValueError("zero series has no leading coefficient")
        return self.coeffs[0]

    def terms(self) -> dict:
        return {self.shift + Fraction(k, self.step): c for k, c in enumerate(self.coeffs) if not c.is_zero()}

    def coefficient_at(self, e) -> YFunc:
        e = Fraction(e)
        if self.order is not None and e >= self.order:
            raise ValueError(f"exponent {e} is beyond the truncation order {self.order}")
        k = (e - self.shift) * self.step
        if k < 0 or k.denominator != 1 or k >= len(self.coeffs):
            return YFunc.zero()
        return self.coeffs[int(k)]

    def is_laurent(self) -> bool:
        return all(c.is_laurent() for c in self.coeffs)

    # ---- alignment --------------------------------------------------------
    def _frame(self, step, shift, n):
        m = step // self.step
        off = (self.shift - shift) * step
        assert off.denominator == 1 and off >= 0
        off = int(off)
        size = off + (len(self.coeffs) - 1) * m + 1 if self.coeffs else 0
        if n is not None:
            size = min(size, n)
        out = [YFunc.zero()] * max(size, 0)
        for k, c in enumerate(self.coeffs):
            i = off + k * m
            if n is not None and i >= n:
                break
            out[i] = c
        return out

    @staticmethod
    def _coerce(x) -> "BiSeries":
        if isinstance(x, BiSeries):
            return x
        if isinstance(x, PuiseuxSeries):
            return BiSeries.from_puiseux(x)
        if isinstance(x, YFunc):
            return BiSeries._make(0, 1, [x], None)
        return BiSeries._make(0, 1, [YFunc.const(x)], None)

    # ---- ring operations -------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        order = _min_order(self.order, other.order)
        if not self.coeffs and not other.coeffs:
            return BiSeries.zero(order)
        if not self.coeffs:
            return other.truncate(order)
        if not other.coeffs:
            return self.truncate(order)
        step = lcm(lcm(self.step, other.step), (self.shift - other.shift).denominator)
        s = min(self.shift, other.shift)
        n = _slots(order, s, step)
        a = self._frame(step, s, n)
        b = other._frame(step, s, n)
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiSeries._make(s, step, out, order)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries(self.shift, self.step, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        va, vb = self._val_bound(), other._val_bound()
        oa = None if self.order is None else self.order + vb
        ob = None if other.order is None else other.order + va
        order = _min_order(oa, ob)
        if not self.coeffs or not other.coeffs:
            return BiSeries.zero(order)
        step = lcm(self.step, other.step)
        s = self.shift + other.shift
        n = _slots(order, s, step)
        a = self._frame(step, self.shift, n)
        b = other._frame(step, other.shift, n)
        size = len(a) + len(b) - 1
        if n is not None:
            size = min(size, n)
        out = [YFunc.zero()] * size
        nz_b = [(j, y) for j, y in enumerate(b) if not y.is_zero()]
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in nz_b:
                if i + j >= size:
                    break
                out[i + j] = out[i + j] + x * y
        return BiSeries._make(s, step, out, order)

    __rmul__ = __mul__

    def truncate(self, order) -> "BiSeries":
        if order is None:
            return self
        order = Fraction(order)
        if self.order is not None and self.order <= order:
            return self
        return BiSeries._make(self.shift, self.step, self.coeffs, order)

    def shift_by(self, e) -> "BiSeries":
        e = Fraction(e)
        return BiSeries._make(self.shift + e, self.step, self.coeffs,
                              None if self.order is None else self.order + e)

    def invert(self, order=None) -> "BiSeries":
        if not self.coeffs:
            raise ZeroDivisionError("inversion of the zero series")
        s = self.shift
        out_order = None if self.order is None else self.order - 2 * s
        if out_order is None:
            if len(self.coeffs) == 1:
                return BiSeries._make(-s, 1, [self.coeffs[0].inverse()], None)
            if order is None:
                raise ValueError("an order is required to invert an exact non-monomial series")
            out_order = Fraction(order)
        elif order is not None:
            out_order = min(out_order, Fraction(order))
        n = _slots(out_order, -s, self.step)
        f = self.coeffs
        inv0 = f[0].inverse()
        h = []
        for k in range(n):
            acc = YFunc.const(1) if k == 0 else YFunc.zero()
            for i in range(1, min(k, len(f) - 1) + 1):
                if not f[i].is_zero() and not h[k - i].is_zero():
                    acc = acc - f[i] * h[k - i]
            h.append(acc * inv0)
        return BiSeries._make(-s, self.step, h, out_order)

    def __truediv__(self, other):
        if isinstance(other, BiSeries) or isinstance(other, PuiseuxSeries):
            other = self._coerce(other)
            if other.order is None and len(other.coeffs) > 1 and self.order is not None:
                need = self.order - other.shift - self._val_bound()
                return self * other.invert(order=need)
            return self * other.invert()
        return self * YFunc.const(as_scalar(other).inverse())

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        result = BiSeries._coerce(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self, value_at_one=None, const_root=None) -> "BiSeries":
        """Square root; the leading y-coefficient's branch is fixed at y = 1."""
        if not self.coeffs:
            raise ValueError("square root of zero")
        if self.order is None and len(self.coeffs) > 1:
            raise ValueError("square root of an exact non-monomial needs a truncation")
        half = self.shift / 2
        r0 = self.coeffs[0].sqrt(value_at_one=value_at_one, const_root=const_root)
        out_order = None if self.order is None else self.order - half
        n = _slots(out_order, half, self.step) if out_order is not None else 1
        inv2r0 = (r0 + r0).inverse()
        f = self.coeffs
        y = [r0]
        for k in range(1, n):
            acc = f[k] if k < len(f) else YFunc.zero()
            for i in range(1, k):
                if not y[i].is_zero() and not y[k - i].is_zero():
                    acc = acc - y[i] * y[k - i]
            y.append(acc * inv2r0)
        return BiSeries._make(half, self.step, y, out_order)

    # ---- substitutions -----------------------------------------------
    def rescale_and_phase(self, scale=1, phase=0) -> "BiSeries":
        scale, phase = Fraction(scale), Fraction(phase)
        coeffs = list(self.coeffs)
        if phase:
            coeffs = [c * YFunc.const(CyclotomicScalar.root_of_unity(phase * (self.shift + Fraction(k, self.step))))
                      if not c.is_zero() else c for k, c in enumerate(coeffs)]
        if scale == 1:
            return BiSeries._make(self.shift, self.step, coeffs, self.order)
        p, q = scale.numerator, scale.denominator
        spread = [YFunc.zero()] * ((len(coeffs) - 1) * p + 1 if coeffs else 0)
        for k, c in enumerate(coeffs):
            spread[k * p] = c
        return BiSeries._make(self.shift * scale, self.step * q, spread,
                              None if self.order is None else self.order * scale)

    def subs_y_power(self, m: int) -> "BiSeries":
        """y -> y^m (m a positive integer)."""
        return BiSeries(self.shift, self.step, [c.subs_power(m) for c in self.coeffs], self.order)

    def invert_y(self) -> "BiSeries":
        """y -> 1/y."""
        return BiSeries(self.shift, self.step, [c.invert_y() for c in self.coeffs], self.order)

    def at_y_one(self) -> PuiseuxSeries:
        """Specialization y = 1."""
        terms = {e: c.at_one() for e, c in self.terms().items()}
        return PuiseuxSeries.from_terms(terms, self.order)

    def galois_apply(self, k: int) -> "BiSeries":
        return BiSeries(self.shift, self.step, [c.galois_apply(k) for c in self.coeffs], self.order)

    # ---- comparison ---------------------------------------------------------
    def first_difference(self, other, order=None):
        other = self._coerce(other)
        bound = _min_order(self.order, other.order)
        if order is not None:
            bound = _min_order(bound, Fraction(order))
        d = self - other
        if bound is not None:
            d = d.truncate(bound)
        return None if d.is_zero() else d.shift

    def agrees_with(self, other, order=None) -> bool:
        return self.first_difference(other, order) is None

    def __eq__(self, other):
        if not isinstance(other, (BiSeries, PuiseuxSeries, int, Fraction, CyclotomicScalar)):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def __repr__(self):
        items = sorted(self.terms().items())[:4]
        body = " + ".join(f"[{c}]*q^{e}" for e, c in items) or "0"
        if self.order is not None:
            body += f" + O(q^{self.order})"
        return body
