"""Leading (Donaldson) terms of the horizontal series, flux sums over
H^2(S, Z_r), and the rank-5 polynomial identities behind the modular
transformation of s(q).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cyclotomic import CyclotomicScalar, as_scalar, epsilon, golden_ratio, imag_unit, sqrt2, sqrt5
from .surface import SurfaceSpec, _beta_tuples
from .universal import build_set, leading_constants


def _int_power(x, e):
    e = Fraction(e)
    if e.denominator != 1:
        raise ArithmeticError(f"non-integral exponent {e}")
    return as_scalar(x) ** int(e)


def donaldson_leading(r: int, S: SurfaceSpec, c1=None) -> CyclotomicScalar:
    """The closed-form sums for the coefficient at vd = 0 (ranks 2..5)."""
    if r not in (2, 3, 4, 5):
        raise ValueError("closed-form leading terms exist for ranks 2..5")
    c1 = S.c1 if c1 is None else tuple(c1)
    K = S.K
    k2 = S.K2

    def tilde(b):
        return tuple(2 * x - k for x, k in zip(b, K))

    def tp(a, b):
        return Fraction(S.pair(tilde(a), tilde(b)))

    total = CyclotomicScalar.rational(0)
    for tup in _beta_tuples(S, r):
        bs = [b for b, _ in tup]
        sw = 1
        for _, v in tup:
            sw *= v
        if r == 2:
            term = as_scalar((-1) ** (S.pair(bs[0], c1) % 2))
        elif r == 3:
            b1, b2 = bs
            ph = epsilon(3, (S.pair(b1, c1) + 2 * S.pair(b2, c1)) % 3)
            term = ph * _int_power(2, (tp(b1, b1) + 2 * tp(b1, b2) + tp(b2, b2)) / 4)
        elif r == 4:
            b1, b2, b3 = bs
            ph = imag_unit() ** ((-S.pair(b1, c1) + 2 * S.pair(b2, c1) - 3 * S.pair(b3, c1)) % 4)
            e2 = k2 + (tp(b1, b1) + tp(b1, b3) + tp(b2, b1) + tp(b2, b3)) / 4
            e3 = (tp(b2, b1) + tp(b2, b3)) / 2
            term = ph * _int_power(2, e2) * _int_power(1 - sqrt2() * Fraction(1, 2), e3)
        else:
            b1, b2, b3, b4 = bs
            ph = epsilon(5, sum(i * S.pair(b, c1) for i, b in enumerate(bs, 1)) % 5)
            e2 = (tp(b1, b4) + tp(b2, b3)) / 2 - (tp(b1, b1) + tp(b2, b2) + tp(b3, b3) + tp(b4, b4)) / 4
            ea = (tp(b1, b1) + tp(b4, b4) + tp(b1, b4) - tp(b1, b3) - tp(b2, b3) - tp(b2, b4)) / 4
            eb = (tp(b2, b2) + tp(b3, b3) - tp(b1, b2) - tp(b3, b4)) / 4
            # 3/2 - sqrt5/2 = phi^-2 and 7/2 - 3 sqrt5/2 = phi^-4, so only the phi-exponent must be integral
            phi_exp = -2 * ea - 4 * eb
            term = (ph * (20 + 8 * sqrt5()) ** k2 * _int_power(2, e2)
                    * _int_power(golden_ratio(), phi_exp))
        total = total + term * sw
    return total * as_scalar(Fraction(r) ** (2 - S.chi + k2))


def donaldson_from_constants(r: int, S: SurfaceSpec, c1=None) -> CyclotomicScalar:
    """r^{2+K^2-chi} D0(0)^{K^2} sum_beta prod eps^{i beta_i c1} SW prod D_ij(0)^{beta_i beta_j},
    with the constants read off the built horizontal set."""
    c1 = S.c1 if c1 is None else tuple(c1)
    consts = leading_constants(build_set(r, "horizontal", 2))
    d0 = consts["D0"]
    total = CyclotomicScalar.rational(0)
    for tup in _beta_tuples(S, r):
        bs = [b for b, _ in tup]
        sw = 1
        for _, v in tup:
            sw *= v
        term = epsilon(r, sum(i * S.pair(b, c1) for i, b in enumerate(bs, 1)) % r) * sw
        for i in range(1, r):
            for j in range(i, r):
                e = S.pair(bs[i - 1], bs[j - 1])
                if e:
                    term = term * consts[f"D{i}{j}"] ** e
        total = total + term
    return total * d0 ** S.K2 * as_scalar(Fraction(r) ** (2 + S.K2 - S.chi))


def donaldson_check(r: int, S: SurfaceSpec, c1=None) -> dict:
    a = donaldson_leading(r, S, c1)
    b = donaldson_from_constants(r, S, c1)
    return {"check": "donaldson", "rank": r, "passed": a == b, "closed_form": str(a), "from_constants": str(b)}


# ---- flux sums -----------------------------------------------------------------

def _odd_prime(r: int):
    if r < 3 or any(r % p == 0 for p in range(2, int(r ** 0.5) + 1)):
        raise ValueError("flux sums need an odd prime r")


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def flux_epsilon(m: int, r: int) -> int:
    return legendre(m // 2, r) if m % 2 == 0 else legendre((m + r) // 2, r)


def _sqrt_r(r: int) -> CyclotomicScalar:
    """sqrt(r) for an odd prime r, from the quadratic Gauss sum."""
    g = CyclotomicScalar.rational(0)
    for x in range(r):
        g = g + epsilon(r, (x * x) % r)
    return g if r % 4 == 1 else g * (-imag_unit())


def _pair_mod(gram, a, b):
    n = len(gram)
    return sum(a[i] * gram[i][j] * b[j] for i in range(n) for j in range(n))


def flux_brute_force(r: int, gram, c, m: int | None = None) -> CyclotomicScalar:
    """sum_x exp(2 pi i (x c)/r) [exp(pi i (r-1) m x^2 / r)] over x in (Z_r)^b2."""
    _odd_prime(r)
    b2 = len(gram)
    if b2 > 8:
        raise ValueError("brute force is limited to b2 <= 8")
    half = (r - 1) // 2
    total = CyclotomicScalar.rational(0)
    counts = [0] * r
    for x in itertools.product(range(r), repeat=b2):
        k = _pair_mod(gram, x, c)
        if m is not None:
            k += half * m * _pair_mod(gram, x, x)
        counts[k % r] += 1
    for k, n in enumerate(counts):
        if n:
            total = total + epsilon(r, k) * n
    return total


def flux_closed_form(r: int, b2: int, signature: int, c2: int | None = None, m: int | None = None,
                     c_is_zero: bool | None = None) -> CyclotomicScalar:
    """The first sum (m None): r^{b2} delta_{c,0}.  The second:
    eps(m)^{b2} r^{b2/2} e^{-pi i (r-1)^2 sigma/8} e^{pi i (r-1) n c^2 / r}, m n = -1 mod r."""
    _odd_prime(r)
    if m is None:
        if c_is_zero is None:
            raise ValueError("the first identity needs to know whether c = 0 mod r")
        return CyclotomicScalar.rational(r ** b2 if c_is_zero else 0)
    if not 1 <= m < r:
        raise ValueError("m must lie in 1..r-1")
    n = next(k for k in range(1, r) if (m * k) % r == r - 1)
    sigma_phase = CyclotomicScalar.root_of_unity(Fraction(-(r - 1) ** 2 * signature, 16))
    c_phase = epsilon(r, ((r - 1) // 2 * n * c2) % r)
    return (as_scalar(flux_epsilon(m, r) ** b2) * _sqrt_r(r) ** b2 * sigma_phase * c_phase)


def diagonal_gram(b2: int, signature: int):
    plus = (b2 + signature) // 2
    if (b2 + signature) % 2 or not 0 <= plus <= b2:
        raise ValueError("signature incompatible with b2")
    return tuple(tuple((1 if i < plus else -1) if i == j else 0 for j in range(b2)) for i in range(b2))


def flux_sum(r: int, mode: str, b2: int, signature: int, gram=None, c=None, m=None) -> CyclotomicScalar:
    """Dispatch to the closed form or the brute-force sum; gram defaults to diag(+1,..,-1,..)."""
    gram = diagonal_gram(b2, signature) if gram is None else gram
    c = tuple(c) if c is not None else (0,) * b2
    if mode == "brute_force":
        return flux_brute_force(r, gram, c, m)
    if mode == "closed_form":
        return flux_closed_form(r, b2, signature, _pair_mod(gram, c, c), m,
                                c_is_zero=all(x % r == 0 for x in c))
    raise ValueError("mode must be closed_form or brute_force")


# ---- rank-5 polynomial identities -------------------------------------------------

class _Poly:
    """Dense polynomial in a formal variable with cyclotomic coefficients."""

    def __init__(self, coeffs):
        self.c = [as_scalar(x) for x in coeffs]

    def __add__(self, o):
        o = o if isinstance(o, _Poly) else _Poly([o])
        n = max(len(self.c), len(o.c))
        z = CyclotomicScalar.rational(0)
        return _Poly([(self.c[i] if i < len(self.c) else z) + (o.c[i] if i < len(o.c) else z) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return _Poly([-x for x in self.c])

    def __sub__(self, o):
        return self + (-(o if isinstance(o, _Poly) else _Poly([o])))

    def __rsub__(self, o):
        return _Poly([o]) - self

    def __mul__(self, o):
        o = o if isinstance(o, _Poly) else _Poly([o])
        out = [CyclotomicScalar.rational(0)] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            for j, b in enumerate(o.c):
                out[i + j] = out[i + j] + a * b
        return _Poly(out)

    __rmul__ = __mul__

    def is_zero(self):
        return all(x.is_zero() for x in self.c)


def rank5_identities() -> list:
    """The four polynomials in Q(zeta_20)[r]; each should vanish identically."""
    phi = _Poly([golden_ratio()])
    R = _Poly([0, 1])
    one = _Poly([1])

    def e(k):
        return _Poly([epsilon(5, k % 5)])

    def pattern(a, lhs2, b, rhs2):
        return ((phi * (phi + R) + e(a) * (one - phi * R)) * lhs2
                - e(b) * (phi + R - phi * e(a) * (one - phi * R)) * rhs2)

    return [
        pattern(2, (-phi - e(2) * R), 3, (one - phi * e(2) * R)),
        pattern(4, (one - phi * e(1) * R), 4, (phi + e(1) * R)),
        pattern(1, (one - phi * e(4) * R), 1, (phi + e(4) * R)),
        pattern(3, (-phi - e(3) * R), 2, (one - phi * e(3) * R)),
    ]


def rank5_identity_check() -> dict:
    polys = rank5_identities()
    results = [p.is_zero() for p in polys]
    return {"check": "rank5_identities", "passed": all(results), "identities": results,
            "coefficients": [[str(x) for x in p.c] for p in polys]}
