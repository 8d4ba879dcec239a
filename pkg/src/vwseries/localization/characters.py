"""Torus characters: finite sums of weights with integer multiplicities.

Weights are integer 3-vectors, the coefficients of (s1, s2, t).  Products of
characters add weights; the dual negates them.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .partitions import arm_leg, boxes

ZERO_WEIGHT = (0, 0, 0)


class ZeroWeightError(ArithmeticError):
    pass


def _vec(w):
    w = tuple(int(x) for x in w)
    return w + (0,) * (3 - len(w)) if len(w) < 3 else w


def _add(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


class CharacterPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc = defaultdict(int)
        for w, m in (terms or {}).items():
            acc[_vec(w)] += m
        self.terms = {w: m for w, m in acc.items() if m}

    @classmethod
    def weight(cls, w, mult=1):
        return cls({_vec(w): mult})

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = {w: m for w, m in terms.items() if m}
        return obj

    def __add__(self, other):
        acc = defaultdict(int, self.terms)
        for w, m in other.terms.items():
            acc[w] += m
        return CharacterPolynomial._raw(acc)

    def __neg__(self):
        return CharacterPolynomial._raw({w: -m for w, m in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CharacterPolynomial._raw({w: m * other for w, m in self.terms.items()})
        acc = defaultdict(int)
        for u, m in self.terms.items():
            for v, n in other.terms.items():
                acc[_add(u, v)] += m * n
        return CharacterPolynomial._raw(acc)

    __rmul__ = __mul__

    def twist(self, w):
        """Multiply by the single weight w."""
        w = _vec(w)
        return CharacterPolynomial._raw({_add(u, w): m for u, m in self.terms.items()})

    def dual(self):
        return CharacterPolynomial._raw({(-u[0], -u[1], -u[2]): m for u, m in self.terms.items()})

    def rank(self) -> int:
        return sum(self.terms.values())

    def zero_multiplicity(self) -> int:
        return self.terms.get(ZERO_WEIGHT, 0)

    def t_degrees(self) -> set:
        return {w[2] for w in self.terms}

    def __eq__(self, other):
        return isinstance(other, CharacterPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        body = " + ".join(f"{m}*{w}" for w, m in sorted(self.terms.items()))
        return f"CharacterPolynomial({body or '0'})"

    def to_json(self):
        return [[list(w), m] for w, m in sorted(self.terms.items())]


def evaluate_weight(w, spec) -> Fraction:
    s1, s2, t = spec
    return w[0] * s1 + w[1] * s2 + w[2] * t


def euler_localize(ch: CharacterPolynomial, spec) -> Fraction:
    """e(-ch) = prod weight^(-multiplicity) at the specialization (s1, s2, t)."""
    spec = tuple(Fraction(x) for x in spec)
    num, den = Fraction(1), Fraction(1)
    for w, m in ch.terms.items():
        x = evaluate_weight(w, spec)
        if x == 0:
            raise ZeroWeightError(f"weight {w} vanishes at {spec}")
        if m > 0:
            den *= x ** m
        else:
            num *= x ** (-m)
    return num / den


def euler_limit(ch: CharacterPolynomial, direction) -> Fraction:
    """Coefficient of u^0 in e(-ch) at s = u * direction, t = 1.

    Weights without a t-component scale like u and give a pole u^-M; the rest
    expand as power series in u.  A weight that vanishes identically with
    negative multiplicity (a trivial summand upstairs) makes the term zero."""
    d1, d2 = (Fraction(x) for x in direction)
    const = Fraction(1)
    pole = 0
    slopes = []
    for w, m in ch.terms.items():
        a = w[0] * d1 + w[1] * d2
        b = w[2]
        if b == 0:
            if a == 0:
                if w != ZERO_WEIGHT:
                    raise ZeroWeightError(f"weight {w} vanishes along {direction}")
                if m < 0:
                    return Fraction(0)
                raise ZeroWeightError("zero weight in the denominator")
            const /= a ** m
            pole += m
        else:
            const /= Fraction(b) ** m
            slopes.append((a / b, m))
    if pole < 0:
        return Fraction(0)
    # exp of sum_w m sum_k (-1)^k c^k u^k / k, truncated at u^pole
    logc = [Fraction(0)] * (pole + 1)
    for c, m in slopes:
        if c == 0:
            continue
        p = Fraction(1)
        for k in range(1, pole + 1):
            p *= -c
            logc[k] += m * p / k
    e = [Fraction(1)] + [Fraction(0)] * pole
    for n in range(1, pole + 1):
        e[n] = sum(k * logc[k] * e[n - k] for k in range(1, n + 1)) / n
    return const * e[pole]


def _box_weight(b, w1, w2, sign=1):
    i, j = b
    return (sign * (i * w1[0] + j * w2[0]), sign * (i * w1[1] + j * w2[1]), sign * (i * w1[2] + j * w2[2]))


def vertex_ext_character(lam, mu, w1, w2) -> CharacterPolynomial:
    """chi(O) - chi(I_lam, I_mu) on a chart with tangent weights w1, w2:
    Q_mu + Q_lam^* w1 w2 - Q_lam^* Q_mu (1 - w1)(1 - w2), with Q the box character
    sum w1^-i w2^-j of the quotient."""
    w1, w2 = _vec(w1), _vec(w2)
    acc = defaultdict(int)
    w12 = _add(w1, w2)
    qmu = [_box_weight(b, w1, w2, -1) for b in boxes(mu)]
    qlam_dual = [_box_weight(b, w1, w2, 1) for b in boxes(lam)]
    for u in qmu:
        acc[u] += 1
    for u in qlam_dual:
        acc[_add(u, w12)] += 1
    corner = ((ZERO_WEIGHT, -1), (w1, 1), (w2, 1), (w12, -1))
    for u in qlam_dual:
        for v in qmu:
            uv = _add(u, v)
            for c, m in corner:
                acc[_add(uv, c)] += m
    return CharacterPolynomial._raw(acc)


def arm_leg_character(lam, w1, w2) -> CharacterPolynomial:
    """sum over boxes of w1^-l w2^(a+1) + w1^(l+1) w2^-a."""
    w1, w2 = _vec(w1), _vec(w2)
    acc = defaultdict(int)
    for _, l, a in arm_leg(lam):
        acc[tuple(-l * x + (a + 1) * y for x, y in zip(w1, w2))] += 1
        acc[tuple((l + 1) * x - a * y for x, y in zip(w1, w2))] += 1
    return CharacterPolynomial._raw(acc)
