"""Closed-form universal series for ranks 2..5.

Vertical sets hold C_I for I a subset of {1..r-1}; horizontal sets hold the
S-dual D_I.  Both are built from the same algebraic recipes; only the input
series differ (theta ratios of A_{r-1} or its dual, u(q^2) or v(q), r(q) or
s(q), J or its dual).  Pairs are recovered from subsets by

    C_0 = C_{}, C_ii = C_{i}/C_0, C_ij = C_{ij} C_0 / (C_{i} C_{j}).

Square-root and quadratic branches: vertical branches are forced by the
leading-term table below, horizontal ones take the principal root of the
leading coefficient (positive real part).  Every choice lands in
``branch_log``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .biseries import BiSeries
from .cyclotomic import as_scalar
from .modular import (J_dual_series, J_series, rogers_ramanujan_cf, s_series, t_ratio, u_series,
                      v_series)
from .puiseux import PuiseuxSeries
from .roots import field_sqrt

MAX_PAD = 24


class BranchError(ArithmeticError):
    pass


# ---- leading-term table ------------------------------------------------------

def pair_leading(r: int, i: int, j: int) -> tuple[Fraction, Fraction]:
    """(coefficient, exponent) of the leading monomial of C_ij, or of C_0 for i = j = 0."""
    if i == 0 and j == 0:
        return Fraction(1), Fraction(0)
    if i > j:
        i, j = j, i
    if i == j:
        return Fraction(1, comb(r, i)), Fraction(i * (i - r), 2 * r)
    return Fraction(j * (r - i), (j - i) * r), Fraction(i * (j - r), r)


def subset_leading(r: int, subset) -> tuple[Fraction, Fraction]:
    c, e = Fraction(1), Fraction(0)
    s = sorted(subset)
    for a in range(len(s)):
        for b in range(a, len(s)):
            pc, pe = pair_leading(r, s[a], s[b])
            c *= pc
            e += pe
    return c, e


def all_subsets(r: int) -> list[tuple]:
    idx = range(1, r)
    return [c for k in range(r) for c in combinations(idx, k)]


def pair_keys(r: int) -> list[tuple]:
    return [(0, 0)] + [(i, j) for i in range(1, r) for j in range(i, r)]


def pair_name(key, letter="C") -> str:
    return f"{letter}0" if key == (0, 0) else f"{letter}{key[0]}{key[1]}"


def subset_norm(subset) -> int:
    """||I||, the sum of the elements."""
    return sum(subset)


# ---- the set -----------------------------------------------------------------

@dataclass
class UniversalSet:
    rank: int
    side: str
    refined: bool
    order: Fraction
    by_subset: dict
    by_pair: dict = field(default_factory=dict)
    branch_log: list = field(default_factory=list)
    aux: dict = field(default_factory=dict)

    @property
    def letter(self) -> str:
        return "C" if self.side == "vertical" else "D"

    def pair(self, i: int, j: int):
        if i > j:
            i, j = j, i
        return self.by_pair[(i, j)]

    @property
    def zero(self):
        return self.by_pair[(0, 0)]

    def subset(self, subset):
        return self.by_subset[tuple(sorted(subset))]

    def names(self) -> list[str]:
        return [pair_name(k, self.letter) for k in pair_keys(self.rank)]

    def named(self) -> dict:
        return {pair_name(k, self.letter): self.by_pair[k] for k in pair_keys(self.rank)}


def pairs_from_subsets(r: int, by_subset: dict) -> dict:
    c0 = by_subset[()]
    out = {(0, 0): c0}
    c0i = _inv(c0)
    for i in range(1, r):
        out[(i, i)] = by_subset[(i,)] * c0i
    for i in range(1, r):
        for j in range(i + 1, r):
            out[(i, j)] = by_subset[(i, j)] * c0 * _inv(by_subset[(i,)] * by_subset[(j,)])
    return out


def subsets_from_pairs(r: int, by_pair: dict) -> dict:
    out = {}
    for s in all_subsets(r):
        v = by_pair[(0, 0)]
        for a in range(len(s)):
            for b in range(a, len(s)):
                v = v * by_pair[(s[a], s[b])]
        out[s] = v
    return out


# ---- small helpers shared by the recipes ---------------------------------------

def _inv(x):
    return x.invert()


def _y1(x):
    return x.at_y_one() if isinstance(x, BiSeries) else x


def _lead(x):
    s = _y1(x)
    if s.is_zero():
        raise BranchError("leading term of a series that vanishes at y = 1")
    return s.leading_coefficient(), s.valuation


def _principal_sqrt(x):
    base = _y1(x)
    if base.is_zero():
        raise BranchError("square root of a series vanishing to the working order")
    root = field_sqrt(base.leading_coefficient())
    if isinstance(x, BiSeries):
        if x.valuation != base.valuation:
            raise BranchError("refined radicand has a leading term vanishing at y = 1")
        return x.sqrt(value_at_one=root)
    return x.sqrt(root)


def _matches(x, target) -> bool:
    c, e = _lead(x)
    return e == target[1] and c == as_scalar(target[0])


class _Recipe:
    """Input series and branch bookkeeping for one (rank, side, refined, order)."""

    def __init__(self, r, side, refined, work):
        self.r = r
        self.side = side
        self.refined = refined
        self.dual = side == "horizontal"
        self.work = Fraction(work)
        self.log = []
        self.aux = {}

    def lift(self, x):
        return BiSeries._coerce(x) if self.refined else x

    def t(self, ell, refined=None):
        ref = self.refined if refined is None else refined
        return self.lift(t_ratio(self.r - 1, ell, self.dual, ref, self.work))

    def u2_sq(self):
        """u(q^2)^2 (vertical) or v(q)^2 (horizontal), unrefined."""
        w = self.work
        if self.dual:
            return v_series(w + 1) ** 2
        u2 = u_series(w / 2 + 1).rescale_and_phase(2, 0)
        return (u2 ** 2).truncate(w + 1)

    def j(self):
        return J_dual_series(self.work + 1) if self.dual else J_series(self.work + 1)

    def rr(self):
        return s_series(self.work + 1) if self.dual else rogers_ramanujan_cf(self.work + 1)

    def sqrt(self, x, label, target=None):
        """Square root; vertical picks the sign hitting ``target``, horizontal is principal."""
        root = _principal_sqrt(x)
        if target is None or self.dual:
            self.log.append({"what": label, "rule": "principal",
                             "leading": str(_lead(root)[0])})
            return root
        for cand, sign in ((root, "+"), (-root, "-")):
            if _matches(cand, target):
                self.log.append({"what": label, "rule": "leading-term table", "sign": sign,
                                 "leading": str(_lead(cand)[0])})
                return cand
        raise BranchError(f"{label}: neither square root has leading term {target}")

    def quadratic(self, b, c, label, pick=None):
        """Roots of X^2 + bX + c as (X_plus, X_minus).

        ``pick(plus, minus)`` returns True when the labelling must be kept
        (vertical); horizontal keeps the principal labelling.
        """
        disc = b * b - 4 * c
        root = _principal_sqrt(disc)
        plus = (root - b) * Fraction(1, 2)
        minus = (-b - root) * Fraction(1, 2)
        if pick is None or self.dual:
            self.log.append({"what": label, "rule": "principal",
                             "disc_root_leading": str(_lead(root)[0])})
        else:
            keep, swap = pick(plus, minus), pick(minus, plus)
            if keep == swap:
                raise BranchError(f"{label}: leading-term table does not single out a root")
            self.log.append({"what": label, "rule": "leading-term table",
                             "sign": "+" if keep else "-"})
            if not keep:
                plus, minus = minus, plus
        self.aux.setdefault("quadratics", {})[label] = (b, c, plus, minus)
        return plus, minus


def _rank2(p: _Recipe):
    t = p.t(1)
    one = p.lift(PuiseuxSeries.one())
    return {(): one, (1,): t}


def _rank3(p: _Recipe):
    t = p.t(1)
    t1 = p.lift(p.t(1, refined=False)) if p.refined else t
    s = t + 3 * t1 if p.refined else 4 * t
    b = -(t * s)
    c = s
    lead0 = subset_leading(3, ())

    def pick(xp, xm):
        return _matches(t * xm, lead0)

    xp, xm = p.quadratic(b, c, "X", pick)
    p.aux.update(X_plus=xp, X_minus=xm, t=t)
    return {(): t * xm, (1,): t, (2,): t, (1, 2): t * xp}


def _rank4(p: _Recipe):
    t1, t2 = p.t(1), p.t(2)
    u2 = p.u2_sq()
    if p.refined:
        jj = p.j()
        jh = jj.sqrt(value_at_one=u2.leading_coefficient())
        p.log.append({"what": "J^(1/2)", "rule": "y=1 value matches u(q^2)^2" if not p.dual
                      else "y=1 value matches v^2"})
        u2l = p.lift(u2)
        a = jh + _inv(jh) + 2 * (u2l + _inv(u2l))
        u4 = jj
    else:
        a = 3 * (_inv(u2) + u2)
        u4 = u2 * u2
    u4i = _inv(u4)
    t2i = _inv(t2)
    disc = a * a * Fraction(1, 4) - 1
    lead0 = subset_leading(4, ())

    def c_empty(z):
        zi = _inv(z)
        return (z - zi) * _inv(t2i * u4i - zi)

    root = _principal_sqrt(disc)
    half = a * Fraction(1, 2)
    zp, zm = half + root, half - root
    if p.dual:
        z = zp
        p.log.append({"what": "Z", "rule": "principal", "leading": str(_lead(root)[0])})
    else:
        kp, km = _matches(c_empty(zp), lead0), _matches(c_empty(zm), lead0)
        if kp == km:
            raise BranchError("Z: leading-term table does not single out a root")
        z = zp if kp else zm
        p.log.append({"what": "Z", "rule": "leading-term table", "sign": "+" if kp else "-"})
    zi = _inv(z)
    p.aux.update(Z=z, A=a)
    out = {
        (): (z - zi) * _inv(t2i * u4i - zi),
        (1, 3): (zi - z) * _inv(t2i * u4i - z),
        (1,): (u4 + 1) * t1,
        (3,): (u4 + 1) * t1,
        (1, 2): (1 + u4i) * t1,
        (2, 3): (1 + u4i) * t1,
        (2,): (z - zi) * _inv(t2i * z - u4),
        (1, 2, 3): (zi - z) * _inv(t2i * zi - u4),
    }
    return out


def _rank5(p: _Recipe):
    if p.refined:
        raise ValueError("no refined closed form is available for rank 5")
    r = 5
    t1, t2 = p.t(1), p.t(2)
    rr = p.rr()
    r5 = rr ** 5
    r5i = _inv(r5)
    beta1 = t1 * (3 * r5i + 2 - 8 * r5) * Fraction(1, 25)
    beta2 = t2 * (8 * r5i + 2 - 3 * r5) * Fraction(1, 25)
    px = 3 * r5i + 1
    py = 1 - 3 * r5
    bx = -(Fraction(4, 5) * beta1 * (beta1 * _inv(t1) - 1) * px)
    cx = Fraction(4, 5) * beta1 * beta1 * px
    by = -(Fraction(4, 5) * beta2 * (beta2 * _inv(t2) - 1) * py)
    cy = Fraction(4, 5) * beta2 * beta2 * py

    xp, xm = p.quadratic(bx, cx, "X", lambda a, b: _matches(b, subset_leading(r, (1,))))
    yp, ym = p.quadratic(by, cy, "Y", lambda a, b: _matches(b, subset_leading(r, (2,))))

    az = Fraction(6, 25) * (8 * r5i - 13 - 8 * r5)
    root = _principal_sqrt(az * az * Fraction(1, 4) - 1)
    half = az * Fraction(1, 2)
    bb = _inv(beta1 * beta2)
    c0_sq = lambda z: z * xm * xm * ym * ym * bb  # noqa: E731
    if p.dual:
        z = half + root
        p.log.append({"what": "Z", "rule": "principal", "leading": str(_lead(root)[0])})
    else:
        c, e = subset_leading(r, ())
        target = (c * c, 2 * e)
        kp = _matches(c0_sq(half + root), target)
        km = _matches(c0_sq(half - root), target)
        if kp == km:
            raise BranchError("Z: leading-term table does not single out a root")
        z = half + root if kp else half - root
        p.log.append({"what": "Z", "rule": "leading-term table", "sign": "+" if kp else "-"})
    zi = _inv(z)

    def lead(sub):
        return subset_leading(r, sub)

    c_empty = p.sqrt(c0_sq(z), "C_{}", lead(()))
    c23 = p.sqrt(xp * xp * ym * ym * zi * bb, "C_{23}", lead((2, 3)))
    c14 = p.sqrt(xm * xm * yp * yp * zi * bb, "C_{14}", lead((1, 4)))
    c1234 = p.sqrt(z * xp * xp * yp * yp * bb, "C_{1234}", lead((1, 2, 3, 4)))
    p.aux.update(X_plus=xp, X_minus=xm, Y_plus=yp, Y_minus=ym, Z=z, A=az, beta1=beta1,
                 beta2=beta2, t1=t1, t2=t2, r5=r5)
    return {
        (): c_empty,
        (1,): xm, (4,): xm,
        (2,): ym, (3,): ym,
        (1, 2): beta2, (3, 4): beta2,
        (1, 3): beta1, (2, 4): beta1,
        (2, 3): c23, (1, 4): c14,
        (1, 2, 3): xp, (2, 3, 4): xp,
        (1, 2, 4): yp, (1, 3, 4): yp,
        (1, 2, 3, 4): c1234,
    }


_RECIPES = {2: _rank2, 3: _rank3, 4: _rank4, 5: _rank5}


def _normalized_order(s, side, r, key):
    """Order of the series divided by its leading monomial."""
    if s.order is None:
        return None
    if side == "vertical":
        return s.order - pair_leading(r, *key)[1]
    return s.order - s.valuation if not s.is_zero() else s.order


def _build(r, side, refined, order):
    if r not in _RECIPES:
        raise ValueError(f"closed forms exist for ranks 2..5, not {r}")
    if refined and r > 4:
        raise ValueError("refined closed forms exist only for ranks 2..4")
    order = Fraction(order)
    pad = Fraction(2)
    while pad <= MAX_PAD:
        p = _Recipe(r, side, refined, order + pad)
        by_subset = _RECIPES[r](p)
        by_pair = pairs_from_subsets(r, by_subset)
        short = [k for k, s in by_pair.items()
                 if (o := _normalized_order(s, side, r, k)) is not None and o < order]
        if not short:
            trimmed = {}
            for k, s in by_pair.items():
                lead = pair_leading(r, *k)[1] if side == "vertical" else (s.valuation if not s.is_zero() else 0)
                trimmed[k] = s.truncate(order + lead)
            return UniversalSet(r, side, refined, order, by_subset, trimmed, p.log, p.aux)
        pad += 2
    raise ArithmeticError(f"could not reach order {order} for rank {r} {side}")


@lru_cache(maxsize=64)
def _build_cached(r, side, refined, order):
    return _build(r, side, refined, order)


def build_vertical(r: int, order=10, refined: bool = False) -> UniversalSet:
    """C-series with normalized pairs known below q^order."""
    return _build_cached(int(r), "vertical", bool(refined), Fraction(order))


def build_horizontal(r: int, order=10, refined: bool = False) -> UniversalSet:
    """D-series with normalized pairs known below q^order."""
    return _build_cached(int(r), "horizontal", bool(refined), Fraction(order))


def build_set(r: int, side: str, order=10, refined: bool = False) -> UniversalSet:
    if side not in ("vertical", "horizontal"):
        raise ValueError(f"side must be vertical or horizontal, not {side!r}")
    return _build_cached(int(r), side, bool(refined), Fraction(order))


# ---- normalization -------------------------------------------------------------

def normalize_universal(uset: UniversalSet) -> dict:
    """{name: series / leading monomial}.  Vertical leading monomials must match the table."""
    out = {}
    r = uset.rank
    for key in pair_keys(r):
        s = uset.by_pair[key]
        name = pair_name(key, uset.letter)
        if uset.refined:
            s = s.at_y_one() if isinstance(s, BiSeries) else s
        c, e = s.leading_coefficient(), s.valuation
        if uset.side == "vertical":
            tc, te = pair_leading(r, *key)
            if e != te or not (c == as_scalar(tc)):
                raise BranchError(f"{name}: leading term {c} q^{e}, expected {tc} q^{te}")
        out[name] = s.shift_by(-e).scale(as_scalar(c).inverse())
    return out


def normalized_refined(uset: UniversalSet) -> dict:
    """Refined pairs divided by the leading monomial of their y = 1 value."""
    out = {}
    for key in pair_keys(uset.rank):
        s = uset.by_pair[key]
        base = s.at_y_one()
        c, e = base.leading_coefficient(), base.valuation
        out[pair_name(key, uset.letter)] = s.shift_by(-e) * BiSeries._coerce(as_scalar(c).inverse())
    return out


def leading_constants(uset: UniversalSet) -> dict:
    """{name: coefficient of q^0} -- the Donaldson constants on the horizontal side."""
    return {pair_name(k, uset.letter): uset.by_pair[k].coefficient_at(0) for k in pair_keys(uset.rank)}
