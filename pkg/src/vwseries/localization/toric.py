"""Smooth complete toric surfaces from their fans.

A divisor class is given by its coefficient vector on the torus-invariant
divisors D_rho (one per ray, in cyclic order).  All characters live in the
character lattice Z^2 of the two-torus; a third coordinate (the scaling
weight t) is appended when they enter CharacterPolynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import CharacterPolynomial


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _dual_basis(u, v):
    """m_u, m_v with <m_u, u> = 1, <m_u, v> = 0 and vice versa."""
    d = _det(u, v)
    if abs(d) != 1:
        raise ValueError(f"cone ({u}, {v}) is not smooth")
    return (v[1] * d, -v[0] * d), (-u[1] * d, u[0] * d)


@dataclass(frozen=True)
class FixedPoint:
    rays: tuple           # indices of the two rays spanning the cone
    coords: tuple         # characters of the two coordinate functions
    tangent: tuple        # tangent weights = minus the coordinate characters


@dataclass(frozen=True)
class ToricSurfaceSpec:
    name: str
    rays: tuple
    fixed_points: tuple = field(init=False)

    def __post_init__(self):
        n = len(self.rays)
        if n < 3:
            raise ValueError("a complete fan needs at least three rays")
        pts = []
        for k in range(n):
            a, b = k, (k + 1) % n
            ma, mb = _dual_basis(self.rays[a], self.rays[b])
            pts.append(FixedPoint((a, b), (ma, mb), ((-ma[0], -ma[1]), (-mb[0], -mb[1]))))
        object.__setattr__(self, "fixed_points", tuple(pts))

    @property
    def euler(self) -> int:
        return len(self.rays)

    @property
    def chi(self) -> int:
        return 1

    @property
    def canonical(self) -> tuple:
        return (-1,) * len(self.rays)

    @property
    def K2(self) -> int:
        return self.intersection(self.canonical, self.canonical)

    def self_intersection(self, k: int) -> int:
        n = len(self.rays)
        prev, nxt, u = self.rays[k - 1], self.rays[(k + 1) % n], self.rays[k]
        s = (prev[0] + nxt[0], prev[1] + nxt[1])
        b = s[0] // u[0] if u[0] else s[1] // u[1]
        if (b * u[0], b * u[1]) != s:
            raise ValueError("fan is not smooth at ray %d" % k)
        return -b

    def intersection(self, d, e) -> int:
        n = len(self.rays)
        total = 0
        for i in range(n):
            if not d[i]:
                continue
            for j in range(n):
                if not e[j]:
                    continue
                if i == j:
                    total += d[i] * e[j] * self.self_intersection(i)
                elif (i - j) % n in (1, n - 1):
                    total += d[i] * e[j]
        return total

    def character(self, d, alpha: int) -> tuple:
        """Character of the local generator of O(D) on the chart of fixed point alpha."""
        fp = self.fixed_points[alpha]
        a, b = fp.rays
        ma, mb = fp.coords
        return (-d[a] * ma[0] - d[b] * mb[0], -d[a] * ma[1] - d[b] * mb[1])

    def canonical_character(self, alpha: int) -> tuple:
        return self.character(self.canonical, alpha)

    def euler_characteristic(self, d) -> CharacterPolynomial:
        """Equivariant chi(S, O(D)) as a character, from the Cech complex of the
        fan: a lattice point m contributes 1 if no ray is bad, 1 if all are,
        and 1 - k if the bad rays form k cyclic runs."""
        n = len(self.rays)
        bound = 2 * sum(abs(x) for x in d) + 4
        acc = {}
        for x in range(-bound, bound + 1):
            for y in range(-bound, bound + 1):
                bad = [x * u[0] + y * u[1] < -d[k] for k, u in enumerate(self.rays)]
                nb = sum(bad)
                if nb == 0 or nb == n:
                    c = 1
                else:
                    runs = sum(1 for k in range(n) if bad[k] and not bad[k - 1])
                    c = 1 - runs
                if c:
                    acc[(x, y, 0)] = c
        return CharacterPolynomial(acc)

    def riemann_roch(self, d) -> int:
        k = self.canonical
        return self.chi + Fraction(self.intersection(d, d) - self.intersection(d, k), 2)

    def euler_characteristic_at(self, d, s1, s2) -> Fraction:
        """sum_alpha x^{m_alpha} / prod (1 - x^{coord}) at the multiplicative point
        x = (s1, s2); an independent check on euler_characteristic."""
        total = Fraction(0)
        for alpha, fp in enumerate(self.fixed_points):
            m = self.character(d, alpha)
            num = Fraction(s1) ** m[0] * Fraction(s2) ** m[1]
            den = Fraction(1)
            for c in fp.coords:
                den *= 1 - Fraction(s1) ** c[0] * Fraction(s2) ** c[1]
            total += num / den
        return total

    def pairing_data(self, classes) -> dict:
        """a_i K and a_i a_j for a list of divisor classes."""
        k = self.canonical
        return {
            "aK": [self.intersection(a, k) for a in classes],
            "aa": [[self.intersection(a, b) for b in classes] for a in classes],
        }


def p2() -> ToricSurfaceSpec:
    return ToricSurfaceSpec("P2", ((1, 0), (0, 1), (-1, -1)))


def p1xp1() -> ToricSurfaceSpec:
    return ToricSurfaceSpec("P1xP1", ((1, 0), (0, 1), (-1, 0), (0, -1)))


def hirzebruch(a: int = 1) -> ToricSurfaceSpec:
    return ToricSurfaceSpec(f"F{a}", ((1, 0), (0, 1), (-1, a), (0, -1)))


PRESETS = {"P2": p2, "P1xP1": p1xp1, "F1": lambda: hirzebruch(1)}


def preset(name: str) -> ToricSurfaceSpec:
    try:
        return PRESETS[name]()
    except KeyError:
        raise ValueError(f"unknown toric preset {name!r}; choose from {sorted(PRESETS)}") from None


def divisor_from_degrees(S: ToricSurfaceSpec, degrees) -> tuple:
    """P2: (d,) means d*H.  P1xP1 and F_a: (x, y) means x*D_0 + y*D_1."""
    n = len(S.rays)
    degrees = tuple(degrees)
    if S.name == "P2":
        if len(degrees) != 1:
            raise ValueError("P2 classes take one degree")
        return (degrees[0],) + (0,) * (n - 1)
    if len(degrees) != 2:
        raise ValueError(f"{S.name} classes take two degrees")
    return (degrees[0], degrees[1]) + (0,) * (n - 2)
