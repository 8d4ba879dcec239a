"""Named modular series: eta, Delta, lattice thetas, continued fractions,
Hauptmoduln, the weak Jacobi form phi_{-2,1} and J(q, y)."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import ceil

from flint import fmpq_poly

from .biseries import BiSeries
from .cyclotomic import CyclotomicScalar, epsilon, golden_ratio, sqrt2
from .lattice import a_gram, a_gram_inverse, enumerate_short_vectors, glue_vector
from .puiseux import PuiseuxSeries
from .ratfunc import YFunc

MAX_CF_DEPTH = 400


class ConvergenceError(RuntimeError):
    pass


def _frac(x) -> Fraction:
    return Fraction(x)


# ---- eta and Delta ------------------------------------------------------

def euler_product_pentagonal(n: int) -> list[int]:
    """Coefficients of prod_{k>=1} (1 - x^k) below x^n via pentagonal numbers."""
    c = [0] * n
    k = 0
    while True:
        sign = -1 if k % 2 else 1
        hit = False
        for j in ((k * (3 * k - 1)) // 2, (k * (3 * k + 1)) // 2):
            if j < n:
                c[j] += sign
                hit = True
            if k == 0:
                break
        if not hit:
            break
        k += 1
    return c


def euler_product_direct(n: int) -> list[int]:
    """Same coefficients by multiplying the factors one at a time."""
    c = [0] * n
    if n:
        c[0] = 1
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            c[i] -= c[i - k]
    return c


def eta_series(scale=1, order=10, method: str = "pentagonal") -> PuiseuxSeries:
    """eta(q^s) = q^(s/24) prod (1 - q^(s n)) modulo q^order."""
    s = _frac(scale)
    order = _frac(order)
    lead = s / 24
    n = max(0, ceil((order - lead) / s))
    coeffs = euler_product_pentagonal(n) if method == "pentagonal" else euler_product_direct(n)
    base = PuiseuxSeries._make(1, 0, 1, [fmpq_poly(coeffs)], Fraction(n))
    return base.rescale_and_phase(s, 0).shift_by(lead).truncate(order)


def eta_quotient(powers: dict, order) -> PuiseuxSeries:
    """prod eta(q^s)^e over {s: e}, modulo q^order."""
    order = _frac(order)
    val = sum((_frac(s) * e / 24 for s, e in powers.items()), Fraction(0))
    # unit parts only; the prefactor q^val is attached at the end
    need = order - val
    out = PuiseuxSeries.one()
    for s, e in powers.items():
        if e == 0:
            continue
        s = _frac(s)
        n = max(1, ceil(need / s))
        base = PuiseuxSeries._make(1, 0, 1, [fmpq_poly(euler_product_pentagonal(n))], Fraction(n))
        unit = base.rescale_and_phase(s, 0)
        out = out * (unit ** e)
    return out.truncate(need).shift_by(val)


def delta_series(scale=1, order=10) -> PuiseuxSeries:
    """Delta(q^s) = eta(q^s)^24."""
    return eta_quotient({scale: 24}, order)


def delta_sqrt(scale=1, order=10) -> PuiseuxSeries:
    """Delta(q^s)^(1/2), realized as eta(q^s)^12."""
    return eta_quotient({scale: 12}, order)


# ---- lattice theta functions ------------------------------------------

def _theta_terms(m: int, ell: int, dual: bool, refined: bool, order):
    """Aggregate lattice sums into {(q-exponent, key): count}.

    key is the Y-exponent (Y = y^(1/2)) for refined sums and the phase
    numerator modulo m+1 for the dual twist, else 0.
    """
    order = _frac(order)
    agg = defaultdict(int)
    if not dual:
        lam = glue_vector(m)
        shift = tuple(ell * x for x in lam)
        for v, q2 in enumerate_short_vectors(a_gram(m), 2 * order, shift):
            e = q2 / 2
            if e >= order:
                continue
            key = 0
            if refined:
                # <v - l lambda, M^{-1}(1..1)> = sum(v) - l m / 2
                key = 2 * sum(v) - ell * m
            agg[(e, key)] += 1
        return agg
    ginv = a_gram_inverse(m)
    weights = [Fraction(i * (m + 1 - i), 2) for i in range(1, m + 1)]
    for v, q2 in enumerate_short_vectors(ginv, 2 * order):
        e = q2 / 2
        if e >= order:
            continue
        # phase exp(2 pi i l (M^{-1} v)_1) = eps_{m+1}^{-l sum_j j v_j}
        ph = (-ell * sum((j + 1) * v[j] for j in range(m))) % (m + 1)
        yk = 0
        if refined:
            yk = int(2 * sum(weights[j] * v[j] for j in range(m)))
        agg[(e, (ph, yk))] += 1
    return agg


def theta_series(m: int, ell: int = 0, dual: bool = False, refined: bool = False, order=10):
    """Theta_{A_m,ell} or Theta_{A_m^dual,ell}, optionally y-refined (BiSeries)."""
    return _theta_cached(int(m), int(ell), bool(dual), bool(refined), _frac(order))


@lru_cache(maxsize=256)
def _theta_cached(m, ell, dual, refined, order):
    if m < 1:
        raise ValueError("lattice rank must be positive")
    agg = _theta_terms(m, ell, dual, refined, order)
    order = _frac(order)
    if not refined:
        terms = defaultdict(lambda: CyclotomicScalar(1, []))
        for (e, key), n in agg.items():
            if dual:
                ph, _ = key
                terms[e] = terms[e] + epsilon(m + 1, ph) * n if ph else terms[e] + n
            else:
                terms[e] = terms[e] + n
        return PuiseuxSeries.from_terms(dict(terms), order)
    dterms = defaultdict(lambda: CyclotomicScalar(1, []))
    for (e, key), n in agg.items():
        if dual:
            ph, yk = key
            c = epsilon(m + 1, ph) * n if ph else CyclotomicScalar(1, [n])
        else:
            yk, c = key, CyclotomicScalar(1, [n])
        dterms[(e, yk)] = dterms[(e, yk)] + c
    return BiSeries.from_double_terms({k: v for k, v in dterms.items() if not v.is_zero()}, order)


def theta_valuation(m: int, ell: int, dual: bool = False) -> Fraction:
    """Smallest exponent of Theta: k(m+1-k)/(2(m+1)) for k = ell mod m+1."""
    if dual or ell % (m + 1) == 0:
        return Fraction(0)
    k = ell % (m + 1)
    # min of <v - k lambda, v - k lambda>/2 is k(m+1-k)/(2(m+1))
    return Fraction(k * (m + 1 - k), 2 * (m + 1))


def t_ratio(m: int, ell: int, dual: bool = False, refined: bool = False, order=10):
    """t = Theta_0 / Theta_ell to the requested order."""
    order = _frac(order)
    vb = theta_valuation(m, ell, dual)
    num = theta_series(m, 0, dual, refined, order + vb)
    den = theta_series(m, ell, dual, refined, order + 2 * vb)
    out = (num / den).truncate(order)
    if out.order is None or out.order < order:
        raise ArithmeticError("insufficient precision in t_ratio")
    return out


# ---- continued fractions --------------------------------------------------

def u_series(order=10) -> PuiseuxSeries:
    """Octic continued fraction u(q) = sqrt2 eta(q) eta(q^4)^2 / eta(q^2)^3."""
    return eta_quotient({1: 1, 4: 2, 2: -3}, order) * sqrt2()


def v_series(order=10) -> PuiseuxSeries:
    """v(q) = eta(q^(1/2)) eta(q^(1/8))^2 / eta(q^(1/4))^3."""
    h = Fraction(1, 2)
    return eta_quotient({h: 1, Fraction(1, 8): 2, Fraction(1, 4): -3}, order)


def _cf_tail(partials, depth: int, order) -> PuiseuxSeries:
    """1 + a_1/(1 + a_2/(... (1 + a_depth))) with a_k = partials(k)."""
    f = PuiseuxSeries.one().truncate(order)
    for k in range(depth, 0, -1):
        f = 1 + partials(k) / f
        f = f.truncate(order)
    return f


def _stable_cf(partials, order, start: int = 1) -> tuple[PuiseuxSeries, int]:
    """Evaluate the continued fraction until depths d and d+2 agree."""
    d = start
    prev = _cf_tail(partials, d, order)
    while d <= MAX_CF_DEPTH:
        nxt = _cf_tail(partials, d + 2, order)
        if prev.agrees_with(nxt, order):
            return prev, d
        # depths d+1 and d+3 next; keep stepping by one so d is minimal
        d += 1
        prev = _cf_tail(partials, d, order)
    raise ConvergenceError(f"continued fraction not stable at depth {MAX_CF_DEPTH} for order {order}")


def cubic_cf(order=10, with_depth: bool = False):
    """Ramanujan's cubic continued fraction c(q) via convergents."""
    order = _frac(order)
    lead = Fraction(1, 3)

    def a(k):
        return PuiseuxSeries.from_terms({k: 1, 2 * k: 1})

    f, depth = _stable_cf(a, order - lead)
    out = (f.invert(order - lead)).shift_by(lead).truncate(order)
    return (out, depth) if with_depth else out


def rogers_ramanujan_cf(order=10, with_depth: bool = False):
    """Rogers-Ramanujan continued fraction r(q) via convergents."""
    order = _frac(order)
    lead = Fraction(1, 5)

    def a(k):
        return PuiseuxSeries.monomial(1, k)

    f, depth = _stable_cf(a, order - lead)
    out = (f.invert(order - lead)).shift_by(lead).truncate(order)
    return (out, depth) if with_depth else out


def cf_convergent(name: str, depth: int, order) -> PuiseuxSeries:
    """Depth-d convergent of c or r (no stabilization)."""
    order = _frac(order)
    if name == "c":
        lead = Fraction(1, 3)
        f = _cf_tail(lambda k: PuiseuxSeries.from_terms({k: 1, 2 * k: 1}), depth, order - lead)
    elif name == "r":
        lead = Fraction(1, 5)
        f = _cf_tail(lambda k: PuiseuxSeries.monomial(1, k), depth, order - lead)
    else:
        raise ValueError(f"no convergents for {name!r}")
    return f.invert(order - lead).shift_by(lead).truncate(order)


def s_series(order=10) -> PuiseuxSeries:
    """s(q) = (1 - phi r(q)) / (phi + r(q)) with phi the golden ratio."""
    phi = golden_ratio()
    r = rogers_ramanujan_cf(order)
    return ((1 - r * phi) / (r + phi)).truncate(order)


def continued_fraction(name: str, order=10) -> PuiseuxSeries:
    table = {"u": u_series, "v": v_series, "c": cubic_cf, "r": rogers_ramanujan_cf, "s": s_series}
    if name not in table:
        raise ValueError(f"unknown continued fraction {name!r}")
    return table[name](order)


# ---- Hauptmoduln ------------------------------------------------------------

HAUPTMODUL_ETA = {
    3: {1: 12, 3: -12},
    4: {1: 8, 4: -8},
    5: {1: 6, 5: -6},
    6: {1: 5, 3: 1, 2: -1, 6: -5},
    7: {1: 4, 7: -4},
}


def hauptmodul(level: int, order=10) -> PuiseuxSeries:
    if level not in HAUPTMODUL_ETA:
        raise ValueError("Hauptmoduln are provided for levels 3..7")
    return eta_quotient(HAUPTMODUL_ETA[level], order)


# ---- weak Jacobi form and J ---------------------------------------------------

def _laurent_dict_series(rows, step, order, shift=Fraction(0)) -> BiSeries:
    coeffs = [YFunc.laurent(r) if r else YFunc.zero() for r in rows]
    return BiSeries._make(shift, step, coeffs, order)


def jacobi_product(scale_q=1, scale_y=1, order=10) -> BiSeries:
    """prod (1 - y^b q^(a n))^2 (1 - y^-b q^(a n))^2 / (1 - q^(a n))^4."""
    a = _frac(scale_q)
    b = _frac(scale_y)
    k = 2 * b  # Y-exponent of y^b
    if k.denominator != 1:
        raise ValueError("scale_y must be a half-integer multiple")
    k = int(k)
    order = _frac(order)
    n = max(1, ceil(order / a))  # slots in x = q^a
    rows = [defaultdict(int) for _ in range(n)]
    rows[0][0] = 1
    for j in range(1, n):
        for sgn in (k, -k):
            for _ in range(2):
                for i in range(n - 1, j - 1, -1):
                    src = rows[i - j]
                    if src:
                        dst = rows[i]
                        for e, c in src.items():
                            dst[e + sgn] -= c
        for _ in range(4):
            for i in range(j, n):
                src = rows[i - j]
                if src:
                    dst = rows[i]
                    for e, c in src.items():
                        dst[e] += c
    rows = [{e: c for e, c in r.items() if c} for r in rows]
    base = _laurent_dict_series(rows, 1, Fraction(n))
    return base.rescale_and_phase(a, 0).truncate(order)


def jacobi_prefactor(scale_y=1) -> YFunc:
    """(y^(b/2) - y^(-b/2))^2 = y^b - 2 + y^-b."""
    k = 2 * _frac(scale_y)
    if k.denominator != 1:
        raise ValueError("scale_y must be a half-integer multiple")
    k = int(k)
    return YFunc.laurent({k: 1, 0: -2, -k: 1})


def weak_jacobi_phi(scale_q=1, scale_y=1, order=10) -> BiSeries:
    """phi_{-2,1}(q^a, y^b)."""
    return jacobi_product(scale_q, scale_y, order) * BiSeries._coerce(jacobi_prefactor(scale_y))


def phi_sqrt(scale_q=1, scale_y=1, order=10) -> BiSeries:
    """phi_{-2,1}(q^a, y^b)^(1/2) as (y^(b/2) - y^(-b/2)) prod (1-y^b q^an)(1-y^-b q^an)/(1-q^an)^2."""
    a = _frac(scale_q)
    b = _frac(scale_y)
    k = int(b)  # Y-exponent of y^(b/2)
    if Fraction(k) != b:
        raise ValueError("scale_y must be an integer here")
    order = _frac(order)
    n = max(1, ceil(order / a))
    rows = [defaultdict(int) for _ in range(n)]
    rows[0][0] = 1
    kk = 2 * k
    for j in range(1, n):
        for sgn in (kk, -kk):
            for i in range(n - 1, j - 1, -1):
                src = rows[i - j]
                if src:
                    for e, c in src.items():
                        rows[i][e + sgn] -= c
        for _ in range(2):
            for i in range(j, n):
                src = rows[i - j]
                if src:
                    for e, c in src.items():
                        rows[i][e] += c
    rows = [{e: c for e, c in r.items() if c} for r in rows]
    base = _laurent_dict_series(rows, 1, Fraction(n)).rescale_and_phase(a, 0).truncate(order)
    return base * BiSeries._coerce(YFunc.laurent({k: 1, -k: -1}))


def J_series(order=10, literal: bool = False) -> BiSeries:
    """J(q,y) = u(q^2)^4/4 phi(q^2,y^2) phi(q^8,y^4)^2 / (phi(q^4,y^4) phi(q^4,y^2)^2).

    By default the y-prefactors are cancelled by hand: their quotient is
    (y + 1/y)^2.  ``literal=True`` divides the full phi series instead.
    """
    order = _frac(order)
    u2 = u_series(order / 2 + 1).rescale_and_phase(2, 0)  # u(q^2), valuation 1/4
    u4 = (u2 ** 4).truncate(order)  # valuation 1
    rel = order - 1
    if literal:
        num = weak_jacobi_phi(2, 2, rel) * weak_jacobi_phi(8, 4, rel) ** 2
        den = weak_jacobi_phi(4, 4, rel) * weak_jacobi_phi(4, 2, rel) ** 2
        ratio = (num / den).truncate(rel)
    else:
        num = jacobi_product(2, 2, rel) * jacobi_product(8, 4, rel) ** 2
        den = jacobi_product(4, 4, rel) * jacobi_product(4, 2, rel) ** 2
        pref = YFunc.laurent({4: 1, 0: 2, -4: 1})  # (y + 1/y)^2 with Y = y^(1/2)
        ratio = (num / den).truncate(rel) * BiSeries._coerce(pref)
    out = BiSeries._coerce(u4) * ratio
    out = out * BiSeries._coerce(YFunc.const(Fraction(1, 4)))
    return out.truncate(order)


def J_dual_series(order=10) -> BiSeries:
    """The S-dual of J used by refined horizontal sets.

    eta(q^(1/2))^4 eta(q^(1/8))^8 / eta(q^(1/4))^12 times
    phi(q^(1/2),y) phi(q^(1/8),y^(1/2))^2 / (phi(q^(1/4),y) phi(q^(1/4),y^(1/2))^2);
    the y-prefactors cancel exactly.
    """
    order = _frac(order)
    h, e, f = Fraction(1, 2), Fraction(1, 8), Fraction(1, 4)
    v4 = eta_quotient({h: 4, e: 8, f: -12}, order)
    num = jacobi_product(h, 1, order) * jacobi_product(e, h, order) ** 2
    den = jacobi_product(f, 1, order) * jacobi_product(f, h, order) ** 2
    return (BiSeries._coerce(v4) * (num / den)).truncate(order)


# ---- discrete theta identities ---------------------------------------------

def theta_identity_check(identity: str, m: int, order=10, k: int = 0, ell: int = 0,
                         refined: bool = False) -> dict:
    """Check keysum or thlk(k, ell) for A_m; returns {passed, first_difference}."""
    order = _frac(order)
    thetas = [theta_series(m, n, False, refined, order) for n in range(m + 1)]
    if identity == "keysum":
        lhs = theta_series(m, 0, True, refined, order)
        rhs = thetas[0]
        for t in thetas[1:]:
            rhs = rhs + t
    elif identity == "thlk":
        lhs = theta_series(m, ell, True, refined, order).rescale_and_phase(1, 2 * k)
        rhs = None
        for n in range(m + 1):
            term = _scale(thetas[n], epsilon(m + 1, n * (ell - n * k)))
            rhs = term if rhs is None else rhs + term
    else:
        raise ValueError(f"unknown identity {identity!r}")
    diff = lhs.first_difference(rhs, order)
    return {"identity": identity, "rank": m, "k": k, "ell": ell, "order": str(order),
            "passed": diff is None, "first_difference": None if diff is None else str(diff)}


def _scale(s, c: CyclotomicScalar):
    if isinstance(s, BiSeries):
        return s * BiSeries._coerce(YFunc.const(c))
    return s.scale(c)


# ---- registry -------------------------------------------------------------------

def resolve_series(name: str, order=10):
    """Look up a named series, e.g. 'eta', 'eta:2', 'theta:A:2:ell=1',
    'theta:Adual:3:ell=2', 't:A:2:ell=1', 'u', 'v', 'c', 'r', 's', 'j5',
    'delta', 'phi_weak', 'J', 'J_dual'.  A trailing ':y' on theta/t names
    requests the refined version."""
    parts = name.split(":")
    head = parts[0]
    if head == "eta":
        return eta_series(_frac(parts[1]) if len(parts) > 1 else 1, order)
    if head == "delta":
        return delta_series(_frac(parts[1]) if len(parts) > 1 else 1, order)
    if head in ("theta", "t"):
        if len(parts) < 4 or parts[1] not in ("A", "Adual") or not parts[3].startswith("ell="):
            raise ValueError(f"malformed lattice series name {name!r}")
        m = int(parts[2])
        ell = int(parts[3][4:])
        refined = len(parts) > 4 and parts[4] == "y"
        dual = parts[1] == "Adual"
        if head == "theta":
            return theta_series(m, ell, dual, refined, order)
        return t_ratio(m, ell, dual, refined, order)
    if head in ("u", "v", "c", "r", "s"):
        return continued_fraction(head, order)
    if head.startswith("j") and head[1:].isdigit():
        return hauptmodul(int(head[1:]), order)
    if head == "phi_weak":
        return weak_jacobi_phi(1, 1, order)
    if head == "J":
        return J_series(order)
    if head == "J_dual":
        return J_dual_series(order)
    raise ValueError(f"unknown series name {name!r}")
