"""Fixed-point sums G_{S,a}(q) on toric surfaces and the universal-series fit.

The sheaf at a fixed point P is E = sum_i I_i (x) L_i (x) t^-i with L_0 = O and
L_i = L_{i-1} - a_i.  Hom(E_i, E_j) carries t^(i-j), so the (i, j) block of
Rhom(E, E (x) K t) has t-degree i - j + 1 and that of Rhom(E, E) has i - j.

Each block splits as a global Euler characteristic of a line bundle minus a
chart-local vertex correction.  The global pieces do not depend on P; they
make up the character at the empty tuple, which contains the zero weights of
the trace-free subtraction and the section of O(beta_i).  Dividing by that
common factor leaves G = sum_P e(-(T_P - T_0)), whose constant term is 1.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from flint import fmpq, fmpq_mat

from ..modular import eta_series, theta_series
from ..puiseux import PuiseuxSeries
from .characters import CharacterPolynomial, ZeroWeightError, euler_limit, vertex_ext_character
from .partitions import tuples_of_size
from .toric import ToricSurfaceSpec, preset


class SpecializationMismatch(ArithmeticError):
    pass


class FitError(ArithmeticError):
    pass


def line_bundles(S: ToricSurfaceSpec, a) -> list:
    """Divisor vectors of L_0 .. L_{r-1}."""
    n = len(S.rays)
    out = [(0,) * n]
    for ai in a:
        out.append(tuple(x - y for x, y in zip(out[-1], ai)))
    return out


def _lift(m, tdeg=0):
    return (m[0], m[1], tdeg)


def _block_twists(S: ToricSurfaceSpec, L, r: int):
    """{(alpha, i, j): (twist for Rhom(E,E), twist for Rhom(E,E K t))}."""
    out = {}
    for alpha in range(S.euler):
        k = S.canonical_character(alpha)
        chars = [S.character(l, alpha) for l in L]
        for i in range(r):
            for j in range(r):
                m = (chars[j][0] - chars[i][0], chars[j][1] - chars[i][1])
                out[(alpha, i, j)] = (_lift(m, i - j), _lift((m[0] + k[0], m[1] + k[1]), i - j + 1))
    return out


def relative_character(P, S: ToricSurfaceSpec, a, r: int, _twists=None) -> CharacterPolynomial:
    """T_P - T_0: the chart-local part of the fixed-point character.

    P is a tuple of r * e(S) partitions, slot alpha * r + i."""
    twists = _twists or _block_twists(S, line_bundles(S, a), r)
    acc = CharacterPolynomial()
    for alpha, fp in enumerate(S.fixed_points):
        w1, w2 = _lift(fp.tangent[0]), _lift(fp.tangent[1])
        parts = P[alpha * r:(alpha + 1) * r]
        if not any(parts):
            continue
        for i in range(r):
            for j in range(r):
                if not parts[i] and not parts[j]:
                    continue
                v = vertex_ext_character(parts[i], parts[j], w1, w2)
                if not v:
                    continue
                t0, t1 = twists[(alpha, i, j)]
                acc = acc + v.twist(t0) - v.twist(t1)
    return acc


def empty_character(S: ToricSurfaceSpec, a, r: int) -> CharacterPolynomial:
    """T_0 from global sections: sum_{i,j} chi(L_j - L_i + K) t^(i-j+1) - chi(K) t
    - sum_{i,j} chi(L_j - L_i) t^(i-j) + chi(O)."""
    L = line_bundles(S, a)
    K = S.canonical
    acc = CharacterPolynomial()
    cache = {}

    def chi(d):
        if d not in cache:
            cache[d] = S.euler_characteristic(d)
        return cache[d]

    for i in range(r):
        for j in range(r):
            diff = tuple(x - y for x, y in zip(L[j], L[i]))
            acc = acc + chi(tuple(x + k for x, k in zip(diff, K))).twist((0, 0, i - j + 1))
            acc = acc - chi(diff).twist((0, 0, i - j))
    zero = (0,) * len(K)
    return acc - chi(K).twist((0, 0, 1)) + chi(zero)


def fixed_point_character(P, S: ToricSurfaceSpec, a, r: int) -> CharacterPolynomial:
    """The full character of T^[n] at P, global sections included."""
    return empty_character(S, a, r) + relative_character(P, S, a, r)


def random_direction(rng: random.Random) -> tuple:
    def draw():
        while True:
            x = Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 3))
            if x:
                return x
    return draw(), draw()


def _coefficients(S, a, r, order, direction, twists):
    out = []
    for n in range(order):
        total = Fraction(0)
        for P in tuples_of_size(r * S.euler, n):
            total += euler_limit(relative_character(P, S, a, r, twists), direction)
        out.append(total)
    return out


def G_coefficients(S: ToricSurfaceSpec, a, r: int, order: int, seed: int = 0, retries: int = 5) -> list:
    """Coefficients of q^0 .. q^(order-1).

    Each fixed-point term is a rational function of degree 0 in (s1, s2, t);
    the sum is regular at s = 0 and its value there is the non-equivariant
    integral.  It is computed as the u^0 coefficient along s = u * sigma,
    t = 1, for two independent random directions sigma that must agree."""
    a = [tuple(x) for x in a]
    if len(a) != r - 1:
        raise ValueError(f"need {r - 1} divisor classes, got {len(a)}")
    twists = _block_twists(S, line_bundles(S, a), r)
    rng = random.Random(seed)
    results = []
    attempts = 0
    while len(results) < 2:
        direction = random_direction(rng)
        try:
            results.append((direction, _coefficients(S, a, r, order, direction, twists)))
        except ZeroWeightError as exc:
            if "denominator" in str(exc):
                raise
            attempts += 1
            if attempts > retries:
                raise ZeroWeightError("zero-weight collision after retry budget") from exc
    (d1, c1), (d2, c2) = results
    if c1 != c2:
        raise SpecializationMismatch(f"specializations disagree: {d1} -> {c1}; {d2} -> {c2}")
    if c1[0] != 1:
        raise ArithmeticError(f"constant term {c1[0]} is not 1")
    return c1


def G_series(S: ToricSurfaceSpec, a, r: int, order: int, seed: int = 0) -> PuiseuxSeries:
    c = G_coefficients(S, a, r, order, seed)
    return PuiseuxSeries.from_terms({Fraction(k): v for k, v in enumerate(c) if v}, Fraction(order))


def upsilon_constant(aa, r: int, chi: int) -> Fraction:
    """((-1)^(r-1)/r)^chi prod binom(r,i)^(-a_i^2) prod_{i<j} (j(r-i)/((j-i)r))^(a_i a_j);
    aa[i][j] holds a_{i+1} a_{j+1}."""
    out = Fraction((-1) ** (r - 1), r) ** chi
    for i in range(1, r):
        out *= Fraction(comb(r, i)) ** (-aa[i - 1][i - 1])
        for j in range(i + 1, r):
            out *= Fraction(j * (r - i), (j - i) * r) ** aa[i - 1][j - 1]
    return out


def quadratic_form(aa, r: int) -> Fraction:
    total = Fraction(0)
    for i in range(1, r):
        total -= Fraction(i * (r - i), 2 * r) * aa[i - 1][i - 1]
        for j in range(i + 1, r):
            total -= Fraction(i * (r - j), r) * aa[i - 1][j - 1]
    return total


# ---- universal fit ------------------------------------------------------------

@dataclass(frozen=True)
class Configuration:
    surface: str
    classes: tuple  # r-1 divisor vectors

    def spec(self) -> ToricSurfaceSpec:
        return preset(self.surface)


def unknown_names(r: int) -> list:
    names = ["A", "B"] + [f"E{i}" for i in range(1, r)]
    names += [f"E{i}{j}" for i in range(1, r) for j in range(i, r)]
    return names


def chern_vector(S: ToricSurfaceSpec, a, r: int) -> list:
    """(chi, K^2, a_i K, a_i a_j (i <= j)) in the order of unknown_names."""
    pd = S.pairing_data(a)
    row = [S.chi, S.K2] + pd["aK"]
    row += [pd["aa"][i][j] for i in range(r - 1) for j in range(i, r - 1)]
    return row


def _rank(rows) -> int:
    if not rows:
        return 0
    return fmpq_mat(len(rows), len(rows[0]), [x for row in rows for x in row]).rank()


def default_configurations(r: int, extra: int = 2) -> list:
    """Greedy basis from small classes on P2, P1xP1 and F1, plus `extra` checks."""
    candidates = []
    small = {"P2": [(0, 0, 0), (1, 0, 0), (2, 0, 0)],
             "P1xP1": [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)],
             "F1": [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0)]}
    for name in ("P2", "P1xP1", "F1"):
        pool = small[name]
        for combo in itertools.product(pool, repeat=r - 1):
            weight = sum(sum(abs(x) for x in c) for c in combo)
            candidates.append((weight, name, combo))
    candidates.sort(key=lambda c: c[0])
    need = r * (r + 1) // 2 + 1
    chosen, rows, spare = [], [], []
    for _, name, combo in candidates:
        row = chern_vector(preset(name), combo, r)
        if _rank(rows + [row]) > len(rows):
            rows.append(row)
            chosen.append(Configuration(name, combo))
        elif row not in rows:
            spare.append(Configuration(name, combo))
        if len(rows) == need:
            break
    if len(rows) < need:
        raise FitError("candidate configurations do not span the Chern data")
    chosen_rows = list(rows)
    for c in spare:
        if len(chosen) >= need + extra:
            break
        row = chern_vector(c.spec(), c.classes, r)
        if row not in chosen_rows:
            chosen.append(c)
            chosen_rows.append(row)
    for _, name, combo in candidates:
        if len(chosen) >= need + extra:
            break
        c = Configuration(name, combo)
        row = chern_vector(preset(name), combo, r)
        if c not in chosen and row not in chosen_rows:
            chosen.append(c)
            chosen_rows.append(row)
    return chosen


def _g_job(args):
    surface, classes, r, order, seed = args
    return G_coefficients(preset(surface), classes, r, order, seed)


def _log_coefficients(coeffs, order) -> list:
    s = PuiseuxSeries.from_terms({Fraction(k): v for k, v in enumerate(coeffs) if v}, Fraction(order))
    lg = s.log()
    terms = lg.terms()
    return [terms[Fraction(k)].to_rational() if Fraction(k) in terms else Fraction(0) for k in range(order)]


@dataclass
class ExtractionResult:
    rank: int
    order: int
    series: dict       # normalized A, B, E_i, E_ij, C0, C_ij
    configurations: list
    residual_rows: int

    def fixture_text(self) -> str:
        from ..fixtures import format_fixture
        out = []
        for name in sorted(self.series):
            out.append(format_fixture(self.rank, name, self.series[name], self.order))
        return "".join(out)


def extract_universal(r: int, order: int, configurations=None, seed: int = 0, workers: int = 1) -> ExtractionResult:
    """Fit log G = chi log A + K^2 log B + sum a_i K log E_i + sum a_i a_j log E_ij
    coefficientwise over Q, with at least one configuration to spare."""
    configs = default_configurations(r) if configurations is None else list(configurations)
    names = unknown_names(r)
    rows = [chern_vector(c.spec(), c.classes, r) for c in configs]
    if _rank(rows) < len(names):
        raise FitError("rank-deficient configuration set")
    if len(rows) <= len(names):
        raise FitError("an overdetermined configuration set is required")
    jobs = [(c.surface, c.classes, r, order, seed + 7919 * k) for k, c in enumerate(configs)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            coeffs = list(ex.map(_g_job, jobs))
    else:
        coeffs = [_g_job(j) for j in jobs]
    logs = [_log_coefficients(c, order) for c in coeffs]

    m, u = len(rows), len(names)
    M = fmpq_mat(m, u, [x for row in rows for x in row])
    MT = M.transpose()
    normal = MT * M
    solution = {name: [Fraction(0)] * order for name in names}
    for k in range(1, order):
        g = fmpq_mat(m, 1, [fmpq(logs[c][k].numerator, logs[c][k].denominator) for c in range(m)])
        x = normal.solve(MT * g)
        resid = M * x - g
        if any(resid[i, 0] != 0 for i in range(m)):
            raise FitError(f"nonzero residual at q^{k}")
        for idx, name in enumerate(names):
            v = x[idx, 0]
            solution[name][k] = Fraction(int(v.p), int(v.q))

    def exp_series(vals):
        return PuiseuxSeries.from_terms({Fraction(k): v for k, v in enumerate(vals) if v}, Fraction(order)).exp()

    series = {name: exp_series(solution[name]) for name in names}
    out = {"A": series["A"], "B": series["B"]}
    for i in range(1, r):
        out[f"E{i}"] = series[f"E{i}"]
        for j in range(i, r):
            out[f"E{i}{j}"] = series[f"E{i}{j}"]
            out[f"C{i}{j}"] = (series[f"E{i}"] * series[f"E{i}{j}"]).truncate(Fraction(order)) if i == j \
                else series[f"E{i}{j}"]
    out["C0"] = normalized_c0(r, series["B"], order)
    return ExtractionResult(r, order, out, configs, m - u)


def normalized_c0(r: int, bbar: PuiseuxSeries, order) -> PuiseuxSeries:
    """C0 = Theta_{A_{r-1},0} B / eta^r, normalized to constant term 1."""
    order = Fraction(order)
    etab = eta_series(1, order + Fraction(1, 24)).shift_by(Fraction(-1, 24))
    return (theta_series(r - 1, 0, False, False, order) * etab.invert() ** r * bbar).truncate(order)


def compare_with_fixtures(result: ExtractionResult) -> list:
    """[(name, passed, first differing exponent)] against the embedded tables."""
    from ..fixtures import embedded_fixtures
    fx = embedded_fixtures()
    out = []
    for name, s in sorted(result.series.items()):
        key = (result.rank, name)
        if key not in fx:
            continue
        ref = fx[key].series()
        d = s.first_difference(ref, Fraction(result.order))
        out.append((name, d is None, d))
    return out
