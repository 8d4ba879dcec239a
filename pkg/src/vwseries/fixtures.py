"""Fixture tables of normalized universal series.

Text format, one block per series:

    == rank=3 name=C12 order=11
    0/1 1
    1/1 5
    ...

Each coefficient line is "exponent_num/exponent_den coefficient" with the
coefficient an exact fraction.  Missing exponents are zero; the block's
order is the exclusive truncation bound.  Lines starting with '#' are
ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .fixture_data import APPENDIX_TEXT
from .puiseux import PuiseuxSeries


@dataclass(frozen=True)
class FixtureTable:
    rank: int
    name: str
    order: Fraction
    terms: tuple  # ((exponent, coefficient), ...) sorted by exponent

    def series(self) -> PuiseuxSeries:
        return PuiseuxSeries.from_terms(dict(self.terms), self.order)

    def coefficients(self) -> list[Fraction]:
        """Dense list of coefficients of q^0 .. q^(order-1) (integer exponents only)."""
        d = dict(self.terms)
        return [d.get(Fraction(k), Fraction(0)) for k in range(int(self.order))]


class FixtureFormatError(ValueError):
    pass


def parse_fixture_text(text: str) -> dict:
    """{(rank, name): FixtureTable}."""
    out = {}
    head = None
    terms = []

    def flush():
        if head is None:
            return
        rank, name, order = head
        if terms and terms[0][0] == 0 and terms[0][1] != 1:
            raise FixtureFormatError(f"rank {rank} {name}: constant term must be 1")
        if any(e >= order for e, _ in terms):
            raise FixtureFormatError(f"rank {rank} {name}: exponent beyond order {order}")
        out[(rank, name)] = FixtureTable(rank, name, order, tuple(sorted(terms)))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("=="):
            flush()
            fields = dict(kv.split("=", 1) for kv in line[2:].split())
            try:
                head = (int(fields["rank"]), fields["name"], Fraction(fields["order"]))
            except (KeyError, ValueError) as exc:
                raise FixtureFormatError(f"line {lineno}: malformed header {line!r}") from exc
            terms = []
            continue
        if head is None:
            raise FixtureFormatError(f"line {lineno}: coefficient before any header")
        try:
            e, c = line.split()
            terms.append((Fraction(e), Fraction(c)))
        except ValueError as exc:
            raise FixtureFormatError(f"line {lineno}: expected 'exponent coefficient', got {line!r}") from exc
    flush()
    return out


def format_fixture(rank: int, name: str, series: PuiseuxSeries, order=None) -> str:
    """Render a rational series as a fixture block."""
    order = Fraction(series.order if order is None else order)
    lines = [f"== rank={rank} name={name} order={order}"]
    for e, c in sorted(series.terms().items()):
        if e >= order:
            continue
        if not c.is_rational():
            raise ValueError(f"{name}: coefficient at q^{e} is not rational")
        lines.append(f"{e.numerator}/{e.denominator} {c.to_rational()}")
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def embedded_fixtures() -> dict:
    return parse_fixture_text(APPENDIX_TEXT)


def load_fixture_file(path) -> dict:
    return parse_fixture_text(Path(path).read_text())


def fixture(rank: int, name: str) -> FixtureTable:
    try:
        return embedded_fixtures()[(rank, name)]
    except KeyError:
        raise KeyError(f"no embedded fixture for rank {rank} series {name}") from None


def fixture_names(rank: int) -> list[str]:
    return sorted(n for r, n in embedded_fixtures() if r == rank)


def available_ranks() -> list[int]:
    return sorted({r for r, _ in embedded_fixtures()})
