import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from vwseries.cli import main, parse_surface, run
from vwseries.cyclotomic import as_scalar
from vwseries.fixtures import parse_fixture_text
from vwseries.puiseux import PuiseuxSeries


def test_series_text_and_csv():
    status, out = run(["series", "eta", "--order", "3"])
    assert status == 0 and "q^25/24: -1" in out
    status, out = run(["series", "u", "--order", "2", "--output", "csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["exponent", "u"] and rows[1][0] == "1/8"


def test_series_json_roundtrip():
    status, out = run(["series", "theta:A:2:ell=1", "--order", "5", "--output", "json"])
    s = PuiseuxSeries.from_json(json.loads(out)["theta:A:2:ell=1"])
    assert s.valuation == Fraction(1, 3) and s.leading_coefficient() == as_scalar(3)


@given(st.sampled_from(["eta", "eta:2", "c", "r", "u", "j5", "theta:A:3:ell=2", "t:A:1:ell=1", "s"]),
       st.integers(1, 6))
def test_json_roundtrip_property(name, order):
    status, out = run(["series", name, "--order", str(order), "--output", "json"])
    assert status == 0
    s = PuiseuxSeries.from_json(json.loads(out)[name])
    from vwseries.modular import resolve_series
    ref = resolve_series(name, Fraction(order))
    assert s.first_difference(ref, ref.order) is None


def test_verify_subset_sum_exit_zero():
    status, out = run(["verify", "subset_sum", "--rank", "3", "--ell", "1", "--order", "10"])
    assert status == 0 and out.startswith("PASS")


def test_verify_rank7_fails():
    status, out = run(["verify", "rank7_set", "--order", "4"])
    assert status == 1 and "no data" in out


def test_universal_csv_columns():
    status, out = run(["universal", "--rank", "5", "--side", "vertical", "--order", "12", "--output", "csv"])
    header = next(csv.reader(io.StringIO(out)))
    assert header == ["exponent", "A", "B", "C0", "C11", "C12", "C13", "C14", "C22", "C23", "C24", "C33", "C34",
                      "C44"]
    status, out = run(["universal", "--rank", "5", "--order", "4", "--output", "csv", "--subsets"])
    header = next(csv.reader(io.StringIO(out)))
    assert len(header) == 17


def test_localize_emits_fixture_blocks():
    status, out = run(["localize", "--rank", "2", "--order", "3", "--surface", "p2"])
    assert status == 0
    tables = parse_fixture_text(out)
    names = {k[1] if isinstance(k, tuple) else k for k in tables}
    assert {"A", "B", "C11"} <= names


def test_assemble_k3():
    status, out = run(["assemble", "--rank", "2", "--surface", "k3", "--component", "vertical", "--order", "3"])
    assert status == 0 and "q^-2: 1/4" in out
    status, out = run(["assemble", "--rank", "2", "--surface", "k3:1,1", "--evir", "0,3", "--output", "json"])
    assert [r["value"] for r in json.loads(out)] == ["0", "0", "1", "324"]


def test_assemble_rank4_full_is_error():
    status, _ = run(["assemble", "--rank", "4", "--surface", "mgt:3,2", "--component", "full"])
    assert status == 2


def test_donaldson_modes():
    assert run(["donaldson", "--identities"])[0] == 0
    assert run(["donaldson", "--flux", "--rank", "3", "--b2", "2", "--m", "1", "--c", "1,0"])[0] == 0
    assert run(["donaldson", "--rank", "5", "--surface", "mgt:3,2,1"])[0] == 0


def test_fixtures_check():
    status, out = run(["fixtures", "--rank", "2", "--check"])
    assert status == 0


def test_usage_errors():
    assert run(["bogus"])[0] == 2
    assert run(["series", "nope"])[0] == 2
    assert run(["series", "eta", "--order", "-1"])[0] == 2


def test_surface_descriptors(tmp_path):
    S = parse_surface("mgt:3,2,1")
    assert (S.chi, S.K2) == (3, 2)
    p = tmp_path / "s.json"
    p.write_text(json.dumps(S.to_json()))
    assert parse_surface(str(p)) == S


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "vwseries.cli", "series", "eta", "--order", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "q^1/24: 1" in proc.stdout
