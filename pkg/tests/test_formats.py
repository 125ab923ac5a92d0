import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropwick import formats
from tropwick.linear_spaces import TropicalPluckerVector
from tropwick.puiseux import PuiseuxScalar
from tropwick.trop_core import INF
from tropwick.wick import TropicalWickVector

from conftest import DATA, M_CHART

tvals = st.one_of(st.just(INF), st.fractions(-5, 5, max_denominator=4))


@given(st.integers(1, 4), st.data())
def test_wick_roundtrip(n, data):
    vals = data.draw(st.lists(tvals, min_size=1 << n, max_size=1 << n))
    if all(v is INF for v in vals):
        vals[0] = 0
    p = TropicalWickVector(n, tuple(vals))
    assert formats.parse_wick(formats.format_wick(p)) == p


def test_signed_plucker_roundtrip():
    p = TropicalPluckerVector.from_dict(4, {0b0101: 0, 0b0011: 1, 0b1100: "1/2"}, signed=True)
    text = formats.format_plucker(p)
    assert text.splitlines()[0] == "J 2"
    assert formats.parse_plucker(text) == p


def test_bases_roundtrip():
    text = (DATA / "dm_n3.txt").read_text()
    n, bases = formats.parse_bases(text)
    assert n == 3 and bases == {0b111, 1, 2, 4}
    assert formats.parse_bases(formats.format_bases(n, bases)) == (n, bases)


def test_matrix_file():
    rows = formats.parse_matrix((DATA / "matrix_n4_chart.txt").read_text())
    assert rows == [[PuiseuxScalar.const(x) for x in r] for r in M_CHART]
    assert formats.is_matrix_text("# c\nn 2 cols 4\n")
    rows = formats.parse_matrix("n 1 cols 2\n3*t^(1/2)+2*t^(2) -t\n")
    assert rows[0][0].val() == PuiseuxScalar.monomial(1, "1/2").val()


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("n 3\n1 2 x\n", 2),
    ("n 3\n# comment\n1 4\n", 3),
    ("n three\n", 1),
])
def test_bases_diagnostics(text, line):
    with pytest.raises(formats.FormatError) as e:
        formats.parse_bases(text)
    assert e.value.lineno == line


def test_wick_diagnostics():
    with pytest.raises(formats.FormatError, match="line 3"):
        formats.parse_wick("n 2\n1 0\n1 1\n")
    with pytest.raises(formats.FormatError, match="line 2"):
        formats.parse_wick("n 2\n1* 0\n")
    with pytest.raises(formats.FormatError, match="line 1"):
        formats.parse_wick("m 2\n")
    with pytest.raises(formats.FormatError, match="empty support"):
        formats.parse_wick("n 2\n1 inf\n")


def test_matrix_diagnostics():
    with pytest.raises(formats.FormatError, match="line 2"):
        formats.parse_matrix("n 1 cols 2\n1\n")
    with pytest.raises(formats.FormatError, match="line 2"):
        formats.parse_matrix("n 1 cols 2\n1 q\n")
    with pytest.raises(formats.FormatError, match="expected 2 rows"):
        formats.parse_matrix("n 2 cols 2\n1 1\n")


def test_vectors():
    vs = formats.parse_signed_vectors("0 inf 1/2 3\n", 2)
    assert vs[0].coords[2] == formats.trop("1/2")
    with pytest.raises(formats.FormatError, match="line 1"):
        formats.parse_signed_vectors("0 1 2\n")
    with pytest.raises(formats.FormatError, match="expected 6"):
        formats.parse_signed_vectors("0 1\n", 3)
