import pytest
from hypothesis import given, settings, strategies as st

from richfca.context import FormalContext, empty_context
from richfca.cxt import load, read_cxt, save, write_cxt
from richfca.errors import CxtParseError

from conftest import FIG1_ROWS, FIG7_ROWS


def test_fig1_round_trip(fig1):
    text = write_cxt(fig1)
    assert text.splitlines()[-5:] == FIG1_ROWS
    assert read_cxt(text) == fig1


def test_fig7_round_trip(fig7):
    assert fig7.to_strings() == FIG7_ROWS
    assert read_cxt(write_cxt(fig7)) == fig7


def test_empty_round_trip():
    text = write_cxt(empty_context())
    assert text == "B\n\n0\n0\n\n"
    assert read_cxt(text) == empty_context()


def test_lenient_reading():
    text = "B\r\n\r\n2\r\n1\r\n\r\ng\r\nh\r\nm\r\nx\r\n.\r\n\r\n\r\n"
    K = read_cxt(text)
    assert K.to_strings() == ["X", "."]


def test_file_helpers(tmp_path, fig1):
    path = tmp_path / "fig1.cxt"
    save(fig1, path)
    assert load(path) == fig1


@pytest.mark.parametrize("text, line", [
    ("A\n\n1\n1\n\ng\nm\nX\n", 1),
    ("B\nx\n1\n1\n\ng\nm\nX\n", 2),
    ("B\n\none\n1\n\ng\nm\nX\n", 3),
    ("B\n\n1\n-1\n\ng\nm\nX\n", 4),
    ("B\n\n1\n1\nz\ng\nm\nX\n", 5),
    ("B\n\n1\n2\n\ng\nm\nn\nX\n", 9),
    ("B\n\n1\n1\n\ng\nm\nO\n", 8),
    ("B\n\n2\n1\n\ng\nh\nm\nX\n", 10),
    ("B\n\n1\n1\n\ng\nm\nX\nX\n", 9),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(CxtParseError) as info:
        read_cxt(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_duplicate_names_are_parse_errors():
    with pytest.raises(CxtParseError):
        read_cxt("B\n\n2\n1\n\ng\ng\nm\nX\n.\n")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 5).flatmap(lambda a: st.integers(0, 5).flatmap(
    lambda b: st.lists(st.lists(st.booleans(), min_size=b, max_size=b),
                       min_size=a, max_size=a).map(lambda rows: (a, b, rows)))))
def test_round_trip_property(spec):
    a, b, rows = spec
    K = FormalContext([f"o{i}" for i in range(a)], [f"a {j}" for j in range(b)], rows)
    assert read_cxt(write_cxt(K)) == K
