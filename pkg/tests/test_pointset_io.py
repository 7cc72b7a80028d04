import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from stardisc.errors import PointSetFormatError
from stardisc.pointset import PointSet, format_pointset, parse_pointset, read_pointset, write_pointset

unit = st.floats(min_value=0.0, max_value=1.0, exclude_max=True, allow_nan=False)


@settings(max_examples=60, deadline=None)
@given(arrays(np.float64, st.tuples(st.integers(1, 12), st.integers(1, 4)), elements=unit))
def test_round_trip_bit_exact(X):
    P = PointSet(X)
    Q = parse_pointset(format_pointset(P, comment="round trip"))
    assert Q.coords.tobytes() == P.coords.tobytes()


def test_file_round_trip(tmp_path):
    P = PointSet(np.random.default_rng(0).random((10, 3)))
    path = tmp_path / "p.txt"
    write_pointset(P, path)
    assert read_pointset(path) == P


def test_header_and_comments():
    P = parse_pointset("# hello\n\n2 2\n# inline comment\n0 0.5\n0.25 0.75\n")
    assert P.N == 2 and P.s == 2


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3 2\n0 0\n0.1 0.1\n",  # too few rows
        "1 2\n0 0\n0.1 0.1\n",  # too many rows
        "2 2\n0 0\n0.1\n",  # short row
        "2\n0\n0.1\n",  # bad header
        "1 1\n1.0\n",  # outside [0, 1)
        "1 1\nabc\n",
    ],
)
def test_reader_rejects_malformed(text):
    with pytest.raises(PointSetFormatError):
        parse_pointset(text)


def test_pointset_is_immutable_and_validated():
    P = PointSet([[0.1, 0.2]])
    with pytest.raises(ValueError):
        P.coords[0, 0] = 0.5
    with pytest.raises(ValueError):
        PointSet([[0.1, 1.0]])
    with pytest.raises(ValueError):
        PointSet([[-0.1]])
