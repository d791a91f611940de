import pytest
from hypothesis import given
from hypothesis import strategies as st

from utdos.matrix import UTMat, Witness, diff_of_squares, square, verify_witness

ints = st.integers(-10**30, 10**30)
mats = st.builds(UTMat, ints, ints, ints)


@pytest.mark.parametrize("m, expected", [
    ((2, 3, 1), (4, 9, 1)),
    ((0, 0, 0), (0, 0, 0)),
    ((1, 5, -1), (1, 0, 1)),
])
def test_square(m, expected):
    assert square(UTMat(*m)) == UTMat(*expected)


@pytest.mark.parametrize("A, B, expected", [
    ((1, 0, 2), (0, -7, 1), (1, 7, 3)),
    ((5, 9, -3), (5, 9, -3), (0, 0, 0)),
    ((2, 1, -1), (-2, 0, 1), (0, 1, 0)),
])
def test_diff_of_squares(A, B, expected):
    assert diff_of_squares(UTMat(*A), UTMat(*B)) == UTMat(*expected)


def test_verify_witness():
    A, B = UTMat(1, 0, 2), UTMat(0, -7, 1)
    assert verify_witness(A, B, UTMat(1, 7, 3))
    assert not verify_witness(A, B, UTMat(1, 7, 4))
    z = UTMat.zero()
    assert verify_witness(z, z, z)


def test_witness_checked_on_construction():
    Witness(UTMat(1, 0, 2), UTMat(0, -7, 1), UTMat(1, 7, 3))
    with pytest.raises(ValueError):
        Witness(UTMat(1, 0, 2), UTMat(0, -7, 1), UTMat(1, 7, 4))


def test_entries_must_be_ints():
    with pytest.raises(TypeError):
        UTMat(1.0, 0, 0)
    with pytest.raises(TypeError):
        UTMat(True, 0, 0)


def test_immutable():
    m = UTMat(1, 2, 3)
    with pytest.raises(AttributeError):
        m.a = 5


@given(mats)
def test_square_matches_matmul(m):
    assert square(m) == m @ m
    assert diff_of_squares(m, UTMat.zero()) == square(m)


@given(mats, mats)
def test_diff_matches_matmul(A, B):
    D = diff_of_squares(A, B)
    assert D == (A @ A) - (B @ B)
    assert D.a == A.a ** 2 - B.a ** 2
    assert D.c == A.c ** 2 - B.c ** 2


@given(mats)
def test_self_difference_is_zero(A):
    assert diff_of_squares(A, A) == UTMat.zero()


def test_no_wraparound_past_64_bits():
    big = 2 ** 63 - 1
    D = diff_of_squares(UTMat(big, big, big), UTMat.zero())
    assert D.a == big * big
    assert D.b == big * 2 * big
