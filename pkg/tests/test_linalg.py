from fractions import Fraction

from hypothesis import given, strategies as st

from colorvir.linalg import Echelon, dot, integer_row, nullspace, rank

matrices = st.integers(1, 7).flatmap(lambda n: st.lists(
    st.dictionaries(st.integers(0, n - 1), st.integers(-4, 4), max_size=n),
    max_size=8).map(lambda rows: (rows, n)))


@given(matrices)
def test_rank_nullity(data):
    rows, n = data
    basis = nullspace(rows, n)
    assert rank(rows) + len(basis) == n
    assert rank(basis) == len(basis)
    for v in basis:
        assert all(dot(r, v) == 0 for r in rows)


@given(matrices)
def test_membership_matches_rank(data):
    rows, n = data
    e = Echelon()
    for r in rows:
        e.add(r)
    for r in rows:
        assert e.contains(r)
    for v in nullspace(rows, n):
        # a nullspace vector lies in the row space only if it is orthogonal to itself
        assert e.contains(v) == (dot(v, v) == 0)


def test_integer_row():
    assert integer_row({0: Fraction(1, 2), 3: Fraction(-1, 3), 5: 0}) == {0: 3, 3: -2}
    assert integer_row({2: -4, 4: 6}) == {2: 2, 4: -3}
    assert integer_row({}) == {}
