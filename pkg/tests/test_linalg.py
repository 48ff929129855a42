from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from weilpoisson import linalg

entries = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


@st.composite
def matrices(draw):
    rows = draw(st.integers(1, 6))
    cols = draw(st.integers(1, 6))
    # sparse-ish: many zeros so that rank deficiency is common
    cell = st.one_of(st.just(Fraction(0)), st.just(Fraction(0)), entries)
    return [[draw(cell) for _ in range(cols)] for _ in range(rows)], cols


def sparse(rows):
    return [{c: v for c, v in enumerate(r) if v} for r in rows]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_sympy(data):
    rows, cols = data
    expected = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows]).rank()
    assert linalg.rank(sparse(rows)) == expected
    assert len(linalg.rref(sparse(rows))) == expected


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_nullspace_is_kernel_and_complete(data):
    rows, cols = data
    kernel = linalg.nullspace(sparse(rows), cols)
    assert len(kernel) + linalg.rank(sparse(rows)) == cols
    for v in kernel:
        for r in rows:
            assert sum(r[c] * v.get(c, 0) for c in range(cols)) == 0


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_canonical_basis_depends_only_on_span(data):
    rows, _ = data
    vecs = sparse(rows)
    shuffled = list(reversed(vecs)) + [{c: 2 * v for c, v in vecs[0].items()}]
    assert linalg.canonical_basis(vecs) == linalg.canonical_basis(shuffled)
    red = linalg.rref(vecs)
    for v in vecs:
        assert linalg.in_span(v, red)


def test_solve():
    rows = [{0: 1, 1: 1}, {0: 1, 1: -1}]
    assert linalg.solve(rows, [Fraction(3), Fraction(1)], 2) == [2, 1]
    assert linalg.solve([{0: 1}, {0: 2}], [Fraction(1), Fraction(3)], 1) is None


def test_rank_uses_content_reduction():
    # large common factors cancel without changing the rank
    rows = [{0: 10 ** 30, 1: 2 * 10 ** 30}, {0: 3, 1: 6}, {1: Fraction(1, 10 ** 20)}]
    assert linalg.rank(rows) == 2
