import json
import math
from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from weilpoisson import linalg
from weilpoisson.algebra import build_jet_algebra, dual_numbers
from weilpoisson.homology import (
    BasisOverflow,
    IllPosedQuotient,
    assemble_matrix,
    betti,
    center_report,
    codomain_degree,
    enumerate_basis,
    euler_characteristic_check,
    h1_report,
)
from weilpoisson.poisson import PoissonStructure, bracket, bracket_A
from weilpoisson.poly import APoly, Poly

GOLDEN = Path(__file__).parent / "golden"
D = dual_numbers()
S = PoissonStructure.symplectic(2)
SO3 = PoissonStructure.so3()
ZERO = PoissonStructure.zero(2)


def test_basis_counts():
    assert len(enumerate_basis("base", S, None, 1, 1)) == 6
    assert len(enumerate_basis("base", S, None, 2, 0)) == 1
    assert len(enumerate_basis("weil", S, D, 0, 1)) == 6
    assert len(enumerate_basis("mixed", SO3, build_jet_algebra(2, 2), 2, 2)) == 3 * 10 * 6


def test_function_differential_rank():
    mat = assemble_matrix("base", S, None, 0, 1)
    assert mat.shape == (2, 3)
    assert mat.rank() == 2
    assert mat.kernel() == [{0: Fraction(1)}]


def test_casimir_in_kernel():
    mat = assemble_matrix("base", SO3, None, 0, 2)
    casimir = Poly.parse("x1^2 + x2^2 + x3^2", 3)
    pos = {k: i for i, k in enumerate(mat.domain)}
    vec = {pos[((), m, None)]: c for m, c in casimir.terms.items()}
    kernel_rref = linalg.rref(mat.kernel())
    assert linalg.in_span(vec, kernel_rref)


def test_zero_structure():
    for p in range(3):
        assert assemble_matrix("base", ZERO, None, p, 1).is_zero()
    report = betti("base", ZERO, None, 1)
    # H^p is everything: binom(2,p) * (number of monomials of degree <= 1)
    assert report.H() == tuple(math.comb(2, p) * 3 for p in range(3))
    assert center_report(ZERO, None, 2).dim == 6


def test_rank_against_sympy():
    cases = [("base", SO3, None, 1, 2), ("weil", S, D, 1, 2), ("mixed", SO3, D, 0, 2),
             ("weil", SO3, build_jet_algebra(1, 2), 1, 1)]
    for complex, pi, A, p, deg in cases:
        mat = assemble_matrix(complex, pi, A, p, deg)
        rows, cols = mat.shape
        dense = sympy.zeros(rows, cols)
        for j, col in enumerate(mat.columns):
            for r, v in col.items():
                dense[r, j] = sympy.Rational(v.numerator, v.denominator)
        assert mat.rank() == dense.rank()
        assert len(mat.kernel()) + mat.rank() == cols


def _composites(pi, A, complex, D):
    for p in range(pi.nvars):
        first = assemble_matrix(complex, pi, A, p, D)
        second = assemble_matrix(complex, pi, A, p + 1, codomain_degree(pi, D), domain=first.codomain)
        yield p, first.then(second)


@pytest.mark.parametrize("pi", [S, SO3], ids=["symplectic", "so3"])
@pytest.mark.parametrize("complex,A", [("base", None), ("mixed", D), ("weil", D),
                                       ("mixed", build_jet_algebra(1, 2)), ("weil", build_jet_algebra(2, 2))])
def test_composite_matrices_vanish(pi, complex, A):
    top = 4 if A is None or A.dim <= 3 else 2
    for deg in range(top + 1):
        for p, comp in _composites(pi, A, complex, deg):
            assert comp.is_zero(), (p, deg)


def test_symplectic_table():
    report = betti("base", S, None, 4)
    assert report.H() == (1, 0, 0)
    assert euler_characteristic_check(report)
    for row in report.table:
        assert row["ker"] + row["rank"] == row["dim"]


def test_so3_table():
    report = betti("base", SO3, None, 2)
    rows = [(r["p"], r["dim"], r["rank"], r["ker"], r["H"]) for r in report.table]
    assert rows == [(0, 10, 8, 2, 2), (1, 30, 22, 8, 0), (2, 30, 8, 22, 0), (3, 10, 0, 10, 2)]
    assert euler_characteristic_check(report)


def test_lifted_tables_are_free():
    for complex in ("mixed", "weil"):
        report = betti(complex, S, D, 3)
        assert report.H() == (2, 0, 0)
        assert [r["H_A_rank"] for r in report.table] == [1, 0, 0]


def test_permutation_invariance():
    for complex, pi, A in (("base", SO3, None), ("weil", S, D), ("mixed", SO3, D)):
        ref = betti(complex, pi, A, 2).table
        for seed in (1, 2, 3):
            assert betti(complex, pi, A, 2, order_seed=seed).table == ref


def test_inhomogeneous_downgrade():
    pi = PoissonStructure.from_entries(2, {(0, 1): Poly.parse("1 + x1", 2)})
    report = betti("base", pi, None, 2)
    assert report.note
    assert all(r["H"] is None for r in report.table)
    with pytest.raises(IllPosedQuotient):
        h1_report("base", pi, None, 2)


def test_basis_overflow():
    with pytest.raises(BasisOverflow):
        betti("weil", SO3, build_jet_algebra(2, 2), 3, max_dim=50)


def test_center_so3():
    rep = center_report(SO3, None, 2)
    assert [c.to_text() for c in rep.basis] == ["1", "x1^2 + x2^2 + x3^2"]
    g = Poly.parse("x1*x2 + x3^3 - 2", 3)
    assert all(bracket(SO3, c, g).is_zero() for c in rep.basis)


def test_center_symplectic_dual():
    for complex in ("mixed", "weil"):
        rep = center_report(S, D, 2, complex)
        assert [c.to_text() for c in rep.basis] == ["(1)", "(e1)"]
        probe = APoly.parse("(2+e1)*x1^2*x2 - e1*x2", 2, D)
        assert all(bracket_A(S, c, probe).is_zero() for c in rep.basis)


def test_h1_vanishes_symplectic():
    for D_ in range(1, 5):
        assert h1_report("base", S, None, D_).dim == 0
    for D_ in range(1, 4):
        assert h1_report("weil", S, D, D_).dim == 0
        assert h1_report("mixed", S, D, D_).dim == 0


def test_h1_zero_structure_has_representatives():
    rep = h1_report("base", ZERO, None, 1)
    assert rep.dim == 6
    for c in rep.representatives:
        assert c.p == 1 and not c.is_zero()


def test_h1_so3_golden():
    expected = (GOLDEN / "h1_so3_base_D1.json").read_text()
    got = json.dumps(h1_report("base", SO3, None, 1).as_dict(), indent=2) + "\n"
    assert got == expected


def test_betti_so3_golden():
    expected = (GOLDEN / "betti_so3_base_D2.json").read_text()
    assert betti("base", SO3, None, 2).to_json() + "\n" == expected
