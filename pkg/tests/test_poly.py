import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from weilpoisson import randgen
from weilpoisson.algebra import AlgebraHom, build_jet_algebra, dual_numbers
from weilpoisson.poly import (
    APoint,
    APoly,
    AVectorField,
    Poly,
    VectorField,
    apply_hom_point,
    eval_A,
    lie_bracket,
    project,
    prolong_function,
    prolong_map,
    prolong_vector_field,
    tilde_apply,
)
from weilpoisson.textfmt import ParseError

D = dual_numbers()
J12 = build_jet_algebra(1, 2)


def P(text, n=2):
    return Poly.parse(text, n)


def test_parse_and_print():
    f = P("x1^2 + 2*x1*x2 - 3/4")
    assert f.to_text() == "x1^2 + 2*x1*x2 - 3/4"
    assert P("(x1 + x2)^2") == P("x1^2 + 2*x1*x2 + x2^2")
    assert P("0").to_text() == "0"


def test_parse_errors():
    with pytest.raises(ParseError):
        P("x3")
    with pytest.raises(ParseError):
        P("x1 +")
    with pytest.raises(ParseError):
        APoly.parse("e1*x1", 1, D, names=["e1"])


def test_against_sympy_expansion():
    rng = random.Random(3)
    xs = sympy.symbols("x1 x2 x3")
    for _ in range(30):
        f, g = randgen.poly(rng, 3), randgen.poly(rng, 3)
        expected = sympy.expand(sympy.sympify(f.to_text().replace("^", "**"))
                                * sympy.sympify(g.to_text().replace("^", "**")))
        got = sympy.sympify((f * g).to_text().replace("^", "**"))
        assert sympy.expand(got - expected) == 0
        dx = sympy.diff(sympy.sympify(f.to_text().replace("^", "**")), xs[1])
        assert sympy.expand(sympy.sympify(f.deriv(1).to_text().replace("^", "**")) - dx) == 0


def test_eval_x_squared_dual():
    f = prolong_function(Poly.parse("x1^2", 1), D)
    x0, x1 = Fraction(3), Fraction(5, 2)
    value = eval_A(f, APoint.of(D, D.element([x0, x1])))
    assert value == D.element([x0 ** 2, 2 * x0 * x1])


def test_eval_constant():
    f = prolong_function(Poly.const(2, 7), J12)
    assert eval_A(f, APoint.of(J12, J12.parse("1+e1"), J12.parse("2"))) == J12.scalar(7)


def test_eval_xy_jet_1_2():
    f = prolong_function(P("x1*x2"), J12)
    xi = APoint.of(J12, J12.parse("1+e1"), J12.parse("2+3*e1+e1^2"))
    assert eval_A(f, xi) == J12.parse("2+5*e1+4*e1^2")


def test_projection_and_base_value():
    xi = APoint.of(D, D.parse("1+e1"), D.parse("-2+7*e1"))
    assert project(xi) == (1, -2)
    f = P("x1^3 - x2")
    assert eval_A(prolong_function(f, D), xi).augmentation() == f(1, -2)


def test_prolong_map_examples():
    h = (Poly.parse("x1^2", 1),)
    xi = APoint.of(D, D.parse("1+e1"))
    assert prolong_map(h, xi).coords == (D.parse("1+2*e1"),)
    ident = (Poly.var(2, 0), Poly.var(2, 1))
    pt = APoint.of(D, D.parse("3-e1"), D.parse("e1"))
    assert prolong_map(ident, pt) == pt
    g = (Poly.parse("x1 + 1", 1),)
    composite = (g[0].compose(h),)
    assert prolong_map(g, prolong_map(h, xi)).coords == (D.parse("2+2*e1"),)
    assert prolong_map(composite, xi) == prolong_map(g, prolong_map(h, xi))


def test_apply_hom_point_truncates():
    xi = APoint.of(J12, J12.parse("1+e1+e1^2"))
    h = AlgebraHom.by_labels(J12, D)
    assert apply_hom_point(h, xi).coords == (D.parse("1+e1"),)
    # naturality: h(f^A(xi)) = f^B(h(xi))
    f = Poly.parse("x1^3", 1)
    lhs = h(eval_A(prolong_function(f, J12), xi))
    rhs = eval_A(prolong_function(f, D), apply_hom_point(h, xi))
    assert lhs == rhs


def test_vector_field_prolongation_examples():
    d_dx = VectorField([Poly.const(1, 1)])
    f = Poly.parse("x1^2", 1)
    assert prolong_vector_field(d_dx, D)(f) == prolong_function(Poly.parse("2*x1", 1), D)
    x_dx = VectorField([Poly.var(1, 0)])
    assert prolong_vector_field(x_dx, D).components == (prolong_function(Poly.var(1, 0), D),)

    theta = VectorField([Poly.var(2, 1), Poly(2)])  # y d/dx
    g = P("x1^2")
    via_base = prolong_function(theta(g), D)
    via_lift = prolong_vector_field(theta, D)(g)
    via_tilde = tilde_apply(prolong_vector_field(theta, D), prolong_function(g, D))
    assert via_base == via_lift == via_tilde == prolong_function(P("2*x1*x2"), D)


def test_tilde_examples():
    x = APoly.var(1, D, 0)
    X = AVectorField([APoly.const(1, D, D.gen("e1"))])
    assert tilde_apply(X, x * x) == x * D.gen("e1") * 2
    assert tilde_apply(X, APoly.const(1, D)).is_zero()
    euler = AVectorField([x])
    assert tilde_apply(euler, x ** 3) == (x ** 3) * 3


def test_lie_bracket_examples():
    d_dx = prolong_vector_field(VectorField([Poly.const(1, 1)]), D)
    x_dx = prolong_vector_field(VectorField([Poly.var(1, 0)]), D)
    assert lie_bracket(d_dx, x_dx) == d_dx
    assert lie_bracket(x_dx, x_dx) == AVectorField.zero(1, D)

    theta = VectorField([Poly.var(2, 1), Poly(2)])
    eta = VectorField([Poly(2), Poly.var(2, 0)])
    classical = theta.bracket(eta)
    assert classical.components == (-Poly.var(2, 0), Poly.var(2, 1))
    assert lie_bracket(prolong_vector_field(theta, J12), prolong_vector_field(eta, J12)) == \
        prolong_vector_field(classical, J12)


def test_apoly_text_round_trip():
    rng = random.Random(5)
    for A in (D, J12, build_jet_algebra(2, 2)):
        for _ in range(20):
            phi = randgen.apoly(rng, 3, A)
            assert APoly.parse(phi.to_text(), 3, A) == phi


def test_apoly_components():
    phi = APoly.parse("(1+2*e1)*x1^2 - e1*x2", 2, D)
    assert phi.component(0) == P("x1^2")
    assert phi.component(1) == P("2*x1^2 - x2")
    assert APoly.from_components(2, D, [phi.component(0), phi.component(1)]) == phi


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_prolongation_is_pointwise_homomorphism(seed):
    rng = random.Random(seed)
    A = rng.choice([D, J12, build_jet_algebra(2, 2)])
    n = rng.randint(1, 3)
    f, g = randgen.poly(rng, n), randgen.poly(rng, n)
    xi = randgen.point(rng, A, n)
    ev = lambda h: eval_A(prolong_function(h, A), xi)  # noqa: E731
    assert ev(f * g) == ev(f) * ev(g)
    assert ev(f + g) == ev(f) + ev(g)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_poly_text_round_trip(seed):
    rng = random.Random(seed)
    f = randgen.poly(rng, 3)
    assert Poly.parse(f.to_text(), 3) == f
