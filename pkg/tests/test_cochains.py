import random

import pytest

from weilpoisson import randgen
from weilpoisson.algebra import build_jet_algebra, dual_numbers
from weilpoisson.cochains import (
    CallableCochain,
    MultiVectorCochain,
    coboundary,
    d_base,
    d_squared_probe,
    d_tilde,
    d_tilde_A,
    derivation_residual,
    identity_cochain,
    inner_derivation_cochain,
    is_closed,
    prolong_cochain,
    tau_cochain,
)
from weilpoisson.poisson import PoissonStructure, bracket_A
from weilpoisson.poly import APoly, Poly, prolong_function

D = dual_numbers()
S = PoissonStructure.symplectic(2)
SO3 = PoissonStructure.so3()
x, y = Poly.var(2, 0), Poly.var(2, 1)


def base(p, coeffs, n=2):
    return MultiVectorCochain("base", p, n, coeffs)


def test_evaluation_examples():
    w = base(1, {(0,): x})
    assert w(y).is_zero()
    assert w(x) == x
    area = base(2, {(0, 1): 1})
    assert area(x, y) == Poly.const(2, 1)
    assert area(y, x) == Poly.const(2, -1)


def test_keys_are_antisymmetric():
    w = base(2, {(1, 0): x})
    assert w.coeffs == {(0, 1): -x}
    assert w.coefficient((1, 0)) == x
    assert w.coefficient((0, 0)).is_zero()
    with pytest.raises(ValueError):
        base(1, {(2,): x})


def test_coboundary_of_function():
    d = d_base(S, base(0, {(): x}))
    assert d.coeffs == {(1,): Poly.const(2, -1)}
    assert d(x).is_zero()
    assert d(y) == Poly.const(2, -1)


def test_inner_derivations_are_closed():
    for h in (x * x, x * y + y, Poly.const(2, 3)):
        assert d_base(S, inner_derivation_cochain(S, h)).is_zero()
    h3 = Poly.parse("x1*x2*x3 + x3^2", 3)
    assert d_base(SO3, inner_derivation_cochain(SO3, h3)).is_zero()


def test_x_d_dx_is_not_closed():
    eta = base(1, {(0,): x})
    d = d_base(S, eta)
    assert d.coeffs == {(0, 1): Poly.const(2, 1)}
    witness = is_closed(S, eta)
    assert witness.args == (x, y)
    assert witness.residual == Poly.const(2, 1)


def test_x_d_dy_is_closed():
    # d(eta)(x, y) = {x, x} - {y, 0} - eta(1) = 0
    assert is_closed(S, base(1, {(1,): x})) is None


def test_mixed_chain_map_example():
    eta = base(1, {(0,): x})
    lifted = prolong_cochain(eta, D)
    d = d_tilde(S, D, lifted)
    assert d(x, y) == APoly.const(2, D)
    assert d == prolong_cochain(d_base(S, eta), D)
    inner = prolong_cochain(inner_derivation_cochain(S, x * x), D)
    assert d_tilde(S, D, inner).is_zero()


def test_mixed_function_coboundary():
    phi = MultiVectorCochain("mixed", 0, 2, {(): APoly.var(2, D, 0) * D.gen("e1")})
    d = d_tilde(S, D, phi)
    assert d(y) == APoly.const(2, D, -D.gen("e1"))
    assert d(x).is_zero()


def test_prolonged_cochain_values():
    eta = base(1, {(0,): x})
    assert prolong_cochain(eta, D).coeffs == {(0,): prolong_function(x, D)}
    assert prolong_cochain(base(1, {}), D).is_zero()
    eta2 = base(2, {(0, 1): x * y})
    assert prolong_cochain(eta2, D)(x, y) == prolong_function(eta2(x, y), D)


def test_weil_identity_cochain():
    ident = identity_cochain(2, D)
    X, Y = APoly.var(2, D, 0), APoly.var(2, D, 1)
    d = coboundary(S, ident, D)
    assert d(X, Y) == bracket_A(S, X, Y)
    witness = is_closed(S, ident, D, probes=[(X, Y)])
    assert witness.residual == APoly.const(2, D)


def test_weil_function_coboundary_is_inner():
    chi = APoly.parse("(1+e1)*x1^2 - x2", 2, D)
    d = d_tilde_A(S, D, MultiVectorCochain("weil", 0, 2, {(): chi}))
    psi = APoly.parse("e1*x1*x2 + x2^3", 2, D)
    assert d(psi) == bracket_A(S, psi, chi)
    assert d_tilde_A(S, D, d).is_zero()


def test_tau_cochain_is_closed_derivation():
    chi = prolong_function(x * x, D)
    w = tau_cochain(S, chi)
    assert is_closed(S, w, D) is None
    rng = random.Random(0)
    for _ in range(10):
        phi, psi = randgen.apoly(rng, 2, D, 2, 3), randgen.apoly(rng, 2, D, 2, 3)
        assert derivation_residual(S, w, phi, psi).is_zero()


def test_callable_matches_multivector():
    rng = random.Random(1)
    for _ in range(10):
        w = randgen.multivector(rng, "base", 3, 2, 2)
        c = CallableCochain("base", 2, lambda f, g, w=w: w(f, g), 3)
        f, g, h = (randgen.poly(rng, 3) for _ in range(3))
        assert coboundary(SO3, w)(f, g, h) == coboundary(SO3, c)(f, g, h)


def test_d_squared_probes():
    cube = x * x
    for omega in (base(1, {(0,): x * y}), base(2, {(0, 1): x + y}), base(0, {(): x ** 3})):
        probe = [x, y, cube, y * y][:omega.p + 2]
        assert d_squared_probe("base", S, None, omega, probe).is_zero()
    A = build_jet_algebra(1, 2)
    rng = random.Random(9)
    for _ in range(5):
        w = randgen.multivector(rng, "weil", 3, 1, 2, A)
        probe = [randgen.apoly(rng, 3, A, 2, 2) for _ in range(3)]
        assert d_squared_probe("weil", SO3, A, w, probe).is_zero()


def test_miswired_sign_breaks_nilpotency():
    X, Y, Z = (Poly.var(3, i) for i in range(3))
    h = base(0, {(): X}, n=3)
    assert d_squared_probe("base", SO3, None, h, [X, Y]).is_zero()
    assert d_squared_probe("base", SO3, None, h, [X, Y], sign="miswired") == 2 * Y
    # the constant plane structure cannot see it: brackets of coordinates are constants
    assert d_squared_probe("base", S, None, base(0, {(): x}), [x, y], sign="miswired").is_zero()


def test_closedness_iff_for_lifts():
    rng = random.Random(6)
    for _ in range(10):
        eta = randgen.multivector(rng, "base", 3, 1, 2)
        base_closed = d_base(SO3, eta).is_zero()
        lifted = is_closed(SO3, prolong_cochain(eta, D), D)
        assert (lifted is None) == base_closed


def test_wrong_complex_rejected():
    with pytest.raises(ValueError):
        d_tilde(S, D, base(1, {(0,): x}))
    with pytest.raises(ValueError):
        MultiVectorCochain("mixed", 1, 2, {(0,): x})
