"""Seeded random generators for the property suites."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .algebra import WeilAlgebra, WeilElement
from .cochains import CallableCochain, MultiVectorCochain
from .homology import monomials
from .poly import APoint, APoly, Poly


def rational(rng: random.Random, nonzero=False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-4, 4), rng.choice((1, 1, 1, 2, 3)))
        if q or not nonzero:
            return q


def poly(rng: random.Random, nvars: int, max_degree: int = 3, max_terms: int = 4) -> Poly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        m = rng.choice(monomials(nvars, d))
        terms[m] = rational(rng, nonzero=True)
    return Poly(nvars, terms)


def element(rng: random.Random, algebra: WeilAlgebra) -> WeilElement:
    return algebra.element([rational(rng) for _ in range(algebra.dim)])


def apoly(rng: random.Random, nvars: int, algebra: WeilAlgebra, max_degree: int = 3, max_terms: int = 4) -> APoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        m = rng.choice(monomials(nvars, d))
        terms[m] = element(rng, algebra)
    return APoly(nvars, algebra, terms)


def point(rng: random.Random, algebra: WeilAlgebra, nvars: int) -> APoint:
    return APoint(algebra, tuple(element(rng, algebra) for _ in range(nvars)))


def poly_map(rng: random.Random, src: int, dst: int, max_degree: int = 3) -> tuple:
    return tuple(poly(rng, src, max_degree, 3) for _ in range(dst))


def multivector(rng: random.Random, complex: str, nvars: int, p: int, max_degree: int = 3,
                algebra: WeilAlgebra | None = None) -> MultiVectorCochain:
    coeffs = {}
    for idx in itertools.combinations(range(nvars), p):
        if rng.random() < 0.8:
            if complex == "base":
                coeffs[idx] = poly(rng, nvars, max_degree, 3)
            else:
                coeffs[idx] = apoly(rng, nvars, algebra, max_degree, 3)
    return MultiVectorCochain(complex, p, nvars, coeffs, algebra)


def _operator(rng, nvars, coeff):
    """A random linear differential operator of order <= 2 with the given coefficient factory."""
    parts = []
    for _ in range(rng.randint(1, 2)):
        order = rng.randint(0, 2)
        idx = tuple(rng.randrange(nvars) for _ in range(order))
        parts.append((coeff(), idx))

    def apply(f):
        out = None
        for c, idx in parts:
            g = f
            for i in idx:
                g = g.deriv(i)
            term = c * g
            out = term if out is None else out + term
        return out

    return apply


def callable_cochain(rng: random.Random, complex: str, nvars: int, p: int,
                     algebra: WeilAlgebra | None = None) -> CallableCochain:
    """Skew multilinear cochain that is generally not a multiderivation."""
    if complex == "base":
        coeff = lambda: poly(rng, nvars, 2, 2)  # noqa: E731
    else:
        coeff = lambda: apoly(rng, nvars, algebra, 2, 2)  # noqa: E731

    if p == 0:
        value = coeff()
        return CallableCochain(complex, 0, lambda: value, nvars, algebra)
    if p == 1:
        L = _operator(rng, nvars, coeff)
        return CallableCochain(complex, 1, L, nvars, algebra)
    if p == 2:
        L1 = _operator(rng, nvars, coeff)
        # second factor acts without extra coefficients so the product stays in the value ring
        L2 = _operator(rng, nvars, lambda: Fraction(rng.randint(1, 3)))
        return CallableCochain(complex, 2, lambda f, g: L1(f) * L2(g) - L1(g) * L2(f), nvars, algebra)
    raise ValueError("callable cochains are generated for p <= 2")
