import random

import pytest

from weilpoisson import randgen
from weilpoisson.algebra import dual_numbers
from weilpoisson.cochains import coboundary
from weilpoisson.poisson import PoissonStructure
from weilpoisson.poly import Poly
from weilpoisson.verify import SUITES, run_property, run_suite, shrink


def test_suite_registry_covers_all_criteria():
    assert sorted(SUITES["all"]) == list(range(1, 13))
    with pytest.raises(KeyError):
        run_suite("nope")


def test_shrink_removes_irrelevant_terms():
    f = Poly.parse("x1^3 + 5*x2 - 7 + x1*x2", 2)

    def prop(p):
        # fails whenever the cubic term is present
        return p if (3, 0) in p.terms else None

    (small,), residual = shrink((f,), prop, prop(f))
    assert small == Poly.parse("x1^3", 2)


def test_failing_property_reports_witness():
    def gen(rng):
        return (randgen.poly(rng, 2),)

    result = run_property("always nonzero", random.Random(0), 10, gen, lambda p: None if p.is_zero() else p, ["f"])
    assert not result.passed
    assert result.witness.startswith("f=")
    assert "FAIL" in result.line()


def test_crash_counts_as_failure():
    result = run_property("crash", random.Random(0), 3, lambda rng: (1,), lambda x: 1 / 0)
    assert not result.passed
    assert "ZeroDivisionError" in result.witness


def test_callable_cochains_are_multilinear():
    rng = random.Random(2)
    S = PoissonStructure.so3()
    A = dual_numbers()
    for complex in ("base", "mixed", "weil"):
        for p in (1, 2):
            w = randgen.callable_cochain(rng, complex, 3, p, None if complex == "base" else A)
            if complex == "weil":
                make = lambda: randgen.apoly(rng, 3, A, 2, 2)  # noqa: E731
            else:
                make = lambda: randgen.poly(rng, 3, 2, 2)  # noqa: E731
            args = [make() for _ in range(p)]
            extra = make()
            assert w(*([args[0] + extra] + args[1:])) == w(*args) + w(*([extra] + args[1:]))
            if p == 2:
                assert w(args[0], args[1]) == -w(args[1], args[0])
            # and d^2 vanishes on them
            alg = None if complex == "base" else A
            dd = coboundary(S, coboundary(S, w, alg), alg)
            assert not dd(*[make() for _ in range(p + 2)])


def test_suites_are_deterministic():
    a = run_suite("poisson", seed=5)
    b = run_suite("poisson", seed=5)
    assert {k: [r.as_dict() for r in v] for k, v in a.items()} == {k: [r.as_dict() for r in v] for k, v in b.items()}
