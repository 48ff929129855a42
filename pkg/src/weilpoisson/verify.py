"""Seeded verification suites.

Each numbered check returns a list of ``CheckResult``.  Randomized checks
shrink a failing input (dropping terms while the failure persists) so the
reported witness is small.  Everything is exact rational arithmetic; a
check passes only on exact equality.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from . import linalg
from . import randgen as rg
from .algebra import WeilAlgebra, build_jet_algebra, dual_numbers, height, ideal_power_dims
from .cochains import (MultiVectorCochain, coboundary, d_base, d_tilde, inner_derivation_cochain,
                       is_closed, prolong_cochain, tau_cochain)
from .homology import basis_cochain, betti, center_report, enumerate_basis, expand, h1_report
from .poisson import PoissonStructure, bracket, bracket_A, prolong_ad_tilde, tau
from .poly import APoly, AVectorField, Poly, eval_A, project, prolong_function, prolong_map, tilde_apply

__all__ = ["CRITERIA", "SUITES", "CheckResult", "run_criterion", "run_suite"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    count: int
    witness: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name}  ({self.count} checked)"
        if self.witness:
            text += f"\n      witness: {self.witness}"
        return text

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "count": self.count, "witness": self.witness}


def lifting_algebras() -> list[WeilAlgebra]:
    return [dual_numbers(), build_jet_algebra(1, 2), build_jet_algebra(2, 2)]


def sample_structures() -> list[PoissonStructure]:
    return [PoissonStructure.symplectic(2), PoissonStructure.so3()]


# ---------------------------------------------------------------------------
# shrinking and the property runner


def _drop_one(value):
    """Candidates obtained by deleting a single term or coefficient."""
    if isinstance(value, Poly):
        for m in list(value.terms):
            yield Poly(value.nvars, {k: c for k, c in value.terms.items() if k != m})
    elif isinstance(value, APoly):
        for m in list(value.terms):
            yield APoly(value.nvars, value.algebra, {k: c for k, c in value.terms.items() if k != m})
    elif isinstance(value, MultiVectorCochain):
        for idx in list(value.coeffs):
            rest = {k: c for k, c in value.coeffs.items() if k != idx}
            yield MultiVectorCochain(value.complex, value.p, value.nvars, rest, value.algebra)
            for smaller in _drop_one(value.coeffs[idx]):
                yield MultiVectorCochain(value.complex, value.p, value.nvars, {**rest, idx: smaller},
                                         value.algebra)
    elif isinstance(value, AVectorField):
        for i, c in enumerate(value.components):
            for smaller in _drop_one(c):
                comps = list(value.components)
                comps[i] = smaller
                yield AVectorField(comps)
    elif isinstance(value, tuple) and value and all(isinstance(v, Poly) for v in value):
        for i, c in enumerate(value):
            for smaller in _drop_one(c):
                yield value[:i] + (smaller,) + value[i + 1:]


def _failure(prop, inputs):
    try:
        return prop(*inputs)
    except Exception as exc:  # a crash is a failure too; keep it as the residual
        return f"{type(exc).__name__}: {exc}"


def shrink(inputs: tuple, prop: Callable, residual, budget: int = 200):
    """Greedy term deletion while ``prop`` keeps failing."""
    inputs = tuple(inputs)
    progress = True
    while progress and budget > 0:
        progress = False
        for pos, value in enumerate(inputs):
            for candidate in _drop_one(value):
                budget -= 1
                trial = inputs[:pos] + (candidate,) + inputs[pos + 1:]
                r = _failure(prop, trial)
                if r is not None:
                    inputs, residual, progress = trial, r, True
                    break
                if budget <= 0:
                    break
            if progress or budget <= 0:
                break
    return inputs, residual


def _fmt(value) -> str:
    if isinstance(value, (Poly, APoly)):
        return value.to_text()
    if isinstance(value, tuple):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def run_property(name: str, rng: random.Random, count: int, gen: Callable, prop: Callable,
                 labels: Sequence[str] | None = None) -> CheckResult:
    for _ in range(count):
        inputs = gen(rng)
        residual = _failure(prop, inputs)
        if residual is not None:
            inputs, residual = shrink(inputs, prop, residual)
            names = labels or [f"arg{i}" for i in range(len(inputs))]
            parts = [f"{k}={_fmt(v)}" for k, v in zip(names, inputs) if not isinstance(v, (WeilAlgebra,
                                                                                          PoissonStructure))]
            return CheckResult(name, False, count, f"{'; '.join(parts)}; residual={_fmt(residual)}")
    return CheckResult(name, True, count)


def _diff(lhs, rhs):
    """None when equal, else the difference (or the pair if they cannot be subtracted)."""
    if lhs == rhs:
        return None
    try:
        return lhs - rhs
    except TypeError:
        return (lhs, rhs)


def _first(*checks):
    for c in checks:
        r = c()
        if r is not None:
            return r
    return None


# ---------------------------------------------------------------------------
# 1. Weil algebra axioms


def check_weil_axioms(seed: int = 1, pairs: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    for r in range(1, 4):
        for k in range(0, 4):
            A = build_jet_algebra(r, k)
            name = f"jet({r},{k})"
            problems = []
            if A.dim != math.comb(r + k, k):
                problems.append(f"dim {A.dim} != binomial({r + k},{k})")
            # powers of the maximal ideal from the structure constants
            dims, stalled = ideal_power_dims(A.mult_table, A.dim, [list(v) for v in A.maximal_ideal_basis])
            # dims[j] = dim m^(j+1): m^(k+1) = 0 and m^k != 0
            if stalled or len(dims) != k:
                problems.append(f"ideal power dimensions {dims} (stalled={stalled}) for height {k}")
            if height(A) != k:
                problems.append(f"height {height(A)} != {k}")
            results.append(CheckResult(f"{name} dimension and nilpotency", not problems, 1,
                                       "; ".join(problems) or None))

            def prop(a, b, A=A):
                lhs = (a * b).augmentation()
                rhs = a.augmentation() * b.augmentation()
                return None if lhs == rhs else lhs - rhs

            results.append(run_property(f"{name} augmentation multiplicative", rng, pairs,
                                        lambda rng, A=A: (rg.element(rng, A), rg.element(rng, A)), prop,
                                        ["a", "b"]))
    return results


# ---------------------------------------------------------------------------
# 2. prolongation is a homomorphism, and functorial


def check_prolongation(seed: int = 1, triples: int = 200, map_pairs: int = 100) -> list[CheckResult]:
    rng = random.Random(seed)
    algebras = lifting_algebras() + [build_jet_algebra(3, 1), build_jet_algebra(1, 3)]

    def gen(rng):
        A = rng.choice(algebras)
        n = rng.randint(1, 3)
        return A, rg.poly(rng, n), rg.poly(rng, n), rg.rational(rng), rg.point(rng, A, n)

    def prop(A, f, g, lam, xi):
        fA, gA = prolong_function(f, A), prolong_function(g, A)
        return _first(
            lambda: _diff(prolong_function(f * g, A), fA * gA),
            lambda: _diff(prolong_function(f + g, A), fA + gA),
            lambda: _diff(prolong_function(f * lam, A), fA * lam),
            # the same law read pointwise on M^A
            lambda: _diff(eval_A(prolong_function(f * g, A), xi), eval_A(fA, xi) * eval_A(gA, xi)),
            # the value lies over f at the base point
            lambda: _diff(eval_A(fA, xi).augmentation(), f(*project(xi))),
        )

    def gen_maps(rng):
        A = rng.choice(algebras)
        a, b, c = (rng.randint(1, 3) for _ in range(3))
        h = rg.poly_map(rng, a, b, 2)
        g = rg.poly_map(rng, b, c, 2)
        return A, h, g, rg.point(rng, A, a)

    def prop_maps(A, h, g, xi):
        composite = tuple(gc.compose(h) for gc in g)
        lhs = prolong_map(composite, xi)
        rhs = prolong_map(g, prolong_map(h, xi))
        return None if lhs == rhs else (lhs.coords, rhs.coords)

    return [
        run_property("(f*g)^A = f^A*g^A, additivity, scalars, pointwise", rng, triples, gen, prop,
                     ["A", "f", "g", "lambda", "xi"]),
        run_property("(g o h)^A = g^A o h^A", rng, map_pairs, gen_maps, prop_maps, ["A", "h", "g", "xi"]),
    ]


# ---------------------------------------------------------------------------
# 3. tilde extension: A-linear, Leibniz, extends X


def check_tilde(seed: int = 1, per_algebra: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    for A in lifting_algebras():
        def gen(rng, A=A):
            n = rng.randint(1, 3)
            X = AVectorField([rg.apoly(rng, n, A, 2, 3) for _ in range(n)])
            return (X, rg.apoly(rng, n, A), rg.apoly(rng, n, A), rg.element(rng, A),
                    rg.poly(rng, n), rg.poly(rng, n))

        def prop(X, phi, psi, a, f, g, A=A):
            T = lambda u: tilde_apply(X, u)  # noqa: E731
            n = X.nvars
            return _first(
                lambda: _diff(T(phi * a + psi), T(phi) * a + T(psi)),
                lambda: _diff(T(phi * psi), T(phi) * psi + phi * T(psi)),
                lambda: _diff(T(prolong_function(f, A)), X(f)),
                lambda: _diff(X(f * g), X(f) * prolong_function(g, A) + prolong_function(f, A) * X(g)),
                lambda: next((_diff(T(APoly.var(n, A, i)), X.components[i]) for i in range(n)
                              if T(APoly.var(n, A, i)) != X.components[i]), None),
            )

        results.append(run_property(f"tilde extension over {A.name}", rng, per_algebra, gen, prop,
                                    ["X", "phi", "psi", "a", "f", "g"]))
    return results


# ---------------------------------------------------------------------------
# 4. the fields tau_phi


def check_tau(seed: int = 1, per_structure: int = 100) -> list[CheckResult]:
    rng = random.Random(seed)
    algebras = lifting_algebras()
    results = []
    for pi in sample_structures():
        n = pi.nvars

        def gen(rng, n=n):
            A = rng.choice(algebras)
            return A, rg.apoly(rng, n, A, 2, 3), rg.apoly(rng, n, A, 2, 3), rg.element(rng, A), rg.poly(rng, n)

        def prop(A, phi, psi, a, f, pi=pi):
            tp, tq = tau(pi, phi), tau(pi, psi)
            return _first(
                lambda: _diff(tau(pi, phi + psi), tp + tq),
                lambda: _diff(tau(pi, phi * a), tp.scale(a)),
                lambda: _diff(tau(pi, phi * psi), tq.scale(phi) + tp.scale(psi)),
                lambda: _diff(tau(pi, prolong_function(f, A)), prolong_ad_tilde(pi, f, A)),
                # defining identity on an arbitrary real function
                lambda: _diff(tp(f), -tilde_apply(prolong_ad_tilde(pi, f, A), phi)),
            )

        results.append(run_property(f"tau identities on {pi.name}", rng, per_structure, gen, prop,
                                    ["A", "phi", "psi", "a", "f"]))
    return results


# ---------------------------------------------------------------------------
# 5. the lifted bracket prolongs the bracket and is Poisson


def check_lifted_bracket(seed: int = 1, pairs: int = 200, triples: int = 50) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    for pi in sample_structures():
        n = pi.nvars
        for A in lifting_algebras():
            def prop(f, g, pi=pi, A=A):
                return _diff(bracket_A(pi, prolong_function(f, A), prolong_function(g, A)),
                             prolong_function(bracket(pi, f, g), A))

            results.append(run_property(f"{{f^A,g^A}}_A = {{f,g}}^A on {pi.name} over {A.name}", rng, pairs,
                                        lambda rng, n=n: (rg.poly(rng, n), rg.poly(rng, n)), prop, ["f", "g"]))

            def jacobi(u, v, w, pi=pi):
                b = lambda s, t: bracket_A(pi, s, t)  # noqa: E731
                total = b(u, b(v, w)) + b(v, b(w, u)) + b(w, b(u, v))
                return total if total else None

            results.append(run_property(f"Jacobi of {{,}}_A on {pi.name} over {A.name}", rng, triples,
                                        lambda rng, n=n, A=A: tuple(rg.apoly(rng, n, A, 2, 3) for _ in range(3)),
                                        jacobi, ["phi", "psi", "chi"]))
    return results


# ---------------------------------------------------------------------------
# 6. prolongation of cochains is a chain map


def check_chain_map(seed: int = 1, per_config: int = 50, sign: str = "standard") -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    for pi in sample_structures():
        for A in lifting_algebras():
            for p in range(3):
                def prop(eta, pi=pi, A=A):
                    return _diff(d_tilde(pi, A, prolong_cochain(eta, A), sign),
                                 prolong_cochain(d_base(pi, eta, sign), A))

                results.append(run_property(
                    f"d~(eta^A) = (d eta)^A on {pi.name} over {A.name}, p={p}", rng, per_config,
                    lambda rng, pi=pi, p=p: (rg.multivector(rng, "base", pi.nvars, p, 3),), prop, ["eta"]))
    return results


# ---------------------------------------------------------------------------
# 7. closed iff the prolongation is closed


def check_closed_iff(seed: int = 1, count: int = 20, sign: str = "standard") -> list[CheckResult]:
    rng = random.Random(seed)
    structures = sample_structures()
    algebras = lifting_algebras()

    def gen_inner(rng):
        pi = rng.choice(structures)
        return pi, rng.choice(algebras), rg.poly(rng, pi.nvars)

    def prop_inner(pi, A, h):
        eta = inner_derivation_cochain(pi, h)
        w = is_closed(pi, eta, sign=sign)
        if w is not None:
            return f"ad(h) not closed: {w}"
        w = is_closed(pi, prolong_cochain(eta, A), A, sign=sign)
        if w is not None:
            return f"ad(h)^A not closed: {w}"
        w = is_closed(pi, tau_cochain(pi, prolong_function(h, A)), A, sign=sign)
        if w is not None:
            return f"tau of h^A not closed in the weil complex: {w}"
        return None

    def gen_open(rng):
        while True:
            pi = rng.choice(structures)
            p = rng.randint(0, 2)
            eta = rg.multivector(rng, "base", pi.nvars, p, 3)
            if not d_base(pi, eta, sign).is_zero():
                return pi, rng.choice(algebras), eta

    def prop_open(pi, A, eta):
        if d_base(pi, eta, sign).is_zero():
            return None  # shrinking made it closed; nothing to witness
        w = is_closed(pi, prolong_cochain(eta, A), A, sign=sign)
        if w is None:
            return "lifted cochain reported closed although d(eta) != 0"
        # the witness must be the prolongation of the base obstruction
        expected = prolong_function(d_base(pi, eta, sign)(*w.args), A)
        return _diff(w.residual, expected)

    return [
        run_property("ad(h) closed and its lifts closed", rng, count, gen_inner, prop_inner, ["pi", "A", "h"]),
        run_property("d(eta) != 0 gives a lifted witness", rng, count, gen_open, prop_open, ["pi", "A", "eta"]),
    ]


# ---------------------------------------------------------------------------
# 8. cohomologous cochains lift to cohomologous cochains


def check_cohomologous(seed: int = 1, count: int = 50, sign: str = "standard") -> list[CheckResult]:
    rng = random.Random(seed)
    structures = sample_structures()
    algebras = lifting_algebras()

    def gen(rng):
        pi = rng.choice(structures)
        p = rng.randint(1, 2)
        return (pi, rng.choice(algebras), rg.multivector(rng, "base", pi.nvars, p, 3),
                rg.multivector(rng, "base", pi.nvars, p - 1, 3))

    def prop(pi, A, eta, nu):
        shifted = eta + d_base(pi, nu, sign)
        return _diff(prolong_cochain(shifted, A) - prolong_cochain(eta, A),
                     d_tilde(pi, A, prolong_cochain(nu, A), sign))

    return [run_property("(eta + d nu)^A - eta^A = d~(nu^A)", rng, count, gen, prop, ["pi", "A", "eta", "nu"])]


# ---------------------------------------------------------------------------
# 9. d o d = 0


def _nilpotency_symbolic(pi, A, complex, sign, max_p=2, max_degree=3):
    """d(d W) for every basis cochain; by linearity this covers all cochains."""
    algebra = None if complex == "base" else A
    count = 0
    for p in range(max_p + 1):
        for key in enumerate_basis(complex, pi, algebra, p, max_degree):
            omega = basis_cochain(complex, pi, algebra, p, key)
            dd = coboundary(pi, coboundary(pi, omega, algebra, sign), algebra, sign)
            count += 1
            if not dd.is_zero():
                idx, value = sorted(dd.coeffs.items())[0]
                return count, (f"p={p} cochain {_cochain_text(omega)} has d^2 component "
                               f"{','.join(str(i + 1) for i in idx)} = {value.to_text()}")
    return count, None


def _cochain_text(c: MultiVectorCochain) -> str:
    parts = []
    for idx, v in sorted(c.coeffs.items()):
        slot = "".join(f"d{i + 1}" for i in idx) or "1"
        parts.append(f"({v.to_text()})*{slot}")
    return " + ".join(parts) or "0"


def check_nilpotency(seed: int = 1, probes: int = 100, sign: str = "standard") -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    for pi in sample_structures():
        configs = [("base", None)] + [(c, A) for A in lifting_algebras() for c in ("mixed", "weil")]
        for complex, A in configs:
            count, witness = _nilpotency_symbolic(pi, A, complex, sign)
            where = pi.name if A is None else f"{pi.name} over {A.name}"
            results.append(CheckResult(f"d^2 = 0 on all {complex} multivector cochains, {where}",
                                       witness is None, count, witness))

    structures = sample_structures()
    algebras = lifting_algebras()
    failures = []
    for t in range(probes):
        pi = structures[t % 2]
        complex = ("base", "mixed", "weil")[(t // 2) % 3]
        A = None if complex == "base" else algebras[(t // 6) % 3]
        p = (t // 18) % 3
        n = pi.nvars
        omega = rg.callable_cochain(rng, complex, n, p, A)
        if complex == "weil":
            args = [rg.apoly(rng, n, A, 2, 2) for _ in range(p + 2)]
        else:
            args = [rg.poly(rng, n, 2, 2) for _ in range(p + 2)]
        dd = coboundary(pi, coboundary(pi, omega, A, sign), A, sign)
        value = dd(*args)
        if value:
            failures.append(f"{complex} p={p} on {pi.name}: d^2 W({', '.join(a.to_text() for a in args)}) "
                            f"= {value.to_text()}")
            break
    results.append(CheckResult("d^2 = 0 on random non-derivation callable cochains", not failures, probes,
                               failures[0] if failures else None))
    return results


# ---------------------------------------------------------------------------
# 10. H^0 is the center


def _span_equal(got, expected) -> bool:
    return linalg.canonical_basis(got) == linalg.canonical_basis(expected)


def _as_zero_cochain_vector(complex, n, value, A):
    return expand(MultiVectorCochain(complex, 0, n, {(): value}, A))


def check_center(seed: int = 1, probes: int = 20) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    S = PoissonStructure.symplectic(2)
    A = dual_numbers()
    for complex in ("mixed", "weil"):
        rep = center_report(S, A, 3, complex)
        expected = [APoly.const(2, A, A.basis(i)) for i in range(A.dim)]
        got_v = [_as_zero_cochain_vector(complex, 2, c, A) for c in rep.basis]
        exp_v = [_as_zero_cochain_vector(complex, 2, c, A) for c in expected]
        problem = None if _span_equal(got_v, exp_v) else \
            f"basis {[c.to_text() for c in rep.basis]} != A-constants"
        if problem is None:
            problem = _center_probe(rng, S, A, complex, rep.basis, probes)
        results.append(CheckResult(f"H^0 of the {complex} complex, symplectic R^2 over dual numbers, D=3",
                                   problem is None, rep.dim, problem))

    so3 = PoissonStructure.so3()
    rep = center_report(so3, None, 2)
    x, y, z = (Poly.var(3, i) for i in range(3))
    expected = [Poly.const(3), x * x + y * y + z * z]
    got_v = [_as_zero_cochain_vector("base", 3, c, None) for c in rep.basis]
    exp_v = [_as_zero_cochain_vector("base", 3, c, None) for c in expected]
    problem = None if _span_equal(got_v, exp_v) else f"basis {[c.to_text() for c in rep.basis]}"
    if problem is None:
        problem = _center_probe(rng, so3, None, "base", rep.basis, probes)
    results.append(CheckResult("H^0 of so(3)*, base complex, D=2", problem is None, rep.dim, problem))
    return results


def _center_probe(rng, pi, A, complex, basis, probes):
    """Each basis element must bracket to zero with random probe functions."""
    n = pi.nvars
    for _ in range(probes):
        for c in basis:
            if complex == "base":
                g = rg.poly(rng, n)
                value = bracket(pi, c, g)
            elif complex == "mixed":
                g = rg.poly(rng, n)
                value = tilde_apply(prolong_ad_tilde(pi, g, A), c)
            else:
                g = rg.apoly(rng, n, A)
                value = bracket_A(pi, c, g)
            if value:
                return f"{c.to_text()} does not commute with {g.to_text()}: {value.to_text()}"
    return None


# ---------------------------------------------------------------------------
# 11. H^1 vanishes for the symplectic plane


def check_h1_symplectic(seed: int = 1, degrees: Sequence[int] = (1, 2, 3, 4)) -> list[CheckResult]:
    S = PoissonStructure.symplectic(2)
    A = dual_numbers()
    results = []
    for complex in ("base", "mixed", "weil"):
        for D in degrees:
            alg = None if complex == "base" else A
            report = betti(complex, S, alg, D)
            h1 = h1_report(complex, S, alg, D)
            problems = []
            if report.row(1)["H"] != 0:
                problems.append(f"betti H^1 = {report.row(1)['H']}")
            if h1.dim != 0:
                problems.append(f"h1_report dim = {h1.dim}, representatives "
                                f"{[_cochain_text(c) for c in h1.representatives]}")
            table = tuple(r.get("H_A_rank", r["H"]) for r in report.table)
            if table != (1, 0, 0):
                problems.append(f"H table (A-rank) = {table}")
            if complex != "base" and report.H() != (A.dim, 0, 0):
                problems.append(f"H table (R-dim) = {report.H()}")
            results.append(CheckResult(f"H^1 = 0 and H = (1,0,0), {complex} complex, D={D}", not problems, 1,
                                       "; ".join(problems) or None))
    return results


# ---------------------------------------------------------------------------
# 12. restriction of scalars


def check_restriction_of_scalars(seed: int = 1, max_degree: int = 3) -> list[CheckResult]:
    results = []
    for pi in (PoissonStructure.symplectic(2), PoissonStructure.symplectic(4)):
        algebras = lifting_algebras() if pi.nvars == 2 else [dual_numbers()]
        for D in range(max_degree + 1):
            base = betti("base", pi, None, D)
            for A in algebras:
                for complex in ("mixed", "weil"):
                    lifted = betti(complex, pi, A, D)
                    bad = []
                    for rb, rl in zip(base.table, lifted.table):
                        for key in ("dim", "rank", "ker"):
                            if rl[key] != A.dim * rb[key]:
                                bad.append(f"p={rb['p']} {key}: {rl[key]} != {A.dim}*{rb[key]}")
                    results.append(CheckResult(f"{complex} over {A.name} = {A.dim} x base, {pi.name}, D={D}",
                                               not bad, len(base.table), "; ".join(bad) or None))
    return results


# ---------------------------------------------------------------------------
# registry


CRITERIA = {
    1: ("Weil algebra axioms for jet(r,k), r,k <= 3", check_weil_axioms),
    2: ("prolongation is a homomorphism and functorial", check_prolongation),
    3: ("tilde extension is the A-linear derivation extending the field", check_tilde),
    4: ("tau_phi identities", check_tau),
    5: ("lifted bracket prolongs the bracket and satisfies Jacobi", check_lifted_bracket),
    6: ("prolongation commutes with the differentials", check_chain_map),
    7: ("closed iff the lift is closed", check_closed_iff),
    8: ("cohomologous cochains lift to cohomologous cochains", check_cohomologous),
    9: ("nilpotency of all three differentials", check_nilpotency),
    10: ("H^0 is the center", check_center),
    11: ("H^1 = 0 for the symplectic plane", check_h1_symplectic),
    12: ("restriction of scalars for constant symplectic structures", check_restriction_of_scalars),
}

SIGNED = {6, 7, 8, 9}

SUITES = {
    "weil": [1],
    "prolong": [2, 3],
    "poisson": [4, 5],
    "complexes": [6, 7, 8, 9],
    "homology": [10, 11, 12],
}
SUITES["all"] = [c for suite in ("weil", "prolong", "poisson", "complexes", "homology") for c in SUITES[suite]]


def run_criterion(number: int, seed: int = 1, sign: str = "standard") -> list[CheckResult]:
    _, fn = CRITERIA[number]
    if number in SIGNED:
        return fn(seed, sign=sign)
    return fn(seed)


def run_suite(name: str, seed: int = 1, sign: str = "standard", on_result: Callable | None = None) -> dict:
    """Run a named suite; returns {criterion: [CheckResult, ...]}."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    out = {}
    for number in SUITES[name]:
        out[number] = run_criterion(number, seed, sign)
        if on_result is not None:
            on_result(number, out[number])
    return out
