"""The three Poisson cochain complexes and their Chevalley-Eilenberg differentials.

``base``  : cochains C^inf(M)^p -> C^inf(M), representation f -> ad(f).
``mixed`` : cochains C^inf(M)^p -> C^inf(M^A, A), representation f -> [ad(f)]^A~.
``weil``  : cochains C^inf(M^A, A)^p -> C^inf(M^A, A), representation phi -> tau_phi~.

Every differential is

    dW(a_1..a_{p+1}) = sum_i (-1)^(i-1) rho(a_i) W(..a_i omitted..)
                     + sum_{i<j} (-1)^(i+j) W([a_i, a_j], ..a_i, a_j omitted..)

with 1-based i, j.  ``sign="miswired"`` swaps the first sum to (-1)^i; that
variant is not a differential and exists only as a regression hook.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import WeilAlgebra
from .poisson import PoissonStructure, bracket, bracket_A, prolong_ad_tilde, tau
from .poly import APoly, Poly, prolong_function, tilde_apply

__all__ = [
    "COMPLEXES",
    "CallableCochain",
    "ClosednessWitness",
    "MultiVectorCochain",
    "as_callable",
    "cochain_eval",
    "coboundary",
    "d_base",
    "d_squared_probe",
    "d_tilde",
    "d_tilde_A",
    "derivation_residual",
    "identity_cochain",
    "inner_derivation_cochain",
    "is_closed",
    "prolong_cochain",
    "tau_cochain",
]

COMPLEXES = ("base", "mixed", "weil")
SIGNS = ("standard", "miswired")


def _perm_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


_PERMS: dict[int, list] = {}


def _signed_perms(p):
    if p not in _PERMS:
        _PERMS[p] = [(perm, _perm_sign(perm)) for perm in itertools.permutations(range(p))]
    return _PERMS[p]


def _sort_indices(idx):
    """(sign, sorted tuple) or (0, None) if an index repeats."""
    if len(set(idx)) != len(idx):
        return 0, None
    order = sorted(range(len(idx)), key=lambda t: idx[t])
    return _perm_sign(order), tuple(idx[t] for t in order)


class MultiVectorCochain:
    """An alternating multiderivation cochain, stored as a p-vector field.

    ``coeffs`` maps strictly increasing index tuples (0-based) to Poly
    (base complex) or APoly (mixed and weil complexes).  Evaluation is

        W(f_1..f_p) = sum_I coeff_I * det[d f_b / d x_{I_a}].
    """

    def __init__(self, complex: str, p: int, nvars: int, coeffs=None, algebra: WeilAlgebra | None = None):
        if complex not in COMPLEXES:
            raise ValueError(f"unknown complex {complex!r}")
        if complex != "base" and algebra is None:
            algebra = next((c.algebra for c in (coeffs or {}).values() if isinstance(c, APoly)), None)
            if algebra is None:
                raise ValueError(f"the {complex} complex needs an algebra")
        self.complex = complex
        self.p = p
        self.nvars = nvars
        self.algebra = algebra if complex != "base" else None
        self.coeffs = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != p or any(not 0 <= t < nvars for t in idx):
                raise ValueError(f"bad index tuple {idx} for a degree-{p} cochain on R^{nvars}")
            sign, key = _sort_indices(idx)
            if sign == 0:
                continue
            c = self._coerce_value(c)
            if sign < 0:
                c = -c
            if key in self.coeffs:
                c = self.coeffs[key] + c
            if c:
                self.coeffs[key] = c
            else:
                self.coeffs.pop(key, None)

    def _coerce_value(self, c):
        if self.complex == "base":
            if not isinstance(c, Poly):
                c = Poly.const(self.nvars, c)
            return c
        if isinstance(c, APoly):
            if c.algebra != self.algebra:
                raise ValueError("coefficient from another algebra")
            return c
        if isinstance(c, Poly):
            return prolong_function(c, self.algebra)
        return APoly.const(self.nvars, self.algebra, c)

    def zero_value(self):
        if self.complex == "base":
            return Poly(self.nvars)
        return APoly(self.nvars, self.algebra)

    def coefficient(self, idx) -> Poly | APoly:
        """Fully antisymmetric accessor: any ordering of indices, zero on repeats."""
        sign, key = _sort_indices(tuple(idx))
        if sign == 0 or key not in self.coeffs:
            return self.zero_value()
        return self.coeffs[key] if sign > 0 else -self.coeffs[key]

    def __call__(self, *args):
        return cochain_eval(self, *args)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, MultiVectorCochain):
            return NotImplemented
        return (self.complex, self.p, self.nvars, self.algebra, self.coeffs) == \
               (other.complex, other.p, other.nvars, other.algebra, other.coeffs)

    def __add__(self, other):
        self._same_space(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return MultiVectorCochain(self.complex, self.p, self.nvars, out, self.algebra)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MultiVectorCochain(self.complex, self.p, self.nvars,
                                  {k: -v for k, v in self.coeffs.items()}, self.algebra)

    def scale(self, factor) -> "MultiVectorCochain":
        return MultiVectorCochain(self.complex, self.p, self.nvars,
                                  {k: v * factor for k, v in self.coeffs.items()}, self.algebra)

    def _same_space(self, other):
        if (self.complex, self.p, self.nvars) != (other.complex, other.p, other.nvars) or \
                self.algebra != other.algebra:
            raise ValueError("cochains live in different spaces")

    def __repr__(self):
        body = ", ".join(f"{','.join(str(i + 1) for i in k)}: {v}" for k, v in sorted(self.coeffs.items()))
        return f"MultiVectorCochain({self.complex}, p={self.p}, {{{body}}})"


class CallableCochain:
    """A cochain given by an evaluator; skew-symmetry is the caller's promise."""

    def __init__(self, complex: str, p: int, fn: Callable, nvars: int,
                 algebra: WeilAlgebra | None = None, skew: bool = True):
        if complex not in COMPLEXES:
            raise ValueError(f"unknown complex {complex!r}")
        if complex != "base" and algebra is None:
            raise ValueError(f"the {complex} complex needs an algebra")
        self.complex = complex
        self.p = p
        self.fn = fn
        self.nvars = nvars
        self.algebra = algebra if complex != "base" else None
        self.skew = skew

    def __call__(self, *args):
        return cochain_eval(self, *args)

    def __repr__(self):
        return f"CallableCochain({self.complex}, p={self.p})"


def _coerce_arg(cochain, a):
    if cochain.complex == "weil":
        if isinstance(a, Poly):
            return prolong_function(a, cochain.algebra)
        if not isinstance(a, APoly):
            raise TypeError("weil cochains take A-valued functions as arguments")
        return a
    if not isinstance(a, Poly):
        raise TypeError(f"{cochain.complex} cochains take real polynomial arguments")
    return a


def cochain_eval(cochain, *args):
    if len(args) != cochain.p:
        raise ValueError(f"degree-{cochain.p} cochain got {len(args)} arguments")
    args = [_coerce_arg(cochain, a) for a in args]
    if isinstance(cochain, CallableCochain):
        return cochain.fn(*args)
    p = cochain.p
    total = cochain.zero_value()
    if p == 0:
        return cochain.coeffs.get((), total)
    derivs = [{} for _ in args]
    for idx, c in cochain.coeffs.items():
        det = None
        for perm, s in _signed_perms(p):
            prod = None
            for b, a in enumerate(perm):
                i = idx[a]
                d = derivs[b].get(i)
                if d is None:
                    d = derivs[b][i] = args[b].deriv(i)
                if not d:
                    prod = None
                    break
                prod = d if prod is None else prod * d
            if prod is not None:
                det = (prod if s > 0 else -prod) if det is None else (det + prod if s > 0 else det - prod)
        if det is not None and det:
            total = total + c * det
    return total


# ---------------------------------------------------------------------------
# representations


class _Representation:
    def __init__(self, complex: str, pi: PoissonStructure, algebra: WeilAlgebra | None):
        self.complex = complex
        self.pi = pi
        self.algebra = algebra
        self.n = pi.nvars
        self._fields = {}

    def coordinates(self):
        if self.complex == "weil":
            return [APoly.var(self.n, self.algebra, i) for i in range(self.n)]
        return [Poly.var(self.n, i) for i in range(self.n)]

    def zero(self):
        if self.complex == "base":
            return Poly(self.n)
        return APoly(self.n, self.algebra)

    def act(self, a, value):
        if self.complex == "base":
            return bracket(self.pi, a, value)
        if self.complex == "mixed":
            if isinstance(value, Poly):
                value = prolong_function(value, self.algebra)
            key = a
            X = self._fields.get(key)
            if X is None:
                X = self._fields[key] = prolong_ad_tilde(self.pi, a, self.algebra)
            return tilde_apply(X, value)
        return bracket_A(self.pi, a, value)

    def lie(self, a, b):
        if self.complex == "weil":
            return bracket_A(self.pi, a, b)
        return bracket(self.pi, a, b)


def _coboundary_value(rep, omega_eval, p, args, sign="standard"):
    total = rep.zero()
    for i in range(p + 1):
        value = omega_eval(*(args[:i] + args[i + 1:]))
        if not value:
            continue
        term = rep.act(args[i], value)
        # 0-based i: standard sign (-1)^(i_1based - 1) = (-1)^i
        negative = (i % 2 == 1) if sign == "standard" else (i % 2 == 0)
        total = total - term if negative else total + term
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            br = rep.lie(args[i], args[j])
            if not br:
                continue
            rest = [br] + [a for t, a in enumerate(args) if t != i and t != j]
            value = omega_eval(*rest)
            total = total - value if (i + j) % 2 else total + value
    return total


def coboundary(pi: PoissonStructure, omega, algebra: WeilAlgebra | None = None, sign: str = "standard"):
    """The CE differential of ``omega`` in its own complex."""
    if sign not in SIGNS:
        raise ValueError(f"unknown sign convention {sign!r}")
    if omega.nvars != pi.nvars:
        raise ValueError("cochain and structure live on different R^n")
    algebra = omega.algebra if omega.algebra is not None else algebra
    if omega.complex != "base" and algebra is None:
        raise ValueError("an algebra is required for lifted complexes")
    rep = _Representation(omega.complex, pi, algebra)
    p = omega.p
    if isinstance(omega, MultiVectorCochain):
        coords = rep.coordinates()
        coeffs = {}
        for idx in itertools.combinations(range(pi.nvars), p + 1):
            value = _coboundary_value(rep, omega, p, [coords[i] for i in idx], sign)
            if value:
                coeffs[idx] = value
        return MultiVectorCochain(omega.complex, p + 1, pi.nvars, coeffs, algebra)
    return CallableCochain(omega.complex, p + 1,
                           lambda *args: _coboundary_value(rep, omega, p, list(args), sign),
                           pi.nvars, algebra)


def _require(omega, complex):
    if omega.complex != complex:
        raise ValueError(f"expected a {complex} cochain, got {omega.complex}")


def d_base(pi: PoissonStructure, omega, sign: str = "standard"):
    _require(omega, "base")
    return coboundary(pi, omega, sign=sign)


def d_tilde(pi: PoissonStructure, algebra: WeilAlgebra, omega, sign: str = "standard"):
    _require(omega, "mixed")
    return coboundary(pi, omega, algebra, sign=sign)


def d_tilde_A(pi: PoissonStructure, algebra: WeilAlgebra, omega, sign: str = "standard"):
    _require(omega, "weil")
    return coboundary(pi, omega, algebra, sign=sign)


def as_callable(omega):
    if isinstance(omega, CallableCochain):
        return omega
    return CallableCochain(omega.complex, omega.p, lambda *a: cochain_eval(omega, *a),
                           omega.nvars, omega.algebra)


def prolong_cochain(eta, algebra: WeilAlgebra):
    """eta^A(f_1..f_p) = [eta(f_1..f_p)]^A."""
    _require(eta, "base")
    if isinstance(eta, MultiVectorCochain):
        return MultiVectorCochain("mixed", eta.p, eta.nvars,
                                  {k: prolong_function(v, algebra) for k, v in eta.coeffs.items()}, algebra)
    return CallableCochain("mixed", eta.p, lambda *a: prolong_function(eta.fn(*a), algebra),
                           eta.nvars, algebra)


@dataclass(frozen=True)
class ClosednessWitness:
    args: tuple
    residual: object

    def __str__(self):
        return f"d(W)({', '.join(map(str, self.args))}) = {self.residual}"


def is_closed(pi: PoissonStructure, omega, algebra: WeilAlgebra | None = None,
              probes: Sequence[Sequence] | None = None, sign: str = "standard"):
    """None when the coboundary vanishes, else a ClosednessWitness.

    Multivector cochains are decided symbolically; callable cochains are
    tested on the given probe tuples (each of length p+1).
    """
    d = coboundary(pi, omega, algebra, sign=sign)
    if isinstance(d, MultiVectorCochain):
        rep = _Representation(omega.complex, pi, d.algebra)
        coords = rep.coordinates()
        for idx, value in sorted(d.coeffs.items()):
            return ClosednessWitness(tuple(coords[i] for i in idx), value)
        return None
    if probes is None:
        raise ValueError("callable cochains need a probe set")
    for args in probes:
        value = d(*args)
        if value:
            return ClosednessWitness(tuple(args), value)
    return None


def d_squared_probe(complex: str, pi: PoissonStructure, algebra, omega, probe, sign: str = "standard"):
    """(d o d W)(probe) computed by two evaluations of the CE formula."""
    _require(omega, complex)
    dd = coboundary(pi, coboundary(pi, as_callable(omega), algebra, sign), algebra, sign)
    return dd(*probe)


# ---------------------------------------------------------------------------
# named cochains


def inner_derivation_cochain(pi: PoissonStructure, h: Poly) -> MultiVectorCochain:
    """ad(h) = {h, .} as a base 1-cochain."""
    n = pi.nvars
    return MultiVectorCochain("base", 1, n, {(j,): bracket(pi, h, Poly.var(n, j)) for j in range(n)})


def tau_cochain(pi: PoissonStructure, chi: APoly) -> MultiVectorCochain:
    """phi -> tau_chi~(phi) = {chi, phi}_A as a weil 1-cochain."""
    field = tau(pi, chi)
    return MultiVectorCochain("weil", 1, pi.nvars, {(j,): c for j, c in enumerate(field.components)},
                              chi.algebra)


def identity_cochain(nvars: int, algebra: WeilAlgebra) -> CallableCochain:
    return CallableCochain("weil", 1, lambda phi: phi, nvars, algebra)


def derivation_residual(pi: PoissonStructure, omega, phi: APoly, psi: APoly) -> APoly:
    """W({phi,psi}_A) - {W(phi),psi}_A - {phi,W(psi)}_A for a weil 1-cochain W."""
    _require(omega, "weil")
    return (omega(bracket_A(pi, phi, psi)) - bracket_A(pi, omega(phi), psi)
            - bracket_A(pi, phi, omega(psi)))
