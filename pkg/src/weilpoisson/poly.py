"""Polynomial functions on R^n and A-valued polynomial functions on the Weil bundle.

``Poly`` has rational coefficients and models C^inf(M) in the global chart;
``APoly`` has WeilElement coefficients and models C^inf(M^A, A).  Terms are
stored sparsely as {exponent tuple: coefficient} with no zero entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraHom, WeilAlgebra, WeilElement, hom_apply
from .textfmt import ParseError, evaluate, format_rational

__all__ = [
    "APoint",
    "APoly",
    "AVectorField",
    "Poly",
    "VectorField",
    "apply_hom_point",
    "eval_A",
    "lie_bracket",
    "partial_derivative",
    "project",
    "prolong_function",
    "prolong_map",
    "prolong_vector_field",
    "tilde_apply",
    "var_names",
]


def var_names(nvars: int) -> list[str]:
    return [f"x{i + 1}" for i in range(nvars)]


def _monomial_text(exps, names) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _add_terms(a: dict, b: dict, sign=1) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m)
        v = (c if sign > 0 else -c) if v is None else (v + c if sign > 0 else v - c)
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _mul_terms(a: dict, b: dict) -> dict:
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            c = ca * cb
            v = out.get(m)
            out[m] = c if v is None else v + c
    return {m: c for m, c in out.items() if c}


def _deriv_terms(terms: dict, i: int) -> dict:
    out = {}
    for m, c in terms.items():
        e = m[i]
        if e:
            m2 = m[:i] + (e - 1,) + m[i + 1:]
            out[m2] = c * e
    return out


class Poly:
    """Polynomial in ``nvars`` variables with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars:
                    raise ValueError(f"exponent {m} does not have {nvars} entries")
                c = Fraction(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def const(cls, nvars: int, c=1) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        return cls(nvars, {tuple(int(t == i) for t in range(nvars)): 1})

    @classmethod
    def monomial(cls, exps, c=1) -> "Poly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def parse(cls, text: str, nvars: int, names: Sequence[str] | None = None) -> "Poly":
        names = list(names) if names else var_names(nvars)

        def lookup(name):
            if name not in names:
                raise ParseError(f"unknown variable {name!r}")
            return cls.var(nvars, names.index(name))

        return evaluate(text, lambda q: cls.const(nvars, q), lookup)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._raw(self.nvars, _add_terms(self.terms, o.terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._raw(self.nvars, _add_terms(self.terms, o.terms, -1))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Poly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return Poly(self.nvars)
            return Poly._raw(self.nvars, {m: c * other for m, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._raw(self.nvars, _mul_terms(self.terms, o.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = Poly.const(self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(m) == d for m in self.terms)

    def deriv(self, i: int) -> "Poly":
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        return Poly._raw(self.nvars, _deriv_terms(self.terms, i))

    def __call__(self, *point):
        if len(point) != self.nvars:
            raise ValueError("wrong number of coordinates")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def compose(self, inner: Sequence["Poly"]) -> "Poly":
        """self(inner_1, ..., inner_n) for polynomial maps inner: R^m -> R^n."""
        if len(inner) != self.nvars:
            raise ValueError("arity mismatch in composition")
        m = inner[0].nvars if inner else 0
        total = Poly(m)
        powers = [[Poly.const(m)] for _ in inner]
        for exps, c in self.terms.items():
            t = Poly.const(m, c)
            for k, e in enumerate(exps):
                while len(powers[k]) <= e:
                    powers[k].append(powers[k][-1] * inner[k])
                t = t * powers[k][e]
            total = total + t
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = names or var_names(self.nvars)
        if not self.terms:
            return "0"
        out = ""
        for k, (m, c) in enumerate(self.sorted_terms()):
            mono = _monomial_text(m, names)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            else:
                body = format_rational(mag)
            if k == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    __str__ = to_text

    def __repr__(self):
        return f"Poly({self.to_text()})"


class APoly:
    """Polynomial in ``nvars`` variables with coefficients in a Weil algebra."""

    __slots__ = ("nvars", "algebra", "terms")

    def __init__(self, nvars: int, algebra: WeilAlgebra, terms=None):
        self.nvars = nvars
        self.algebra = algebra
        self.terms = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars:
                    raise ValueError(f"exponent {m} does not have {nvars} entries")
                if not isinstance(c, WeilElement):
                    c = algebra.scalar(c)
                elif c.algebra != algebra:
                    raise ValueError("coefficient from another algebra")
                if c:
                    self.terms[m] = c

    @classmethod
    def _raw(cls, nvars, algebra, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.algebra = algebra
        p.terms = terms
        return p

    @classmethod
    def const(cls, nvars: int, algebra: WeilAlgebra, a=1) -> "APoly":
        if not isinstance(a, WeilElement):
            a = algebra.scalar(a)
        return cls(nvars, algebra, {(0,) * nvars: a})

    @classmethod
    def var(cls, nvars: int, algebra: WeilAlgebra, i: int) -> "APoly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        return cls(nvars, algebra, {tuple(int(t == i) for t in range(nvars)): algebra.one()})

    @classmethod
    def parse(cls, text: str, nvars: int, algebra: WeilAlgebra,
              names: Sequence[str] | None = None) -> "APoly":
        """Parse e.g. ``(1+2*e1)*x1^2 - e1*x2``; algebra symbols and variables may mix."""
        names = list(names) if names else var_names(nvars)
        clash = set(names) & set(algebra.names)
        if clash:
            raise ParseError(f"names used both as variables and algebra symbols: {sorted(clash)}")

        def lookup(name):
            if name in names:
                return cls.var(nvars, algebra, names.index(name))
            try:
                return cls.const(nvars, algebra, algebra.gen(name))
            except KeyError:
                raise ParseError(f"unknown symbol {name!r}") from None

        return evaluate(text, lambda q: cls.const(nvars, algebra, q), lookup)

    def _coerce(self, other):
        if isinstance(other, APoly):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            if other.algebra != self.algebra:
                raise ValueError(f"algebra mismatch: {self.algebra.name} vs {other.algebra.name}")
            return other
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return prolong_function(other, self.algebra)
        if isinstance(other, (WeilElement, int, Fraction)):
            return APoly.const(self.nvars, self.algebra, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return APoly._raw(self.nvars, self.algebra, _add_terms(self.terms, o.terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return APoly._raw(self.nvars, self.algebra, _add_terms(self.terms, o.terms, -1))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return APoly._raw(self.nvars, self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return APoly(self.nvars, self.algebra)
            return APoly._raw(self.nvars, self.algebra, {m: c.scale(other) for m, c in self.terms.items()})
        if isinstance(other, WeilElement):
            if other.algebra != self.algebra:
                raise ValueError("algebra mismatch")
            terms = {m: c * other for m, c in self.terms.items()}
            return APoly._raw(self.nvars, self.algebra, {m: c for m, c in terms.items() if c})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return APoly._raw(self.nvars, self.algebra, _mul_terms(self.terms, o.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = APoly.const(self.nvars, self.algebra)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, APoly):
            return (self.nvars == other.nvars and self.algebra == other.algebra
                    and self.terms == other.terms)
        if isinstance(other, (Poly, WeilElement, int, Fraction)):
            try:
                return self == self._coerce(other)
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def deriv(self, i: int) -> "APoly":
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c.scale(e)
        return APoly._raw(self.nvars, self.algebra, out)

    def component(self, k: int) -> Poly:
        """Real polynomial multiplying the k-th basis element of A."""
        return Poly(self.nvars, {m: c.coeffs[k] for m, c in self.terms.items()})

    @classmethod
    def from_components(cls, nvars: int, algebra: WeilAlgebra, comps: Sequence[Poly]) -> "APoly":
        out = APoly(nvars, algebra)
        for k, p in enumerate(comps):
            if p:
                out = out + prolong_function(p, algebra) * algebra.basis(k)
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = names or var_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = _monomial_text(m, names)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"APoly({self.to_text()})"


@dataclass(frozen=True)
class APoint:
    """An infinitely near point, given by its chart coordinates in A^n."""

    algebra: WeilAlgebra
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        for c in coords:
            if not isinstance(c, WeilElement) or c.algebra != self.algebra:
                raise ValueError("all coordinates must lie in the point's algebra")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, algebra: WeilAlgebra, *coords) -> "APoint":
        vals = []
        for c in coords:
            if isinstance(c, str):
                c = algebra.parse(c)
            elif not isinstance(c, WeilElement):
                c = algebra.scalar(c)
            vals.append(c)
        return cls(algebra, tuple(vals))

    @property
    def nvars(self):
        return len(self.coords)


class VectorField:
    """theta = sum_i theta_i d/dx_i with polynomial components."""

    def __init__(self, components: Sequence[Poly]):
        self.components = tuple(components)
        self.nvars = len(self.components)
        if any(c.nvars != self.nvars for c in self.components):
            raise ValueError("component count must equal the number of variables")

    def __call__(self, f: Poly) -> Poly:
        out = Poly(self.nvars)
        for i, c in enumerate(self.components):
            if c:
                out = out + c * f.deriv(i)
        return out

    def bracket(self, other: "VectorField") -> "VectorField":
        return VectorField([self(b) - other(a) for a, b in zip(self.components, other.components)])

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.components == other.components

    def __repr__(self):
        return f"VectorField({', '.join(map(str, self.components))})"


class AVectorField:
    """A vector field on M^A, i.e. a derivation C^inf(M) -> C^inf(M^A, A).

    It is determined by its values on the coordinate functions; ``tilde``
    applies the A-linear extension to A-valued functions.
    """

    def __init__(self, components: Sequence[APoly]):
        self.components = tuple(components)
        self.nvars = len(self.components)
        if not self.components:
            raise ValueError("need at least one component")
        self.algebra = self.components[0].algebra
        if any(c.nvars != self.nvars or c.algebra != self.algebra for c in self.components):
            raise ValueError("components must share nvars and algebra")

    @classmethod
    def zero(cls, nvars: int, algebra: WeilAlgebra) -> "AVectorField":
        return cls([APoly(nvars, algebra)] * nvars)

    def __call__(self, f: Poly) -> APoly:
        """X(f) = sum_i X(x_i) * (df/dx_i)^A."""
        out = APoly(self.nvars, self.algebra)
        for i, c in enumerate(self.components):
            if c:
                d = f.deriv(i)
                if d:
                    out = out + c * prolong_function(d, self.algebra)
        return out

    def tilde(self, phi: APoly) -> APoly:
        return tilde_apply(self, phi)

    def __add__(self, other):
        return AVectorField([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return AVectorField([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return AVectorField([-a for a in self.components])

    def scale(self, factor) -> "AVectorField":
        """Multiply by an element of A or a function in C^inf(M^A, A)."""
        return AVectorField([a * factor for a in self.components])

    def __eq__(self, other):
        return isinstance(other, AVectorField) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"AVectorField({'; '.join(map(str, self.components))})"


def partial_derivative(p, i: int):
    return p.deriv(i)


def prolong_function(f: Poly, algebra: WeilAlgebra) -> APoly:
    """f^A: coefficients pushed through R -> A."""
    return APoly._raw(f.nvars, algebra, {m: algebra.scalar(c) for m, c in f.terms.items()})


def eval_A(phi: APoly, xi: APoint) -> WeilElement:
    if phi.nvars != xi.nvars:
        raise ValueError("arity mismatch between function and point")
    if phi.algebra != xi.algebra:
        raise ValueError("algebra mismatch between function and point")
    A = phi.algebra
    powers = [[A.one()] for _ in xi.coords]
    total = A.zero()
    for m, c in phi.terms.items():
        t = c
        for k, e in enumerate(m):
            if e:
                while len(powers[k]) <= e:
                    powers[k].append(powers[k][-1] * xi.coords[k])
                t = t * powers[k][e]
        total = total + t
    return total


def project(xi: APoint) -> tuple:
    """pi_M: the origin of an infinitely near point."""
    return tuple(c.augmentation() for c in xi.coords)


def prolong_map(h: Sequence[Poly], xi: APoint) -> APoint:
    """h^A(xi) for a polynomial map h: R^n -> R^m given by its components."""
    if any(c.nvars != xi.nvars for c in h):
        raise ValueError("map components must take as many variables as the point has coordinates")
    return APoint(xi.algebra, tuple(eval_A(prolong_function(c, xi.algebra), xi) for c in h))


def apply_hom_point(phi: AlgebraHom, xi: APoint) -> APoint:
    """phi_M: M^A -> M^B, xi -> phi o xi."""
    if xi.algebra != phi.source:
        raise ValueError("point is not over the homomorphism's source algebra")
    return APoint(phi.target, tuple(hom_apply(phi, c) for c in xi.coords))


def prolong_vector_field(theta: VectorField, algebra: WeilAlgebra) -> AVectorField:
    return AVectorField([prolong_function(c, algebra) for c in theta.components])


def tilde_apply(X: AVectorField, phi: APoly) -> APoly:
    """The A-linear derivation extending X: sum_i X(x_i) * dphi/dx_i."""
    if X.nvars != phi.nvars:
        raise ValueError("arity mismatch")
    out = APoly(phi.nvars, phi.algebra)
    for i, c in enumerate(X.components):
        if c:
            d = phi.deriv(i)
            if d:
                out = out + c * d
    return out


def lie_bracket(X: AVectorField, Y: AVectorField) -> AVectorField:
    """[X, Y] with components X~(Y(x_i)) - Y~(X(x_i))."""
    return AVectorField([tilde_apply(X, b) - tilde_apply(Y, a)
                         for a, b in zip(X.components, Y.components)])
