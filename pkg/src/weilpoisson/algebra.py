"""Weil algebras: finite-dimensional local algebras A = R + m with m nilpotent.

Algebras carry a basis, sparse structure constants and an augmentation.
Jet algebras R[X1..Xr]/m^(k+1) and monomial quotients are built directly in
their monomial basis; arbitrary tables go through full validation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from . import linalg
from .textfmt import ParseError, evaluate, format_rational, parse_rational

__all__ = [
    "AlgebraHom",
    "InvalidAlgebra",
    "ValidationReport",
    "WeilAlgebra",
    "WeilElement",
    "augmentation_hom",
    "build_from_table",
    "build_jet_algebra",
    "build_monomial_quotient",
    "dual_numbers",
    "ideal_power_dims",
    "monomial_order_key",
    "trivial_algebra",
    "validate_table",
]


def monomial_order_key(exps: Sequence[int]):
    """Graded lexicographic key; lower degree first, then x1 > x2 > ..."""
    return (sum(exps), tuple(-e for e in exps))


def _monomial_label(names: Sequence[str], exps: Sequence[int]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass
class ValidationReport:
    ok: bool
    problem: str = ""
    witness: object = None
    height: int | None = None
    unit: tuple | None = None

    def as_dict(self):
        d = {"valid": self.ok}
        if not self.ok:
            d["problem"] = self.problem
            d["witness"] = _jsonable(self.witness)
        return d


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(o) for o in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj


class InvalidAlgebra(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(f"{report.problem} (witness: {report.witness})")
        self.report = report


class WeilAlgebra:
    """A Weil algebra with a fixed basis.

    ``mult_table[i][j][k]`` is the coefficient of e_k in e_i*e_j.  Instances
    are immutable and compare equal when basis labels, structure constants
    and augmentation agree.
    """

    def __init__(self, labels, sparse_table, aug, unit, height, ideal_basis,
                 names=None, name=None, spec=None):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self._table = sparse_table  # (i, j) -> tuple of (k, coeff)
        self.aug = tuple(Fraction(a) for a in aug)
        self._unit = tuple(Fraction(u) for u in unit)
        self.height = height
        self.maximal_ideal_basis = tuple(tuple(v) for v in ideal_basis)
        self.name = name or f"table(dim={self.dim})"
        self.spec = spec
        self._names = dict(names) if names else {lab: i for i, lab in enumerate(self.labels)}
        self._key = (self.labels, tuple(sorted(self._table.items())), self.aug)
        self._hash = hash(self._key)

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, WeilAlgebra):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WeilAlgebra({self.name}, dim={self.dim}, height={self.height})"

    @property
    def is_trivial(self) -> bool:
        return self.dim == 1

    @property
    def mult_table(self):
        t = [[[Fraction(0)] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), entries in self._table.items():
            for k, c in entries:
                t[i][j][k] = c
        return t

    # -- elements -----------------------------------------------------------
    def element(self, coeffs) -> "WeilElement":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        return WeilElement(self, coeffs)

    def zero(self) -> "WeilElement":
        return WeilElement(self, (Fraction(0),) * self.dim)

    def one(self) -> "WeilElement":
        return WeilElement(self, self._unit)

    def scalar(self, c) -> "WeilElement":
        c = Fraction(c)
        return WeilElement(self, tuple(c * u for u in self._unit))

    def basis(self, i: int) -> "WeilElement":
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return WeilElement(self, tuple(v))

    def gen(self, name: str) -> "WeilElement":
        if name not in self._names:
            raise KeyError(name)
        ref = self._names[name]
        if isinstance(ref, int):
            return self.basis(ref)
        return self.element(ref)

    @property
    def names(self):
        return tuple(self._names)

    def parse(self, text: str) -> "WeilElement":
        """Parse an element such as ``2 + 3*e1 - 1/2*e1^2``."""
        def lookup(name):
            try:
                return self.gen(name)
            except KeyError:
                raise ParseError(f"unknown algebra symbol {name!r} in {self.name}") from None
        return evaluate(text, self.scalar, lookup)

    def _mul_vec(self, a, b):
        out = [Fraction(0)] * self.dim
        table = self._table
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                entries = table.get((i, j))
                if entries:
                    f = ai * bj
                    for k, c in entries:
                        out[k] += f * c
        return tuple(out)


class WeilElement:
    """An element of a Weil algebra, stored as an exact coefficient vector."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: WeilAlgebra, coeffs: tuple):
        self.algebra = algebra
        self.coeffs = coeffs

    def _check(self, other):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise ValueError(f"algebra mismatch: {self.algebra.name} vs {other.algebra.name}")

    def _lift(self, other):
        if isinstance(other, WeilElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return WeilElement(self.algebra, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return WeilElement(self.algebra, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return WeilElement(self.algebra, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, WeilElement):
            return NotImplemented
        self._check(other)
        return WeilElement(self.algebra, self.algebra._mul_vec(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "WeilElement":
        c = Fraction(c)
        return WeilElement(self.algebra, tuple(c * a for a in self.coeffs))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = self.algebra.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, WeilElement):
            return self.algebra == other.algebra and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.algebra.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def augmentation(self) -> Fraction:
        return sum((a * c for a, c in zip(self.algebra.aug, self.coeffs)), Fraction(0))

    def __str__(self):
        parts = []
        for lab, c in zip(self.algebra.labels, self.coeffs):
            if not c:
                continue
            if lab == "1":
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = lab
            else:
                body = f"{format_rational(abs(c))}*{lab}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"WeilElement({self})"


def augmentation(a: WeilElement) -> Fraction:
    return a.augmentation()


def height(algebra: WeilAlgebra) -> int:
    return algebra.height


# ---------------------------------------------------------------------------
# constructors


def trivial_algebra() -> WeilAlgebra:
    """The algebra R itself (height 0)."""
    return build_jet_algebra(0, 0)


def dual_numbers() -> WeilAlgebra:
    return build_jet_algebra(1, 1)


def _monomial_algebra(names, monomials, relations, degree_cap, name, spec):
    monomials = sorted(monomials, key=monomial_order_key)
    index = {m: i for i, m in enumerate(monomials)}
    table = {}
    for (i, a), (j, b) in itertools.product(enumerate(monomials), repeat=2):
        prod = tuple(x + y for x, y in zip(a, b))
        k = index.get(prod)
        if k is not None:
            table[(i, j)] = ((k, Fraction(1)),)
    labels = [_monomial_label(names, m) for m in monomials]
    aug = [1] + [0] * (len(monomials) - 1)
    gens = {}
    for g, gname in enumerate(names):
        unit_vec = tuple(int(t == g) for t in range(len(names)))
        if unit_vec in index:
            gens[gname] = index[unit_vec]
        else:
            # generator already in the ideal of relations (e.g. relation x)
            gens[gname] = tuple([Fraction(0)] * len(monomials))
    for i, lab in enumerate(labels):
        gens.setdefault(lab, i)
    unit = [Fraction(1)] + [Fraction(0)] * (len(monomials) - 1)
    ideal = [tuple(Fraction(int(t == i)) for t in range(len(monomials))) for i in range(1, len(monomials))]
    # graded monomial ideal: m^k is spanned by basis monomials of degree >= k
    h = max(sum(m) for m in monomials)
    return WeilAlgebra(labels, table, aug, unit, h, ideal, names=gens, name=name, spec=spec)


def build_jet_algebra(r: int, k: int) -> WeilAlgebra:
    """R[X1..Xr]/m^(k+1): monomials of total degree <= k, generators e1..er."""
    if r < 0 or k < 0:
        raise ValueError("generator count and order must be non-negative")
    if r == 0 or k == 0:
        names = []
        monomials = [()]
    else:
        names = [f"e{i + 1}" for i in range(r)]
        monomials = [m for m in itertools.product(range(k + 1), repeat=r) if sum(m) <= k]
    return _monomial_algebra(names, monomials, [], k, f"jet({r},{k})",
                             {"kind": "jet", "generators": r, "order": k})


def _parse_relation(rel, names) -> tuple:
    if isinstance(rel, (list, tuple)):
        if len(rel) != len(names):
            raise ParseError(f"relation exponent vector {rel!r} has wrong length")
        return tuple(int(e) for e in rel)
    exps = [0] * len(names)
    for factor in str(rel).replace(" ", "").split("*"):
        base, _, power = factor.partition("^")
        if base not in names:
            raise ParseError(f"unknown variable {base!r} in relation {rel!r}")
        try:
            exps[names.index(base)] += int(power) if power else 1
        except ValueError:
            raise ParseError(f"bad exponent in relation {rel!r}") from None
    return tuple(exps)


def build_monomial_quotient(vars: Sequence[str], relation_monomials: Iterable,
                            degree_cap: int | None = None) -> WeilAlgebra:
    """R[vars]/(relations [+ m^(cap+1)]) in its standard monomial basis."""
    names = list(vars)
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable names")
    rels = [_parse_relation(r, names) for r in relation_monomials]
    if any(sum(r) == 0 for r in rels):
        raise ValueError("relation 1 makes the quotient zero")
    bounds = []
    for i, v in enumerate(names):
        pure = [r[i] for r in rels if all(e == 0 for t, e in enumerate(r) if t != i)]
        if pure:
            bounds.append(min(pure) - 1)
        elif degree_cap is not None:
            bounds.append(degree_cap)
        else:
            raise ValueError(f"quotient is infinite-dimensional: no pure power of {v!r} in the relations")

    def divisible(m):
        return any(all(a >= b for a, b in zip(m, r)) for r in rels)

    monomials = [m for m in itertools.product(*(range(b + 1) for b in bounds))
                 if not divisible(m) and (degree_cap is None or sum(m) <= degree_cap)]
    if not names:
        monomials = [()]
    rel_text = [_monomial_label(names, r) for r in rels]
    spec = {"kind": "monomial_quotient", "vars": names, "relations": rel_text}
    if degree_cap is not None:
        spec["degree_cap"] = degree_cap
    name = f"R[{','.join(names)}]/({','.join(rel_text)})"
    return _monomial_algebra(names, monomials, rels, degree_cap, name, spec)


def _table_mul(table, dim, a, b):
    out = [Fraction(0)] * dim
    for i in range(dim):
        if not a[i]:
            continue
        for j in range(dim):
            if not b[j]:
                continue
            f = a[i] * b[j]
            for k, c in enumerate(table[i][j]):
                if c:
                    out[k] += f * c
    return out


def ideal_power_dims(table, dim, ideal_basis, limit=None):
    """Dimensions of m, m^2, m^3, ... until zero or stationary.

    Returns (dims, stalled) where ``stalled`` is True if some power stopped
    shrinking while nonzero (m is then not nilpotent).
    """
    limit = dim + 1 if limit is None else limit
    current = [v for v in ideal_basis]
    dims = []
    while current:
        red = linalg.canonical_basis({c: v for c, v in enumerate(vec) if v} for vec in current)
        basis = [[row.get(c, Fraction(0)) for c in range(dim)] for row in red]
        if not basis:
            break
        if dims and len(basis) == dims[-1]:
            return dims, True
        dims.append(len(basis))
        if len(dims) > limit:
            return dims, True
        current = [_table_mul(table, dim, u, v) for u in basis for v in ideal_basis]
        current = [c for c in current if any(c)]
    return dims, False


def validate_table(labels, table, aug) -> ValidationReport:
    """Check a raw structure-constant table; the report names a witness on failure."""
    dim = len(labels)
    if dim == 0:
        return ValidationReport(False, "empty basis")
    try:
        if len(table) != dim or any(len(row) != dim for row in table) or any(
                len(table[i][j]) != dim for i in range(dim) for j in range(dim)):
            return ValidationReport(False, "table is not dim x dim x dim", witness=dim)
    except TypeError:
        return ValidationReport(False, "table is not dim x dim x dim", witness=dim)
    t = [[[parse_rational(c) for c in table[i][j]] for j in range(dim)] for i in range(dim)]
    aug = [parse_rational(a) for a in aug]
    if len(aug) != dim:
        return ValidationReport(False, "augmentation has wrong length", witness=len(aug))

    for i in range(dim):
        for j in range(i + 1, dim):
            if t[i][j] != t[j][i]:
                return ValidationReport(False, "not commutative", witness=(labels[i], labels[j]))

    basis = [[Fraction(int(k == i)) for k in range(dim)] for i in range(dim)]
    for i, j, k in itertools.product(range(dim), repeat=3):
        left = _table_mul(t, dim, t[i][j], basis[k])
        right = _table_mul(t, dim, basis[i], t[j][k])
        if left != right:
            return ValidationReport(False, "not associative", witness=(labels[i], labels[j], labels[k]))

    # unit u: sum_i u_i c[i][j][k] = delta_jk
    rows, rhs = [], []
    for j in range(dim):
        for k in range(dim):
            rows.append({i: t[i][j][k] for i in range(dim) if t[i][j][k]})
            rhs.append(Fraction(int(j == k)))
    unit = linalg.solve(rows, rhs, dim)
    if unit is None:
        return ValidationReport(False, "no unit element", witness=None)

    aug_of = lambda v: sum((a * c for a, c in zip(aug, v)), Fraction(0))  # noqa: E731
    if aug_of(unit) != 1:
        return ValidationReport(False, "augmentation does not send 1 to 1", witness=aug_of(unit))
    for i in range(dim):
        for j in range(i, dim):
            if aug_of(t[i][j]) != aug[i] * aug[j]:
                return ValidationReport(False, "augmentation is not multiplicative",
                                        witness=(labels[i], labels[j]))

    # m = ker aug, spanned by e_i - aug(e_i) * u
    ideal = [[b - aug[i] * u for b, u in zip(basis[i], unit)] for i in range(dim)]
    ideal = [row for _, row in linalg.rref({c: v for c, v in enumerate(vec) if v} for vec in ideal)]
    ideal = [[row.get(c, Fraction(0)) for c in range(dim)] for row in ideal]
    dims, stalled = ideal_power_dims(t, dim, ideal)
    if stalled:
        for vec in ideal:
            power = vec
            for _ in range(dim + 1):
                power = _table_mul(t, dim, power, vec)
            if any(power):
                square = _table_mul(t, dim, vec, vec)
                kind = "idempotent" if square == vec else "non-nilpotent element"
                named = {labels[c]: v for c, v in enumerate(vec) if v}
                return ValidationReport(False, f"maximal ideal is not nilpotent: contains an {kind}",
                                        witness=named)
        return ValidationReport(False, "maximal ideal is not nilpotent", witness=dims)
    return ValidationReport(True, height=len(dims), unit=tuple(unit))


def build_from_table(labels, mult_table, aug) -> WeilAlgebra:
    """Validate a raw table and build the algebra; raises InvalidAlgebra with a witness."""
    labels = [str(lab) for lab in labels]
    report = validate_table(labels, mult_table, aug)
    if not report.ok:
        raise InvalidAlgebra(report)
    dim = len(labels)
    t = [[[parse_rational(c) for c in mult_table[i][j]] for j in range(dim)] for i in range(dim)]
    sparse = {}
    for i in range(dim):
        for j in range(dim):
            entries = tuple((k, c) for k, c in enumerate(t[i][j]) if c)
            if entries:
                sparse[(i, j)] = entries
    aug = [parse_rational(a) for a in aug]
    unit = report.unit
    ideal = [[Fraction(int(k == i)) - aug[i] * unit[k] for k in range(dim)] for i in range(dim)]
    ideal = [tuple(row.get(c, Fraction(0)) for c in range(dim))
             for _, row in linalg.rref({c: v for c, v in enumerate(vec) if v} for vec in ideal)]
    spec = {"kind": "table", "basis": list(labels),
            "table": [[[format_rational(c) for c in t[i][j]] for j in range(dim)] for i in range(dim)],
            "aug": [format_rational(a) for a in aug]}
    return WeilAlgebra(labels, sparse, aug, unit, report.height, ideal, spec=spec)


# ---------------------------------------------------------------------------
# homomorphisms


class AlgebraHom:
    """Linear map between Weil algebras given by a dim(target) x dim(source) matrix."""

    def __init__(self, source: WeilAlgebra, target: WeilAlgebra, matrix):
        matrix = [[Fraction(c) for c in row] for row in matrix]
        if len(matrix) != target.dim or any(len(row) != source.dim for row in matrix):
            raise ValueError(f"matrix must be {target.dim}x{source.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, algebra: WeilAlgebra) -> "AlgebraHom":
        return cls(algebra, algebra, [[int(i == j) for j in range(algebra.dim)] for i in range(algebra.dim)])

    @classmethod
    def by_labels(cls, source: WeilAlgebra, target: WeilAlgebra) -> "AlgebraHom":
        """Send each basis label to the same label in the target, or to 0.

        For jet algebras this is the truncation jet(r,k) -> jet(r,k') with k' <= k.
        """
        col = {lab: i for i, lab in enumerate(target.labels)}
        matrix = [[0] * source.dim for _ in range(target.dim)]
        for j, lab in enumerate(source.labels):
            if lab in col:
                matrix[col[lab]][j] = 1
        return cls(source, target, matrix)

    def __call__(self, a: WeilElement) -> WeilElement:
        return hom_apply(self, a)

    def validate(self):
        """Return None if this is a homomorphism of Weil algebras, else a witness tuple."""
        src, tgt = self.source, self.target
        if hom_apply(self, src.one()) != tgt.one():
            return ("unit", str(hom_apply(self, src.one())))
        for i in range(src.dim):
            for j in range(i, src.dim):
                a, b = src.basis(i), src.basis(j)
                if hom_apply(self, a * b) != hom_apply(self, a) * hom_apply(self, b):
                    return ("product", src.labels[i], src.labels[j])
        for i in range(src.dim):
            if hom_apply(self, src.basis(i)).augmentation() != src.basis(i).augmentation():
                return ("augmentation", src.labels[i])
        return None


def hom_apply(h: AlgebraHom, a: WeilElement) -> WeilElement:
    if a.algebra != h.source:
        raise ValueError("element is not in the source algebra")
    out = tuple(sum((r * c for r, c in zip(row, a.coeffs)), Fraction(0)) for row in h.matrix)
    return WeilElement(h.target, out)


def hom_validate(h: AlgebraHom):
    return h.validate()


def augmentation_hom(algebra: WeilAlgebra) -> AlgebraHom:
    """The augmentation as a homomorphism A -> R."""
    return AlgebraHom(algebra, trivial_algebra(), [list(algebra.aug)])


def jet_dim(r: int, k: int) -> int:
    return comb(r + k, k)
