"""Degree-truncated cohomology of the multiderivation subcomplexes.

A truncation keeps cochains whose coefficients have degree <= D.  For a
constant structure the differential lowers coefficient degree by one, for a
linear one it preserves it, so both complexes split into finite slices
(p, e) and the truncated cohomology is exact slice by slice.  For
inhomogeneous structures only kernels and ranks are reported.

Lifted complexes are counted over R (restriction of scalars): a basis
element is (index tuple, monomial, basis index of A).
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from . import linalg
from .algebra import WeilAlgebra, monomial_order_key
from .cochains import MultiVectorCochain, coboundary
from .poisson import PoissonStructure
from .poly import APoly, Poly
from .specfiles import cochain_to_spec

__all__ = [
    "BettiReport",
    "ComplexMatrix",
    "H1Report",
    "Truncation",
    "assemble_matrix",
    "basis_cochain",
    "betti",
    "center_report",
    "codomain_degree",
    "enumerate_basis",
    "euler_characteristic_check",
    "expand",
    "h1_report",
    "monomials",
]

DEFAULT_MAX_DIM = 20000


class BasisOverflow(ValueError):
    pass


class IllPosedQuotient(ValueError):
    pass


@dataclass(frozen=True)
class Truncation:
    D: int
    pmin: int
    pmax: int
    homogeneity: str

    @classmethod
    def for_structure(cls, pi: PoissonStructure, D: int, pmin: int = 0, pmax: int | None = None,
                      homogeneity: str | None = None) -> "Truncation":
        actual = pi.homogeneity()
        if homogeneity is not None and homogeneity != actual:
            raise ValueError(f"structure is {actual}, not {homogeneity}")
        if D < 0:
            raise ValueError("truncation degree must be non-negative")
        pmax = pi.nvars if pmax is None else min(pmax, pi.nvars)
        return cls(D, pmin, pmax, actual)

    @property
    def graded(self) -> bool:
        return self.homogeneity in ("constant", "linear")

    @property
    def shift(self) -> int:
        """Change of coefficient degree under the differential."""
        return -1 if self.homogeneity == "constant" else 0


def monomials(nvars: int, degree: int) -> list[tuple]:
    """Exponent vectors of exact total degree, in graded-lex order."""
    if degree < 0:
        return []
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for head in range(degree, -1, -1):
        for tail in monomials(nvars - 1, degree - head):
            out.append((head,) + tail)
    return sorted(out, key=monomial_order_key)


def _adim(complex, algebra):
    return 1 if complex == "base" else algebra.dim


def enumerate_basis(complex: str, pi: PoissonStructure, algebra: WeilAlgebra | None, p: int, D: int,
                    degrees: Sequence[int] | None = None) -> list[tuple]:
    """Ordered R-basis of the degree-p cochains with coefficient degree <= D.

    Keys are (index tuple, exponent tuple, a) with ``a`` None for the base complex.
    """
    n = pi.nvars
    degrees = range(D + 1) if degrees is None else degrees
    idxs = list(itertools.combinations(range(n), p)) if 0 <= p <= n else []
    avals = [None] if complex == "base" else list(range(algebra.dim))
    keys = []
    for e in degrees:
        for m in monomials(n, e):
            for idx in idxs:
                for a in avals:
                    keys.append((idx, m, a))
    return keys


def basis_cochain(complex: str, pi: PoissonStructure, algebra: WeilAlgebra | None, p: int, key) -> MultiVectorCochain:
    idx, m, a = key
    n = pi.nvars
    if complex == "base":
        coeff = Poly.monomial(m)
    else:
        coeff = APoly(n, algebra, {m: algebra.basis(a)})
    return MultiVectorCochain(complex, p, n, {idx: coeff}, algebra)


def expand(cochain: MultiVectorCochain) -> dict:
    """R-coordinates of a multivector cochain: {(idx, exps, a): rational}."""
    out = {}
    for idx, c in cochain.coeffs.items():
        if cochain.complex == "base":
            for m, q in c.terms.items():
                out[(idx, m, None)] = q
        else:
            for m, el in c.terms.items():
                for a, q in enumerate(el.coeffs):
                    if q:
                        out[(idx, m, a)] = q
    return out


def codomain_degree(pi: PoissonStructure, D: int) -> int:
    kind = pi.homogeneity()
    if kind == "constant":
        return D - 1
    if kind == "linear":
        return D
    return D + max(pi.max_degree(), 1) - 1


@dataclass
class ComplexMatrix:
    """Matrix of a differential: column j is the image of domain[j] in codomain coordinates."""

    domain: list
    codomain: list
    columns: list  # list of {row: Fraction}

    @property
    def shape(self):
        return len(self.codomain), len(self.domain)

    def rows(self) -> list[dict]:
        rows = [dict() for _ in self.codomain]
        for j, col in enumerate(self.columns):
            for r, v in col.items():
                rows[r][j] = v
        return rows

    def rank(self) -> int:
        return linalg.rank(self.columns)

    def kernel(self) -> list[dict]:
        return linalg.nullspace(self.rows(), len(self.domain))

    def is_zero(self) -> bool:
        return not any(self.columns)

    def then(self, other: "ComplexMatrix") -> "ComplexMatrix":
        """other o self; other.domain must contain self.codomain."""
        pos = {k: i for i, k in enumerate(other.domain)}
        out = []
        for col in self.columns:
            acc = {}
            for r, v in col.items():
                for r2, w in other.columns[pos[self.codomain[r]]].items():
                    acc[r2] = acc.get(r2, 0) + v * w
            out.append({r: v for r, v in acc.items() if v})
        return ComplexMatrix(self.domain, other.codomain, out)


def assemble_matrix(complex: str, pi: PoissonStructure, algebra: WeilAlgebra | None, p: int, D: int,
                    degrees: Sequence[int] | None = None, codomain_degrees: Sequence[int] | None = None,
                    domain: list | None = None, max_dim: int = DEFAULT_MAX_DIM) -> ComplexMatrix:
    """Matrix of the differential on degree-p cochains within the truncation.

    Without explicit degrees the codomain window is degree <= D-1 (constant
    structure), <= D (linear) or <= D + deg(pi) - 1 (inhomogeneous).
    """
    if complex != "base" and algebra is None:
        raise ValueError("lifted complexes need an algebra")
    if domain is None:
        domain = enumerate_basis(complex, pi, algebra, p, D, degrees)
    if codomain_degrees is None:
        codomain_degrees = range(codomain_degree(pi, D) + 1)
    codomain = enumerate_basis(complex, pi, algebra, p + 1, 0, codomain_degrees)
    if len(domain) > max_dim or len(codomain) > max_dim:
        raise BasisOverflow(f"basis of size {max(len(domain), len(codomain))} exceeds cap {max_dim}")
    pos = {k: i for i, k in enumerate(codomain)}
    columns = []
    for key in domain:
        image = coboundary(pi, basis_cochain(complex, pi, algebra, p, key), algebra)
        col = {}
        for k, v in expand(image).items():
            if k not in pos:
                raise ValueError(f"coboundary leaves the codomain window at {k}")
            col[pos[k]] = v
        columns.append(col)
    return ComplexMatrix(domain, codomain, columns)


def _slice_dim(complex, algebra, n, p, e):
    if not 0 <= p <= n or e < 0:
        return 0
    return comb(n, p) * comb(e + n - 1, n - 1) * _adim(complex, algebra) if n else int(e == 0 and p == 0)


class _SliceCache:
    def __init__(self, complex, pi, algebra, trunc: Truncation, max_dim, rng=None):
        self.complex, self.pi, self.algebra, self.trunc, self.max_dim = complex, pi, algebra, trunc, max_dim
        self.rng = rng
        self._mats = {}

    def matrix(self, p, e) -> ComplexMatrix:
        key = (p, e)
        if key not in self._mats:
            dom = enumerate_basis(self.complex, self.pi, self.algebra, p, e, [e])
            if self.rng is not None:
                self.rng.shuffle(dom)
            self._mats[key] = assemble_matrix(self.complex, self.pi, self.algebra, p, e, domain=dom,
                                              codomain_degrees=[e + self.trunc.shift], max_dim=self.max_dim)
        return self._mats[key]

    def rank(self, p, e) -> int:
        if p < 0 or e < 0 or p >= self.pi.nvars or e + self.trunc.shift < 0:
            return 0
        return self.matrix(p, e).rank()


@dataclass
class BettiReport:
    complex: str
    algebra: str
    structure: dict
    D: int
    homogeneity: str
    table: list
    algebra_dim: int = 1
    note: str = ""
    representatives: dict = field(default_factory=dict)

    def row(self, p: int) -> dict:
        for r in self.table:
            if r["p"] == p:
                return r
        raise KeyError(p)

    def H(self) -> tuple:
        return tuple(r["H"] for r in self.table)

    def as_dict(self) -> dict:
        out = {
            "complex": self.complex,
            "algebra": self.algebra,
            "structure": self.structure,
            "D": self.D,
            "homogeneity": self.homogeneity,
            "scalars": "R" if self.algebra_dim == 1 else f"R (A-rank = R-dim / {self.algebra_dim})",
            "table": self.table,
            "representatives": self.representatives,
        }
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def betti(complex: str, pi: PoissonStructure, algebra: WeilAlgebra | None, D: int,
          pmin: int = 0, pmax: int | None = None, max_dim: int = DEFAULT_MAX_DIM,
          order_seed: int | None = None) -> BettiReport:
    """Kernel, rank and cohomology dimensions of the truncated complex.

    ``order_seed`` shuffles the basis enumeration (used to check that the
    result does not depend on it).
    """
    if complex == "base":
        algebra = None
    elif algebra is None:
        raise ValueError("lifted complexes need an algebra")
    trunc = Truncation.for_structure(pi, D, pmin, pmax)
    n = pi.nvars
    adim = _adim(complex, algebra)
    table = []
    note = ""
    if trunc.graded:
        rng = random.Random(order_seed) if order_seed is not None else None
        cache = _SliceCache(complex, pi, algebra, trunc, max_dim, rng)
        s = trunc.shift
        for p in range(trunc.pmin, trunc.pmax + 1):
            slices = []
            for e in range(D + 1):
                dim = _slice_dim(complex, algebra, n, p, e)
                rk = cache.rank(p, e)
                bd = cache.rank(p - 1, e - s)
                slices.append({"e": e, "dim": dim, "rank": rk, "ker": dim - rk,
                               "boundary": bd, "H": dim - rk - bd})
            row = {"p": p,
                   "dim": sum(x["dim"] for x in slices),
                   "rank": sum(x["rank"] for x in slices),
                   "ker": sum(x["ker"] for x in slices),
                   "boundary": sum(x["boundary"] for x in slices),
                   "H": sum(x["H"] for x in slices),
                   "slices": slices}
            if adim > 1:
                row["H_A_rank"] = row["H"] // adim
            table.append(row)
    else:
        note = ("structure is inhomogeneous: the truncated complex does not split by degree, "
                "so only kernels and ranks are reported")
        for p in range(trunc.pmin, trunc.pmax + 1):
            if p >= n:
                dim = len(enumerate_basis(complex, pi, algebra, p, D))
                rk = 0
            else:
                mat = assemble_matrix(complex, pi, algebra, p, D, max_dim=max_dim)
                dim, rk = len(mat.domain), mat.rank()
            table.append({"p": p, "dim": dim, "rank": rk, "ker": dim - rk, "H": None})
    return BettiReport(complex, _algebra_name(complex, algebra), pi.to_spec(), D, trunc.homogeneity,
                       table, adim, note)


def _algebra_name(complex, algebra):
    return "R" if complex == "base" or algebra is None else algebra.name


def _vector_to_cochain(complex, pi, algebra, p, basis, vec) -> MultiVectorCochain:
    n = pi.nvars
    coeffs = {}
    for j, q in vec.items():
        idx, m, a = basis[j]
        if complex == "base":
            term = Poly(n, {m: q})
        else:
            term = APoly(n, algebra, {m: algebra.basis(a).scale(q)})
        coeffs[idx] = coeffs[idx] + term if idx in coeffs else term
    return MultiVectorCochain(complex, p, n, coeffs, algebra)


def _kernel_in_window(complex, pi, algebra, p, D, max_dim):
    """Kernel of d_p on cochains of coefficient degree <= D, as (basis, vectors)."""
    kind = pi.homogeneity()
    basis = enumerate_basis(complex, pi, algebra, p, D)
    if p >= pi.nvars:
        return basis, [{j: Fraction(1)} for j in range(len(basis))]
    if kind in ("constant", "linear"):
        shift = -1 if kind == "constant" else 0
        vecs = []
        offset = 0
        for e in range(D + 1):
            dom = enumerate_basis(complex, pi, algebra, p, e, [e])
            if e + shift < 0:
                ker = [{j: Fraction(1)} for j in range(len(dom))]
            else:
                mat = assemble_matrix(complex, pi, algebra, p, e, codomain_degrees=[e + shift],
                                      domain=dom, max_dim=max_dim)
                ker = mat.kernel()
            vecs.extend({offset + j: v for j, v in k.items()} for k in ker)
            offset += len(dom)
        return basis, vecs
    mat = assemble_matrix(complex, pi, algebra, p, D, max_dim=max_dim)
    return basis, mat.kernel()


@dataclass
class CenterReport:
    complex: str
    D: int
    basis: list  # canonical (RREF) list of Poly or APoly

    @property
    def dim(self) -> int:
        return len(self.basis)


def center_report(pi: PoissonStructure, algebra: WeilAlgebra | None, D: int, complex: str = "mixed",
                  max_dim: int = DEFAULT_MAX_DIM) -> CenterReport:
    """Canonical R-basis of H^0 (functions killed by every Hamiltonian action) within degree <= D.

    Vanishing on the coordinate functions suffices: the degree-0 coboundary
    is a derivation in its argument.  With ``algebra=None`` the base complex is used.
    """
    if algebra is None:
        complex = "base"
    if complex == "base":
        algebra = None
    basis, vecs = _kernel_in_window(complex, pi, algebra, 0, D, max_dim)
    canon = linalg.canonical_basis(vecs)
    return CenterReport(complex, D, [_vector_to_cochain(complex, pi, algebra, 0, basis, v).coefficient(())
                                     for v in canon])


@dataclass
class H1Report:
    complex: str
    D: int
    dim: int
    representatives: list  # MultiVectorCochain cocycles spanning a complement of the coboundaries

    def as_dict(self):
        return {"complex": self.complex, "D": self.D, "dim": self.dim,
                "representatives": [cochain_to_spec(c) for c in self.representatives]}


def h1_report(complex: str, pi: PoissonStructure, algebra: WeilAlgebra | None, D: int,
              max_dim: int = DEFAULT_MAX_DIM) -> H1Report:
    """dim H^1 in the truncation plus explicit cocycles representing a basis."""
    kind = pi.homogeneity()
    if kind not in ("constant", "linear"):
        raise IllPosedQuotient("H^1 is only certified for constant or linear structures")
    if complex == "base":
        algebra = None
    shift = -1 if kind == "constant" else 0
    reps = []
    n = pi.nvars
    for e in range(D + 1):
        dom = enumerate_basis(complex, pi, algebra, 1, e, [e])
        if not dom:
            continue
        if e + shift < 0 or n < 2:
            ker = [{j: Fraction(1)} for j in range(len(dom))]
        else:
            ker = assemble_matrix(complex, pi, algebra, 1, e, codomain_degrees=[e + shift], domain=dom,
                                  max_dim=max_dim).kernel()
        # the incoming slice has the same codomain ordering as ``dom``
        bounds = assemble_matrix(complex, pi, algebra, 0, e - shift, degrees=[e - shift],
                                 codomain_degrees=[e], max_dim=max_dim).columns
        span = linalg.rref(bounds)
        for vec in ker:
            if not linalg.in_span(vec, span):
                reps.append(_vector_to_cochain(complex, pi, algebra, 1, dom, vec))
                span = linalg.rref([row for _, row in span] + [vec])
    return H1Report(complex, D, len(reps), reps)


def euler_characteristic_check(report: BettiReport) -> bool:
    """For every weight complex fully inside the window, sum (-1)^p dim == sum (-1)^p H.

    Needs a graded report covering p = 0..n.
    """
    if report.homogeneity not in ("constant", "linear"):
        return True
    constant = report.homogeneity == "constant"
    for w in range(report.D + 1):
        chi_c = chi_h = 0
        for row in report.table:
            e = w - row["p"] if constant else w
            if 0 <= e <= report.D:
                sl = row["slices"][e]
                chi_c += (-1) ** row["p"] * sl["dim"]
                chi_h += (-1) ** row["p"] * sl["H"]
        if chi_c != chi_h:
            return False
    return True
