"""Polynomial Poisson structures on R^n and their prolongation to the Weil bundle.

Convention: pi[i][j] = {x_i, x_j} and {f, g} = sum_ij pi_ij df/dx_i dg/dx_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import WeilAlgebra
from .poly import APoly, AVectorField, Poly, VectorField, prolong_function, tilde_apply, var_names

__all__ = [
    "JacobiFailure",
    "PoissonStructure",
    "PoissonStructureError",
    "ad",
    "bracket",
    "bracket_A",
    "jacobi_check",
    "prolong_ad_tilde",
    "tau",
]


class PoissonStructureError(ValueError):
    pass


@dataclass(frozen=True)
class JacobiFailure:
    """Counterexample to the Jacobi identity: a coordinate triple and its nonzero residual."""

    triple: tuple
    residual: Poly

    def __str__(self):
        i, j, k = (t + 1 for t in self.triple)
        return f"Jacobi fails on ({i},{j},{k}): residual {self.residual}"


class PoissonStructure:
    """Skew matrix of polynomials pi[i][j] = {x_i, x_j}.

    The Jacobi identity is checked symbolically on construction unless
    ``check=False`` (used to build deliberately broken structures).
    """

    def __init__(self, pi: Sequence[Sequence[Poly]], name: str | None = None, check: bool = True,
                 spec: dict | None = None):
        n = len(pi)
        self.nvars = n
        self.pi = tuple(tuple(row) for row in pi)
        self.name = name or f"matrix(n={n})"
        self.spec = spec
        for i in range(n):
            if len(self.pi[i]) != n:
                raise PoissonStructureError("pi must be square")
            for j in range(n):
                if self.pi[i][j].nvars != n:
                    raise PoissonStructureError(f"entry ({i + 1},{j + 1}) has wrong arity")
                if self.pi[i][j] != -self.pi[j][i]:
                    raise PoissonStructureError(f"pi is not skew at ({i + 1},{j + 1})")
        self._nonzero = [(i, j, self.pi[i][j]) for i in range(n) for j in range(n) if self.pi[i][j]]
        self._lifted: dict[WeilAlgebra, list] = {}
        if check:
            failure = jacobi_check(self)
            if failure is not None:
                raise PoissonStructureError(str(failure))

    @classmethod
    def from_entries(cls, n: int, entries: dict, name=None, check=True, spec=None) -> "PoissonStructure":
        """Build from upper-triangle entries {(i, j): Poly} with 0-based i < j."""
        pi = [[Poly(n) for _ in range(n)] for _ in range(n)]
        for (i, j), p in entries.items():
            if i == j:
                if p:
                    raise PoissonStructureError("diagonal entries must vanish")
                continue
            if not isinstance(p, Poly):
                p = Poly.const(n, p)
            pi[i][j] = p
            pi[j][i] = -p
        return cls(pi, name=name, check=check, spec=spec)

    @classmethod
    def symplectic(cls, n: int) -> "PoissonStructure":
        """Constant Darboux structure on R^(2k): {x_i, x_(i+k)} = 1."""
        if n % 2:
            raise PoissonStructureError("symplectic structure needs an even dimension")
        k = n // 2
        return cls.from_entries(n, {(i, i + k): 1 for i in range(k)}, name=f"symplectic(n={n})",
                                spec={"kind": "symplectic", "n": n})

    @classmethod
    def so3(cls) -> "PoissonStructure":
        """Lie-Poisson structure on so(3)*: {x,y} = z, {y,z} = x, {z,x} = y."""
        x, y, z = (Poly.var(3, i) for i in range(3))
        return cls.from_entries(3, {(0, 1): z, (1, 2): x, (0, 2): -y}, name="so3", spec={"kind": "so3"})

    @classmethod
    def zero(cls, n: int) -> "PoissonStructure":
        return cls.from_entries(n, {}, name=f"zero(n={n})", spec={"kind": "zero", "n": n})

    def entry(self, i: int, j: int) -> Poly:
        return self.pi[i][j]

    def max_degree(self) -> int:
        return max((p.degree() for _, _, p in self._nonzero), default=-1)

    def homogeneity(self) -> str:
        """'constant', 'linear' or 'inhomogeneous' (the zero structure counts as constant)."""
        if all(p.degree() <= 0 for _, _, p in self._nonzero):
            return "constant"
        if all(p.is_homogeneous(1) for _, _, p in self._nonzero):
            return "linear"
        return "inhomogeneous"

    def lifted_entries(self, algebra: WeilAlgebra):
        """(i, j, pi_ij^A) for nonzero entries, cached per algebra."""
        cached = self._lifted.get(algebra)
        if cached is None:
            cached = [(i, j, prolong_function(p, algebra)) for i, j, p in self._nonzero]
            self._lifted[algebra] = cached
        return cached

    def to_spec(self) -> dict:
        if self.spec is not None:
            return self.spec
        names = var_names(self.nvars)
        entries = {f"{i + 1},{j + 1}": self.pi[i][j].to_text(names)
                   for i in range(self.nvars) for j in range(i + 1, self.nvars) if self.pi[i][j]}
        return {"kind": "matrix", "n": self.nvars, "entries": entries}

    def __repr__(self):
        return f"PoissonStructure({self.name})"


def bracket(pi: PoissonStructure, f: Poly, g: Poly) -> Poly:
    if f.nvars != pi.nvars or g.nvars != pi.nvars:
        raise ValueError("arity mismatch")
    out = Poly(pi.nvars)
    df = {}
    dg = {}
    for i, j, p in pi._nonzero:
        a = df.get(i)
        if a is None:
            a = df[i] = f.deriv(i)
        if not a:
            continue
        b = dg.get(j)
        if b is None:
            b = dg[j] = g.deriv(j)
        if b:
            out = out + p * a * b
    return out


def jacobi_check(pi: PoissonStructure):
    """None if Jacobi holds identically, else the first failing JacobiFailure.

    For i<j<k the residual is sum_l pi_li d_l pi_jk + pi_lj d_l pi_ki + pi_lk d_l pi_ij.
    """
    n = pi.nvars
    P = pi.pi
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                res = Poly(n)
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    target = P[b][c]
                    if not target:
                        continue
                    for l in range(n):
                        if P[l][a]:
                            d = target.deriv(l)
                            if d:
                                res = res + P[l][a] * d
                if res:
                    return JacobiFailure((i, j, k), res)
    return None


def ad(pi: PoissonStructure, f: Poly) -> VectorField:
    """Hamiltonian field g -> {f, g}; components {f, x_j}."""
    n = pi.nvars
    return VectorField([bracket(pi, f, Poly.var(n, j)) for j in range(n)])


def prolong_ad_tilde(pi: PoissonStructure, f: Poly, algebra: WeilAlgebra) -> AVectorField:
    """[ad(f)]^A as a field on M^A; apply ``tilde`` to act on A-valued functions."""
    return AVectorField([prolong_function(c, algebra) for c in ad(pi, f).components])


def tau(pi: PoissonStructure, phi: APoly) -> AVectorField:
    """The field f -> -[ad(f)]^A~(phi), built from its values on coordinates."""
    n = pi.nvars
    return AVectorField([-tilde_apply(prolong_ad_tilde(pi, Poly.var(n, j), phi.algebra), phi)
                         for j in range(n)])


def bracket_A(pi: PoissonStructure, phi: APoly, psi: APoly) -> APoly:
    """{phi, psi}_A = tau_phi~(psi)."""
    if phi.algebra != psi.algebra:
        raise ValueError("algebra mismatch")
    return tilde_apply(tau(pi, phi), psi)
