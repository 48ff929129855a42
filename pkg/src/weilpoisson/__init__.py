"""Exact Weil-bundle prolongation of polynomial Poisson geometry and its cohomology."""

from .algebra import (
    AlgebraHom,
    InvalidAlgebra,
    WeilAlgebra,
    WeilElement,
    build_from_table,
    build_jet_algebra,
    build_monomial_quotient,
    dual_numbers,
    trivial_algebra,
)

__all__ = [
    "AlgebraHom",
    "InvalidAlgebra",
    "WeilAlgebra",
    "WeilElement",
    "build_from_table",
    "build_jet_algebra",
    "build_monomial_quotient",
    "dual_numbers",
    "trivial_algebra",
]

__version__ = "0.1.0"
