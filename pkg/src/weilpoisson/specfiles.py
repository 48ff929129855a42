"""JSON spec files for algebras, Poisson structures and cochains.

Rationals travel as "p/q" strings; polynomials and A-valued polynomials use
the text grammar of ``Poly.parse`` / ``APoly.parse``; cochain keys are
comma-separated 1-based strictly increasing indices ("" for degree 0).
"""

from __future__ import annotations

import json
import os

from .algebra import WeilAlgebra, build_from_table, build_jet_algebra, build_monomial_quotient
from .cochains import MultiVectorCochain
from .poisson import PoissonStructure
from .poly import APoly, Poly, var_names
from .textfmt import ParseError

__all__ = [
    "algebra_to_spec",
    "cochain_to_spec",
    "load_algebra",
    "load_cochain",
    "load_json",
    "load_structure",
]


def load_json(source):
    """Accept a dict, a path to a JSON file, or a JSON literal string."""
    if isinstance(source, dict):
        return source
    if isinstance(source, str):
        if os.path.exists(source):
            with open(source) as fh:
                text = fh.read()
        else:
            text = source
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not a JSON file or literal: {source!r} ({exc.msg})") from None
    raise ParseError(f"cannot read spec from {type(source).__name__}")


def _field(spec, key):
    try:
        return spec[key]
    except KeyError:
        raise ParseError(f"spec is missing {key!r}: {spec}") from None


def load_algebra(source) -> WeilAlgebra:
    spec = load_json(source)
    kind = _field(spec, "kind")
    if kind == "jet":
        return build_jet_algebra(int(_field(spec, "generators")), int(_field(spec, "order")))
    if kind == "dual":
        return build_jet_algebra(1, 1)
    if kind == "monomial_quotient":
        try:
            return build_monomial_quotient(_field(spec, "vars"), _field(spec, "relations"),
                                           spec.get("degree_cap"))
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc)) from None
    if kind == "table":
        return build_from_table(_field(spec, "basis"), _field(spec, "table"), _field(spec, "aug"))
    raise ParseError(f"unknown algebra kind {kind!r}")


def algebra_to_spec(algebra: WeilAlgebra) -> dict:
    return algebra.spec


def load_structure(source, check: bool = True) -> PoissonStructure:
    spec = load_json(source)
    kind = _field(spec, "kind")
    if kind == "symplectic":
        return PoissonStructure.symplectic(int(_field(spec, "n")))
    if kind == "so3":
        return PoissonStructure.so3()
    if kind == "zero":
        return PoissonStructure.zero(int(_field(spec, "n")))
    if kind == "matrix":
        n = int(_field(spec, "n"))
        names = spec.get("vars") or var_names(n)
        entries = {}
        for key, text in _field(spec, "entries").items():
            try:
                i, j = (int(t) - 1 for t in key.split(","))
            except ValueError:
                raise ParseError(f"bad entry key {key!r}; expected 'i,j'") from None
            if not (0 <= i < n and 0 <= j < n):
                raise ParseError(f"entry key {key!r} out of range")
            p = Poly.parse(str(text), n, names)
            if i > j:
                i, j, p = j, i, -p
            entries[(i, j)] = p
        return PoissonStructure.from_entries(n, entries, name=spec.get("name"), check=check,
                                             spec=spec)
    raise ParseError(f"unknown structure kind {kind!r}")


def load_cochain(source, nvars: int, algebra: WeilAlgebra | None = None) -> MultiVectorCochain:
    spec = load_json(source)
    complex = _field(spec, "complex")
    p = int(_field(spec, "p"))
    names = spec.get("vars") or var_names(nvars)
    if complex != "base" and algebra is None:
        raise ParseError(f"a {complex} cochain needs an algebra")
    coeffs = {}
    for key, text in _field(spec, "coeffs").items():
        idx = tuple(int(t) - 1 for t in key.split(",")) if key.strip() else ()
        if list(idx) != sorted(set(idx)):
            raise ParseError(f"cochain key {key!r} is not strictly increasing")
        if complex == "base":
            coeffs[idx] = Poly.parse(str(text), nvars, names)
        else:
            coeffs[idx] = APoly.parse(str(text), nvars, algebra, names)
    try:
        return MultiVectorCochain(complex, p, nvars, coeffs, algebra)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def cochain_to_spec(c: MultiVectorCochain, names=None) -> dict:
    names = names or var_names(c.nvars)
    return {"complex": c.complex, "p": c.p,
            "coeffs": {",".join(str(i + 1) for i in idx): v.to_text(names)
                       for idx, v in sorted(c.coeffs.items())}}
