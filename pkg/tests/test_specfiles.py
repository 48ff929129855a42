import json

import pytest

from weilpoisson.algebra import InvalidAlgebra, build_jet_algebra, dual_numbers
from weilpoisson.poisson import PoissonStructure, PoissonStructureError
from weilpoisson.poly import APoly, Poly
from weilpoisson.specfiles import (
    algebra_to_spec,
    cochain_to_spec,
    load_algebra,
    load_cochain,
    load_json,
    load_structure,
)
from weilpoisson.textfmt import ParseError


def test_algebra_kinds(tmp_path):
    assert load_algebra({"kind": "dual"}) == dual_numbers()
    assert load_algebra('{"kind": "jet", "generators": 2, "order": 2}') == build_jet_algebra(2, 2)
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"kind": "monomial_quotient", "vars": ["x", "y"], "relations": ["x^2", "y^2"]}))
    assert load_algebra(str(path)).dim == 4
    table = {"kind": "table", "basis": ["1", "eps"], "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]],
             "aug": ["1", "0"]}
    A = load_algebra(table)
    assert A.height == 1
    assert load_algebra(algebra_to_spec(A)) == A


def test_algebra_spec_round_trip():
    for A in (dual_numbers(), build_jet_algebra(2, 3)):
        assert load_algebra(algebra_to_spec(A)) == A


def test_algebra_errors():
    with pytest.raises(ParseError):
        load_algebra({"kind": "unknown"})
    with pytest.raises(ParseError):
        load_algebra({"kind": "jet", "generators": 1})
    with pytest.raises(ParseError):
        load_algebra("{not json")
    with pytest.raises(ParseError):
        load_algebra({"kind": "monomial_quotient", "vars": ["x", "y"], "relations": ["x^2"]})
    bad = {"kind": "table", "basis": ["a", "b"], "table": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], "aug": [1, 0]}
    with pytest.raises(InvalidAlgebra):
        load_algebra(bad)


def test_structure_kinds():
    assert load_structure({"kind": "so3"}).nvars == 3
    S = load_structure({"kind": "symplectic", "n": 4})
    assert S.entry(0, 2) == Poly.const(4, 1)
    M = load_structure({"kind": "matrix", "n": 3, "vars": ["x", "y", "z"],
                        "entries": {"1,2": "z", "2,3": "x", "3,1": "y"}})
    so3 = PoissonStructure.so3()
    assert M.pi == so3.pi
    assert load_structure(M.to_spec()).pi == M.pi


def test_structure_errors():
    with pytest.raises(PoissonStructureError):
        load_structure({"kind": "matrix", "n": 3, "entries": {"1,2": "x2", "1,3": "x1"}})
    s = load_structure({"kind": "matrix", "n": 3, "entries": {"1,2": "x2", "1,3": "x1"}}, check=False)
    assert s.nvars == 3
    with pytest.raises(ParseError):
        load_structure({"kind": "matrix", "n": 2, "entries": {"1,5": "1"}})
    with pytest.raises(ParseError):
        load_structure({"kind": "matrix", "n": 2, "entries": {"12": "1"}})


def test_cochain_round_trip():
    D = dual_numbers()
    spec = {"complex": "weil", "p": 1, "coeffs": {"1": "(1+e1)*x1^2", "2": "e1"}}
    c = load_cochain(spec, 2, D)
    assert c.coeffs[(0,)] == APoly.parse("(1+e1)*x1^2", 2, D)
    assert load_cochain(cochain_to_spec(c), 2, D) == c
    c0 = load_cochain({"complex": "base", "p": 0, "coeffs": {"": "x1 - 1/2"}}, 2)
    assert c0.coeffs[()] == Poly.parse("x1 - 1/2", 2)


def test_cochain_errors():
    with pytest.raises(ParseError):
        load_cochain({"complex": "base", "p": 2, "coeffs": {"2,1": "1"}}, 2)
    with pytest.raises(ParseError):
        load_cochain({"complex": "mixed", "p": 1, "coeffs": {"1": "1"}}, 2)
    with pytest.raises(ParseError):
        load_cochain({"complex": "base", "p": 1, "coeffs": {"1,2": "1"}}, 2)


def test_load_json_accepts_dicts():
    assert load_json({"a": 1}) == {"a": 1}
    with pytest.raises(ParseError):
        load_json(3)
