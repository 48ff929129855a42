"""Exact linear algebra over the rationals on sparse row vectors.

Vectors are dicts mapping column index to a nonzero rational.  Rank uses a
fraction-free integer elimination (rows are cleared of denominators and
kept primitive); kernels and canonical span bases use a rational RREF.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

SparseVec = dict  # col -> Fraction


def _primitive(row: Mapping[int, Fraction | int]) -> dict[int, int]:
    items = [(c, Fraction(v)) for c, v in row.items() if v]
    if not items:
        return {}
    den = lcm(*(v.denominator for _, v in items))
    ints = {c: v.numerator * (den // v.denominator) for c, v in items}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = min(ints)
    if ints[lead] < 0:
        g = -g
    return {c: v // g for c, v in ints.items()}


def rank(rows: Iterable[Mapping[int, Fraction | int]]) -> int:
    """Rank of the matrix whose rows are given, by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        r = _primitive(raw)
        while r:
            col = min(r)
            p = pivots.get(col)
            if p is None:
                pivots[col] = r
                break
            a, b = p[col], r[col]
            new = {c: a * v for c, v in r.items()}
            for c, v in p.items():
                w = new.get(c, 0) - b * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            r = _primitive(new)
    return len(pivots)


def rref(rows: Iterable[Mapping[int, Fraction | int]]) -> list[tuple[int, SparseVec]]:
    """Reduced row echelon form: list of (pivot column, row) sorted by pivot."""
    pivots: dict[int, SparseVec] = {}
    for raw in rows:
        r = {c: Fraction(v) for c, v in raw.items() if v}
        # pivot rows are fully reduced, so one pass clears every pivot column
        for col in sorted(set(r) & set(pivots)):
            f = r.get(col)
            if not f:
                continue
            for c, v in pivots[col].items():
                w = r.get(c, 0) - f * v
                if w:
                    r[c] = w
                else:
                    r.pop(c, None)
        if not r:
            continue
        col = min(r)
        inv = 1 / r[col]
        r = {c: v * inv for c, v in r.items()}
        # back-substitute into older pivot rows
        for pc, prow in pivots.items():
            f = prow.get(col)
            if f:
                for c, v in r.items():
                    w = prow.get(c, 0) - f * v
                    if w:
                        prow[c] = w
                    else:
                        prow.pop(c, None)
        pivots[col] = r
    return sorted(pivots.items())


def nullspace(rows: Iterable[Mapping[int, Fraction | int]], ncols: int) -> list[SparseVec]:
    """Basis of {v : M v = 0}, one vector per free column, in column order."""
    red = rref(rows)
    pivot_cols = {c for c, _ in red}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = {free: Fraction(1)}
        for pc, row in red:
            f = row.get(free)
            if f:
                v[pc] = -f
        basis.append(v)
    return basis


def canonical_basis(vectors: Iterable[Mapping[int, Fraction | int]]) -> list[SparseVec]:
    """RREF rows of the span; equal spans give equal lists."""
    return [row for _, row in rref(vectors)]


def in_span(vector: Mapping[int, Fraction | int], basis_rref: list[tuple[int, SparseVec]]) -> bool:
    r = {c: Fraction(v) for c, v in vector.items() if v}
    for col, row in basis_rref:
        f = r.get(col)
        if f:
            for c, v in row.items():
                w = r.get(c, 0) - f * v
                if w:
                    r[c] = w
                else:
                    r.pop(c, None)
    return not r


def solve(rows: list[Mapping[int, Fraction | int]], rhs: list[Fraction], ncols: int):
    """One solution of M v = rhs, or None if inconsistent."""
    aug = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[ncols] = Fraction(b)
        aug.append(r)
    red = rref(aug)
    sol = {}
    for col, row in red:
        if col == ncols:
            return None
        val = row.get(ncols, Fraction(0))
        if val:
            sol[col] = val
    return [sol.get(c, Fraction(0)) for c in range(ncols)]
