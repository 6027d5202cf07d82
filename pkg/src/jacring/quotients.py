"""Graded slices of quotients K[x]/(gens) by normal forms, no Groebner bases.

For a fixed degree N the span of {m*g : g in gens, deg(m*g) = N} is row
reduced once; the non-pivot monomials form a basis of the quotient slice and
arbitrary degree-N polynomials reduce to it by a single elimination pass.
"""
from __future__ import annotations

from .errors import InputError
from .linalg import rref_rows
from .polynomials import MultiPoly, monomials_of_degree


class QuotientSlice:
    """Degree-N slice of K[x1..xn]/(gens)."""

    __slots__ = ("field", "nvars", "degree", "monomials", "index",
                 "pivots", "rows", "complement")

    def __init__(self, field, nvars, degree, monomials, pivots, rows):
        self.field = field
        self.nvars = nvars
        self.degree = degree
        self.monomials = monomials
        self.index = {m: i for i, m in enumerate(monomials)}
        self.pivots = pivots
        self.rows = rows
        pivset = set(pivots)
        self.complement = [m for i, m in enumerate(monomials) if i not in pivset]

    @property
    def dim(self) -> int:
        """Dimension of the quotient slice."""
        return len(self.complement)

    @property
    def ideal_rank(self) -> int:
        return len(self.pivots)

    def vector_of(self, poly: MultiPoly) -> list:
        f = self.field
        v = [f.zero] * len(self.monomials)
        for exp, c in poly.terms.items():
            if sum(exp) != self.degree:
                raise InputError(f"term of degree {sum(exp)} in degree-{self.degree} slice")
            v[self.index[exp]] = c
        return v

    def normal_form_vector(self, v: list) -> list:
        """Reduce a coefficient vector modulo the ideal slice; the result is
        supported on the complement monomials."""
        f = self.field
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if f.is_zero(c):
                continue
            for j, w in enumerate(row):
                if not f.is_zero(w):
                    v[j] = f.sub(v[j], f.mul(c, f.of(w)))
        return v

    def normal_form(self, poly: MultiPoly) -> MultiPoly:
        v = self.normal_form_vector(self.vector_of(poly))
        return MultiPoly(self.field, self.nvars,
                         {m: v[self.index[m]] for m in self.complement})

    def complement_coords(self, poly: MultiPoly) -> list:
        v = self.normal_form_vector(self.vector_of(poly))
        return [v[self.index[m]] for m in self.complement]


def quotient_slice(gens: list[MultiPoly], degree: int) -> QuotientSlice:
    """Row-reduce the degree-`degree` slice of the ideal (gens)."""
    if not gens:
        raise InputError("need at least one generator")
    field = gens[0].field
    nvars = gens[0].nvars
    for g in gens:
        if g.field != field or g.nvars != nvars:
            raise InputError("generators live in different rings")
        if g.is_zero() or g.homogeneous_degree() is None:
            raise InputError("generators must be nonzero and homogeneous")
    monomials = monomials_of_degree(nvars, degree)
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    z = field.zero
    for g in gens:
        d = g.homogeneous_degree()
        if d > degree:
            continue
        for m in monomials_of_degree(nvars, degree - d):
            row = [z] * len(monomials)
            for exp, c in g.terms.items():
                prod = tuple(a + b for a, b in zip(m, exp))
                row[index[prod]] = c
            rows.append(row)
    pivots, red = rref_rows(rows, field)
    return QuotientSlice(field, nvars, degree, monomials, pivots, red)


def quotient_dim(gens: list[MultiPoly], degree: int) -> int:
    """Hilbert-function value of K[x]/(gens) at the given degree."""
    if degree < 0:
        return 0
    return quotient_slice(gens, degree).dim
