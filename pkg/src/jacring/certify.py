"""Finite certificates that an ideal is primary to the irrelevant maximal
ideal, and the two hypothesis certificates built on top of them.

A certificate records the least degree N within a search bound at which the
degree-N slice of the quotient by the ideal vanishes. Since the generators
are homogeneous, a vanishing slice forces every higher slice to vanish, so
success proves the quotient is finite-dimensional, i.e. the ideal cuts out
at most the origin. Failure within the bound proves nothing: the search is
sound but not complete, and a larger bound may still succeed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import HypothesisViolation, InputError
from .polynomials import MultiPoly
from .problem import ProblemInput
from .quotients import quotient_dim, quotient_slice


@dataclass(frozen=True)
class Certificate:
    kind: str                 # "m-primary" | "smooth-ci" | "no-common-zero"
    field: str                # printable field name
    num_generators: int
    bound: int
    vanishing_degree: int | None   # least N <= bound with zero quotient slice

    @property
    def success(self) -> bool:
        return self.vanishing_degree is not None

    def describe(self) -> str:
        gens = f"{self.num_generators} generator" + (
            "s" if self.num_generators != 1 else "")
        if self.success:
            return (f"{self.kind} certificate over {self.field}: quotient "
                    f"slice vanishes at degree {self.vanishing_degree} "
                    f"(bound {self.bound}, {gens})")
        return (f"{self.kind} certificate over {self.field}: NONE — no "
                f"vanishing slice up to degree {self.bound} ({gens}); "
                f"a larger --bound may still succeed")


def _field_name(field) -> str:
    return "Q" if field.kind == "Q" else f"F_{field.p}"


def _check_gens(gens) -> None:
    if not gens:
        raise InputError("need at least one generator")
    f0 = gens[0].field
    n0 = gens[0].nvars
    for g in gens:
        if g.field != f0 or g.nvars != n0:
            raise InputError("generators must live in one polynomial ring")
        if g.is_zero():
            raise InputError("generators must be nonzero")
        if g.homogeneous_degree() is None:
            raise InputError("generators must be homogeneous")


def m_primary_certificate(gens: list[MultiPoly], bound: int,
                          kind: str = "m-primary") -> Certificate:
    """Search degrees 1..bound for the least N whose quotient slice is
    zero."""
    _check_gens(gens)
    if bound < 1:
        raise InputError("bound must be at least 1")
    found = None
    for N in range(1, bound + 1):
        if quotient_dim(gens, N) == 0:
            found = N
            break
    return Certificate(kind=kind, field=_field_name(gens[0].field),
                       num_generators=len(gens), bound=bound,
                       vanishing_degree=found)


def jacobian_minors(problem: ProblemInput) -> list[MultiPoly]:
    """All r x r minors of the Jacobian matrix (df_j/dx_i), as polynomials.
    Requires r <= n."""
    n, r = problem.n, problem.r
    if r > n:
        raise HypothesisViolation(f"r x r minors need r <= n (got r={r}, n={n})")
    minors = []
    for cols in combinations(range(n), r):
        minors.append(_determinant([[problem.partials[j][i] for i in cols]
                                    for j in range(r)]))
    return minors


def jacobian_determinant(problem: ProblemInput) -> MultiPoly:
    """Determinant of the full Jacobian matrix; requires r == n."""
    if problem.r != problem.n:
        raise HypothesisViolation("the Jacobian determinant needs r == n")
    return _determinant([[problem.partials[j][i] for i in range(problem.n)]
                         for j in range(problem.r)])


def _determinant(rows: list[list[MultiPoly]]) -> MultiPoly:
    """Cofactor expansion along the first row; fine at the sizes used here."""
    m = len(rows)
    if m == 1:
        return rows[0][0]
    field = rows[0][0].field
    nvars = rows[0][0].nvars
    total = MultiPoly.zero(field, nvars)
    for j in range(m):
        sub = [[row[c] for c in range(m) if c != j] for row in rows[1:]]
        term = rows[0][j] * _determinant(sub)
        total = total + (term if j % 2 == 0 else -term)
    return total


def smooth_ci_certificate(problem: ProblemInput,
                          bound: int | None = None) -> Certificate:
    """Certificate that the ideal generated by the polynomials together with
    all r x r Jacobian minors is primary to the irrelevant ideal — i.e. the
    projective zero locus is a smooth complete intersection. Needs r < n."""
    if not problem.r < problem.n:
        raise HypothesisViolation(
            f"the smooth-complete-intersection certificate needs r < n "
            f"(got r={problem.r}, n={problem.n})")
    if bound is None:
        bound = sum(problem.degrees) + problem.n
    gens = [g for g in list(problem.polys) + jacobian_minors(problem)
            if not g.is_zero()]
    return m_primary_certificate(gens, bound, kind="smooth-ci")


def no_common_zero_certificate(problem: ProblemInput,
                               bound: int | None = None) -> Certificate:
    """Certificate that the polynomials have no common zero besides the
    origin. Needs r >= n."""
    if not problem.r >= problem.n:
        raise HypothesisViolation(
            f"the no-common-zero certificate needs r >= n "
            f"(got r={problem.r}, n={problem.n})")
    if bound is None:
        bound = sum(problem.degrees)
    return m_primary_certificate(list(problem.polys), bound,
                                 kind="no-common-zero")


def ideal_membership(poly: MultiPoly, gens: list[MultiPoly]) -> bool:
    """Whether a homogeneous polynomial lies in the ideal generated by
    homogeneous gens, decided on its degree slice."""
    _check_gens(gens)
    if poly.is_zero():
        return True
    deg = poly.homogeneous_degree()
    if deg is None:
        raise InputError("membership test needs a homogeneous polynomial")
    qs = quotient_slice(gens, deg)
    return qs.normal_form(poly).is_zero()
