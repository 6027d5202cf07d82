"""Exact cohomology of the boundary complex, Koszul slices, wedge-division
solvers, and the verification driver that compares brute-force dimensions
against the predicted patterns.

Everything here is slice-local: a cohomology dimension at (k, q, p) touches
only the three graded slices the boundary connects, so no global complex is
ever materialized.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .errors import CertificateRequired, HypothesisViolation, InputError, SliceMismatch
from .forms import BasisSlice, DiffForm, basis, boundary, df_form
from .linalg import SparseMatrix, in_column_span, kernel_basis, rank, solve
from .polynomials import MultiPoly, monomials_of_degree
from .problem import ProblemInput
from .quotients import QuotientSlice, quotient_slice


def matrix_of(op, source: BasisSlice, target: BasisSlice) -> SparseMatrix:
    """Matrix of a linear operator between two slice bases; column j is the
    image of the j-th source basis form. A term landing outside the target
    slice raises SliceMismatch."""
    prob = source.problem
    mat = SparseMatrix(target.dim, source.dim, prob.field)
    for col, key in enumerate(source.keys):
        frm = DiffForm(prob, source.k)
        frm.terms = {key: prob.field.one}
        img = op(frm)
        for ikey, c in img.terms.items():
            row = target.index.get(ikey)
            if row is None:
                raise SliceMismatch(
                    f"image term {ikey} outside the (k={target.k}, "
                    f"q={target.q}, p={target.p}) slice")
            mat.add_at(row, col, c)
    return mat


def boundary_matrix(problem: ProblemInput, k: int, q: int, p: int,
                    part: str = "full") -> SparseMatrix:
    """Matrix of the boundary out of the (k, q, p) slice into
    (k+1, q, p+1)."""
    src = basis(problem, k, q, p)
    tgt = basis(problem, k + 1, q, p + 1)
    return matrix_of(lambda w: boundary(w, part), src, tgt)


def theta_matrix(problem: ProblemInput, k: int, q: int, p: int) -> SparseMatrix:
    """Matrix of the contraction out of the (k, q, p) slice into
    (k-1, q, p)."""
    from .forms import theta
    src = basis(problem, k, q, p)
    tgt = basis(problem, k - 1, q, p)
    return matrix_of(theta, src, tgt)


def _boundary_rank(problem: ProblemInput, k: int, q: int, p: int) -> int:
    if k < 0 or p < 0 or k > problem.n + problem.r:
        return 0
    key = ("brank", k, q, p)
    cached = problem._cache.get(key)
    if cached is None:
        if basis(problem, k, q, p).dim == 0:
            cached = 0
        else:
            cached = rank(boundary_matrix(problem, k, q, p))
        problem._cache[key] = cached
    return cached


def cohomology_dim(problem: ProblemInput, k: int, q: int, p: int) -> int:
    """dim of the boundary cohomology at slice (k, q, p), computed as
    slice dim minus the ranks of the outgoing and incoming boundaries."""
    if k < 0 or k > problem.n + problem.r or p < 0:
        return 0
    d = basis(problem, k, q, p).dim
    if d == 0:
        return 0
    out_rank = _boundary_rank(problem, k, q, p)
    in_rank = _boundary_rank(problem, k - 1, q, p - 1)
    return d - out_rank - in_rank


@dataclass
class CohomologyReport:
    problem: ProblemInput
    entries: dict = dc_field(default_factory=dict)   # (k, q, p) -> dim
    elapsed: float = 0.0

    def slices_sorted(self):
        return sorted(self.entries.items())


def cohomology_report(problem: ProblemInput, slices, threads: int | None = None
                      ) -> CohomologyReport:
    """Dimensions for an iterable of (k, q, p) slices; results do not depend
    on the worker count."""
    wanted = sorted(set(slices))
    t0 = time.perf_counter()
    report = CohomologyReport(problem)
    if threads is not None and threads <= 1:
        for kqp in wanted:
            report.entries[kqp] = cohomology_dim(problem, *kqp)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            dims = pool.map(lambda kqp: cohomology_dim(problem, *kqp), wanted)
            for kqp, d in zip(wanted, dims):
                report.entries[kqp] = d
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Koszul complex of a polynomial family, graded by internal degree
# ---------------------------------------------------------------------------


def _koszul_keys(gens, k: int, internal_degree: int):
    r = len(gens)
    n = gens[0].nvars
    degs = [g.homogeneous_degree() for g in gens]
    keys = []
    for S in combinations(range(r), k):
        d = internal_degree + sum(degs[j] for j in S)
        for mono in monomials_of_degree(n, d):
            keys.append((S, mono))
    return keys


def _koszul_matrix(gens, k: int, internal_degree: int) -> SparseMatrix:
    field = gens[0].field
    src = _koszul_keys(gens, k, internal_degree)
    tgt = _koszul_keys(gens, k + 1, internal_degree)
    tindex = {key: i for i, key in enumerate(tgt)}
    mat = SparseMatrix(len(tgt), len(src), field)
    r = len(gens)
    for col, (S, mono) in enumerate(src):
        for j in range(r):
            if j in S:
                continue
            sign = -1 if sum(1 for s in S if s < j) % 2 else 1
            T = tuple(sorted(S + (j,)))
            for exp, c in gens[j].terms.items():
                prod = tuple(a + b for a, b in zip(mono, exp))
                v = c if sign > 0 else field.neg(c)
                mat.add_at(tindex[(T, prod)], col, v)
    return mat


def koszul_cohomology_dim(gens: list[MultiPoly], k: int, internal_degree: int) -> int:
    """Cohomology dimension of the Koszul complex of (gens) at cochain
    position k and the given internal degree."""
    if not gens:
        raise InputError("need at least one generator")
    for g in gens:
        if g.is_zero() or g.homogeneous_degree() is None:
            raise InputError("generators must be nonzero and homogeneous")
    r = len(gens)
    if k < 0 or k > r:
        return 0
    dim = len(_koszul_keys(gens, k, internal_degree))
    if dim == 0:
        return 0
    out_rank = rank(_koszul_matrix(gens, k, internal_degree)) if k < r else 0
    in_rank = rank(_koszul_matrix(gens, k - 1, internal_degree)) if k > 0 else 0
    return dim - out_rank - in_rank


# ---------------------------------------------------------------------------
# wedge-division solvers on dx-only forms
# ---------------------------------------------------------------------------


def _dx_only_weight(form: DiffForm, what: str) -> int:
    """Common weight (monomial degree + word length) of a dx-only form."""
    if form.is_zero():
        raise InputError(f"{what} must be nonzero")
    weights = set()
    for (xexp, yexp, dxs, dys) in form.terms:
        if any(yexp) or dys:
            raise InputError(f"{what} must not involve the y-variables")
        weights.add(sum(xexp) + len(dxs))
    if len(weights) != 1:
        raise InputError(f"{what} must be homogeneous")
    return weights.pop()


class _PolyFormSpace:
    """dx-only forms of fixed word length and weight over K[x]."""

    def __init__(self, problem, k: int, weight: int):
        self.problem = problem
        self.k = k
        self.weight = weight
        self.keys = []
        if 0 <= k <= problem.n and weight - k >= 0:
            monos = monomials_of_degree(problem.n, weight - k)
            for word in combinations(range(problem.n), k):
                for mono in monos:
                    self.keys.append((word, mono))
        self.index = {key: i for i, key in enumerate(self.keys)}

    @property
    def dim(self):
        return len(self.keys)

    def vector_of(self, form: DiffForm) -> list:
        f = self.problem.field
        v = [f.zero] * self.dim
        for (xexp, yexp, dxs, dys), c in form.terms.items():
            pos = self.index.get((dxs, xexp))
            if pos is None:
                raise SliceMismatch(f"term {(dxs, xexp)} outside the form space")
            v[pos] = c
        return v

    def form_of(self, vec) -> DiffForm:
        prob = self.problem
        f = prob.field
        zy = (0,) * prob.r
        terms = {}
        for (word, mono), c in zip(self.keys, vec):
            c = f.of(c)
            if not f.is_zero(c):
                terms[(mono, zy, word, ())] = c
        res = DiffForm(prob, self.k)
        res.terms = terms
        return res


class _QuotientFormSpace:
    """dx-only forms of fixed word length and weight with coefficients in
    K[x]/(gens), coordinatized by the complement monomials of the degree
    slice."""

    def __init__(self, problem, k: int, weight: int, qslice: QuotientSlice | None):
        self.problem = problem
        self.k = k
        self.weight = weight
        self.qslice = qslice
        self.keys = []
        if 0 <= k <= problem.n and qslice is not None:
            for word in combinations(range(problem.n), k):
                for mono in qslice.complement:
                    self.keys.append((word, mono))
        self.index = {key: i for i, key in enumerate(self.keys)}

    @property
    def dim(self):
        return len(self.keys)

    def vector_of(self, form: DiffForm) -> list:
        """Coordinates after reducing each word's coefficient to its normal
        form."""
        prob = self.problem
        f = prob.field
        qs = self.qslice
        v = [f.zero] * self.dim
        if qs is None:
            if form.is_zero():
                return v
            raise SliceMismatch("nonzero form in an empty form space")
        per_word: dict[tuple, list] = {}
        for (xexp, yexp, dxs, dys), c in form.terms.items():
            if any(yexp) or dys or len(dxs) != self.k:
                raise SliceMismatch("term outside the form space")
            if sum(xexp) + self.k != self.weight:
                raise SliceMismatch("term weight mismatch")
            vec = per_word.get(dxs)
            if vec is None:
                vec = [f.zero] * len(qs.monomials)
                per_word[dxs] = vec
            vec[qs.index[xexp]] = c
        for word, vec in per_word.items():
            red = qs.normal_form_vector(vec)
            for mono in qs.complement:
                c = red[qs.index[mono]]
                if not f.is_zero(c):
                    v[self.index[(word, mono)]] = c
        return v

    def form_of(self, vec) -> DiffForm:
        prob = self.problem
        f = prob.field
        zy = (0,) * prob.r
        terms = {}
        for (word, mono), c in zip(self.keys, vec):
            c = f.of(c)
            if not f.is_zero(c):
                terms[(mono, zy, word, ())] = c
        res = DiffForm(prob, self.k)
        res.terms = terms
        return res


class _FormSpaceFactory:
    """Builds form spaces for one solve, sharing quotient slices by degree."""

    def __init__(self, problem, over: str, gens=None):
        if over not in ("polynomial-ring", "quotient-by-f"):
            raise InputError(f"unknown coefficient ring mode {over!r}")
        self.problem = problem
        self.over = over
        self.gens = list(gens) if gens is not None else list(problem.polys)
        self._qslices: dict[int, QuotientSlice] = {}

    def qslice(self, degree: int) -> QuotientSlice | None:
        if degree < 0:
            return None
        qs = self._qslices.get(degree)
        if qs is None:
            qs = quotient_slice(self.gens, degree)
            self._qslices[degree] = qs
        return qs

    def space(self, k: int, weight: int):
        if self.over == "polynomial-ring":
            return _PolyFormSpace(self.problem, k, weight)
        return _QuotientFormSpace(self.problem, k, weight,
                                  self.qslice(weight - k) if k <= self.problem.n else None)


def _wedge_block(mult: DiffForm, src, tgt) -> list[list]:
    """Columns (as coordinate vectors in tgt) of wedging src basis forms by
    mult on the left."""
    cols = []
    for i in range(src.dim):
        unit = [src.problem.field.zero] * src.dim
        unit[i] = src.problem.field.one
        img = mult.wedge(src.form_of(unit))
        cols.append(tgt.vector_of(img))
    return cols


@dataclass
class WedgeDivisionSolution:
    shape: object
    m: int
    labels: list
    alphas: list  # DiffForms, parallel to labels


def wedge_division_solve(omega: DiffForm, multipliers: list[DiffForm],
                         shape, over: str = "polynomial-ring",
                         gens=None, saturation=None):
    """Solve one of the wedge-division shapes for omega in the forced graded
    slice:

    - "saito":            omega = sum_i  w_i /\\ alpha_i
    - "full-product":     omega = w_1 /\\ ... /\\ w_r /\\ alpha
    - ("generalized", s): omega = sum over (r-s+1)-subsets J of
                          (/\\_{j in J} w_j) /\\ alpha_J

    over "polynomial-ring" solves with coefficients in K[x]; over
    "quotient-by-f" with coefficients in K[x]/(gens) (default: the problem's
    polynomials). With saturation=(g, m_max), tries g^m * omega for
    m = 0..m_max and returns the least solvable m. Returns a
    WedgeDivisionSolution or None.
    """
    prob = omega.problem
    f = prob.field
    if not multipliers:
        raise InputError("need at least one multiplier")
    r = len(multipliers)
    mult_weights = []
    for i, w in enumerate(multipliers):
        if w.k != 1:
            raise InputError("multipliers must be 1-forms")
        mult_weights.append(_dx_only_weight(w, f"multiplier {i}"))
    base_weight = _dx_only_weight(omega, "omega") if not omega.is_zero() else None
    k = omega.k

    if isinstance(shape, tuple) and shape and shape[0] == "generalized":
        s = shape[1]
        if not 1 <= s <= r:
            raise InputError(f"generalized shape needs 1 <= s <= {r}")
        subsets = list(combinations(range(r), r - s + 1))
    elif shape == "saito":
        subsets = [(i,) for i in range(r)]
    elif shape == "full-product":
        subsets = [tuple(range(r))]
    else:
        raise InputError(f"unknown shape {shape!r}")

    factory = _FormSpaceFactory(prob, over, gens)
    prods = {}
    for J in subsets:
        acc = multipliers[J[0]]
        for j in J[1:]:
            acc = acc.wedge(multipliers[j])
        prods[J] = acc

    if saturation is None:
        g, m_max = None, 0
    else:
        g, m_max = saturation
        if g.is_zero() or g.homogeneous_degree() is None:
            raise InputError("saturation multiplier must be nonzero homogeneous")

    for m in range(m_max + 1):
        if m == 0 or omega.is_zero():
            target = omega
        else:
            target = omega.times_poly(g.pow(m))
        if target.is_zero():
            # the zero form is divisible in every shape
            labels = list(subsets)
            alphas = []
            for J in labels:
                kk = k - len(J)
                alphas.append(DiffForm.zero(prob, max(kk, 0)))
            return WedgeDivisionSolution(shape=shape, m=m, labels=labels, alphas=alphas)
        weight = base_weight + (m * g.homogeneous_degree() if m else 0)
        tgt = factory.space(k, weight)
        rhs = tgt.vector_of(target)
        blocks = []
        offsets = [0]
        for J in subsets:
            kk = k - len(J)
            ww = weight - sum(mult_weights[j] for j in J)
            src = factory.space(kk, ww) if kk >= 0 else None
            blocks.append((J, src))
            offsets.append(offsets[-1] + (src.dim if src is not None else 0))
        ncols = offsets[-1]
        if ncols == 0:
            if all(f.is_zero(v) for v in rhs):
                return WedgeDivisionSolution(shape=shape, m=m,
                                             labels=list(subsets),
                                             alphas=[DiffForm.zero(prob, 0)
                                                     for _ in subsets])
            continue
        mat = SparseMatrix(tgt.dim, ncols, f)
        for bi, (J, src) in enumerate(blocks):
            if src is None or src.dim == 0:
                continue
            cols = _wedge_block(prods[J], src, tgt)
            for ci, colvec in enumerate(cols):
                col = offsets[bi] + ci
                for row, v in enumerate(colvec):
                    if not f.is_zero(v):
                        mat.add_at(row, col, v)
        sol = solve(mat, rhs)
        if sol is None:
            continue
        labels = []
        alphas = []
        for bi, (J, src) in enumerate(blocks):
            labels.append(J)
            if src is None:
                alphas.append(DiffForm.zero(prob, 0))
            else:
                alphas.append(src.form_of(sol[offsets[bi]:offsets[bi + 1]]))
        return WedgeDivisionSolution(shape=shape, m=m, labels=labels, alphas=alphas)
    return None


def joint_wedge_kernel(problem: ProblemInput, multipliers: list[DiffForm],
                       k: int, weight: int, over: str = "polynomial-ring",
                       gens=None) -> list[DiffForm]:
    """Basis of { omega of word length k and the given weight :
    w_i /\\ omega = 0 for every multiplier }, in the chosen coefficient
    ring."""
    factory = _FormSpaceFactory(problem, over, gens)
    src = factory.space(k, weight)
    if src.dim == 0:
        return []
    f = problem.field
    tgts = []
    for w in multipliers:
        d = _dx_only_weight(w, "multiplier")
        tgts.append((w, factory.space(k + 1, weight + d)))
    total_rows = sum(t.dim for _, t in tgts)
    mat = SparseMatrix(total_rows, src.dim, f)
    row0 = 0
    for w, tgt in tgts:
        if tgt.dim:
            cols = _wedge_block(w, src, tgt)
            for ci, colvec in enumerate(cols):
                for row, v in enumerate(colvec):
                    if not f.is_zero(v):
                        mat.add_at(row0 + row, ci, v)
        row0 += tgt.dim
    return [src.form_of(vec) for vec in kernel_basis(mat)]


def reduce_form_mod_ideal(form: DiffForm, gens) -> DiffForm:
    """Reduce every coefficient of a dx-only form to its normal form modulo
    the degree slices of (gens)."""
    prob = form.problem
    f = prob.field
    if form.is_zero():
        return form
    by_bucket: dict[tuple, dict] = {}
    for (xexp, yexp, dxs, dys), c in form.terms.items():
        if any(yexp) or dys:
            raise InputError("only dx-only forms can be reduced")
        by_bucket.setdefault((dxs, sum(xexp)), {})[xexp] = c
    out = {}
    zy = (0,) * prob.r
    qcache: dict[int, QuotientSlice] = {}
    for (word, deg), coeffs in by_bucket.items():
        qs = qcache.get(deg)
        if qs is None:
            qs = quotient_slice(list(gens), deg)
            qcache[deg] = qs
        vec = [f.zero] * len(qs.monomials)
        for exp, c in coeffs.items():
            vec[qs.index[exp]] = c
        red = qs.normal_form_vector(vec)
        for mono in qs.complement:
            c = red[qs.index[mono]]
            if not f.is_zero(c):
                out[(mono, zy, word, ())] = c
    res = DiffForm(prob, form.k)
    res.terms = out
    return res


# ---------------------------------------------------------------------------
# verification driver
# ---------------------------------------------------------------------------


MODE_CI = "complete-intersection"
MODE_NCZ = "no-common-zero"


@dataclass
class Check:
    name: str
    expected: object
    got: object

    @property
    def passed(self) -> bool:
        return self.expected == self.got


@dataclass
class VerificationReport:
    mode: str
    checks: list
    dims: dict            # (k, q, p) -> dim
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _witness_class_is_nonzero(problem: ProblemInput) -> bool:
    """Whether df_1 /\\ ... /\\ df_r /\\ dy_1 /\\ ... /\\ dy_r is closed and
    not a boundary in its slice."""
    r = problem.r
    zx = (0,) * problem.n
    zy = (0,) * problem.r
    w = DiffForm.term(problem, zx, zy, (), tuple(range(r)))
    for j in range(r - 1, -1, -1):
        w = df_form(problem, j).wedge(w)
    if not boundary(w).is_zero():
        return False
    tgt = basis(problem, 2 * r, 0, r)
    vec = tgt.vector_of_form(w)
    if all(problem.field.is_zero(v) for v in vec):
        return False
    bmat = boundary_matrix(problem, 2 * r - 1, 0, r - 1)
    return not in_column_span(bmat, vec)


def verify_predictions(problem: ProblemInput, mode: str, certificate,
                       p_max: int | None = None,
                       threads: int | None = None,
                       division_m_max: int | None = None) -> VerificationReport:
    """Brute-force the q = 0 cohomology dimensions over a (k, p) window and
    compare them with the predicted patterns for the chosen mode. Refuses to
    run without a successful certificate of the matching kind.

    With division_m_max set (complete-intersection mode only), also checks
    the wedge-division property: every form in the joint kernel of all the
    df_i∧ maps with word length k < n-1, over the quotient by the
    polynomials, factors through the full product df_1∧...∧df_r at
    saturation exponent 0."""
    n, r = problem.n, problem.r
    if mode == MODE_CI:
        if not r < n:
            raise HypothesisViolation(f"mode {mode} needs r < n (got r={r}, n={n})")
        want_kind = "smooth-ci"
    elif mode == MODE_NCZ:
        if not r >= n:
            raise HypothesisViolation(f"mode {mode} needs r >= n (got r={r}, n={n})")
        want_kind = "no-common-zero"
    else:
        raise InputError(f"unknown verification mode {mode!r}")
    if certificate is None or not getattr(certificate, "success", False):
        raise CertificateRequired(
            f"verification in mode {mode} requires a successful {want_kind} "
            f"certificate")
    if certificate.kind != want_kind:
        raise CertificateRequired(
            f"mode {mode} needs a {want_kind} certificate, got "
            f"{certificate.kind}")

    if p_max is None:
        p_max = n + 1
    t0 = time.perf_counter()
    top = n + r
    slices = [(k, 0, p) for k in range(top + 1) for p in range(p_max + 1)]
    report = cohomology_report(problem, slices, threads=threads)
    dims = report.entries

    checks: list[Check] = []
    if mode == MODE_CI:
        live_rows = {2 * r, top - 1, top}
        for k in range(top + 1):
            if k in live_rows:
                continue
            bad = [(p, dims[(k, 0, p)]) for p in range(p_max + 1) if dims[(k, 0, p)]]
            got = "all zero" if not bad else f"dim {bad[0][1]} at p={bad[0][0]}"
            checks.append(Check(f"vanishing[k={k}]", "all zero", got))
        for p in range(p_max + 1):
            if p < r or p >= n:
                checks.append(Check(f"top-vanishing[p={p}]", 0, dims[(top, 0, p)]))
        exceptional = problem.exceptional
        mid = (top // 2) if top % 2 == 0 else None
        for p in range(p_max + 1):
            if r == n - 1:
                offset = 1 if p == r else 0
            elif exceptional and mid is not None and p == mid - 1:
                offset = 1
            elif exceptional and mid is not None and p == mid:
                offset = -1
            else:
                offset = 0
            diff = dims[(top - 1, 0, p)] - dims[(top, 0, p)]
            checks.append(Check(f"middle-pair[p={p}]", offset, diff))
        if r < n - 1:
            for p in range(p_max + 1):
                checks.append(Check(f"low-corner[p={p}]",
                                    1 if p == r else 0, dims[(2 * r, 0, p)]))
            checks.append(Check("low-corner-witness", "nonzero",
                                "nonzero" if _witness_class_is_nonzero(problem)
                                else "boundary"))
    else:
        for k in range(top + 1):
            if k == 2 * n:
                continue
            bad = [(p, dims[(k, 0, p)]) for p in range(p_max + 1) if dims[(k, 0, p)]]
            got = "all zero" if not bad else f"dim {bad[0][1]} at p={bad[0][0]}"
            checks.append(Check(f"vanishing[k={k}]", "all zero", got))
        for p in range(p_max + 1):
            checks.append(Check(f"top-slice[p={p}]",
                                1 if p == n else 0, dims[(2 * n, 0, p)]))
        if r == n and not problem.field.is_zero(problem.degree_product_in_field()):
            from .certify import ideal_membership, jacobian_determinant
            det = jacobian_determinant(problem)
            member = ideal_membership(det, list(problem.polys))
            checks.append(Check("jacobian-det-outside-ideal", False, member))

    if division_m_max is not None and mode == MODE_CI:
        checks.extend(_division_checks(problem, division_m_max))

    return VerificationReport(mode=mode, checks=checks, dims=dict(dims),
                              elapsed=time.perf_counter() - t0)


def _division_checks(problem: ProblemInput, m_max: int) -> list:
    """Wedge-division rows: each joint-kernel basis form of word length
    k < n-1 (over the quotient by the polynomials, weights up to
    k + max degree) must factor through the full product of the df's with
    saturation exponent 0."""
    from .certify import jacobian_minors
    n, r = problem.n, problem.r
    dfs = [df_form(problem, j) for j in range(r)]
    g = next((mnr for mnr in jacobian_minors(problem) if not mnr.is_zero()),
             None)
    checks = []
    for k in range(n - 1):
        for w in range(k, k + max(problem.degrees) + 1):
            kern = joint_wedge_kernel(problem, dfs, k, w,
                                      over="quotient-by-f")
            for i, omega in enumerate(kern):
                if omega.is_zero():
                    continue
                sol = wedge_division_solve(
                    omega, dfs, "full-product", over="quotient-by-f",
                    saturation=(g, m_max) if g is not None else None)
                got = "NONE" if sol is None else f"m={sol.m}"
                checks.append(Check(f"division[k={k},w={w},i={i}]",
                                    "m=0", got))
    return checks
