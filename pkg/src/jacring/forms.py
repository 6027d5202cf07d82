"""Differential forms with polynomial coefficients in x- and y-variables.

A form is a sum of terms  c * x^a y^b dx_I dy_J  with I, J ascending index
tuples; the wedge factors are kept in the canonical order "all dx before all
dy". The three operators of interest: the boundary (left wedge with dF,
where F = sum_j y_j f_j), its horizontal/vertical parts, and the degree-
preserving contraction theta that sends dx_i to x_i and dy_j to -d_j y_j
with alternating signs.
"""
from __future__ import annotations

from bisect import bisect_right
from itertools import combinations

from .errors import InputError, SliceMismatch
from .polynomials import MultiPoly, monomials_of_degree
from .problem import ProblemInput


def _merge_words(n, dxs_a, dys_a, dxs_b, dys_b):
    """Merge two canonical wedge words; returns (sign, dxs, dys) or None when
    a factor repeats. The sign counts the transpositions needed to interleave
    the second word into the first."""
    wa = list(dxs_a) + [n + j for j in dys_a]
    wb = list(dxs_b) + [n + j for j in dys_b]
    inv = 0
    for v in wb:
        pos = bisect_right(wa, v)
        if pos > 0 and wa[pos - 1] == v:
            return None
        inv += len(wa) - pos
    merged = sorted(wa + wb)
    dxs = tuple(u for u in merged if u < n)
    dys = tuple(u - n for u in merged if u >= n)
    return (-1 if inv % 2 else 1), dxs, dys


class DiffForm:
    """Sum of wedge terms of a single word length k."""

    __slots__ = ("problem", "k", "terms")

    def __init__(self, problem: ProblemInput, k: int, terms=None):
        self.problem = problem
        self.k = k
        f = problem.field
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                xexp, yexp, dxs, dys = key
                if len(dxs) + len(dys) != k:
                    raise InputError(f"term word length {len(dxs)+len(dys)} != {k}")
                c = f.of(c)
                if f.is_zero(c):
                    continue
                cur = clean.get(key)
                s = c if cur is None else f.add(cur, c)
                if f.is_zero(s):
                    clean.pop(key, None)
                else:
                    clean[key] = s
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, problem, k: int) -> "DiffForm":
        return cls(problem, k)

    @classmethod
    def term(cls, problem, xexp, yexp, dxs, dys, c=1) -> "DiffForm":
        xexp, yexp = tuple(xexp), tuple(yexp)
        dxs, dys = tuple(dxs), tuple(dys)
        if len(xexp) != problem.n or len(yexp) != problem.r:
            raise InputError("exponent tuple lengths do not match the problem")
        if list(dxs) != sorted(set(dxs)) or list(dys) != sorted(set(dys)):
            raise InputError("wedge indices must be strictly ascending")
        return cls(problem, len(dxs) + len(dys), {(xexp, yexp, dxs, dys): c})

    @classmethod
    def of_poly(cls, problem, poly: MultiPoly) -> "DiffForm":
        """A 0-form from a polynomial in the x-variables."""
        if poly.nvars != problem.n:
            raise InputError("polynomial variable count mismatch")
        zy = (0,) * problem.r
        return cls(problem, 0,
                   {(exp, zy, (), ()): c for exp, c in poly.terms.items()})

    # -- basic algebra -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def _assert_same_space(self, other):
        if self.problem is not other.problem and self.problem != other.problem:
            raise InputError("forms over different problems")
        if self.k != other.k:
            raise InputError("forms of different word length")

    def __add__(self, other):
        self._assert_same_space(other)
        f = self.problem.field
        out = dict(self.terms)
        for key, c in other.terms.items():
            cur = out.get(key)
            s = c if cur is None else f.add(cur, c)
            if f.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        res = DiffForm(self.problem, self.k)
        res.terms = out
        return res

    def __neg__(self):
        f = self.problem.field
        res = DiffForm(self.problem, self.k)
        res.terms = {key: f.neg(c) for key, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DiffForm":
        f = self.problem.field
        c = f.of(c)
        res = DiffForm(self.problem, self.k)
        if not f.is_zero(c):
            res.terms = {key: f.mul(v, c) for key, v in self.terms.items()}
        return res

    def __eq__(self, other):
        return (isinstance(other, DiffForm) and self.problem == other.problem
                and self.k == other.k and self.terms == other.terms)

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def wedge(self, other: "DiffForm") -> "DiffForm":
        if self.problem != other.problem:
            raise InputError("forms over different problems")
        prob = self.problem
        f = prob.field
        out = {}
        for (xa, ya, dxa, dya), ca in self.terms.items():
            for (xb, yb, dxb, dyb), cb in other.terms.items():
                merged = _merge_words(prob.n, dxa, dya, dxb, dyb)
                if merged is None:
                    continue
                sign, dxs, dys = merged
                c = f.mul(ca, cb)
                if sign < 0:
                    c = f.neg(c)
                key = (tuple(a + b for a, b in zip(xa, xb)),
                       tuple(a + b for a, b in zip(ya, yb)), dxs, dys)
                cur = out.get(key)
                s = c if cur is None else f.add(cur, c)
                if f.is_zero(s):
                    out.pop(key, None)
                else:
                    out[key] = s
        res = DiffForm(prob, self.k + other.k)
        res.terms = out
        return res

    def times_poly(self, poly: MultiPoly) -> "DiffForm":
        """Multiply by a polynomial in the x-variables."""
        return DiffForm.of_poly(self.problem, poly).wedge(self)

    def bidegrees(self) -> set:
        return {self.problem.bidegree_of(*key) for key in self.terms}

    def bidegree(self):
        """The common bidegree of all terms, or None (zero or mixed)."""
        degs = self.bidegrees()
        return degs.pop() if len(degs) == 1 else None

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        prob = self.problem
        parts = []
        for key in sorted(self.terms, key=lambda t: (t[2], t[3], t[0], t[1])):
            xexp, yexp, dxs, dys = key
            c = self.terms[key]
            bits = []
            for i, e in enumerate(xexp):
                if e:
                    bits.append(f"x{i+1}" + (f"^{e}" if e > 1 else ""))
            for j, e in enumerate(yexp):
                if e:
                    bits.append(f"y{j+1}" + (f"^{e}" if e > 1 else ""))
            bits.extend(f"dx{i+1}" for i in dxs)
            bits.extend(f"dy{j+1}" for j in dys)
            mono = "*".join(bits) if bits else "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DiffForm({self.to_string()})"


# ---------------------------------------------------------------------------
# the operators
# ---------------------------------------------------------------------------


def df_form(problem: ProblemInput, j: int) -> DiffForm:
    """The 1-form sum_i (d f_j / d x_i) dx_i."""
    key = ("df", j)
    cached = problem._cache.get(key)
    if cached is not None:
        return cached
    zy = (0,) * problem.r
    terms = {}
    for i in range(problem.n):
        for exp, c in problem.partials[j][i].terms.items():
            terms[(exp, zy, (i,), ())] = c
    form = DiffForm(problem, 1, terms)
    problem._cache[key] = form
    return form


def dF_of(problem: ProblemInput, part: str = "full") -> DiffForm:
    """dF for F = sum_j y_j f_j, or its horizontal (y_j df_j) / vertical
    (f_j dy_j) part. Every term has bidegree (0, 1)."""
    if part not in ("full", "h", "v"):
        raise InputError(f"unknown part {part!r}")
    key = ("dF", part)
    cached = problem._cache.get(key)
    if cached is not None:
        return cached
    n, r = problem.n, problem.r
    terms = []
    if part in ("full", "h"):
        for j in range(r):
            yexp = tuple(1 if t == j else 0 for t in range(r))
            for i in range(n):
                for exp, c in problem.partials[j][i].terms.items():
                    terms.append(((exp, yexp, (i,), ()), c))
    if part in ("full", "v"):
        zy = (0,) * r
        for j in range(r):
            for exp, c in problem.polys[j].terms.items():
                terms.append(((exp, zy, (), (j,)), c))
    form = DiffForm(problem, 1, terms)
    problem._cache[key] = form
    return form


def boundary(omega: DiffForm, part: str = "full") -> DiffForm:
    """Left wedge with dF (or one of its parts); raises the word length and
    the second grading by one, preserving the first."""
    return dF_of(omega.problem, part).wedge(omega)


def theta(omega: DiffForm) -> DiffForm:
    """The contraction: dx_i goes to x_i, dy_j goes to -d_j y_j, with signs
    alternating through the word; bidegree is preserved."""
    prob = omega.problem
    f = prob.field
    d = prob.degrees
    out = {}

    def put(key, c):
        cur = out.get(key)
        s = c if cur is None else f.add(cur, c)
        if f.is_zero(s):
            out.pop(key, None)
        else:
            out[key] = s

    for (xexp, yexp, dxs, dys), c in omega.terms.items():
        l = len(dxs)
        for s, i in enumerate(dxs):
            c2 = c if s % 2 == 0 else f.neg(c)
            nx = xexp[:i] + (xexp[i] + 1,) + xexp[i + 1:]
            put((nx, yexp, dxs[:s] + dxs[s + 1:], dys), c2)
        for t, j in enumerate(dys):
            c2 = f.mul(c, f.of(-d[j]))
            if (l + t) % 2 == 1:
                c2 = f.neg(c2)
            if f.is_zero(c2):
                continue
            ny = yexp[:j] + (yexp[j] + 1,) + yexp[j + 1:]
            put((xexp, ny, dxs, dys[:t] + dys[t + 1:]), c2)
    res = DiffForm(prob, omega.k - 1 if omega.k else 0)
    if omega.k == 0 and out:
        raise SliceMismatch("contraction of a 0-form produced terms")
    res.terms = out
    return res


def xi(problem: ProblemInput, k: int) -> DiffForm:
    """sum over k-subsets S of the polynomials of
    (prod of degrees outside S) * df_S wedge dy_S; bidegree (0, k)."""
    if not 1 <= k <= problem.r:
        raise InputError(f"k must be between 1 and r={problem.r}")
    f = problem.field
    acc = DiffForm.zero(problem, 2 * k)
    zx = (0,) * problem.n
    zy = (0,) * problem.r
    for subset in combinations(range(problem.r), k):
        coef = f.one
        for i in range(problem.r):
            if i not in subset:
                coef = f.mul(coef, f.of(problem.degrees[i]))
        if f.is_zero(coef):
            continue
        part = DiffForm.term(problem, zx, zy, (), ())
        for j in subset:
            part = part.wedge(df_form(problem, j))
        part = part.wedge(DiffForm.term(problem, zx, zy, (), subset))
        acc = acc + part.scale(coef)
    return acc


# ---------------------------------------------------------------------------
# graded slices
# ---------------------------------------------------------------------------


class BasisSlice:
    """Ordered monomial-form basis of the (k, q, p) slice."""

    __slots__ = ("problem", "k", "q", "p", "keys", "index")

    def __init__(self, problem, k, q, p, keys):
        self.problem = problem
        self.k = k
        self.q = q
        self.p = p
        self.keys = keys
        self.index = {key: i for i, key in enumerate(keys)}

    @property
    def dim(self) -> int:
        return len(self.keys)

    def vector_of_form(self, form: DiffForm) -> list:
        f = self.problem.field
        v = [f.zero] * len(self.keys)
        for key, c in form.terms.items():
            pos = self.index.get(key)
            if pos is None:
                raise SliceMismatch(
                    f"term {key} is not in the (k={self.k}, q={self.q}, "
                    f"p={self.p}) slice")
            v[pos] = c
        return v

    def form_of_vector(self, vec) -> DiffForm:
        f = self.problem.field
        terms = {}
        for key, c in zip(self.keys, vec):
            if not f.is_zero(f.of(c)):
                terms[key] = f.of(c)
        res = DiffForm(self.problem, self.k)
        res.terms = terms
        return res

    def __repr__(self):
        return f"BasisSlice(k={self.k}, q={self.q}, p={self.p}, dim={self.dim})"


def basis(problem: ProblemInput, k: int, q: int, p: int) -> BasisSlice:
    """Monomial basis x^a y^b dx_I dy_J of the slice: |I| + |J| = k,
    sum(b) + |J| = p, and sum(a) forced by the first grading."""
    key = ("basis", k, q, p)
    cached = problem._cache.get(key)
    if cached is not None:
        return cached
    n, r, d = problem.n, problem.r, problem.degrees
    keys = []
    if 0 <= k <= n + r:
        for m in range(max(0, k - n), min(k, r) + 1):
            l = k - m
            if p - m < 0:
                continue
            for dys in combinations(range(r), m):
                dy_weight = sum(d[j] for j in dys)
                for yexp in monomials_of_degree(r, p - m):
                    xdeg = (q + sum(b * d[j] for j, b in enumerate(yexp))
                            + dy_weight - l)
                    if xdeg < 0:
                        continue
                    for dxs in combinations(range(n), l):
                        for xexp in monomials_of_degree(n, xdeg):
                            keys.append((xexp, yexp, dxs, dys))
    slice_ = BasisSlice(problem, k, q, p, keys)
    problem._cache[key] = slice_
    return slice_


def theta_preimage(eta: DiffForm, k: int, q: int, p: int):
    """A form zeta in the (k, q, p) slice with theta(zeta) = eta, or None.
    The solver's free coordinates are set to zero, so the result is
    deterministic but not canonical."""
    from .homology import matrix_of
    from .linalg import solve

    prob = eta.problem
    src = basis(prob, k, q, p)
    tgt = basis(prob, k - 1, q, p)
    mat = matrix_of(theta, src, tgt)
    rhs = tgt.vector_of_form(eta)
    sol = solve(mat, rhs)
    if sol is None:
        return None
    return src.form_of_vector(sol)
