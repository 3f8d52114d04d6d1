"""Builders for the compact-dual cohomology rings used by the catalog.

Exterior algebras come straight from the generic constructor.  The
Lagrangian-Grassmannian rings are genuine polynomial quotients built by
per-degree row reduction.  The (sigma, tau) Grassmannian presentations are
backed internally by a Schur-basis model (partitions in a p x q box with
Pieri-rule multiplication), because their ambient monomial spaces grow into
the thousands per degree at p = q = 5; the exposed basis and normal forms
still follow the row-reduction contract, and the small cases are checked
against the direct construction in the test suite.
"""

from fractions import Fraction
from functools import lru_cache

from .algebra import (
    DEFAULT_MONOMIAL_CAP,
    Generator,
    GradedAlgebra,
    _count_monomials,
    _normalize_relations,
    exterior_algebra,
    polynomial_quotient_algebra,
)
from .errors import CapExceededError, InvalidPresentationError


# --------------------------------------------------------- exterior duals


@lru_cache(maxsize=None)
def _su_algebra(n, monomial_cap):
    if n < 2:
        raise InvalidPresentationError(f"SU(n) dual needs n >= 2, got {n}")
    return exterior_algebra(list(range(3, 2 * n, 2)), monomial_cap)


def su_algebra(n, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """H*(SU(n)): exterior on e3, e5, ..., e_{2n-1}.  Needs n >= 2."""
    return _su_algebra(n, monomial_cap)


@lru_cache(maxsize=None)
def _sp_group_algebra(n, monomial_cap):
    if n < 1:
        raise InvalidPresentationError(f"Sp(2n) dual needs n >= 1, got {n}")
    return exterior_algebra([4 * j - 1 for j in range(1, n + 1)], monomial_cap)


def sp_group_algebra(n, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """H*(compact Sp(2n) group): exterior on e3, e7, ..., e_{4n-1}."""
    return _sp_group_algebra(n, monomial_cap)


@lru_cache(maxsize=None)
def _su_so_algebra(n, monomial_cap):
    if n < 1:
        raise InvalidPresentationError(f"SU/SO dual needs n >= 1, got {n}")
    return exterior_algebra([4 * j + 1 for j in range(1, n + 1)], monomial_cap)


def su_so_algebra(n, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """H*(SU(2n+1)/SO(2n+1)): exterior on e5, e9, ..., e_{4n+1}."""
    return _su_so_algebra(n, monomial_cap)


# ------------------------------------------------------- Lagrangian rings


def lagrangian_relations(g):
    """Graded components of prod_i (1 - x_i^2) = 1 in elementary symmetric terms.

    The degree-4s component is sum_{j+k=2s} (-1)^j sigma_j sigma_k; odd
    total components cancel identically and are omitted.
    """
    rels = []
    for s in range(1, g + 1):
        poly = {}
        for j in range(0, 2 * s + 1):
            k = 2 * s - j
            if j > g or k > g:
                continue
            mont = [0] * g
            if j:
                mont[j - 1] += 1
            if k:
                mont[k - 1] += 1
            key = tuple(mont)
            poly[key] = poly.get(key, 0) + (-1) ** j
        poly = {m: c for m, c in poly.items() if c}
        if poly:
            rels.append(poly)
    return rels


@lru_cache(maxsize=None)
def _lagrangian_algebra(g, monomial_cap, prefix):
    if g < 1:
        raise InvalidPresentationError(f"Lagrangian ring needs g >= 1, got {g}")
    gens = [(f"{prefix}{i}", 2 * i) for i in range(1, g + 1)]
    return polynomial_quotient_algebra(gens, lagrangian_relations(g),
                                       g * (g + 1), monomial_cap)


def lagrangian_algebra(g, monomial_cap=DEFAULT_MONOMIAL_CAP, prefix="sigma"):
    """H*(Sp(2g)/U(g)): Q[sigma_1..sigma_g] modulo prod (1 - x_i^2) = 1."""
    return _lagrangian_algebra(g, monomial_cap, prefix)


# ----------------------------------------------------- Grassmannian rings


class SchurRing:
    """Internal Schur-basis model of H*(Gr(p, p+q)).

    Keys are partitions inside the p x q box (descending tuples); classes
    are {partition: Fraction} dicts.  Only multiplication by e_k (vertical
    strips) and by h_k (horizontal strips) is ever needed, so the general
    Littlewood-Richardson rule never enters.
    """

    def __init__(self, p, q):
        self.p = p
        self.q = q
        self.top_degree = 2 * p * q
        self._parts = {}
        self._pos = {}

    def partitions(self, n):
        if n not in self._parts:
            out = []

            def rec(rem, maxpart, rows, cur):
                if rem == 0:
                    out.append(tuple(cur))
                    return
                if rows == 0:
                    return
                for part in range(min(maxpart, rem), 0, -1):
                    cur.append(part)
                    rec(rem - part, part, rows - 1, cur)
                    cur.pop()

            rec(n, self.q, self.p, [])
            self._parts[n] = sorted(out)
        return self._parts[n]

    def dims(self, d):
        if d < 0 or d % 2 or d > self.top_degree:
            return 0
        return len(self.partitions(d // 2))

    def basis_positions(self, d):
        if d not in self._pos:
            self._pos[d] = {lam: i for i, lam in enumerate(self.partitions(d // 2))}
        return self._pos[d]

    def term_degree(self, lam):
        return 2 * sum(lam)

    def one_terms(self):
        return {(): Fraction(1)}

    def _vertical_strips(self, lam, k):
        """Partitions obtained from lam by adding a vertical k-strip in the box.

        At most one box per row; descending shape and the p x q box are
        enforced, so classes never leave the model.
        """
        rows = min(self.p, len(lam) + k)
        base = list(lam) + [0] * (rows - len(lam))
        out = []
        delta = [0] * rows

        def rec(i, rem):
            if rem == 0:
                full = [base[j] + delta[j] for j in range(i)] + base[i:]
                out.append(tuple(v for v in full if v))
                return
            if i == rows or rem > rows - i:
                return
            prev = (base[i - 1] + delta[i - 1]) if i else self.q
            nv = base[i] + 1
            if nv <= prev and nv <= self.q:
                delta[i] = 1
                rec(i + 1, rem - 1)
                delta[i] = 0
            rec(i + 1, rem)

        rec(0, k)
        return out

    def _horizontal_strips(self, lam, k):
        """Partitions obtained from lam by adding a horizontal k-strip in the box.

        Row i may grow up to the previous row's original length (no two new
        boxes share a column); at most one new row appears.
        """
        rows = min(self.p, len(lam) + 1)
        base = list(lam) + [0] * (rows - len(lam))
        out = []
        mu = [0] * rows

        def rec(i, rem):
            if i == rows:
                if rem == 0:
                    out.append(tuple(v for v in mu if v))
                return
            upper = self.q if i == 0 else base[i - 1]
            upper = min(upper, base[i] + rem)
            for val in range(base[i], upper + 1):
                mu[i] = val
                rec(i + 1, rem - (val - base[i]))
            mu[i] = 0

        rec(0, k)
        return out

    def mult_e(self, cls, k):
        out = {}
        for lam, c in cls.items():
            for mu in self._vertical_strips(lam, k):
                nv = out.get(mu, 0) + c
                if nv:
                    out[mu] = nv
                else:
                    out.pop(mu, None)
        return out

    def mult_h_signed(self, cls, k):
        sign = -1 if k % 2 else 1
        out = {}
        for lam, c in cls.items():
            for mu in self._horizontal_strips(lam, k):
                nv = out.get(mu, 0) + sign * c
                if nv:
                    out[mu] = nv
                else:
                    out.pop(mu, None)
        return out


def grassmannian_relations(p, q, suffix=""):
    """Graded components of (1 + sigma_1 + ... )(1 + tau_1 + ...) = 1.

    Returns (generators, relations): generators are sigma_1..sigma_p then
    tau_1..tau_q; relation m is sum_{i+j=m} sigma_i tau_j for 1 <= m <= p+q.
    """
    gens = [(f"sigma{i}{suffix}", 2 * i) for i in range(1, p + 1)]
    gens += [(f"tau{j}{suffix}", 2 * j) for j in range(1, q + 1)]
    k = p + q
    rels = []
    for m in range(1, p + q + 1):
        poly = {}
        for i in range(0, m + 1):
            j = m - i
            if i > p or j > q:
                continue
            mont = [0] * k
            if i:
                mont[i - 1] += 1
            if j:
                mont[p + j - 1] += 1
            poly[tuple(mont)] = Fraction(1)
        if poly:
            rels.append(poly)
    return gens, rels


@lru_cache(maxsize=None)
def _grassmannian_algebra(p, q, monomial_cap, suffix):
    if p < 1 or q < 1:
        raise InvalidPresentationError(f"Grassmannian ring needs p, q >= 1, got ({p}, {q})")
    gens, rels = grassmannian_relations(p, q, suffix)
    degrees = [d for _, d in gens]
    counts = _count_monomials(degrees, [0] * len(degrees), 2 * p * q)
    if max(counts) > monomial_cap:
        raise CapExceededError(
            f"per-degree monomial count {max(counts)} exceeds cap {monomial_cap}")
    gen_objs = [Generator(nm, d) for nm, d in gens]
    alg = GradedAlgebra("quotient", gen_objs, _normalize_relations(gen_objs, rels),
                        2 * p * q, monomial_cap)
    model = SchurRing(p, q)
    images = [
        (lambda cls, k=i: model.mult_e(cls, k)) for i in range(1, p + 1)
    ] + [
        (lambda cls, k=j: model.mult_h_signed(cls, k)) for j in range(1, q + 1)
    ]
    alg._attach_model(model, images)
    return alg


def grassmannian_algebra(p, q, monomial_cap=DEFAULT_MONOMIAL_CAP, suffix=""):
    """H*(Gr(p, p+q)) = H*(U(p,q) compact dual), presented on sigma's and tau's.

    sigma_i and tau_j are the elementary symmetric classes of the two Chern
    root families; the presentation relation is the graded identity
    (sum sigma)(sum tau) = 1.  Internally backed by the Schur model; the
    exposed basis follows the standard-monomial contract.
    """
    return _grassmannian_algebra(p, q, monomial_cap, suffix)


# expose cache controls and uncached constructors for tests and tooling
for _public, _inner in ((su_algebra, _su_algebra),
                        (sp_group_algebra, _sp_group_algebra),
                        (su_so_algebra, _su_so_algebra),
                        (lagrangian_algebra, _lagrangian_algebra),
                        (grassmannian_algebra, _grassmannian_algebra)):
    _public.cache_clear = _inner.cache_clear
    _public.uncached = _inner.__wrapped__
