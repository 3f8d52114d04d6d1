"""Finite-dimensional graded-commutative algebras over the rationals.

Three constructions cover every compact dual in the catalog: exterior
algebras on odd-degree generators, polynomial rings on even-degree
generators modulo a homogeneous relation ideal, and tensor products of the
two.  All coefficients are exact ``fractions.Fraction`` values; every
verdict downstream (zero / nonzero, divisibility) depends on that.

Monomials are exponent tuples aligned with the owning algebra's generator
list.  Within one cohomological degree, monomials are ordered by the key
``(exponent sum, reversed exponent tuple)``; the quotient construction
eliminates the largest monomials, so standard (basis) monomials are the
minimal ones under this order.  The basis of a quotient in each degree is
exactly the set of non-pivot columns of the reduced row echelon form of the
span of relation multiples, with columns sorted by the key descending.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CapExceededError,
    InconsistentPresentationError,
    InvalidPresentationError,
)
from .linalg import SparseRREF, solve_dense

DEFAULT_MONOMIAL_CAP = 200_000


@dataclass(frozen=True)
class Generator:
    """A ring generator with a fixed cohomological degree."""

    name: str
    degree: int

    @property
    def parity(self):
        return self.degree % 2

    def __repr__(self):
        return f"Generator({self.name!r}, {self.degree})"


def order_key(mont):
    """Sort key for monomials of equal degree; smaller = kept as standard."""
    return (sum(mont), mont[::-1])


def _count_monomials(degrees, parities, dmax):
    """Per-degree counts of ambient monomials, degrees 0..dmax."""
    counts = [0] * (dmax + 1)
    counts[0] = 1
    for deg, par in zip(degrees, parities):
        if par:
            for d in range(dmax, deg - 1, -1):
                counts[d] += counts[d - deg]
        else:
            for d in range(deg, dmax + 1):
                counts[d] += counts[d - deg]
    return counts


def _enumerate_monomials(degrees, parities, d):
    """All exponent tuples of weighted degree d (odd exponents capped at 1)."""
    k = len(degrees)
    out = []
    cur = [0] * k

    def rec(i, rem):
        if rem == 0:
            out.append(tuple(cur))
            return
        if i == k:
            return
        step = degrees[i]
        emax = rem // step
        if parities[i]:
            emax = min(emax, 1)
        for e in range(emax + 1):
            cur[i] = e
            rec(i + 1, rem - e * step)
        cur[i] = 0

    rec(0, d)
    return out


class Element:
    """A ring element: sparse rational combination of standard monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms  # dict mont -> nonzero Fraction; treat as frozen

    def is_zero(self):
        return not self.terms

    def homogeneous_degree(self):
        """Degree of a homogeneous element, None for zero; raises if mixed."""
        degs = {self.algebra.monomial_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def coefficient(self, mont):
        return self.terms.get(mont, Fraction(0))

    def __add__(self, other):
        self._check_owner(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nv = out.get(m, 0) + c
            if nv:
                out[m] = nv
            else:
                out.pop(m, None)
        return Element(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_owner(other)
            return self.algebra._mul_elements(self, other)
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def _scale(self, scalar):
        c = Fraction(scalar)
        if not c:
            return Element(self.algebra, {})
        return Element(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    def _check_owner(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different algebras")

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=lambda m: (self.algebra.monomial_degree(m), order_key(m))):
            c = self.terms[m]
            ms = self.algebra.monomial_string(m)
            if ms == "1":
                bits.append(str(c))
            elif c == 1:
                bits.append(ms)
            elif c == -1:
                bits.append(f"-{ms}")
            else:
                bits.append(f"{c}*{ms}")
        return " + ".join(bits).replace("+ -", "- ")


class GradedAlgebra:
    """A graded-commutative ring with explicit per-degree bases.

    Instances are produced by :func:`exterior_algebra`,
    :func:`polynomial_quotient_algebra` and :func:`tensor_product` (plus the
    catalog's ring builders); the class itself only hosts shared machinery.
    Algebras are logically immutable; internal caches are memoization only.
    """

    def __init__(self, kind, generators, relations, top_degree, monomial_cap):
        self.kind = kind
        self.generators = tuple(generators)
        self.relations = tuple(relations)
        self.top_degree = top_degree
        self.monomial_cap = monomial_cap
        self._degrees = tuple(g.degree for g in self.generators)
        self._parities = tuple(g.parity for g in self.generators)
        self._odd_indices = tuple(i for i, p in enumerate(self._parities) if p)
        self._gen_index = {g.name: i for i, g in enumerate(self.generators)}
        if len(self._gen_index) != len(self.generators):
            raise InvalidPresentationError("duplicate generator names")
        self._dims = {}
        self._basis = {}
        self._basis_pos = {}
        self._nf_table = {}       # direct quotients: degree -> {mont: {std: c}}
        self._nf_cache = {}
        self._factors = None      # tensor products
        self._split = None
        self._model = None        # model-backed quotients
        self._model_images = None
        self._mont_class_cache = {}
        self._std_convert = {}    # degree -> (model positions matrix inverse rows)

    # ---------------------------------------------------------------- basics

    @property
    def total_dimension(self):
        return sum(self.dims(d) for d in range(self.top_degree + 1))

    def dims(self, d):
        if d < 0 or d > self.top_degree:
            return 0
        if self._model is not None:
            return self._model.dims(d)
        return self._dims.get(d, 0)

    def basis(self, d):
        """Ordered standard-monomial basis of the degree-d component."""
        if d < 0 or d > self.top_degree:
            return []
        if d not in self._basis:
            self._build_basis(d)
        return self._basis[d]

    def basis_positions(self, d):
        if d not in self._basis_pos:
            self._basis_pos[d] = {m: i for i, m in enumerate(self.basis(d))}
        return self._basis_pos[d]

    def monomial_degree(self, mont):
        return sum(d * e for d, e in zip(self._degrees, mont))

    def generator(self, name):
        return self.generators[self._gen_index[name]]

    def canonical_top_monomial(self):
        top = self.basis(self.top_degree)
        if len(top) != 1:
            raise InconsistentPresentationError(
                f"top degree {self.top_degree} has dimension {len(top)}, expected 1")
        return top[0]

    # ------------------------------------------------------------- elements

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(0,) * len(self.generators): Fraction(1)})

    def gen(self, name):
        i = self._gen_index.get(name)
        if i is None:
            raise KeyError(f"no generator named {name!r}")
        mont = tuple(1 if j == i else 0 for j in range(len(self.generators)))
        return self.element({mont: 1})

    def basis_element(self, mont):
        return Element(self, {mont: Fraction(1)})

    def element(self, raw_terms):
        """Element from an ambient {exponent tuple: coefficient} dict."""
        out = {}
        for mont, c in raw_terms.items():
            c = Fraction(c)
            if not c:
                continue
            if len(mont) != len(self.generators):
                raise ValueError("exponent tuple length does not match generators")
            for sm, sc in self.normal_form_monomial(mont).items():
                nv = out.get(sm, 0) + c * sc
                if nv:
                    out[sm] = nv
                else:
                    out.pop(sm, None)
        return Element(self, out)

    def coords(self, elem, d):
        pos = self.basis_positions(d)
        vec = [Fraction(0)] * len(pos)
        for m, c in elem.terms.items():
            vec[pos[m]] = c
        return vec

    def element_from_coords(self, coeffs, d):
        return Element(self, {m: Fraction(c) for m, c in zip(self.basis(d), coeffs) if c})

    # --------------------------------------------------------- monomial ops

    def monomial_string(self, mont):
        bits = [f"{g.name}^{e}" for g, e in zip(self.generators, mont) if e]
        return "*".join(bits) if bits else "1"

    def parse_monomial(self, s):
        mont = [0] * len(self.generators)
        if s.strip() != "1":
            for factor in s.split("*"):
                name, _, exp = factor.strip().rpartition("^")
                if name not in self._gen_index:
                    raise ValueError(f"unknown generator in monomial string: {factor!r}")
                mont[self._gen_index[name]] += int(exp)
        return tuple(mont)

    def _free_mul(self, m1, m2):
        """Product of two ambient monomials: (sign, mont) or None if it dies."""
        if self._odd_indices:
            o1 = [i for i in self._odd_indices if m1[i]]
            o2 = [j for j in self._odd_indices if m2[j]]
            inversions = 0
            for j in o2:
                if m1[j]:
                    return None
                for i in o1:
                    if i > j:
                        inversions += 1
        else:
            inversions = 0
        mont = tuple(a + b for a, b in zip(m1, m2))
        return (-1 if inversions % 2 else 1), mont

    def normal_form_monomial(self, mont):
        """Reduce one ambient monomial to a {standard monomial: coefficient} dict."""
        cached = self._nf_cache.get(mont)
        if cached is not None:
            return cached
        d = self.monomial_degree(mont)
        if d > self.top_degree:
            result = {}
        elif self.kind == "exterior":
            result = {mont: Fraction(1)}
        elif self._factors is not None:
            a, b = self._factors
            s = self._split
            ra = a.normal_form_monomial(mont[:s])
            rb = b.normal_form_monomial(mont[s:])
            result = {}
            for ma, ca in ra.items():
                for mb, cb in rb.items():
                    result[ma + mb] = ca * cb
        elif self._model is not None:
            result = self._model_normal_form(mont, d)
        else:
            table = self._nf_table.get(d, {})
            result = table.get(mont, {mont: Fraction(1)})
        self._nf_cache[mont] = result
        return result

    # --------------------------------------------------------------- product

    def _mul_elements(self, a, b):
        if self._model is not None:
            return self._model_mul(a, b)
        acc = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                hit = self._free_mul(m1, m2)
                if hit is None:
                    continue
                sign, mont = hit
                nv = acc.get(mont, 0) + sign * c1 * c2
                if nv:
                    acc[mont] = nv
                else:
                    acc.pop(mont, None)
        out = {}
        for mont, c in acc.items():
            for sm, sc in self.normal_form_monomial(mont).items():
                nv = out.get(sm, 0) + c * sc
                if nv:
                    out[sm] = nv
                else:
                    out.pop(sm, None)
        return Element(self, out)

    # ------------------------------------------------- direct quotient build

    def _build_quotient_tables(self):
        """Per-degree row reduction of the relation-multiple span.

        Builds bases and normal-form tables for every degree up to the top,
        and verifies that nothing survives in the window above the top (which
        forces vanishing in all higher degrees, since every monomial there
        factors through the window).
        """
        degrees, parities = self._degrees, self._parities
        maxgen = max(degrees)
        dmax = self.top_degree + maxgen
        counts = _count_monomials(degrees, parities, dmax)
        worst = max(counts)
        if worst > self.monomial_cap:
            raise CapExceededError(
                f"per-degree monomial count {worst} exceeds cap {self.monomial_cap}")
        for d in range(dmax + 1):
            if counts[d] == 0:
                if d <= self.top_degree:
                    self._dims[d] = 0
                    self._basis[d] = []
                continue
            monts = sorted(_enumerate_monomials(degrees, parities, d),
                           key=order_key, reverse=True)
            col = {m: i for i, m in enumerate(monts)}
            rref = SparseRREF()
            for rdeg, rpoly in self.relations:
                if rdeg > d:
                    continue
                for m in _enumerate_monomials(degrees, parities, d - rdeg):
                    row = {}
                    for rm, rc in rpoly.items():
                        prod = tuple(a + b for a, b in zip(m, rm))
                        row[col[prod]] = row.get(col[prod], 0) + rc
                    rref.add({c: v for c, v in row.items() if v})
            if d > self.top_degree:
                if rref.rank != counts[d]:
                    leftover = next(m for m in reversed(monts)
                                    if col[m] not in rref.pivot_rows)
                    raise InconsistentPresentationError(
                        f"nonzero class above expected top degree: "
                        f"{self.monomial_string(leftover)} in degree {d}")
                continue
            std = [m for m in reversed(monts) if col[m] not in rref.pivot_rows]
            self._dims[d] = len(std)
            self._basis[d] = std
            table = {}
            for p, row in rref.pivot_rows.items():
                expansion = {monts[c]: -v for c, v in row.items() if c != p}
                table[monts[p]] = expansion
            self._nf_table[d] = table
        if self._dims.get(0) != 1 or self._dims.get(self.top_degree) != 1:
            raise InconsistentPresentationError(
                f"degree 0 and top degree must be one-dimensional, got "
                f"{self._dims.get(0)} and {self._dims.get(self.top_degree)}")

    def _build_basis(self, d):
        # exterior and tensor bases are assembled on demand; direct quotients
        # fill every degree eagerly in _build_quotient_tables.
        if self.kind == "exterior":
            monts = sorted(_enumerate_monomials(self._degrees, self._parities, d),
                           key=order_key)
            self._basis[d] = monts
            self._dims[d] = len(monts)
        elif self._factors is not None:
            a, b = self._factors
            combined = []
            for da in range(d + 1):
                db = d - da
                if a.dims(da) == 0 or b.dims(db) == 0:
                    continue
                for ma in a.basis(da):
                    for mb in b.basis(db):
                        combined.append(ma + mb)
            self._basis[d] = combined
        elif self._model is not None:
            self._build_model_basis(d)
        else:
            self._basis[d] = []

    # ------------------------------------------------- model-backed quotient

    def _attach_model(self, model, gen_images):
        """Back this presentation by an isomorphic, cheaper-to-reduce model.

        ``model`` provides ``dims(d)``, ``basis_positions(d)``,
        ``term_degree(key)`` and ``one_terms()``; model classes are plain
        {key: Fraction} dicts.  ``gen_images`` is one callable per presented
        generator, multiplying a model class by that generator's image.

        Bases and normal forms computed through the model agree with the
        direct row-reduction contract: a monomial is standard exactly when
        its class is independent of the classes of all smaller monomials,
        which is the non-pivot condition of the RREF.
        """
        if model.top_degree != self.top_degree:
            raise InconsistentPresentationError("model top degree mismatch")
        self._model = model
        self._model_images = list(gen_images)

    def _mont_class(self, mont):
        """Model class of an ambient monomial, as a {model key: Fraction} dict."""
        cls = self._mont_class_cache.get(mont)
        if cls is not None:
            return cls
        if not any(mont):
            cls = self._model.one_terms()
        else:
            i = max(j for j, e in enumerate(mont) if e)
            prev = list(mont)
            prev[i] -= 1
            cls = self._model_images[i](self._mont_class(tuple(prev)))
        self._mont_class_cache[mont] = cls
        return cls

    def _build_model_basis(self, d):
        target = self._model.dims(d)
        monts = sorted(_enumerate_monomials(self._degrees, self._parities, d),
                       key=order_key)
        if len(monts) > self.monomial_cap:
            raise CapExceededError(
                f"per-degree monomial count {len(monts)} exceeds cap {self.monomial_cap}")
        mpos = self._model.basis_positions(d)
        rref = SparseRREF()
        std, vecs = [], []
        for m in monts:
            if len(std) == target:
                break
            cls = self._mont_class(m)
            row = {mpos[mm]: c for mm, c in cls.items()}
            if not row:
                continue
            if rref.add(dict(row)) is not None:
                std.append(m)
                vecs.append(row)
        if len(std) != target:
            raise InconsistentPresentationError(
                f"model rank deficit in degree {d}: found {len(std)}, expected {target}")
        self._basis[d] = std
        # invert the (std -> model basis) matrix for coordinate conversion
        n = target
        cols = [[row.get(i, Fraction(0)) for i in range(n)] for row in vecs]
        inv = []
        for i in range(n):
            unit = [Fraction(1) if j == i else Fraction(0) for j in range(n)]
            sol = solve_dense(cols, unit)
            if sol is None:
                raise InconsistentPresentationError("singular model basis matrix")
            inv.append(sol)
        self._std_convert[d] = inv

    def _model_coords_to_std(self, cls, d):
        self.basis(d)
        inv = self._std_convert[d]
        mpos = self._model.basis_positions(d)
        vec = [Fraction(0)] * len(mpos)
        for m, c in cls.items():
            vec[mpos[m]] = c
        out = {}
        for j, m in enumerate(self.basis(d)):
            c = sum(inv[i][j] * vec[i] for i in range(len(vec)))
            if c:
                out[m] = c
        return out

    def _model_normal_form(self, mont, d):
        cls = self._mont_class(mont)
        if not cls:
            return {}
        return self._model_coords_to_std(cls, d)

    def _to_model(self, elem):
        out = {}
        for m, c in elem.terms.items():
            for k, v in self._mont_class(m).items():
                nv = out.get(k, 0) + c * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def _model_mul(self, a, b):
        am = self._to_model(a)
        prod = {}
        for m2, c2 in b.terms.items():
            x = am
            for i, e in enumerate(m2):
                for _ in range(e):
                    x = self._model_images[i](x)
            for k, v in x.items():
                nv = prod.get(k, 0) + c2 * v
                if nv:
                    prod[k] = nv
                else:
                    prod.pop(k, None)
        by_degree = {}
        for k, c in prod.items():
            by_degree.setdefault(self._model.term_degree(k), {})[k] = c
        out = {}
        for d, cls in sorted(by_degree.items()):
            if d > self.top_degree:
                continue
            for sm, sc in self._model_coords_to_std(cls, d).items():
                nv = out.get(sm, 0) + sc
                if nv:
                    out[sm] = nv
                else:
                    out.pop(sm, None)
        return Element(self, out)


# ------------------------------------------------------------- constructors


def exterior_algebra(generator_degrees, monomial_cap=DEFAULT_MONOMIAL_CAP,
                     names=None):
    """Exterior algebra on odd-degree generators (named e<degree> by default).

    >>> A = exterior_algebra([3, 5, 7])
    >>> A.total_dimension, A.top_degree
    (8, 15)
    """
    degs = list(generator_degrees)
    if not degs:
        raise InvalidPresentationError("exterior algebra needs at least one generator")
    if any(d <= 0 or d % 2 == 0 for d in degs):
        raise InvalidPresentationError(f"exterior generator degrees must be odd and positive: {degs}")
    if any(b <= a for a, b in zip(degs, degs[1:])):
        raise InvalidPresentationError(f"generator degrees must be strictly increasing: {degs}")
    if names is None:
        names = [f"e{d}" for d in degs]
    gens = [Generator(nm, d) for nm, d in zip(names, degs)]
    top = sum(degs)
    counts = _count_monomials(degs, [1] * len(degs), top)
    if max(counts) > monomial_cap:
        raise CapExceededError(
            f"per-degree monomial count {max(counts)} exceeds cap {monomial_cap}")
    alg = GradedAlgebra("exterior", gens, (), top, monomial_cap)
    for d, c in enumerate(counts):
        alg._dims[d] = c
    return alg


def _normalize_relations(gens, relations):
    out = []
    k = len(gens)
    for rel in relations:
        poly = {}
        rdeg = None
        for mont, c in rel.items():
            c = Fraction(c)
            if not c:
                continue
            if len(mont) != k:
                raise InvalidPresentationError("relation exponent tuple length mismatch")
            d = sum(g.degree * e for g, e in zip(gens, mont))
            if rdeg is None:
                rdeg = d
            elif d != rdeg:
                raise InvalidPresentationError("relations must be homogeneous")
            poly[mont] = c
        if not poly:
            continue
        if rdeg == 0:
            raise InvalidPresentationError("degree-0 relation makes the quotient trivial")
        out.append((rdeg, poly))
    return tuple(out)


def polynomial_quotient_algebra(generators, relations, expected_top_degree,
                                monomial_cap=DEFAULT_MONOMIAL_CAP):
    """Quotient of a polynomial ring on even generators by homogeneous relations.

    ``generators`` is a list of (name, degree) pairs; ``relations`` a list of
    {exponent tuple: coefficient} dicts over those generators.  The caller
    supplies the expected top degree (finite-dimensionality is a theorem
    about the presentation, not a syntactic property); degrees above it are
    verified to vanish.

    >>> A = polynomial_quotient_algebra(
    ...     [("sigma1", 2), ("sigma2", 4)],
    ...     [{(2, 0): 1, (0, 1): -2}, {(0, 2): 1}], 6)
    >>> [A.dims(d) for d in (0, 2, 4, 6)]
    [1, 1, 1, 1]
    """
    gens = [g if isinstance(g, Generator) else Generator(*g) for g in generators]
    if not gens:
        raise InvalidPresentationError("quotient algebra needs at least one generator")
    if any(g.degree <= 0 or g.degree % 2 for g in gens):
        raise InvalidPresentationError("quotient generators must have positive even degree")
    rels = _normalize_relations(gens, relations)
    if expected_top_degree < 0:
        raise InvalidPresentationError("expected top degree must be nonnegative")
    alg = GradedAlgebra("quotient", gens, rels, expected_top_degree, monomial_cap)
    alg._build_quotient_tables()
    return alg


def tensor_product(a, b, monomial_cap=None):
    """Graded tensor product; multiplication uses the Koszul sign rule.

    Bases are pairwise products of the factor bases.  Colliding generator
    names are disambiguated with @1 / @2 suffixes.
    """
    cap = monomial_cap or min(a.monomial_cap, b.monomial_cap)
    names_a = [g.name for g in a.generators]
    names_b = [g.name for g in b.generators]
    if set(names_a) & set(names_b):
        names_a = [f"{n}@1" for n in names_a]
        names_b = [f"{n}@2" for n in names_b]
    gens = [Generator(n, g.degree) for n, g in zip(names_a, a.generators)]
    gens += [Generator(n, g.degree) for n, g in zip(names_b, b.generators)]
    ka, kb = len(a.generators), len(b.generators)
    rels = [(d, {m + (0,) * kb: c for m, c in poly.items()}) for d, poly in a.relations]
    rels += [(d, {(0,) * ka + m: c for m, c in poly.items()}) for d, poly in b.relations]
    top = a.top_degree + b.top_degree
    alg = GradedAlgebra("tensor", gens, tuple(rels), top, cap)
    alg._factors = (a, b)
    alg._split = ka
    for d in range(top + 1):
        c = sum(a.dims(da) * b.dims(d - da) for da in range(d + 1))
        if c > cap:
            raise CapExceededError(f"tensor basis count {c} in degree {d} exceeds cap {cap}")
        alg._dims[d] = c
    return alg


# ------------------------------------------------------------------- ops


def multiply(a, b):
    """Normal-form product of two elements of the same algebra."""
    return a * b


def poincare_polynomial(algebra):
    """Betti numbers as a list indexed by degree (coefficient of t^d)."""
    return [algebra.dims(d) for d in range(algebra.top_degree + 1)]


def pairing(a, b):
    """Coefficient of the canonical top monomial in a*b.

    Requires homogeneous arguments of complementary degree; the result is
    the intersection (Poincare duality) pairing in the chosen orientation.
    """
    if a.algebra is not b.algebra:
        raise ValueError("pairing requires elements of the same algebra")
    alg = a.algebra
    da, db = a.homogeneous_degree(), b.homogeneous_degree()
    if da is not None and db is not None and da + db != alg.top_degree:
        raise ValueError(
            f"pairing needs complementary degrees, got {da} + {db} != {alg.top_degree}")
    top = alg.canonical_top_monomial()
    return (a * b).coefficient(top)


def is_divisible(v, g):
    """Witness w with g*w == v, or None when no such element exists."""
    alg = v.algebra
    if isinstance(g, Generator):
        gname = g.name
    else:
        gname = g
    ge = alg.gen(gname)
    gdeg = alg.generator(gname).degree
    if v.is_zero():
        return alg.zero()
    dv = v.homogeneous_degree()
    dw = dv - gdeg
    if dw < 0 or alg.dims(dw) == 0:
        return None
    columns = [alg.coords(ge * alg.basis_element(m), dv) for m in alg.basis(dw)]
    sol = solve_dense(columns, alg.coords(v, dv))
    if sol is None:
        return None
    return alg.element_from_coords(sol, dw)


def ideal_basis_in_degree(ideal_gens, d):
    """Echelonized basis of the degree-d piece of the ideal they generate."""
    if not ideal_gens:
        return []
    alg = ideal_gens[0].algebra
    if any(g.algebra is not alg for g in ideal_gens):
        raise ValueError("ideal generators belong to different algebras")
    if d < 0 or d > alg.top_degree or alg.dims(d) == 0:
        return []
    rref = SparseRREF()
    for gi in ideal_gens:
        if gi.is_zero():
            continue
        dg = gi.homogeneous_degree()
        dm = d - dg
        if dm < 0:
            continue
        for m in alg.basis(dm):
            prod = gi * alg.basis_element(m)
            pos = alg.basis_positions(d)
            row = {pos[mm]: c for mm, c in prod.terms.items()}
            if row:
                rref.add(row)
    basis = alg.basis(d)
    out = []
    for p in sorted(rref.pivot_rows):
        row = rref.pivot_rows[p]
        out.append(Element(alg, {basis[c]: v for c, v in row.items()}))
    return out


def pairs_nontrivially_with_ideal(v, ideal_gens):
    """A witness u in the ideal with <v, u> nonzero, or None.

    Existence of u says exactly that v is not orthogonal to the ideal, i.e.
    v survives the map whose kernel is the ideal's orthogonal complement.
    """
    alg = v.algebra
    if v.is_zero():
        return None
    du = alg.top_degree - v.homogeneous_degree()
    for u in ideal_basis_in_degree(ideal_gens, du):
        if pairing(v, u):
            return u
    return None
