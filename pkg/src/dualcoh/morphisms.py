"""Degree-preserving ring homomorphisms and dual fundamental classes.

A morphism is stored by its images on generators and extended
multiplicatively through normal forms.  Construction eagerly verifies that
every defining relation of the source maps to zero; a silent
non-homomorphism would corrupt every verdict computed downstream.

The dual (Gysin) class of a morphism f: A -> B between oriented duality
algebras is the unique xi in A of degree top(A) - top(B) such that

    <xi, w>_A = top-coefficient_B(f(w))   for every w of degree top(B),

where both sides use the canonical-top orientation convention.  It is the
compact-dual avatar of integration over the subspace.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, pairing
from .errors import InconsistentPresentationError, InvalidPresentationError
from .linalg import SparseRREF, solve_dense


@dataclass
class Morphism:
    """A ring homomorphism given on generators.

    Use :func:`build_morphism` to construct a validated instance; direct
    instantiation skips the relation check.
    """

    source: object
    target: object
    generator_images: dict  # generator name -> Element of target

    def __post_init__(self):
        self._image_cache = {}

    def image_of_monomial(self, mont):
        cached = self._image_cache.get(mont)
        if cached is not None:
            return cached
        if not any(mont):
            img = self.target.one()
        else:
            i = max(j for j, e in enumerate(mont) if e)
            prev = list(mont)
            prev[i] -= 1
            img = (self.image_of_monomial(tuple(prev))
                   * self.generator_images[self.source.generators[i].name])
        self._image_cache[mont] = img
        return img

    def __call__(self, v):
        return apply(self, v)


def build_morphism(source, target, generator_images):
    """Validated morphism: degree-checked images, all relations -> 0.

    ``generator_images`` maps source generator names to target elements
    (missing names are sent to zero).
    """
    images = {}
    for g in source.generators:
        img = generator_images.get(g.name)
        if img is None:
            images[g.name] = target.zero()
            continue
        if not isinstance(img, Element) or img.algebra is not target:
            raise InvalidPresentationError(
                f"image of {g.name} is not an element of the target algebra")
        if not img.is_zero() and img.homogeneous_degree() != g.degree:
            raise InvalidPresentationError(
                f"image of {g.name} has degree {img.homogeneous_degree()}, "
                f"expected {g.degree}")
        images[g.name] = img
    extra = set(generator_images) - {g.name for g in source.generators}
    if extra:
        raise InvalidPresentationError(f"images given for unknown generators: {sorted(extra)}")
    m = Morphism(source, target, images)
    for rdeg, rpoly in source.relations:
        img = target.zero()
        for mont, c in rpoly.items():
            img = img + c * m.image_of_monomial(mont)
        if not img.is_zero():
            pretty = " + ".join(
                f"{c}*{source.monomial_string(mm)}" for mm, c in sorted(rpoly.items()))
            raise InvalidPresentationError(
                f"images violate the degree-{rdeg} relation ({pretty}): "
                f"maps to {img!r}")
    return m


def apply(morphism, v):
    """Image of v under the multiplicative extension, in target normal form."""
    if v.algebra is not morphism.source:
        raise ValueError("element does not belong to the morphism's source")
    out = morphism.target.zero()
    for mont, c in v.terms.items():
        out = out + c * morphism.image_of_monomial(mont)
    return out


def compose(outer, inner):
    """outer after inner; defined when inner.target is outer.source."""
    if inner.target is not outer.source:
        raise ValueError("morphisms are not composable")
    images = {name: apply(outer, img) for name, img in inner.generator_images.items()}
    return Morphism(inner.source, outer.target, images)


@dataclass
class FundamentalClass:
    """The dual class of a morphism, in the canonical-top normalization.

    The source and target orientations are the canonical top monomials with
    coefficient +1; rescaling either rescales the class, and all boolean
    verdicts downstream are invariant under such rescaling.
    """

    element: Element
    normalization: str = "canonical-top"


def gysin_fundamental_class(morphism):
    """Solve the defining pairing identity for the dual class, exactly.

    The linear system is square by Poincare duality and solvable iff the
    morphism and presentations are consistent; failure raises
    InconsistentPresentationError.
    """
    src, tgt = morphism.source, morphism.target
    delta = src.top_degree - tgt.top_degree
    if delta < 0:
        raise InvalidPresentationError(
            "source top degree must be at least the target top degree")
    unknowns = src.basis(delta)
    equations = src.basis(tgt.top_degree)
    tgt_top = tgt.canonical_top_monomial()
    columns = []
    rank = SparseRREF()
    for u in unknowns:
        ue = src.basis_element(u)
        col = [pairing(ue, src.basis_element(w)) for w in equations]
        columns.append(col)
        rank.add({i: v for i, v in enumerate(col) if v})
    if rank.rank != len(unknowns):
        raise InconsistentPresentationError(
            f"pairing between degrees {delta} and {tgt.top_degree} is degenerate")
    rhs = [apply(morphism, src.basis_element(w)).coefficient(tgt_top)
           for w in equations]
    sol = solve_dense(columns, rhs)
    if sol is None:
        raise InconsistentPresentationError(
            "dual-class system is infeasible; morphism or presentation is wrong")
    xi = src.element_from_coords(sol, delta)
    return FundamentalClass(element=xi)


def random_homogeneous(algebra, rng, max_coeff=3):
    """Seeded random homogeneous element (possibly zero)."""
    degs = [d for d in range(algebra.top_degree + 1) if algebra.dims(d)]
    d = degs[rng.randrange(len(degs))]
    terms = {}
    for m in algebra.basis(d):
        c = rng.randint(-max_coeff, max_coeff)
        if c:
            terms[m] = Fraction(c)
    return Element(algebra, terms)


def verify_multiplicativity(morphism, sample_count=100, seed=0):
    """Check f(a*b) == f(a)*f(b) on seeded random homogeneous pairs."""
    rng = random.Random(seed)
    for _ in range(sample_count):
        a = random_homogeneous(morphism.source, rng)
        b = random_homogeneous(morphism.source, rng)
        if apply(morphism, a * b) != apply(morphism, a) * apply(morphism, b):
            return False
    return True
