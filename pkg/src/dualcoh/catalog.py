"""The (G, H) family catalog: rings, restrictions, and decision procedures.

Each constructor packages the compact-dual rings of one embedding family,
the restriction morphism between them, and the ideal whose orthogonal
complement (under the intersection pairing) is the kernel of the
invariant-forms map into locally symmetric cohomology (Franke's criterion).
``decide_nonvanishing`` computes the dual fundamental class and searches
the ideal for a pairing witness; ``decide_ghost`` assembles the
boundary-restriction certificate for the special-linear families.

The kernel ideals are catalog data: they summarize Levi-restriction and
Chern-class vanishing arguments that are not re-derived here.  Where an
equivalent algebraic statement exists (the substitution-kernel description
for the Lagrangian rings) it is cross-checked in the check suites.
"""

from dataclasses import dataclass, field

from .algebra import (
    DEFAULT_MONOMIAL_CAP,
    Element,
    is_divisible,
    pairs_nontrivially_with_ideal,
    poincare_polynomial,
    tensor_product,
)
from .errors import InvalidPresentationError
from .morphisms import (
    Morphism,
    apply,
    build_morphism,
    gysin_fundamental_class,
)
from .rings import (
    grassmannian_algebra,
    lagrangian_algebra,
    sp_group_algebra,
    su_algebra,
    su_so_algebra,
)

FAMILY_IDS = ("sl-imag-sp", "sl-odd-real", "siegel-product", "unitary-product",
              "sp-in-ugg")

# Greek prefixes for the factors of product duals, in declaration order.
_FACTOR_PREFIXES = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta")


@dataclass
class FamilyInstance:
    """One embedding H -> G from the catalog, ready for the decision procedures."""

    family_id: str
    parameters: dict
    dual_G: object
    dual_H: object
    restriction: Morphism
    franke_ideal: list          # elements of dual_G
    compact_support_ideal: list | None = None
    levi_restriction: Morphism | None = None
    levi_franke_ideal: list | None = None
    notes: dict = field(default_factory=dict)


@dataclass
class GhostCertificate:
    """Boundary-behaviour certificate for the special-linear families.

    ``not_compactly_supported``: the dual class is not divisible by the top
    exterior generator, so it is not in the image of compactly supported
    cohomology.  ``levi_restriction_in_levi_kernel``: its restriction to
    the principal Levi's dual is divisible by that ring's top generator,
    i.e. dies under the Levi's invariant-forms map.  ``is_ghost`` is their
    conjunction with non-vanishing; both booleans re-verify independently
    through the core divisibility primitive.
    """

    not_compactly_supported: bool
    levi_restriction_in_levi_kernel: bool
    is_ghost: bool
    discrepancy_note: str = ""


@dataclass
class Verdict:
    fundamental_class: Element
    nonvanishing: bool
    nonvanishing_witness: Element | None
    ghost: GhostCertificate | None
    betti_G: list
    betti_H: list


# ------------------------------------------------------------ SL families


def family_sl_imag_sp(n, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """Symplectic subgroup of a special linear group over an imaginary
    quadratic field: duals SU(2n) and compact Sp(2n).

    Restriction keeps exactly the generators of degree 3 mod 4.  The kernel
    ideal and the compact-support ideal are both generated by the top
    generator e_{4n-1}; the principal-Levi data (an SU(2n-1) dual) feeds
    the ghost certificate.  n = 1 is accepted but degenerate (H = G, no
    Levi inside SU(1)), so it carries no ghost data.
    """
    if n < 1:
        raise InvalidPresentationError(f"family sl-imag-sp needs n >= 1, got {n}")
    G = su_algebra(2 * n, monomial_cap)
    H = sp_group_algebra(n, monomial_cap)
    images = {f"e{d}": H.gen(f"e{d}") for d in range(3, 4 * n, 4)}
    restriction = build_morphism(G, H, images)
    top_gen = G.gen(f"e{4 * n - 1}")
    inst = FamilyInstance(
        family_id="sl-imag-sp",
        parameters={"n": n},
        dual_G=G,
        dual_H=H,
        restriction=restriction,
        franke_ideal=[top_gen],
        compact_support_ideal=[top_gen],
    )
    if n >= 2:
        levi = su_algebra(2 * n - 1, monomial_cap)
        levi_images = {f"e{d}": levi.gen(f"e{d}") for d in range(3, 4 * n - 2, 2)}
        inst.levi_restriction = build_morphism(G, levi, levi_images)
        inst.levi_franke_ideal = [levi.gen(f"e{4 * n - 3}")]
        inst.notes["discrepancy"] = (
            f"compact-support divisibility is read against the top generator "
            f"e{4 * n - 1}; an e{4 * n - 3} reading would be vacuous, since the "
            f"dual class e5^...^e{4 * n - 3} contains e{4 * n - 3} as a factor.")
    return inst


def family_sl_odd_real(n, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """Odd special linear group over a totally real field inside its
    restriction of scalars: duals SU(2n+1) and SU(2n+1)/SO(2n+1).

    The target ring lives on generators of degree 1 mod 4, so the
    restriction keeps exactly those generators (this is also forced by the
    closed form of the dual class, e3^e7^...^e_{4n-1}).
    """
    if n < 1:
        raise InvalidPresentationError(f"family sl-odd-real needs n >= 1, got {n}")
    G = su_algebra(2 * n + 1, monomial_cap)
    H = su_so_algebra(n, monomial_cap)
    images = {f"e{d}": H.gen(f"e{d}") for d in range(5, 4 * n + 2, 4)}
    restriction = build_morphism(G, H, images)
    top_gen = G.gen(f"e{4 * n + 1}")
    levi = su_algebra(2 * n, monomial_cap)
    levi_images = {f"e{d}": levi.gen(f"e{d}") for d in range(3, 4 * n, 2)}
    inst = FamilyInstance(
        family_id="sl-odd-real",
        parameters={"n": n},
        dual_G=G,
        dual_H=H,
        restriction=restriction,
        franke_ideal=[top_gen],
        compact_support_ideal=[top_gen],
        levi_restriction=build_morphism(G, levi, levi_images),
        levi_franke_ideal=[levi.gen(f"e{4 * n - 1}")],
    )
    inst.notes["discrepancy"] = (
        f"compact-support divisibility is read against the top generator "
        f"e{4 * n + 1}; an e{4 * n - 1} reading would be vacuous, since the "
        f"dual class e3^e7^...^e{4 * n - 1} contains e{4 * n - 1} as a factor.")
    return inst


# -------------------------------------------------------- Siegel products


def _validate_parts(parts, total, what):
    parts = list(parts)
    if not parts or any(int(a) != a or a < 1 for a in parts):
        raise InvalidPresentationError(f"{what}: parts must be positive integers, got {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise InvalidPresentationError(f"{what}: parts must be nonincreasing, got {parts}")
    if sum(parts) != total:
        raise InvalidPresentationError(
            f"{what}: parts {parts} do not sum to {total}")
    return parts


def family_siegel(g, parts, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """Product of symplectic groups inside Sp(2g): Lagrangian-Grassmannian duals.

    ``parts`` is a nonincreasing list of positive integers summing to g.
    The restriction sends sigma_k to the degree-k part of the product of
    the factors' total classes.  Two-part instances carry the explicit
    pairing partner theta (see :func:`siegel_theta`); longer partitions are
    decided by the general pairing criterion and flagged exploratory.
    """
    if g < 1:
        raise InvalidPresentationError(f"family siegel needs g >= 1, got {g}")
    parts = _validate_parts(parts, g, "siegel partition")
    G = lagrangian_algebra(g, monomial_cap)
    if len(parts) == 1:
        H = lagrangian_algebra(g, monomial_cap, prefix=_FACTOR_PREFIXES[0])
    else:
        factors = [lagrangian_algebra(gi, monomial_cap, prefix=_FACTOR_PREFIXES[i])
                   for i, gi in enumerate(parts)]
        H = factors[0]
        for f in factors[1:]:
            H = tensor_product(H, f, monomial_cap)
    images = {}
    for k in range(1, g + 1):
        images[f"sigma{k}"] = _composition_image(H, parts, _FACTOR_PREFIXES, k)
    restriction = build_morphism(G, H, images)
    inst = FamilyInstance(
        family_id="siegel-product",
        parameters={"g": g, "parts": list(parts)},
        dual_G=G,
        dual_H=H,
        restriction=restriction,
        franke_ideal=[G.gen(f"sigma{g}")],
    )
    if len(parts) > 2:
        inst.notes["exploratory"] = (
            "partitions with more than two parts are decided by the general "
            "pairing criterion; no closed-form pairing partner is attached.")
    return inst


def _composition_image(H, parts, prefixes, k):
    """Sum over compositions k = sum k_i of products of factor classes."""
    total = H.zero()
    bounds = list(parts)

    def rec(i, rem, acc):
        nonlocal total
        if i == len(bounds):
            if rem == 0:
                total = total + acc
            return
        for ki in range(0, min(bounds[i], rem) + 1):
            if ki == 0:
                rec(i + 1, rem, acc)
            else:
                rec(i + 1, rem - ki, acc * H.gen(f"{prefixes[i]}{ki}"))

    rec(0, k, H.one())
    return total


def siegel_theta(inst):
    """The explicit pairing partner for a two-part Siegel instance.

    For parts [a, b] it is (sigma_g sigma_{g-2} ... sigma_{g-2b}) *
    (sigma_1 ... sigma_{a-b-1}); wedging it with the dual class yields a
    nonzero multiple of sigma_1 ... sigma_g.
    """
    if inst.family_id != "siegel-product" or len(inst.parameters["parts"]) != 2:
        raise InvalidPresentationError("theta is defined for two-part Siegel instances")
    a, b = inst.parameters["parts"]
    g = inst.parameters["g"]
    G = inst.dual_G
    theta = G.one()
    for k in range(g, g - 2 * b - 1, -2):
        if k >= 1:
            theta = theta * G.gen(f"sigma{k}")
    for k in range(1, a - b):
        theta = theta * G.gen(f"sigma{k}")
    return theta


# ------------------------------------------------------- unitary families


def _validate_unitary_parts(p, q, parts):
    parts = [(int(pi), int(qi)) for pi, qi in parts]
    if not parts or any(pi < 1 or qi < 1 for pi, qi in parts):
        raise InvalidPresentationError(
            f"unitary parts must be pairs of positive integers, got {parts}")
    if sum(pi for pi, _ in parts) != p:
        raise InvalidPresentationError(
            f"unitary parts {parts}: sum of p_i must equal p = {p}")
    if sum(qi for _, qi in parts) > q:
        raise InvalidPresentationError(
            f"unitary parts {parts}: sum of q_i must not exceed q = {q}")
    return parts


def family_unitary(p, q, parts, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """Product of lower unitary groups inside U(p,q): Grassmannian duals.

    ``parts`` is a list of (p_i, q_i) with sum p_i = p and sum q_i <= q.
    Generator images are forced by the presentation: sigma_k restricts to
    the degree-k part of the product of the factors' sigma-series, and
    tau_m to the degree-m part of the product of their tau-series (the
    power-series inverse of the sigma image).  When sum q_i = q this makes
    the restriction of tau_q the product of the factors' top tau classes;
    when sum q_i < q that shortcut identity fails (tau_q restricts to 0 --
    a rank q - sum q_i summand contributes trivially) and the general
    pairing criterion does the deciding.  ``notes['tau_shortcut_holds']``
    records which case occurred.
    """
    if not (1 <= p <= q):
        raise InvalidPresentationError(f"family unitary needs q >= p >= 1, got ({p}, {q})")
    parts = _validate_unitary_parts(p, q, parts)
    G = grassmannian_algebra(p, q, monomial_cap)
    if len(parts) == 1:
        p1, q1 = parts[0]
        H = grassmannian_algebra(p1, q1, monomial_cap)
    else:
        factors = [grassmannian_algebra(pi, qi, monomial_cap, suffix=f"@{i + 1}")
                   for i, (pi, qi) in enumerate(parts)]
        H = factors[0]
        for f in factors[1:]:
            H = tensor_product(H, f, monomial_cap)
    suffixes = [""] if len(parts) == 1 else [f"@{i + 1}" for i in range(len(parts))]
    images = {}
    for k in range(1, p + 1):
        images[f"sigma{k}"] = _bi_composition_image(
            H, [pi for pi, _ in parts], "sigma", suffixes, k)
    for m in range(1, q + 1):
        images[f"tau{m}"] = _bi_composition_image(
            H, [qi for _, qi in parts], "tau", suffixes, m)
    restriction = build_morphism(G, H, images)
    inst = FamilyInstance(
        family_id="unitary-product",
        parameters={"p": p, "q": q, "parts": [list(t) for t in parts]},
        dual_G=G,
        dual_H=H,
        restriction=restriction,
        franke_ideal=[G.gen(f"sigma{p}"), G.gen(f"tau{q}")],
    )
    sum_qi = sum(qi for _, qi in parts)
    xi_product = H.one()
    for i, (pi, qi) in enumerate(parts):
        xi_product = xi_product * H.gen(f"tau{qi}{suffixes[i]}")
    inst.notes["tau_shortcut_holds"] = bool(
        sum_qi == q and apply(restriction, G.gen(f"tau{q}")) == xi_product)
    if sum_qi < q:
        inst.notes["q_deficit"] = (
            f"sum q_i = {sum_qi} < q = {q}: tau_{q} restricts to zero and the "
            f"product-of-top-tau shortcut does not apply; decided by the "
            f"general pairing criterion.")
    return inst


def _bi_composition_image(H, bounds, stem, suffixes, k):
    total = H.zero()

    def rec(i, rem, acc):
        nonlocal total
        if i == len(bounds):
            if rem == 0:
                total = total + acc
            return
        for ki in range(0, min(bounds[i], rem) + 1):
            if ki == 0:
                rec(i + 1, rem, acc)
            else:
                rec(i + 1, rem - ki, acc * H.gen(f"{stem}{ki}{suffixes[i]}"))

    rec(0, k, H.one())
    return total


def family_sp_in_ugg(g, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """Symplectic group inside U(g,g): Gr(g,2g) restricting onto the
    Lagrangian-Grassmannian ring via sigma_k -> sigma_k, tau_k -> (-1)^k sigma_k
    (the two Chern root families collapse to one, with a sign).
    """
    if g < 1:
        raise InvalidPresentationError(f"family sp-in-ugg needs g >= 1, got {g}")
    G = grassmannian_algebra(g, g, monomial_cap)
    H = lagrangian_algebra(g, monomial_cap)
    images = {}
    for k in range(1, g + 1):
        sk = H.gen(f"sigma{k}")
        images[f"sigma{k}"] = sk
        images[f"tau{k}"] = (-1) ** k * sk
    restriction = build_morphism(G, H, images)
    return FamilyInstance(
        family_id="sp-in-ugg",
        parameters={"g": g},
        dual_G=G,
        dual_H=H,
        restriction=restriction,
        franke_ideal=[G.gen(f"sigma{g}"), G.gen(f"tau{g}")],
    )


_FAMILY_BUILDERS = {
    "sl-imag-sp": lambda params, cap: family_sl_imag_sp(params["n"], cap),
    "sl-odd-real": lambda params, cap: family_sl_odd_real(params["n"], cap),
    "siegel-product": lambda params, cap: family_siegel(params["g"], params["parts"], cap),
    "unitary-product": lambda params, cap: family_unitary(
        params["p"], params["q"], params["parts"], cap),
    "sp-in-ugg": lambda params, cap: family_sp_in_ugg(params["g"], cap),
}


def build_family(family_id, parameters, monomial_cap=DEFAULT_MONOMIAL_CAP):
    if family_id not in _FAMILY_BUILDERS:
        raise InvalidPresentationError(
            f"unknown family {family_id!r}; known: {', '.join(FAMILY_IDS)}")
    return _FAMILY_BUILDERS[family_id](parameters, monomial_cap)


# ------------------------------------------------------------- decisions


def decide_nonvanishing(inst):
    """Compute the dual class and search the kernel ideal for a pairing witness.

    The class survives the invariant-forms map exactly when it pairs
    nontrivially with the ideal; the returned witness re-verifies through
    the core primitives alone.
    """
    fc = gysin_fundamental_class(inst.restriction)
    witness = pairs_nontrivially_with_ideal(fc.element, inst.franke_ideal)
    return Verdict(
        fundamental_class=fc.element,
        nonvanishing=witness is not None,
        nonvanishing_witness=witness,
        ghost=decide_ghost(inst, fundamental_class=fc.element,
                           nonvanishing=witness is not None),
        betti_G=poincare_polynomial(inst.dual_G),
        betti_H=poincare_polynomial(inst.dual_H),
    )


def decide_ghost(inst, fundamental_class=None, nonvanishing=None):
    """Ghost certificate for families carrying boundary data, else None.

    (a) the dual class is not divisible by the top generator (not in the
    compactly-supported image); (b) its principal-Levi restriction is
    divisible by the Levi ring's top generator (dies under the Levi's
    map); ghost = (a) and (b) and non-vanishing.
    """
    if inst.compact_support_ideal is None or inst.levi_restriction is None:
        return None
    if fundamental_class is None:
        fundamental_class = gysin_fundamental_class(inst.restriction).element
    if nonvanishing is None:
        nonvanishing = pairs_nontrivially_with_ideal(
            fundamental_class, inst.franke_ideal) is not None
    (cs_gen,) = inst.compact_support_ideal
    top_name = next(iter(cs_gen.terms))
    top_gen = inst.dual_G.generators[[i for i, e in enumerate(top_name) if e][0]]
    not_cs = is_divisible(fundamental_class, top_gen) is None
    levi_image = apply(inst.levi_restriction, fundamental_class)
    (levi_gen_elem,) = inst.levi_franke_ideal
    levi_mont = next(iter(levi_gen_elem.terms))
    levi_alg = inst.levi_restriction.target
    levi_gen = levi_alg.generators[[i for i, e in enumerate(levi_mont) if e][0]]
    in_levi_kernel = is_divisible(levi_image, levi_gen) is not None
    return GhostCertificate(
        not_compactly_supported=not_cs,
        levi_restriction_in_levi_kernel=in_levi_kernel,
        is_ghost=bool(not_cs and in_levi_kernel and nonvanishing),
        discrepancy_note=inst.notes.get("discrepancy", ""),
    )


# ------------------------------------------------------- sweep enumeration


def two_part_partitions(g):
    """Nonincreasing two-part partitions [a, b] of g, a >= b >= 1."""
    return [[g - b, b] for b in range(g // 2, 0, -1)]


def unitary_decompositions(p, q, full_q=True):
    """Multiset decompositions of (p, q) into parts (p_i, q_i) >= (1, 1).

    With ``full_q`` the parts' q_i sum to exactly q (the certified regime);
    otherwise any total <= q is allowed.  Parts are listed nonincreasing
    lexicographically and the output order is deterministic.
    """
    out = []

    def rec(rp, rq, prev, acc):
        if rp == 0:
            if rq == 0 or not full_q:
                out.append([list(t) for t in acc])
            return
        for pi in range(min(prev[0], rp), 0, -1):
            qi_top = min(rq, prev[1] if pi == prev[0] else q)
            for qi in range(qi_top, 0, -1):
                acc.append((pi, qi))
                rec(rp - pi, rq - qi, (pi, qi), acc)
                acc.pop()

    rec(p, q, (p, q), [])
    return out
