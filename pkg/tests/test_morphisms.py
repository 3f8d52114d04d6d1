"""Morphism validation, evaluation, and the dual-class construction."""

import random

import pytest

from dualcoh import (
    InvalidPresentationError,
    build_morphism,
    compose,
    apply,
    gysin_fundamental_class,
    pairing,
    tensor_product,
    verify_multiplicativity,
)
from dualcoh.morphisms import Morphism, random_homogeneous
from dualcoh.rings import (
    grassmannian_algebra,
    lagrangian_algebra,
    sp_group_algebra,
    su_algebra,
    su_so_algebra,
)


def sl_imag_sp_restriction(n):
    G, H = su_algebra(2 * n), sp_group_algebra(n)
    return build_morphism(G, H, {f"e{d}": H.gen(f"e{d}") for d in range(3, 4 * n, 4)})


def siegel_two_part(a, b):
    g = a + b
    G = lagrangian_algebra(g)
    A = lagrangian_algebra(a, prefix="alpha")
    B = lagrangian_algebra(b, prefix="beta")
    H = tensor_product(A, B)
    images = {}
    for k in range(1, g + 1):
        img = H.zero()
        for r in range(0, k + 1):
            if r > a or k - r > b:
                continue
            term = H.one()
            if r:
                term = term * H.gen(f"alpha{r}")
            if k - r:
                term = term * H.gen(f"beta{k - r}")
            img = img + term
        images[f"sigma{k}"] = img
    return build_morphism(G, H, images)


class TestBuild:
    def test_su_restriction_valid(self):
        G, H = su_algebra(4), su_algebra(2)
        m = build_morphism(G, H, {"e3": H.gen("e3")})
        assert apply(m, G.gen("e5")).is_zero()
        assert apply(m, G.gen("e3")) == H.gen("e3")

    def test_sp_restriction_valid(self):
        m = sl_imag_sp_restriction(2)
        G, H = m.source, m.target
        assert apply(m, G.gen("e5")).is_zero()
        assert apply(m, G.gen("e3") * G.gen("e7")) == H.gen("e3") * H.gen("e7")

    def test_gr_to_lagrangian_valid(self):
        Gr, L = grassmannian_algebra(2, 2), lagrangian_algebra(2)
        images = {"sigma1": L.gen("sigma1"), "sigma2": L.gen("sigma2"),
                  "tau1": -L.gen("sigma1"), "tau2": L.gen("sigma2")}
        m = build_morphism(Gr, L, images)
        assert apply(m, Gr.gen("tau1")) == -L.gen("sigma1")

    def test_degree_mismatch_rejected(self):
        G, H = su_algebra(4), su_algebra(2)
        with pytest.raises(InvalidPresentationError):
            build_morphism(G, H, {"e5": H.gen("e3")})

    def test_unknown_generator_rejected(self):
        G, H = su_algebra(3), su_algebra(2)
        with pytest.raises(InvalidPresentationError):
            build_morphism(G, H, {"e9": H.gen("e3")})

    def test_relation_violation_named(self):
        L = lagrangian_algebra(2)
        with pytest.raises(InvalidPresentationError) as err:
            build_morphism(L, L, {"sigma1": L.gen("sigma1")})  # sigma2 -> 0
        assert "relation" in str(err.value)

    def test_wrong_owner_rejected(self):
        G, H = su_algebra(4), su_algebra(2)
        with pytest.raises(InvalidPresentationError):
            build_morphism(G, H, {"e3": G.gen("e3")})


class TestApply:
    def test_identity_morphism(self):
        G = su_algebra(4)
        ident = build_morphism(G, G, {g.name: G.gen(g.name) for g in G.generators})
        rng = random.Random(3)
        for _ in range(20):
            v = random_homogeneous(G, rng)
            assert apply(ident, v) == v

    def test_siegel_generator_images(self):
        m = siegel_two_part(1, 1)
        G, H = m.source, m.target
        assert apply(m, G.gen("sigma1")) == H.gen("alpha1") + H.gen("beta1")
        assert apply(m, G.gen("sigma2")) == H.gen("alpha1") * H.gen("beta1")

    def test_owner_check(self):
        m = sl_imag_sp_restriction(2)
        with pytest.raises(ValueError):
            apply(m, m.target.gen("e3"))


class TestGysin:
    def test_sl_imag_sp_n2(self):
        fc = gysin_fundamental_class(sl_imag_sp_restriction(2)).element
        G = sl_imag_sp_restriction(2).source
        assert fc == -G.gen("e5")

    def test_sl_odd_real_n2(self):
        G, H = su_algebra(5), su_so_algebra(2)
        m = build_morphism(G, H, {"e5": H.gen("e5"), "e9": H.gen("e9")})
        fc = gysin_fundamental_class(m).element
        assert fc == -(G.gen("e3") * G.gen("e7"))

    def test_siegel_11(self):
        m = siegel_two_part(1, 1)
        fc = gysin_fundamental_class(m).element
        assert fc == m.source.gen("sigma1")
        # theta wedge: sigma2 * sigma1 spans the top degree
        top = m.source.canonical_top_monomial()
        assert (m.source.gen("sigma2") * fc).coefficient(top) == 1

    def test_equal_rank_gives_unit(self):
        Gr, L = grassmannian_algebra(1, 1), lagrangian_algebra(1)
        m = build_morphism(Gr, L, {"sigma1": L.gen("sigma1"),
                                   "tau1": -L.gen("sigma1")})
        assert gysin_fundamental_class(m).element == Gr.one()

    def test_defining_identity_full_basis(self):
        m = siegel_two_part(2, 1)
        xi = gysin_fundamental_class(m).element
        src, tgt = m.source, m.target
        top_t = tgt.canonical_top_monomial()
        for w in src.basis(tgt.top_degree):
            we = src.basis_element(w)
            assert pairing(xi, we) == apply(m, we).coefficient(top_t)

    def test_scalar_covariance(self):
        # scaling the right-hand side of the defining system scales the class
        from fractions import Fraction
        from dualcoh.linalg import solve_dense
        m = sl_imag_sp_restriction(2)
        src, tgt = m.source, m.target
        delta = src.top_degree - tgt.top_degree
        unknowns, equations = src.basis(delta), src.basis(tgt.top_degree)
        cols = [[pairing(src.basis_element(u), src.basis_element(w))
                 for w in equations] for u in unknowns]
        lam = Fraction(7, 3)
        top_t = tgt.canonical_top_monomial()
        rhs = [lam * apply(m, src.basis_element(w)).coefficient(top_t)
               for w in equations]
        sol = solve_dense(cols, rhs)
        scaled = src.element_from_coords(sol, delta)
        assert scaled == lam * gysin_fundamental_class(m).element


class TestMultiplicativity:
    def test_valid_morphism_passes(self):
        assert verify_multiplicativity(siegel_two_part(2, 1), 60, seed=5)

    def test_corrupted_table_fails(self):
        L = lagrangian_algebra(2)
        bad = Morphism(L, L, {"sigma1": L.gen("sigma1"), "sigma2": L.zero()})
        assert not verify_multiplicativity(bad, 100, seed=1)

    def test_zero_on_positive_degrees_is_ring_map(self):
        G = su_algebra(4)
        aug = build_morphism(G, G, {})
        assert verify_multiplicativity(aug, 40, seed=9)


class TestCompose:
    def test_functoriality_on_randoms(self):
        G4, G3, G2 = su_algebra(4), su_algebra(3), su_algebra(2)
        m1 = build_morphism(G4, G3, {"e3": G3.gen("e3"), "e5": G3.gen("e5")})
        m2 = build_morphism(G3, G2, {"e3": G2.gen("e3")})
        chain = compose(m2, m1)
        rng = random.Random(13)
        for _ in range(25):
            v = random_homogeneous(G4, rng)
            assert apply(chain, v) == apply(m2, apply(m1, v))

    def test_not_composable(self):
        G4, G2 = su_algebra(4), su_algebra(2)
        m = build_morphism(G4, G2, {"e3": G2.gen("e3")})
        with pytest.raises(ValueError):
            compose(m, m)
