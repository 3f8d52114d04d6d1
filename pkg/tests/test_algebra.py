"""Core graded-algebra machinery against hand-derived and enumerated oracles."""

import doctest
import random
from fractions import Fraction

import pytest

import dualcoh.algebra
from dualcoh import (
    CapExceededError,
    InconsistentPresentationError,
    InvalidPresentationError,
    exterior_algebra,
    ideal_basis_in_degree,
    is_divisible,
    pairing,
    pairs_nontrivially_with_ideal,
    poincare_polynomial,
    polynomial_quotient_algebra,
    tensor_product,
)
from dualcoh.morphisms import random_homogeneous


def poly_product(factor_degrees):
    """Independent Poincare oracle: expand prod (1 + t^d) over the integers."""
    out = [1]
    for d in factor_degrees:
        new = out + [0] * d
        for i, c in enumerate(out):
            new[i + d] += c
        out = new
    return out


# The worked g=2 Lagrangian presentation: relations sigma1^2 - 2 sigma2 and
# sigma2^2, derived by expanding prod_(i=1,2) (1 - x_i^2) = 1 by hand.
def lagrangian2():
    return polynomial_quotient_algebra(
        [("sigma1", 2), ("sigma2", 4)],
        [{(2, 0): 1, (0, 1): -2}, {(0, 2): 1}], 6)


def projective_line():
    # degree-1 and degree-2 parts of (1 + sigma1)(1 + tau1) = 1
    return polynomial_quotient_algebra(
        [("sigma1", 2), ("tau1", 2)],
        [{(1, 0): 1, (0, 1): 1}, {(1, 1): 1}], 2)


class TestExterior:
    def test_su2(self):
        alg = exterior_algebra([3])
        assert poincare_polynomial(alg) == [1, 0, 0, 1]
        assert alg.total_dimension == 2

    def test_su4_shape(self):
        alg = exterior_algebra([3, 5, 7])
        assert alg.total_dimension == 8
        assert alg.top_degree == 15
        assert poincare_polynomial(alg) == poly_product([3, 5, 7])

    def test_sus_o_top_class(self):
        alg = exterior_algebra([5, 9])
        assert alg.monomial_string(alg.canonical_top_monomial()) == "e5^1*e9^1"
        assert poincare_polynomial(alg) == poly_product([5, 9])

    @pytest.mark.parametrize("bad", [[], [4], [3, 3], [5, 3], [-3]])
    def test_invalid_presentations(self, bad):
        with pytest.raises(InvalidPresentationError):
            exterior_algebra(bad)

    def test_anticommutation(self):
        alg = exterior_algebra([3, 5, 7])
        e3, e5 = alg.gen("e3"), alg.gen("e5")
        assert e3 * e5 == alg.element({(1, 1, 0): 1})
        assert e5 * e3 == alg.element({(1, 1, 0): -1})

    def test_squares_vanish(self):
        alg = exterior_algebra([3, 5, 7])
        for name in ("e3", "e5", "e7"):
            assert (alg.gen(name) * alg.gen(name)).is_zero()


class TestQuotient:
    def test_g2_lagrangian_basis(self):
        alg = lagrangian2()
        assert [alg.monomial_string(m) for d in (0, 2, 4, 6)
                for m in alg.basis(d)] == ["1", "sigma1^1", "sigma2^1",
                                           "sigma1^1*sigma2^1"]
        assert alg.top_degree == 6

    def test_g2_products(self):
        alg = lagrangian2()
        s1, s2 = alg.gen("sigma1"), alg.gen("sigma2")
        assert s1 * s1 == 2 * s2
        assert (s2 * s2).is_zero()

    def test_projective_line(self):
        alg = projective_line()
        assert poincare_polynomial(alg) == [1, 0, 1]
        # tau1 reduces to -sigma1
        assert alg.gen("tau1") == -alg.gen("sigma1")
        s1 = alg.gen("sigma1")
        assert (s1 * s1).is_zero()

    def test_degree_zero_relation_rejected(self):
        with pytest.raises(InvalidPresentationError):
            polynomial_quotient_algebra([("sigma1", 2)], [{(0,): 1}], 2)

    def test_inhomogeneous_relation_rejected(self):
        with pytest.raises(InvalidPresentationError):
            polynomial_quotient_algebra([("sigma1", 2)], [{(1,): 1, (2,): 1}], 2)

    def test_odd_generator_rejected(self):
        with pytest.raises(InvalidPresentationError):
            polynomial_quotient_algebra([("x", 3)], [], 3)

    def test_survivors_above_top_detected(self):
        # Q[sigma1]/(sigma1^3) has classes in degree 4 > claimed top 2
        with pytest.raises(InconsistentPresentationError):
            polynomial_quotient_algebra([("sigma1", 2)], [{(3,): 1}], 2)

    def test_no_relations_is_inconsistent(self):
        with pytest.raises(InconsistentPresentationError):
            polynomial_quotient_algebra([("sigma1", 2)], [], 4)

    def test_cap_enforced(self):
        from dualcoh.rings import lagrangian_relations
        with pytest.raises(CapExceededError):
            polynomial_quotient_algebra(
                [(f"sigma{i}", 2 * i) for i in (1, 2, 3)],
                lagrangian_relations(3), 12, monomial_cap=2)


class TestTensor:
    def test_dimension_multiplicative(self):
        t = tensor_product(exterior_algebra([3]), exterior_algebra([3]))
        assert t.total_dimension == 4
        assert t.top_degree == 6

    def test_projective_line_square(self):
        a = polynomial_quotient_algebra([("alpha1", 2)], [{(2,): 1}], 2)
        b = polynomial_quotient_algebra([("beta1", 2)], [{(2,): 1}], 2)
        t = tensor_product(a, b)
        assert poincare_polynomial(t) == [1, 0, 2, 0, 1]

    def test_koszul_sign(self):
        t = tensor_product(exterior_algebra([3]), exterior_algebra([3]))
        x, y = t.gen("e3@1"), t.gen("e3@2")
        assert x * y == -(y * x)
        assert not (x * y).is_zero()

    def test_basis_is_pairwise_products(self):
        a = lagrangian2()
        b = polynomial_quotient_algebra([("beta1", 2)], [{(2,): 1}], 2)
        t = tensor_product(a, b)
        for d in range(t.top_degree + 1):
            expected = sum(a.dims(da) * b.dims(d - da) for da in range(d + 1))
            assert t.dims(d) == expected == len(t.basis(d))


class TestPairing:
    def test_exterior_top_coefficient(self):
        alg = exterior_algebra([3, 5, 7])
        e3, e5, e7 = (alg.gen(n) for n in ("e3", "e5", "e7"))
        assert pairing(e3 * e5, e7) == 1
        assert pairing(e5, e3 * e7) == -1

    def test_degree_mismatch_rejected(self):
        alg = lagrangian2()
        with pytest.raises(ValueError):
            pairing(alg.gen("sigma1"), alg.gen("sigma1") * alg.gen("sigma2"))

    def test_owner_mismatch_rejected(self):
        with pytest.raises(ValueError):
            pairing(lagrangian2().gen("sigma1"), lagrangian2().gen("sigma1"))

    def test_g2_pairing_matrix_degree_2_vs_4(self):
        alg = lagrangian2()
        assert pairing(alg.gen("sigma1"), alg.gen("sigma2")) == 1

    def test_duality_matrices_invertible(self):
        from dualcoh.linalg import SparseRREF
        for alg in (exterior_algebra([3, 5, 7]), lagrangian2(), projective_line()):
            top = alg.top_degree
            for d in range(top + 1):
                nd = alg.dims(d)
                assert nd == alg.dims(top - d)
                rr = SparseRREF()
                rank = 0
                for u in alg.basis(d):
                    row = {}
                    for j, w in enumerate(alg.basis(top - d)):
                        v = pairing(alg.basis_element(u), alg.basis_element(w))
                        if v:
                            row[j] = v
                    if rr.add(row) is not None:
                        rank += 1
                assert rank == nd


class TestDivisibility:
    def test_not_divisible(self):
        alg = exterior_algebra([3, 5, 7])
        assert is_divisible(alg.gen("e5"), alg.generator("e7")) is None

    def test_self_divisible(self):
        alg = exterior_algebra([3, 5])
        w = is_divisible(alg.gen("e5"), alg.generator("e5"))
        assert w == alg.one()

    def test_quotient_witness(self):
        alg = lagrangian2()
        v = alg.gen("sigma1") * alg.gen("sigma2")
        w = is_divisible(v, alg.generator("sigma2"))
        assert w is not None
        assert alg.gen("sigma2") * w == v

    def test_witness_soundness_random(self):
        alg = lagrangian2()
        rng = random.Random(7)
        for _ in range(25):
            v = random_homogeneous(alg, rng)
            if v.is_zero():
                continue
            for name in ("sigma1", "sigma2"):
                w = is_divisible(v, alg.generator(name))
                if w is not None:
                    assert alg.gen(name) * w == v


class TestIdealOps:
    def test_exterior_principal_ideal_degree(self):
        alg = exterior_algebra([3, 5, 7])
        basis = ideal_basis_in_degree([alg.gen("e7")], 10)
        assert basis == [alg.gen("e3") * alg.gen("e7")]

    def test_lagrangian_principal_ideal(self):
        alg = lagrangian2()
        basis = ideal_basis_in_degree([alg.gen("sigma2")], 4)
        assert basis == [alg.gen("sigma2")]

    def test_projective_line_ideal_reduces(self):
        alg = projective_line()
        basis = ideal_basis_in_degree([alg.gen("sigma1"), alg.gen("tau1")], 2)
        assert basis == [alg.gen("sigma1")]

    def test_pairs_nontrivially_witness(self):
        alg = exterior_algebra([3, 5, 7])
        u = pairs_nontrivially_with_ideal(alg.gen("e5"), [alg.gen("e7")])
        assert u == alg.gen("e3") * alg.gen("e7")
        assert pairing(alg.gen("e5"), u) in (1, -1)

    def test_pairs_trivially_when_divisible(self):
        alg = exterior_algebra([3, 5, 7])
        assert pairs_nontrivially_with_ideal(alg.gen("e7"), [alg.gen("e7")]) is None

    def test_projective_plane_hyperplane(self):
        # Gr(1,3) = P^2: ideal (sigma1, tau2); sigma1 pairs with itself
        alg = polynomial_quotient_algebra(
            [("sigma1", 2), ("tau1", 2), ("tau2", 4)],
            [{(1, 0, 0): 1, (0, 1, 0): 1},
             {(1, 1, 0): 1, (0, 0, 1): 1},
             {(1, 0, 1): 1}], 4)
        u = pairs_nontrivially_with_ideal(
            alg.gen("sigma1"), [alg.gen("sigma1"), alg.gen("tau2")])
        assert u == alg.gen("sigma1")
        assert pairing(alg.gen("sigma1"), u) == 1


class TestStructuralProperties:
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_graded_commutativity(self, seed):
        rng = random.Random(seed)
        for alg in (exterior_algebra([3, 5, 7]), lagrangian2()):
            for _ in range(20):
                a, b = random_homogeneous(alg, rng), random_homogeneous(alg, rng)
                if a.is_zero() or b.is_zero():
                    continue
                sign = (-1) ** (a.homogeneous_degree() * b.homogeneous_degree())
                assert a * b == sign * (b * a)

    def test_associativity(self):
        rng = random.Random(11)
        t = tensor_product(exterior_algebra([3, 5]), lagrangian2())
        for _ in range(15):
            a, b, c = (random_homogeneous(t, rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)

    def test_palindromic_poincare(self):
        for alg in (exterior_algebra([3, 5, 9]), lagrangian2(), projective_line()):
            pp = poincare_polynomial(alg)
            assert pp == pp[::-1]
            assert sum(pp) == alg.total_dimension

    def test_element_serialization_roundtrip(self):
        alg = lagrangian2()
        v = 3 * alg.gen("sigma1") * alg.gen("sigma2") - Fraction(1, 2) * alg.one()
        s = {alg.monomial_string(m): str(c) for m, c in v.terms.items()}
        back = alg.element({alg.parse_monomial(k): Fraction(c) for k, c in s.items()})
        assert back == v


def test_docstrings():
    results = doctest.testmod(dualcoh.algebra)
    assert results.failed == 0
