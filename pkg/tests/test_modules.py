"""
Tests for modules given by action matrices.
"""

import unittest
from fractions import Fraction

from towertk import linalg
from towertk.combinatorics import Composition
from towertk.errors import DecompositionError, ModuleError
from towertk.hecke import HeckeElement, hecke_algebra, nu, projective_module, simple_module
from towertk.modules import (ModuleRep, dim_hom, direct_sum, eigen_filtration, hom_space,
                             induce_along, joint_eigenspace, left_ideal_module, module_on_basis,
                             quotient_module, regular_module, restrict_along, tensor_product)
from towertk.tower import load_tower


def C(*parts):
    return Composition(parts)


class TestModuleRep(unittest.TestCase):
    """Test construction and relation checks."""

    def setUp(self):
        self.h2 = hecke_algebra(2)

    def test_regular_module(self):
        """Test the left regular action of T_1 on H_2(0)."""
        module = regular_module(self.h2)
        self.assertEqual(module.dimension, 2)
        self.assertEqual(linalg.to_rows(module.action(0)), [[0, 0], [1, -1]])
        module.verify()

    def test_spot_check_rejects_bad_action(self):
        """Test that T_1 acting by 1 violates T_1^2 = -T_1."""
        with self.assertRaises(ModuleError):
            ModuleRep(self.h2, [linalg.matrix([[1]])])

    def test_action_count(self):
        """Test that one matrix per generator is required."""
        with self.assertRaises(ModuleError):
            ModuleRep(self.h2, [])

    def test_action_shapes(self):
        """Test that action matrices must be square of one size."""
        h3 = hecke_algebra(3)
        with self.assertRaises(ModuleError):
            ModuleRep(h3, [linalg.zeros(1, 1), linalg.zeros(2, 2)])

    def test_trivial_action(self):
        """Test modules over algebras without generators."""
        h1 = hecke_algebra(1)
        module = ModuleRep.trivial_action(h1, 3, label="x")
        self.assertEqual(module.dimension, 3)
        with self.assertRaises(ModuleError):
            ModuleRep.trivial_action(self.h2, 1)

    def test_act_and_trace(self):
        """Test the action of a general element and its trace."""
        module = regular_module(self.h2)
        unit = HeckeElement.one(2).to_vector(self.h2)
        self.assertEqual(module.trace(unit), 2)
        box = HeckeElement.box(2, 1).to_vector(self.h2)
        self.assertEqual(module.trace(box), 1)


class TestConstructions(unittest.TestCase):
    """Test tensor products, sums, induction and restriction."""

    def setUp(self):
        self.h1 = hecke_algebra(1)
        self.h2 = hecke_algebra(2)

    def test_tensor_product(self):
        """Test dimension, algebra and label of an outer tensor product."""
        a = simple_module(C(2), self.h2)
        b = simple_module(C(1, 1), self.h2)
        product = tensor_product(a, b)
        self.assertEqual(product.dimension, 1)
        self.assertEqual(len(product.algebra.factors), 2)
        self.assertEqual(product.label, (C(2), C(1, 1)))
        self.assertEqual(linalg.to_rows(product.action(1)), [[-1]])

    def test_direct_sum(self):
        """Test block sums and the same-algebra requirement."""
        a = simple_module(C(2), self.h2)
        b = simple_module(C(1, 1), self.h2)
        total = direct_sum(a, b)
        self.assertEqual(linalg.to_rows(total.action(0)), [[0, 0], [0, -1]])
        with self.assertRaises(ModuleError):
            direct_sum(a, simple_module(C(2), hecke_algebra(2)))

    def test_induce_along(self):
        """Test that inducing C_(1) (x) C_(1) gives the regular H_2(0)-module."""
        tower = load_tower("hecke0")
        embedding = tower.embedding(1, 1)
        v = tensor_product(tower.simple_module(C(1)), tower.simple_module(C(1)))
        induced = induce_along(v, embedding, free_rank=2)
        self.assertEqual(induced.dimension, 2)
        self.assertEqual(tower.composition_factors(induced)[C(2)], 1)
        self.assertEqual(tower.composition_factors(induced)[C(1, 1)], 1)
        with self.assertRaises(ModuleError):
            induce_along(v, embedding, free_rank=3)

    def test_restrict_along(self):
        """Test restriction through an embedding."""
        tower = load_tower("hecke0")
        module = regular_module(tower.algebra(3))
        restricted = restrict_along(module, tower.embedding(2, 1))
        self.assertEqual(restricted.dimension, 6)
        self.assertEqual(len(restricted.actions), 1)
        self.assertTrue(linalg.equal(restricted.action(0), module.action(0)))


class TestHomAndIdeals(unittest.TestCase):
    """Test intertwiner spaces and left ideals."""

    def setUp(self):
        self.h3 = hecke_algebra(3)

    def test_hom_between_simples(self):
        """Test Schur's lemma on one-dimensional simples."""
        a = simple_module(C(2, 1), self.h3)
        b = simple_module(C(1, 2), self.h3)
        self.assertEqual(dim_hom(a, a), 1)
        self.assertEqual(dim_hom(a, b), 0)

    def test_hom_matrices_intertwine(self):
        """Test F act_P(g) = act_M(g) F for every returned F."""
        p = projective_module(C(2, 1), self.h3)
        m = regular_module(self.h3)
        for F in hom_space(p, m):
            for a_p, a_m in zip(p.actions, m.actions):
                self.assertTrue(linalg.equal(F.matmul(a_p), a_m.matmul(F)))

    def test_hom_across_algebras(self):
        """Test that Hom needs a common algebra."""
        with self.assertRaises(ModuleError):
            hom_space(simple_module(C(2), hecke_algebra(2)), simple_module(C(3), self.h3))

    def test_left_ideal_of_nu(self):
        """Test that H_3(0) nu_(2,1) is two-dimensional."""
        module = left_ideal_module(self.h3, nu(C(2, 1)).to_vector(self.h3))
        self.assertEqual(module.dimension, 2)

    def test_module_on_unstable_basis(self):
        """Test that a span not closed under the action is rejected."""
        with self.assertRaises(ModuleError):
            module_on_basis(self.h3, [HeckeElement.one(3).to_vector(self.h3)])


class TestFiltration(unittest.TestCase):
    """Test eigenspaces, quotients and the eigen filtration."""

    def setUp(self):
        self.h3 = hecke_algebra(3)
        self.patterns = [
            (C(3), [0, 0]), (C(1, 2), [-1, 0]), (C(2, 1), [0, -1]), (C(1, 1, 1), [-1, -1]),
        ]

    def test_joint_eigenspace(self):
        """Test the socle of M_(2,1): T_1 by -1 and T_2 by 0."""
        module = projective_module(C(2, 1), self.h3)
        self.assertEqual(len(joint_eigenspace(module, [Fraction(-1), Fraction(0)])), 1)
        self.assertEqual(joint_eigenspace(module, [Fraction(0), Fraction(0)]), [])

    def test_quotient_module(self):
        """Test that dividing out the socle leaves the top C_(2,1)."""
        module = projective_module(C(2, 1), self.h3)
        socle = joint_eigenspace(module, [Fraction(-1), Fraction(0)])
        top = quotient_module(module, socle)
        self.assertEqual(top.dimension, 1)
        self.assertEqual([linalg.to_rows(a) for a in top.actions], [[[0]], [[-1]]])

    def test_quotient_by_non_submodule(self):
        """Test that a non-invariant subspace is rejected."""
        module = projective_module(C(2, 1), self.h3)
        top_vector = [[Fraction(1), Fraction(0)]]
        with self.assertRaises(ModuleError):
            quotient_module(module, top_vector)

    def test_filtration_of_projective(self):
        """Test [M_(2,1)] = [C_(2,1)] + [C_(1,2)] in either pattern order."""
        module = projective_module(C(2, 1), self.h3)
        expected = {C(2, 1): 1, C(1, 2): 1}
        self.assertEqual(eigen_filtration(module, self.patterns), expected)
        self.assertEqual(eigen_filtration(module, self.patterns[::-1]), expected)

    def test_filtration_of_regular_module(self):
        """Test that every simple of H_3(0) occurs with its projective's dimension."""
        counts = eigen_filtration(regular_module(self.h3), self.patterns)
        self.assertEqual(sum(counts.values()), 6)
        self.assertEqual(counts[C(3)], 1)
        self.assertEqual(counts[C(1, 1, 1)], 1)

    def test_missing_pattern(self):
        """Test that an incomplete pattern list cannot finish."""
        with self.assertRaises(DecompositionError):
            eigen_filtration(regular_module(self.h3), self.patterns[:1])


if __name__ == '__main__':
    unittest.main()
