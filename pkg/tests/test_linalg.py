"""
Tests for exact linear algebra helpers.
"""

import unittest
from fractions import Fraction

from towertk import linalg
from towertk.errors import ModuleError
from towertk.linalg import QuotientSpace, sparse_add, sparse_scale


class TestConversions(unittest.TestCase):
    """Test conversions between Fractions and QQ."""

    def test_round_trip(self):
        """Test that Fractions survive a trip through QQ."""
        self.assertEqual(linalg.fraction(linalg.qq(Fraction(1, 3))), Fraction(1, 3))
        self.assertEqual(linalg.fraction(linalg.qq(-4)), Fraction(-4))

    def test_matrix_entries(self):
        """Test dense construction and entry access."""
        m = linalg.matrix([[1, Fraction(1, 2)], [0, 3]])
        self.assertEqual(linalg.entry(m, 0, 1), Fraction(1, 2))
        self.assertEqual(linalg.to_rows(m), [[1, Fraction(1, 2)], [0, 3]])

    def test_from_columns(self):
        """Test column-wise construction."""
        m = linalg.from_columns([[1, 2], [3, 4]], 2)
        self.assertEqual(linalg.to_rows(m), [[1, 3], [2, 4]])

    def test_sparse_rows_drop_zeros(self):
        """Test that sparse rows omit zero entries."""
        m = linalg.from_sparse_rows([{0: 1, 1: 0}, {}], 2)
        self.assertEqual(linalg.sparse_rows(m).get(0), {0: Fraction(1)})
        self.assertFalse(linalg.sparse_rows(m).get(1))


class TestMatrixOperations(unittest.TestCase):
    """Test rank, nullspace, determinant and friends."""

    def test_rank(self):
        """Test rank of singular and empty matrices."""
        self.assertEqual(linalg.rank(linalg.matrix([[1, 2], [2, 4]])), 1)
        self.assertEqual(linalg.rank(linalg.identity(3)), 3)
        self.assertEqual(linalg.rank(linalg.zeros(0, 3)), 0)

    def test_nullspace(self):
        """Test kernels of small systems."""
        self.assertEqual(linalg.nullspace(linalg.matrix([[1, 1]])), [[-1, 1]])
        self.assertEqual(linalg.nullspace(linalg.identity(2)), [])
        self.assertEqual(linalg.nullspace(linalg.zeros(0, 2)), [[1, 0], [0, 1]])

    def test_nullspace_vectors_are_in_the_kernel(self):
        """Test m x = 0 for every returned vector."""
        rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]
        for vector in linalg.nullspace(linalg.matrix(rows)):
            for row in rows:
                self.assertEqual(sum(a * b for a, b in zip(row, vector)), 0)

    def test_determinant_and_trace(self):
        """Test exact determinant and trace."""
        m = linalg.matrix([[2, 1], [1, 1]])
        self.assertEqual(linalg.determinant(m), 1)
        self.assertEqual(linalg.trace(m), 3)

    def test_kron(self):
        """Test the Kronecker product with the right factor varying fastest."""
        a = linalg.matrix([[1, 2]])
        b = linalg.matrix([[1], [1]])
        self.assertEqual(linalg.to_rows(linalg.kron(a, b)), [[1, 2], [1, 2]])
        swap = linalg.matrix([[0, 1], [1, 0]])
        block = linalg.to_rows(linalg.kron(linalg.identity(2), swap))
        self.assertEqual(block[0], [0, 1, 0, 0])
        self.assertEqual(block[3], [0, 0, 1, 0])

    def test_equal(self):
        """Test equality with mismatched shapes."""
        self.assertTrue(linalg.equal(linalg.identity(2), linalg.matrix([[1, 0], [0, 1]])))
        self.assertFalse(linalg.equal(linalg.identity(2), linalg.identity(3)))
        self.assertTrue(linalg.is_zero(linalg.zeros(2, 2)))

    def test_row_space_basis(self):
        """Test that dependent vectors collapse to an echelon basis."""
        basis = linalg.row_space_basis([{0: 1, 1: 1}, {0: 2, 1: 2}], 2)
        self.assertEqual(basis, [{0: 1, 1: 1}])
        self.assertEqual(linalg.row_space_basis([], 4), [])


class TestCoordinates(unittest.TestCase):
    """Test coordinates in a given basis."""

    def test_coordinates(self):
        """Test coordinates in the standard basis and a skew one."""
        self.assertEqual(linalg.coordinates([{0: 1}, {1: 1}], [{0: 2, 1: 3}], 2), [[2, 3]])
        self.assertEqual(linalg.coordinates([{0: 1, 1: 1}, {1: 1}], [{0: 1}], 2), [[1, -1]])

    def test_dependent_basis(self):
        """Test that a dependent basis is rejected."""
        with self.assertRaises(ModuleError):
            linalg.coordinates([{0: 1}, {0: 2}], [{0: 1}], 2)

    def test_vector_outside_span(self):
        """Test that vectors outside the span are rejected."""
        with self.assertRaises(ModuleError):
            linalg.coordinates([{0: 1}], [{1: 1}], 2)


class TestQuotientSpace(unittest.TestCase):
    """Test quotients by relation vectors."""

    def test_dimension_and_reduction(self):
        """Test K^3 modulo e0 - e1."""
        quotient = QuotientSpace(3, [{0: 1, 1: -1}])
        self.assertEqual(quotient.dimension, 2)
        self.assertEqual(quotient.reduce({0: 1}), quotient.reduce({1: 1}))
        self.assertEqual(quotient.reduce({0: 1, 1: -1}), [0, 0])

    def test_no_relations(self):
        """Test that zero relations are ignored."""
        quotient = QuotientSpace(2, [{0: 0}, {}])
        self.assertEqual(quotient.dimension, 2)
        self.assertEqual(quotient.reduce({1: 5}), [0, 5])
        self.assertEqual(quotient.relation_rows, [])

    def test_everything_killed(self):
        """Test the zero quotient."""
        quotient = QuotientSpace(2, [{0: 1}, {1: 1}])
        self.assertEqual(quotient.dimension, 0)
        self.assertEqual(quotient.reduce({0: 3, 1: 1}), [])


class TestSparseVectors(unittest.TestCase):
    """Test sparse vector arithmetic."""

    def test_add_cancels(self):
        """Test that cancelled entries disappear."""
        self.assertEqual(sparse_add({0: Fraction(1)}, {0: Fraction(1)}, -1), {})
        self.assertEqual(sparse_add({0: Fraction(1)}, {1: Fraction(2)}), {0: 1, 1: 2})

    def test_scale(self):
        """Test scaling, including by zero."""
        self.assertEqual(sparse_scale({0: Fraction(2)}, Fraction(1, 2)), {0: 1})
        self.assertEqual(sparse_scale({0: Fraction(2)}, 0), {})


if __name__ == '__main__':
    unittest.main()
