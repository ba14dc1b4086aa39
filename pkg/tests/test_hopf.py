"""
Tests for Grothendieck vectors, graded Hopf data and the identity checkers.
"""

import unittest

from towertk.combinatorics import Composition, compositions
from towertk.errors import DegreeOverflowError, StructureError, UsageError
from towertk.hecke import g0_coproduct, g0_product_shuffle
from towertk.hopf import (
    GradedHopfData,
    GrothendieckVector,
    PairingMatrix,
    antipode,
    check_antipode,
    check_AsAs,
    check_bialgebra,
    check_duality,
    coproduct,
    counit,
    dual_hopf_data,
    product,
    reduced_coproduct,
    structure_table,
    tensor_product_in,
)
from towertk.z2 import TSWord, z2_hopf_data


def C(*parts):
    return Composition(parts)


def qsym(N):
    return GradedHopfData.build("G0(hecke0)", N, compositions, g0_product_shuffle, g0_coproduct)


def basis(label):
    return GrothendieckVector.basis(label)


class TestGrothendieckVector(unittest.TestCase):
    """Test integer vectors on labels."""

    def test_arithmetic(self):
        """Test sums, differences, scalars and cancellation."""
        x = GrothendieckVector({C(2): 1, C(1, 1): 2})
        y = GrothendieckVector({C(1, 1): -2})
        self.assertEqual(x + y, basis(C(2)))
        self.assertEqual((x - x), GrothendieckVector())
        self.assertEqual(3 * basis(C(2)), GrothendieckVector({C(2): 3}))
        self.assertEqual(x[C(3)], 0)
        self.assertFalse(GrothendieckVector({C(1): 0}))

    def test_string_order(self):
        """Test canonical ordering by degree then descent set."""
        x = GrothendieckVector({C(1, 1): 1, C(2): 1, C(3): -1, C(): 2})
        self.assertEqual(str(x), "2[] + [2] + [1,1] - [3]")
        self.assertEqual(str(GrothendieckVector()), "0")

    def test_tensor_and_component(self):
        """Test tensor labels and extracting a bidegree."""
        x = (basis(C(1)) + basis(C(2))).tensor(basis(C(1)))
        self.assertEqual(x.support(), [(C(1), C(1)), (C(2), C(1))])
        self.assertEqual(x.component((2, 1)), GrothendieckVector({(C(2), C(1)): 1}))
        self.assertEqual(x.degrees(), [2, 3])

    def test_non_integer(self):
        """Test that fractional coefficients are rejected."""
        with self.assertRaises(StructureError):
            GrothendieckVector({C(1): 0.5})

    def test_nonnegative(self):
        """Test the positivity predicate."""
        self.assertTrue(GrothendieckVector({C(1): 2}).is_nonnegative())
        self.assertFalse(GrothendieckVector({C(1): -1}).is_nonnegative())

    def test_to_json(self):
        """Test string-valued JSON form with '|' tensor labels."""
        x = GrothendieckVector({(C(1), C(1, 1)): 3})
        self.assertEqual(x.to_json(), {"1|1,1": "3"})


class TestGradedHopfData(unittest.TestCase):
    """Test construction and truncation."""

    def setUp(self):
        self.H = qsym(3)

    def test_labels_and_truncation(self):
        """Test graded bases and the truncation guard."""
        self.assertEqual(self.H.labels(2), [C(2), C(1, 1)])
        self.assertEqual(self.H.unit_label, C())
        with self.assertRaises(DegreeOverflowError):
            self.H.labels(4)
        with self.assertRaises(DegreeOverflowError):
            self.H.product_of_labels(C(2), C(2))

    def test_unit_and_counit(self):
        """Test the unit label and the counit on vectors."""
        self.assertEqual(counit(basis(C()) * 5 + basis(C(1)), self.H), 5)
        self.assertEqual(product(basis(C()), basis(C(2, 1)), self.H), basis(C(2, 1)))

    def test_reduced_coproduct(self):
        """Test that edge terms are removed."""
        self.assertEqual(reduced_coproduct(C(2), self.H), basis((C(1), C(1))))

    def test_connectedness(self):
        """Test that a broken coproduct of the unit is rejected."""
        with self.assertRaises(StructureError):
            GradedHopfData("broken", 0, {0: [C()]}, {(C(), C()): basis(C())},
                           {C(): GrothendieckVector()})

    def test_json_round_trip(self):
        """Test that written structure constants read back identically."""
        data = self.H.to_json()
        again = GradedHopfData.from_json(data, Composition.parse)
        for a in self.H.all_labels():
            self.assertEqual(again.coproduct_of_label(a), self.H.coproduct_of_label(a))
            for b in self.H.all_labels(3 - a.weight):
                self.assertEqual(again.product_of_labels(a, b), self.H.product_of_labels(a, b))

    def test_dual_of_dual(self):
        """Test that dualizing twice returns the original constants."""
        twice = dual_hopf_data(dual_hopf_data(self.H, "K"), "G")
        for a in self.H.all_labels():
            self.assertEqual(twice.coproduct_of_label(a), self.H.coproduct_of_label(a))
            for b in self.H.all_labels(3 - a.weight):
                self.assertEqual(twice.product_of_labels(a, b), self.H.product_of_labels(a, b))

    def test_tensor_product_in(self):
        """Test factorwise products of tensors."""
        x = basis((C(1), C()))
        y = basis((C(), C(1)))
        self.assertEqual(tensor_product_in(x, y, self.H), basis((C(1), C(1))))


class TestAntipode(unittest.TestCase):
    """Test the recursive antipode."""

    def test_known_values(self):
        """Test gamma[1] = -[1] and gamma[2] = [1,1]."""
        H = qsym(3)
        self.assertEqual(antipode(basis(C(1)), H), -basis(C(1)))
        self.assertEqual(antipode(basis(C(2)), H), basis(C(1, 1)))
        self.assertEqual(antipode(basis(C()), H), basis(C()))

    def test_check_passes(self):
        """Test the antipode identity and involution on QSym."""
        report = check_antipode(qsym(4), 4)
        self.assertTrue(report.passed)
        self.assertEqual(report.identities(), ["antipode_identity", "antipode_involution"])


class TestBialgebra(unittest.TestCase):
    """Test the bialgebra sweep."""

    def test_qsym_is_a_bialgebra(self):
        """Test every identity on QSym to degree 3."""
        self.assertTrue(check_bialgebra(qsym(3), 3).passed)

    def test_concatenation_is_not_compatible(self):
        """Test that concatenation with deconcatenation fails only compatibility."""
        report = check_bialgebra(z2_hopf_data(2), 2)
        self.assertFalse(report.passed)
        self.assertEqual({cell.identity for cell in report.failures()}, {"compatibility"})
        self.assertEqual(report.first_failure.inputs, {"a": TSWord("T"), "b": TSWord("T")})
        self.assertEqual(report.witness.inputs, {"a": TSWord("T"), "b": TSWord("S")})
        self.assertEqual(str(report.witness.lhs), "[|TS] + [T|S] + [TS|]")
        self.assertEqual(str(report.witness.rhs), "[|TS] + [T|S] + [S|T] + [TS|]")

    def test_identity_subset(self):
        """Test restricting the sweep."""
        report = check_bialgebra(qsym(2), 2, ["unit", "counit"])
        self.assertEqual(report.identities(), ["counit", "unit"])
        with self.assertRaises(UsageError):
            check_bialgebra(qsym(2), 2, ["distributivity"])


class TestAsAs(unittest.TestCase):
    """Test the three-case compatibility."""

    def test_qsym_fails(self):
        """Test that QSym breaks it already at [1][1]."""
        report = check_AsAs(qsym(3), 3)
        self.assertFalse(report.passed)
        self.assertEqual(report.first_failure.inputs, {"a": C(1), "b": C(1), "k": 1})
        self.assertEqual(report.first_failure.lhs, GrothendieckVector({(C(1), C(1)): 2}))

    def test_concatenation(self):
        """Test that concatenation and deconcatenation satisfy it."""
        self.assertTrue(check_AsAs(z2_hopf_data(4), 4).passed)


class TestPairing(unittest.TestCase):
    """Test pairing matrices and the duality checker."""

    def setUp(self):
        self.G = qsym(3)
        self.K = dual_hopf_data(self.G, "K0")

    def test_identity_pairing(self):
        """Test the dual basis pairing."""
        P = PairingMatrix.identity(self.K, self.G, 3)
        self.assertTrue(P.is_identity())
        self.assertEqual(P.value(C(2), C(2)), 1)
        self.assertEqual(P.value(C(2), C(1, 1)), 0)
        self.assertEqual(P.evaluate(basis(C(2)) * 2, basis(C(2)) + basis(C(1, 1))), 2)
        self.assertEqual(P.tensor_value((C(1),), (C(1), C(1))), 0)

    def test_duality_passes(self):
        """Test all duality identities for a Hopf algebra and its graded dual."""
        P = PairingMatrix.identity(self.K, self.G, 3)
        self.assertTrue(check_duality(self.G, self.K, P, 3).passed)

    def test_zero_pairing_fails(self):
        """Test that the zero pairing breaks the unit identity."""
        report = check_duality(self.G, self.K, PairingMatrix.zero(self.K, self.G, 3), 3)
        self.assertFalse(report.passed)
        self.assertIn("unit_counit", {cell.identity for cell in report.failures()})

    def test_size_mismatch(self):
        """Test that bases of different sizes are rejected."""
        Z = z2_hopf_data(3)
        with self.assertRaises(StructureError):
            check_duality(self.G, Z, PairingMatrix.identity(Z, self.G, 3), 3)

    def test_shape_validation(self):
        """Test that a matrix of the wrong shape is rejected."""
        with self.assertRaises(StructureError):
            PairingMatrix({1: [C(1)]}, {1: [C(1)]}, {1: [[1, 0]]})

    def test_to_json(self):
        """Test the per-degree JSON layout."""
        data = PairingMatrix.identity(self.K, self.G, 2).to_json()
        self.assertEqual(data["2"]["rows"], ["2", "1,1"])
        self.assertEqual(data["2"]["values"], [["1", "0"], ["0", "1"]])


class TestStructureTable(unittest.TestCase):
    """Test table rows for the command line."""

    def test_rows(self):
        """Test product and coproduct tables."""
        H = qsym(3)
        rows = structure_table(H, "product", (1, 1))
        self.assertEqual(rows, [[C(1), C(1), GrothendieckVector({C(2): 1, C(1, 1): 1})]])
        self.assertEqual(len(structure_table(H, "coproduct", (3,))), 4)
        self.assertEqual(coproduct(basis(C(1)), H),
                         GrothendieckVector({(C(), C(1)): 1, (C(1), C()): 1}))

    def test_unknown(self):
        """Test an unknown table name."""
        with self.assertRaises(UsageError):
            structure_table(qsym(1), "pairing", (1,))


if __name__ == '__main__':
    unittest.main()
