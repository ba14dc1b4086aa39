"""
Tests for the tower contract, the registry and the axiom checkers.
"""

import unittest

import pytest

from towertk.combinatorics import Composition, Partition
from towertk.config import EngineConfig, fan_out, set_config
from towertk.errors import DegreeOverflowError, UsageError
from towertk.hopf import GrothendieckVector
from towertk.tower import (
    check_condition3,
    check_condition5,
    check_conditions12,
    check_induction_associativity,
    check_pairing,
    check_regular_decomposition,
    check_restriction_coassociativity,
    load_tower,
    pairing_dim_hom,
    pairing_matrix,
    three_fold_embedding,
    tower_names,
    twisted_embedding,
    twisted_induce_modules,
)
from towertk.z2 import TSWord


class TestRegistry(unittest.TestCase):
    """Test tower lookup."""

    def test_names(self):
        """Test the registered towers."""
        self.assertEqual(tower_names(), ["hecke0", "sym", "z2"])

    def test_shared_instances(self):
        """Test that default towers are shared and configured ones are not."""
        self.assertIs(load_tower("sym"), load_tower("sym"))
        self.assertIsNot(load_tower("sym", EngineConfig()), load_tower("sym"))

    def test_unknown(self):
        """Test an unknown tower name."""
        with self.assertRaises(UsageError):
            load_tower("gl2")

    def test_caps(self):
        """Test that algebras and modules past the caps are refused."""
        tower = load_tower("sym", EngineConfig(max_degree={"sym": 3}, module_degree={"sym": 2}))
        with self.assertRaises(DegreeOverflowError):
            tower.algebra(4)
        with self.assertRaises(DegreeOverflowError):
            tower.simple_module(Partition((2, 1)))
        with self.assertRaises(DegreeOverflowError):
            tower.hopf_data("g0", 4)

    def test_unknown_group(self):
        """Test that only g0 and k0 are accepted."""
        with self.assertRaises(UsageError):
            load_tower("z2").hopf_data("r0", 2)


class TestConditions12(unittest.TestCase):
    """Test the algebra and embedding axioms."""

    def test_towers_pass(self):
        """Test every tower to degree 3."""
        for name in tower_names():
            report = check_conditions12(load_tower(name), 3)
            self.assertTrue(report.passed, name)

    def test_swapped_columns(self):
        """Test the negative control on rho_{2,1} of the sym tower."""
        tower = load_tower("sym")
        broken = tower.embedding(2, 1).with_swapped_columns(0, 1)
        report = check_conditions12(tower, 3, overrides={(2, 1): broken})
        self.assertFalse(report.passed)
        failed = {cell.identity for cell in report.failures()}
        self.assertIn("unital", failed)
        self.assertIn("multiplicative", failed)
        self.assertNotIn("injective", failed)
        cell = next(c for c in report.failures() if c.identity == "multiplicative")
        self.assertEqual(cell.inputs, {"m": 2, "n": 1})
        self.assertEqual(cell.lhs["x"], "12(x)1")

    def test_three_fold_embedding(self):
        """Test that both bracketings of rho agree on hecke0 (1,1,1)."""
        tower = load_tower("hecke0")
        left = three_fold_embedding(tower, 1, 1, 1, "left")
        right = three_fold_embedding(tower, 1, 1, 1, "right")
        self.assertEqual(left.images, right.images)
        self.assertTrue(left.is_unital())


class TestCondition3(unittest.TestCase):
    """Test two-sided freeness."""

    def test_free(self):
        """Test freeness with explicit coset representatives."""
        for name, (m, n) in (("sym", (1, 2)), ("sym", (2, 2)), ("hecke0", (2, 1)),
                             ("z2", (2, 2))):
            report = check_condition3(load_tower(name), m, n)
            self.assertTrue(report.passed, name)
            self.assertEqual(report.identities(), ["left_free", "right_free"])

    def test_free_rank(self):
        """Test binomial ranks for the permutation towers."""
        self.assertEqual(load_tower("sym").free_rank(2, 1), 3)
        self.assertEqual(load_tower("hecke0").free_rank(2, 2), 6)


class TestCondition5(unittest.TestCase):
    """Test the Mackey-type condition on the positive towers."""

    def test_module_route(self):
        """Test explicit modules to degree 3."""
        for name in ("sym", "hecke0"):
            report = check_condition5(load_tower(name), "g0", 3, "module")
            self.assertTrue(report.passed, name)
            self.assertEqual(report.request["route"], "module")

    def test_projective_group(self):
        """Test the condition on projective modules of hecke0."""
        self.assertTrue(check_condition5(load_tower("hecke0"), "k0", 3, "module").passed)

    def test_character_and_hopf_routes(self):
        """Test the Grothendieck-level routes past the module degree."""
        sym = load_tower("sym")
        self.assertTrue(check_condition5(sym, "g0", 5, "character").passed)
        self.assertTrue(check_condition5(sym, "g0", 5, "hopf").passed)
        self.assertTrue(check_condition5(load_tower("hecke0"), "g0", 5).passed)

    def test_default_route(self):
        """Test that large degrees leave the module route."""
        report = check_condition5(load_tower("sym"), "g0", 5)
        self.assertEqual(report.request["route"], "character")
        report = check_condition5(load_tower("hecke0"), "g0", 5)
        self.assertEqual(report.request["route"], "hopf")

    def test_bad_requests(self):
        """Test unknown routes and groups."""
        with self.assertRaises(UsageError):
            check_condition5(load_tower("hecke0"), "g0", 2, "character")
        with self.assertRaises(UsageError):
            check_condition5(load_tower("sym"), "p0", 2)
        with self.assertRaises(DegreeOverflowError):
            check_condition5(load_tower("sym"), "g0", 5, "module")

    def test_raised_cap_follows_process_config(self):
        """Test that a shared tower sees caps set after it was loaded."""
        tower = load_tower("hecke0")
        config = EngineConfig()
        config.max_degree["hecke0"] = 6
        set_config(config)
        try:
            self.assertIs(tower.config, config)
            self.assertIs(load_tower("hecke0"), tower)
        finally:
            set_config(None)
        with self.assertRaises(DegreeOverflowError):
            tower.hopf_data("g0", 6)

    def test_twisted_induction(self):
        """Test twisted induction of T (x) 1 (x) 1 (x) S on z2."""
        tower = load_tower("z2")
        empty = tower.simple_module(TSWord(""))
        module = twisted_induce_modules(tower, 1, 1, 0, 1, tower.simple_module(TSWord("T")),
                                        empty, empty, tower.simple_module(TSWord("S")))
        self.assertEqual(tower.decompose(module, "g0"),
                         GrothendieckVector.basis((TSWord("T"), TSWord("S"))))
        embedding = twisted_embedding(tower, 1, 1, 0, 1)
        self.assertTrue(embedding.is_unital())
        self.assertIsNone(embedding.multiplicativity_violation())


class TestThreadedSweeps(unittest.TestCase):
    """Test the shared caches under a thread pool."""

    def test_one_module_per_label(self):
        """Test that concurrent requests for a module get the same object."""
        tower = load_tower("hecke0", EngineConfig(max_threads=8))
        labels = [Composition((2, 1)), Composition((1, 2)), Composition((1, 1, 1))] * 8
        simples = fan_out(tower.simple_module, labels, max_threads=8)
        projectives = fan_out(tower.projective_module, labels, max_threads=8)
        for label, simple, projective in zip(labels, simples, projectives):
            self.assertIs(simple, tower.simple_module(label))
            self.assertIs(projective, tower.projective_module(label))
        algebras = fan_out(tower.algebra, [3] * 8, max_threads=8)
        self.assertTrue(all(a is algebras[0] for a in algebras))

    def test_condition5_on_threads(self):
        """Test that the module sweep gives the sequential verdict on 8 threads."""
        threaded = check_condition5(load_tower("hecke0", EngineConfig(max_threads=8)),
                                    "g0", 3, "module")
        sequential = check_condition5(load_tower("hecke0", EngineConfig()), "g0", 3, "module")
        self.assertTrue(threaded.passed)
        self.assertEqual([c.to_dict() for c in threaded.cells],
                         [c.to_dict() for c in sequential.cells])


@pytest.mark.slow
class TestHeckeCondition5Degree6(unittest.TestCase):
    """Test the shuffle-splitting route on G0 of hecke0 with the cap raised to 6."""

    def setUp(self):
        config = EngineConfig()
        config.max_degree["hecke0"] = 6
        set_config(config)

    def tearDown(self):
        set_config(None)

    def test_hopf_route(self):
        """Test condition (5) on G0 through degree 6."""
        report = check_condition5(load_tower("hecke0"), "g0", 6, "hopf")
        self.assertTrue(report.passed)
        self.assertEqual(report.request["max_degree"], 6)
        self.assertGreater(len(report.cells), 0)


class TestPairingAndDecomposition(unittest.TestCase):
    """Test the pairing matrix and the consistency sweeps."""

    def test_pairing(self):
        """Test that the pairing is the identity on every tower."""
        for name in tower_names():
            report = check_pairing(load_tower(name), 3)
            self.assertTrue(report.passed, name)
            self.assertTrue(report.notes["matrix"].is_identity())

    def test_pairing_dim_hom(self):
        """Test dim Hom(P_I, M) counts C_I among the composition factors of M."""
        hecke = load_tower("hecke0")
        I, J = Composition((2, 1)), Composition((1, 2))
        M = hecke.projective_module(I)
        self.assertEqual(pairing_dim_hom(hecke.projective_module(I), hecke.simple_module(I)), 1)
        self.assertEqual(pairing_dim_hom(hecke.projective_module(I), hecke.simple_module(J)), 0)
        self.assertEqual(pairing_dim_hom(hecke.projective_module(I), M), 1)
        self.assertEqual(pairing_dim_hom(hecke.projective_module(J), M), 1)

    def test_tensor_values(self):
        """Test module-level values on tensor products."""
        P = pairing_matrix(load_tower("hecke0"), 2, tensor_degree=2)
        one = Composition((1,))
        self.assertEqual(P.tensor_value((one, one), (one, one)), 1)
        self.assertTrue(P.is_identity())

    def test_regular_decomposition(self):
        """Test dimension bookkeeping of the regular module."""
        self.assertTrue(check_regular_decomposition(load_tower("hecke0"), 3).passed)
        self.assertTrue(check_regular_decomposition(load_tower("sym"), 3).passed)

    def test_induction_associativity(self):
        """Test both bracketings of a triple induction."""
        self.assertTrue(check_induction_associativity(load_tower("hecke0"), 3).passed)
        self.assertTrue(check_induction_associativity(load_tower("z2"), 3).passed)

    def test_restriction_coassociativity(self):
        """Test both bracketings of a triple restriction."""
        self.assertTrue(check_restriction_coassociativity(load_tower("sym"), 3).passed)
        self.assertTrue(check_restriction_coassociativity(load_tower("hecke0"), 3).passed)


if __name__ == '__main__':
    unittest.main()
