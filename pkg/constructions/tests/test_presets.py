"""Tests for matrix bases and the construction catalogue"""
from django.test import SimpleTestCase
from sympy import Matrix, eye

from algebras.services import VerificationService
from constructions.presets import (
    MATRIX_PRESETS,
    catalogue,
    m3_shift_diagonal_basis,
    m4_clifford_basis,
    matrix_preset,
)


class MatrixPresetTests(SimpleTestCase):
    """Test cases for the named matrix bases"""

    def test_every_preset_builds(self):
        """Test each named basis is a basis of M_m"""
        for name, (m, _) in MATRIX_PRESETS.items():
            algebra = matrix_preset(name)
            self.assertEqual(algebra.dimension, m * m)
            self.assertFalse(algebra.is_graded)

    def test_m4_generators_anticommute(self):
        """Test the Cl_{2,2} image: squares +1, +1, -1, -1 and pairwise anticommuting"""
        matrices, labels = m4_clifford_basis()
        generators = [Matrix(matrices[labels.index(f"a{i}")]) for i in range(1, 5)]
        for i, a in enumerate(generators):
            self.assertEqual(a * a, eye(4) if i < 2 else -eye(4))
            for b in generators[i + 1:]:
                self.assertEqual(a * b, -(b * a))

    def test_m3_labels(self):
        """Test the shift-diagonal basis has the identity first"""
        matrices, labels = m3_shift_diagonal_basis()
        self.assertEqual(labels[0], "1")
        self.assertEqual(Matrix(matrices[0]), eye(3))
        self.assertEqual(len(set(labels)), 9)

    def test_unknown_preset(self):
        """Test an unknown basis name"""
        with self.assertRaises(KeyError):
            matrix_preset('m5-units')


class CatalogueTests(SimpleTestCase):
    """Test cases for catalogue"""

    def test_catalogue_is_associative_and_graded(self):
        """Test every catalogue algebra is associative and graded by its degree map"""
        service = VerificationService()
        names = []
        for name, algebra in catalogue():
            names.append(name)
            self.assertTrue(service.check_associativity(algebra).passed, name)
            if algebra.is_graded:
                self.assertTrue(service.check_grading(algebra).passed, name)
        self.assertEqual(len(names), len(set(names)))
        self.assertEqual(names[0], "quaternions")
        self.assertIn("Cl_{0,2}", names)
