"""Tests for ideals, center, radical, minimal polynomials and simplicity"""
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.polys.domains import QQ

from core.exceptions import ParentMismatchError
from algebras.models import GradedAlgebra
from algebras.scalars import RATIONAL
from analysis.models import (
    GRADED_SIMPLE,
    INDETERMINATE,
    NOT_GRADED_SIMPLE,
    NOT_SIMPLE,
    SIMPLE,
    UNSUPPORTED,
    Subspace,
)
from analysis.services import StructureAnalysisService, t
from constructions.presets import catalogue
from constructions.services import ConstructionService
from groups.models import GroupElement

builders = ConstructionService()


def dual_numbers(degrees=None):
    return GradedAlgebra.from_entries(
        RATIONAL, ["1", "d"], [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], [1, 0],
        degrees=degrees, name="dual numbers",
    )


def upper_triangular():
    """2x2 upper triangular matrices on e11, e12, e22."""
    return GradedAlgebra.from_entries(
        RATIONAL, ["e11", "e12", "e22"],
        [(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
        [1, 0, 1], name="upper triangular",
    )


def is_two_sided_ideal(subspace: Subspace) -> bool:
    algebra = subspace.algebra
    return all(
        subspace.contains(algebra.multiply(algebra.basis_coordinates(i), row))
        and subspace.contains(algebra.multiply(row, algebra.basis_coordinates(i)))
        for row in subspace.rows for i in range(algebra.dimension)
    )


def commutation_nullspace_dimension(algebra: GradedAlgebra) -> int:
    """Dense sympy oracle for the center: stack every x b_i - b_i x = 0 block."""
    size = algebra.dimension
    rows = []
    for i in range(size):
        for l in range(size):
            row = []
            for k in range(size):
                forward = dict(algebra.product_terms(k, i)).get(l, QQ(0))
                backward = dict(algebra.product_terms(i, k)).get(l, QQ(0))
                row.append(algebra.domain.to_sympy(forward - backward))
            rows.append(row)
    return len(Matrix(rows).nullspace())


small_integers = st.integers(min_value=-2, max_value=2)


class IdealClosureTests(SimpleTestCase):
    """Test cases for ideal_closure"""

    def setUp(self):
        """Set up the analysis service"""
        self.service = StructureAnalysisService()

    def test_invertible_generator(self):
        """Test i generates all of H"""
        H = builders.quaternions()
        self.assertTrue(self.service.ideal_closure(H, [H.basis_element_by_label("i")]).is_whole())

    def test_split_idempotent(self):
        """Test 1 + a1 generates a one-dimensional ideal of Cl_{1,0}"""
        algebra = builders.clifford(1, 0)
        x = algebra.one() + algebra.basis_element_by_label("a1")
        ideal = self.service.ideal_closure(algebra, [x])
        self.assertEqual(ideal.dimension, 1)
        self.assertTrue(ideal.contains(x))
        self.assertEqual(x * x, x.scale(2))

    def test_zero_generator(self):
        """Test {0} generates the zero ideal"""
        H = builders.quaternions()
        self.assertTrue(self.service.ideal_closure(H, [H.zero()]).is_zero())
        self.assertTrue(self.service.ideal_closure(H, []).is_zero())

    def test_parent_mismatch(self):
        """Test generators from another algebra"""
        with self.assertRaises(ParentMismatchError):
            self.service.ideal_closure(builders.quaternions(), [builders.quaternions().one()])

    @settings(max_examples=20, deadline=None)
    @given(st.lists(small_integers, min_size=8, max_size=8), st.lists(small_integers, min_size=8, max_size=8))
    def test_closure_laws(self, first, second):
        """Test extensive, idempotent, monotone and two-sided on Cl_{2,1}"""
        algebra = builders.clifford(2, 1)
        x, y = algebra.element(first), algebra.element(second)
        ideal = self.service.ideal_closure(algebra, [x])
        self.assertTrue(ideal.contains(x))
        self.assertEqual(self.service.ideal_closure(algebra, ideal.elements()), ideal)
        self.assertTrue(self.service.ideal_closure(algebra, [x, y]).contains_subspace(ideal))
        self.assertTrue(is_two_sided_ideal(ideal))


class GradedSimplicityTests(SimpleTestCase):
    """Test cases for is_graded_simple"""

    def setUp(self):
        """Set up the analysis service"""
        self.service = StructureAnalysisService()

    def test_clifford_one_zero(self):
        """Test Cl_{1,0} is graded-simple"""
        self.assertEqual(self.service.is_graded_simple(builders.clifford(1, 0)).status, GRADED_SIMPLE)

    def test_quaternions_and_twisted(self):
        """Test H and the twisted algebras for n <= 5"""
        self.assertTrue(self.service.is_graded_simple(builders.quaternions()))
        for n in range(1, 6):
            self.assertTrue(self.service.is_graded_simple(builders.twisted_group_algebra(n)), n)

    def test_graded_ideal_witness(self):
        """Test d of degree 1 spans a proper graded ideal"""
        verdict = self.service.is_graded_simple(dual_numbers([GroupElement.zero(1), GroupElement(1, 1)]))
        self.assertEqual(verdict.status, NOT_GRADED_SIMPLE)
        self.assertEqual(verdict.witness, 1)

    def test_unsupported(self):
        """Test a two-dimensional component"""
        verdict = self.service.is_graded_simple(dual_numbers([GroupElement.zero(1), GroupElement.zero(1)]))
        self.assertEqual(verdict.status, UNSUPPORTED)


class CenterAndRadicalTests(SimpleTestCase):
    """Test cases for center, radical and trace_form"""

    def setUp(self):
        """Set up the analysis service"""
        self.service = StructureAnalysisService()

    def test_center_of_quaternions(self):
        """Test Z(H) = span{1} against the dense oracle"""
        H = builders.quaternions()
        central = self.service.center(H)
        self.assertEqual(central, Subspace.span(H, [H.unit]))
        self.assertEqual(central.dimension, commutation_nullspace_dimension(H))

    def test_commutative_centers(self):
        """Test Cl_{0,1} and Cl_{1,0} are their own centers"""
        for algebra in (builders.clifford(0, 1), builders.clifford(1, 0)):
            self.assertTrue(self.service.center(algebra).is_whole())

    def test_center_dimensions_match_oracle(self):
        """Test center dimensions of Cl_{p,q}, p + q <= 3"""
        for total in range(4):
            for p in range(total + 1):
                algebra = builders.clifford(p, total - p)
                self.assertEqual(self.service.center(algebra).dimension, commutation_nullspace_dimension(algebra))

    def test_radicals(self):
        """Test radicals of H, Cl_{1,0}, dual numbers and triangular matrices"""
        self.assertTrue(self.service.radical(builders.quaternions()).is_zero())
        self.assertTrue(self.service.radical(builders.clifford(1, 0)).is_zero())
        duals = dual_numbers()
        self.assertEqual(self.service.radical(duals), Subspace.span(duals, [[0, 1]]))
        triangular = upper_triangular()
        self.assertEqual(self.service.radical(triangular), Subspace.span(triangular, [[0, 1, 0]]))

    def test_trace_form_of_quaternions(self):
        """Test the trace form is nondegenerate: diag(4, -4, -4, -4)"""
        form = self.service.trace_form(builders.quaternions())
        self.assertEqual(Matrix([[QQ.to_sympy(c) for c in row] for row in form]), Matrix.diag(4, -4, -4, -4))

    def test_radical_is_nilpotent_ideal(self):
        """Test the radical of the triangular algebra is a nilpotent two-sided ideal"""
        algebra = upper_triangular()
        nilpotent = self.service.radical(algebra)
        self.assertTrue(is_two_sided_ideal(nilpotent))
        for element in nilpotent.elements():
            power = element
            for _ in range(algebra.dimension - 1):
                power = power * element
            self.assertTrue(power.is_zero())


class MinimalPolynomialTests(SimpleTestCase):
    """Test cases for minimal_polynomial"""

    def setUp(self):
        """Set up the analysis service"""
        self.service = StructureAnalysisService()

    def test_examples(self):
        """Test i -> t^2 + 1, 1 -> t - 1, a1 in Cl_{1,0} -> t^2 - 1"""
        H = builders.quaternions()
        self.assertEqual(self.service.minimal_polynomial(H, H.basis_element_by_label("i")).as_expr(), t ** 2 + 1)
        self.assertEqual(self.service.minimal_polynomial(H, H.one()).as_expr(), t - 1)
        algebra = builders.clifford(1, 0)
        self.assertEqual(self.service.minimal_polynomial(algebra, algebra.basis_element(1)).as_expr(), t ** 2 - 1)

    def test_annihilates(self):
        """Test m(x) = 0 for a mixed quaternion"""
        H = builders.quaternions()
        x = H.element([1, 2, 0, QQ(1, 2)])
        polynomial = self.service.minimal_polynomial(H, x)
        self.assertEqual(polynomial.degree(), 2)
        self.assertTrue(polynomial.LC() == 1)
        self.assertTrue(self.service.evaluate_polynomial(H, polynomial, x).is_zero())

    def test_nilpotent(self):
        """Test d in the dual numbers has minimal polynomial t^2"""
        duals = dual_numbers()
        self.assertEqual(self.service.minimal_polynomial(duals, duals.basis_element(1)).as_expr(), t ** 2)


class SimplicityTests(SimpleTestCase):
    """Test cases for is_simple"""

    def setUp(self):
        """Set up the analysis service"""
        self.service = StructureAnalysisService()

    def assert_proper_witness(self, verdict):
        witness = verdict.witness
        self.assertIsNotNone(witness)
        self.assertFalse(witness.is_zero())
        self.assertFalse(witness.is_whole())
        self.assertEqual(self.service.ideal_closure(witness.algebra, witness.elements()), witness)

    def test_quaternions_simple(self):
        """Test H is simple"""
        self.assertEqual(self.service.is_simple(builders.quaternions()).status, SIMPLE)

    def test_clifford_one_zero_not_simple(self):
        """Test Cl_{1,0} splits with witness span{1+a1}, yet is graded-simple"""
        algebra = builders.clifford(1, 0)
        verdict = self.service.is_simple(algebra)
        self.assertEqual(verdict.status, NOT_SIMPLE)
        self.assertEqual(str(verdict.witness), "span{1+a1}")
        self.assert_proper_witness(verdict)
        self.assertTrue(self.service.is_graded_simple(algebra))

    def test_clifford_zero_one_simple(self):
        """Test Cl_{0,1} behaves like C: its center is a field"""
        verdict = self.service.is_simple(builders.clifford(0, 1))
        self.assertEqual(verdict.status, SIMPLE)
        self.assertIn("field", verdict.reason)

    def test_dual_numbers_radical_witness(self):
        """Test a nonzero radical is the witness"""
        verdict = self.service.is_simple(dual_numbers())
        self.assertEqual(verdict.status, NOT_SIMPLE)
        self.assertEqual(verdict.reason, "nonzero radical")
        self.assert_proper_witness(verdict)

    def test_real_clifford_catalogue(self):
        """Test Cl_{p,q}, p + q <= 5, is simple exactly when p - q is not 1 mod 4"""
        for total in range(6):
            for p in range(total + 1):
                q = total - p
                verdict = self.service.is_simple(builders.clifford(p, q))
                self.assertNotEqual(verdict.status, INDETERMINATE, (p, q))
                self.assertEqual(verdict.is_simple, (p - q) % 4 != 1, (p, q))
                if not verdict.is_simple:
                    self.assert_proper_witness(verdict)

    def test_complex_clifford_catalogue(self):
        """Test Cl_n(C) is simple exactly for even n <= 5"""
        for n in range(1, 6):
            verdict = self.service.is_simple(builders.clifford_complex(n))
            self.assertEqual(verdict.is_simple, n % 2 == 0, n)
            if not verdict.is_simple:
                self.assert_proper_witness(verdict)

    def test_simple_implies_graded_simple(self):
        """Test across the graded catalogue"""
        for name, algebra in catalogue():
            if not algebra.is_graded:
                continue
            graded = self.service.is_graded_simple(algebra)
            if self.service.is_simple(algebra).is_simple and graded.status != UNSUPPORTED:
                self.assertTrue(graded, name)
