"""Tests for the graded algebra verifiers"""
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import QQ

from core.exceptions import CapacityError, ParentMismatchError, PreconditionError
from algebras.models import GradedAlgebra
from algebras.scalars import RATIONAL
from algebras.services import VerificationService, homogeneous_components, mul
from constructions.presets import matrix_preset
from constructions.services import ConstructionService
from groups.models import GroupElement, SignCocycle
from groups.services import CocycleService, beta_of, standard_cocycle

builders = ConstructionService()


def planted_exponents():
    """Non-bilinear exponents on (Z2)^n, each violating the cocycle identity."""
    return [
        (2, lambda a, b: a & b & (b >> 1) & 1),
        (2, lambda a, b: a & (a >> 1) & b & 1),
        (3, lambda a, b: a & b & (b >> 1) & 1),
        (4, lambda a, b: a & (b >> 1) & (b >> 2) & 1),
    ]


class GradingTests(SimpleTestCase):
    """Test cases for check_grading"""

    def setUp(self):
        """Set up the service and the quaternions"""
        self.service = VerificationService()
        self.H = builders.quaternions()

    def test_quaternions_graded(self):
        """Test the triple degrees grade H"""
        self.assertTrue(self.service.check_grading(self.H).passed)

    def test_cliffords_graded(self):
        """Test Cl_{p,q} for p + q <= 4"""
        for total in range(5):
            for p in range(total + 1):
                self.assertTrue(self.service.check_grading(builders.clifford(p, total - p)).passed)

    def test_corrupted_degree_fails_at_triple(self):
        """Test degree of k set to (0,0,0) fails at (i, j, k)"""
        degrees = list(self.H.degrees)
        degrees[3] = GroupElement.zero(3)
        report = self.service.check_grading(self.H.with_degrees(degrees))
        self.assertFalse(report.passed)
        self.assertEqual(report.witness, (1, 2, 3))

    def test_ungraded_rejected(self):
        """Test an algebra without degree map"""
        with self.assertRaises(PreconditionError):
            self.service.check_grading(matrix_preset('m2-units'))

    def test_homogeneous_components(self):
        """Test components of H are single basis elements in bit order"""
        components = homogeneous_components(self.H)
        self.assertEqual([str(degree) for degree in components], ["(0,0,0)", "(1,1,0)", "(1,0,1)", "(0,1,1)"])
        self.assertEqual(list(components.values()), [[0], [3], [2], [1]])


class CommutativityTests(SimpleTestCase):
    """Test cases for Gamma- and beta-commutativity"""

    def setUp(self):
        """Set up the service and the quaternions"""
        self.service = VerificationService()
        self.H = builders.quaternions()

    def test_quaternions_gamma_commutative(self):
        """Test H satisfies ab = (-1)^<a,b> ba"""
        self.assertTrue(self.service.check_gamma_commutativity(self.H).passed)

    def test_cliffords_gamma_commutative(self):
        """Test every Cl_{p,q} with p + q <= 6 under the generator degrees"""
        for total in range(7):
            for p in range(total + 1):
                report = self.service.check_gamma_commutativity(builders.clifford(p, total - p))
                self.assertTrue(report.passed, report.summary())

    def test_quaternions_beta_scalar_product(self):
        """Test beta = (-1)^<a,b> on H"""
        beta = lambda g, h: -1 if g.scalar_product(h) else 1
        self.assertTrue(self.service.check_beta_commutativity(self.H, beta).passed)

    def test_quaternions_beta_trivial_fails(self):
        """Test beta = +1 fails on (i, j)"""
        report = self.service.check_beta_commutativity(self.H, lambda g, h: 1)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness, (1, 2))

    def test_asymmetric_beta_fails(self):
        """Test a beta that is not symmetric on used degrees"""
        beta = lambda g, h: -1 if g.bits < h.bits else 1
        report = self.service.check_beta_commutativity(self.H, beta)
        self.assertFalse(report.passed)
        self.assertIn("not symmetric", report.detail)

    def test_twisted_is_beta_but_not_gamma_commutative(self):
        """Test the full twisted algebra under beta_of(F) and under the scalar product"""
        for n in range(1, 5):
            cocycle = standard_cocycle(n)
            algebra = builders.twisted_group_algebra(n, cocycle)
            report = self.service.check_beta_commutativity(algebra, lambda g, h: beta_of(cocycle, g, h))
            self.assertTrue(report.passed, report.summary())
            self.assertFalse(self.service.check_gamma_commutativity(algebra).passed)

    def test_gamma_requires_grading(self):
        """Test gamma-comm on a corrupted grading is rejected"""
        degrees = list(self.H.degrees)
        degrees[3] = GroupElement.zero(3)
        with self.assertRaises(PreconditionError):
            self.service.check_gamma_commutativity(self.H.with_degrees(degrees))

    def test_matrix_units_never_gamma_commutative(self):
        """Test e11 e12 = e12 but e12 e11 = 0 under a degree map that grades"""
        units = matrix_preset('m2-units')
        degrees = [GroupElement.from_coordinates(d) for d in ((0,), (1,), (1,), (0,))]
        report = self.service.check_gamma_commutativity(units.with_degrees(degrees))
        self.assertFalse(report.passed)
        self.assertEqual(report.witness, (0, 1))

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(0, 7), st.integers(0, 7),
        st.fractions(min_value=-3, max_value=3, max_denominator=4),
        st.fractions(min_value=-3, max_value=3, max_denominator=4),
    )
    def test_homogeneous_pairs(self, i, j, s, r):
        """Test ab = (-1)^<a,b> ba and summed degrees on homogeneous elements of Cl_{1,2}"""
        algebra = builders.clifford(1, 2)
        a = algebra.basis_element(i).scale(QQ(s.numerator, s.denominator))
        b = algebra.basis_element(j).scale(QQ(r.numerator, r.denominator))
        sign = -1 if algebra.degrees[i].scalar_product(algebra.degrees[j]) else 1
        self.assertEqual(a * b, (b * a).scale(sign))
        product = mul(a, b)
        self.assertTrue(product.is_homogeneous())
        if not product.is_zero():
            self.assertEqual(product.degree(), algebra.degrees[i] + algebra.degrees[j])

    def test_mul_parent_mismatch(self):
        """Test mul across algebras"""
        with self.assertRaises(ParentMismatchError):
            mul(self.H.basis_element(1), builders.quaternions().basis_element(1))


class AssociativityTests(SimpleTestCase):
    """Test cases for check_associativity and the twisted cocycle check"""

    def setUp(self):
        """Set up the services"""
        self.service = VerificationService()
        self.cocycles = CocycleService()

    def test_constructions_associative(self):
        """Test H, Cl_{0,2} and the standard twisted algebras"""
        self.assertTrue(self.service.check_associativity(builders.quaternions()).passed)
        self.assertTrue(self.service.check_associativity(builders.clifford(0, 2)).passed)
        for n in range(1, 5):
            self.assertTrue(self.service.check_associativity(builders.twisted_group_algebra(n)).passed)

    def test_associative_exactly_when_cocycle(self):
        """Test associativity agrees with is_cocycle, planted non-cocycles included"""
        cases = [(n, standard_cocycle(n)) for n in range(1, 5)]
        cases += [(n, SignCocycle.from_exponent(n, f, name=f"planted{index}"))
                  for index, (n, f) in enumerate(planted_exponents())]
        rejected = 0
        for n, cocycle in cases:
            is_cocycle = self.cocycles.is_cocycle(cocycle).passed
            associative = self.service.check_associativity(builders.twisted_group_algebra(n, cocycle)).passed
            self.assertEqual(associative, is_cocycle, str(cocycle))
            rejected += not is_cocycle
        self.assertGreaterEqual(rejected, 3)

    def test_planted_witness(self):
        """Test the associativity witness of a1 b1 b2 is the cocycle witness"""
        planted = SignCocycle.from_exponent(2, planted_exponents()[0][1])
        report = self.service.check_associativity(builders.twisted_group_algebra(2, planted))
        self.assertFalse(report.passed)
        self.assertEqual(report.witness, (1, 1, 2))

    def test_extract_cocycle_reads_standard_signs(self):
        """Test the sign table read off twisted(3) is the standard cocycle"""
        algebra = builders.twisted_group_algebra(3)
        cocycle = self.service.extract_cocycle(algebra)
        standard = standard_cocycle(3)
        for a in range(8):
            for b in range(8):
                self.assertEqual(cocycle.sign_bits(a, b), standard.sign_bits(a, b))

    def test_twisted_cocycle_check(self):
        """Test the cocycle check on Clifford and non-twisted shapes"""
        self.assertTrue(self.service.check_twisted_cocycle(builders.clifford(1, 2)).passed)
        duals = GradedAlgebra.from_entries(
            RATIONAL, ["1", "d"], [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], [1, 0],
            degrees=[GroupElement.zero(1), GroupElement.zero(1)],
        )
        report = self.service.check_twisted_cocycle(duals)
        self.assertFalse(report.passed)
        self.assertIn("not a twisted group algebra", report.detail)

    def test_run_checks(self):
        """Test the named check runner"""
        reports = self.service.run_checks(builders.quaternions(), ['assoc', 'grading', 'gamma-comm', 'cocycle'])
        self.assertEqual([report.check for report in reports], ['assoc', 'grading', 'gamma-comm', 'cocycle'])
        self.assertTrue(all(reports))
        with self.assertRaises(PreconditionError):
            self.service.run_checks(builders.quaternions(), ['commutative'])

    @override_settings(ALGEBRA_LIMITS={'VERIFY_MAX_BASIS': 4})
    def test_associativity_cap(self):
        """Test the cubic loop cap"""
        with self.assertRaises(CapacityError):
            self.service.check_associativity(builders.clifford(3, 0))
