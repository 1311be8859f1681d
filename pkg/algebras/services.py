"""Graded Algebra Service Layer - products and the structural verifiers"""
import logging
from typing import Callable, Dict, List, Optional, Tuple

from core.conf import require_at_most
from core.exceptions import ParentMismatchError, PreconditionError
from core.logging import log_duration
from core.reports import VerificationReport
from algebras.models import AlgebraElement, GradedAlgebra
from groups.models import GroupElement, SignCocycle
from groups.services import CocycleService

logger = logging.getLogger(__name__)

BetaFunction = Callable[[GroupElement, GroupElement], int]


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product of two elements of the same algebra."""
    if x.algebra is not y.algebra:
        raise ParentMismatchError("Cannot multiply elements of different algebras")
    return x * y


def homogeneous_components(algebra: GradedAlgebra) -> Dict[GroupElement, List[int]]:
    """Basis indices grouped by degree, degrees in bit order."""
    _require_degrees(algebra)
    components: Dict[GroupElement, List[int]] = {}
    for index, degree in enumerate(algebra.degrees):
        components.setdefault(degree, []).append(index)
    return dict(sorted(components.items()))


def _require_degrees(algebra: GradedAlgebra) -> None:
    if not algebra.is_graded:
        raise PreconditionError(f"{algebra} has no degree map")


class VerificationService:
    """Exhaustive checks of the grading, commutativity and associativity laws on basis tuples"""

    def __init__(self):
        """Initialize the service with the cocycle checker"""
        self.cocycles = CocycleService()

    def check_grading(self, algebra: GradedAlgebra) -> VerificationReport:
        """Check deg(k) = deg(i) + deg(j) whenever c_ij^k is nonzero.

        Returns:
            VerificationReport with witness (i, j, k) on failure

        Raises:
            PreconditionError: If the algebra has no degree map
        """
        _require_degrees(algebra)
        degrees = algebra.degrees
        for i, j, k, _ in algebra.structure_entries():
            if degrees[k] != degrees[i] + degrees[j]:
                return self._fail(
                    algebra, 'grading', (i, j, k),
                    f"{algebra.labels[i]}*{algebra.labels[j]} has a term on {algebra.labels[k]} "
                    f"of degree {degrees[k]}, expected {degrees[i] + degrees[j]}"
                )
        return self._pass(algebra, 'grading')

    def check_gamma_commutativity(self, algebra: GradedAlgebra) -> VerificationReport:
        """Check b_i b_j = (-1)^<deg i, deg j> b_j b_i for every basis pair.

        By bilinearity the basis pairs cover all homogeneous elements.

        Raises:
            PreconditionError: If the algebra is ungraded or fails check_grading
        """
        degrees = self._graded_degrees(algebra)
        return self._check_sign_commutation(
            algebra, 'gamma-comm',
            lambda i, j: -1 if degrees[i].scalar_product(degrees[j]) else 1
        )

    def check_beta_commutativity(self, algebra: GradedAlgebra, beta: BetaFunction) -> VerificationReport:
        """Check beta is symmetric on used degree pairs and b_i b_j = beta b_j b_i.

        Args:
            algebra: A graded algebra passing check_grading
            beta: Sign-valued function on pairs of degrees

        Raises:
            PreconditionError: If the algebra is ungraded or fails check_grading
        """
        degrees = self._graded_degrees(algebra)
        used = sorted(set(degrees))
        values: Dict[Tuple[GroupElement, GroupElement], int] = {}
        for g in used:
            for h in used:
                values[(g, h)] = beta(g, h)
                if values[(g, h)] not in (1, -1):
                    raise PreconditionError(f"beta({g},{h}) = {values[(g, h)]} is not a sign")
        for g in used:
            for h in used:
                if values[(g, h)] != values[(h, g)]:
                    return self._fail(
                        algebra, 'beta-comm', (g, h),
                        f"beta is not symmetric: beta({g},{h}) != beta({h},{g})"
                    )
        return self._check_sign_commutation(
            algebra, 'beta-comm', lambda i, j: values[(degrees[i], degrees[j])]
        )

    def check_associativity(self, algebra: GradedAlgebra) -> VerificationReport:
        """Check (b_i b_j) b_k = b_i (b_j b_k) for all basis triples.

        Raises:
            CapacityError: If the basis is larger than the verifier cap
        """
        require_at_most(algebra.dimension, 'VERIFY_MAX_BASIS', "Basis size")
        size = algebra.dimension
        zero = algebra.domain.zero
        with log_duration(logger, f"check_associativity({algebra})"):
            for i in range(size):
                for j in range(size):
                    left_terms = algebra.product_terms(i, j)
                    for k in range(size):
                        left: Dict[int, object] = {}
                        for m, c in left_terms:
                            for r, d in algebra.product_terms(m, k):
                                left[r] = left.get(r, zero) + c * d
                        right: Dict[int, object] = {}
                        for m, c in algebra.product_terms(j, k):
                            for r, d in algebra.product_terms(i, m):
                                right[r] = right.get(r, zero) + c * d
                        if _strip(left, zero) != _strip(right, zero):
                            return self._fail(
                                algebra, 'assoc', (i, j, k),
                                f"({algebra.labels[i]}*{algebra.labels[j]})*{algebra.labels[k]} != "
                                f"{algebra.labels[i]}*({algebra.labels[j]}*{algebra.labels[k]})"
                            )
        return self._pass(algebra, 'assoc')

    def extract_cocycle(self, algebra: GradedAlgebra) -> Optional[SignCocycle]:
        """Read F(g, h) off an algebra of twisted-group-algebra shape.

        The shape requires distinct degrees and every basis product b_g b_h to
        be +1 or -1 times the basis element of degree g + h. Returns None when
        the algebra does not have that shape.
        """
        _require_degrees(algebra)
        degrees = algebra.degrees
        position = {degree: index for index, degree in enumerate(degrees)}
        if len(position) != algebra.dimension:
            return None
        one, minus_one = algebra.domain.one, -algebra.domain.one
        signs = {}
        for i, g in enumerate(degrees):
            for j, h in enumerate(degrees):
                target = position.get(g + h)
                terms = algebra.product_terms(i, j)
                if target is None or len(terms) != 1 or terms[0][0] != target:
                    return None
                if terms[0][1] not in (one, minus_one):
                    return None
                signs[(g.bits, h.bits)] = 1 if terms[0][1] == one else -1
        return SignCocycle.from_table(algebra.n, signs, name=f"signs of {algebra}")

    def check_twisted_cocycle(self, algebra: GradedAlgebra) -> VerificationReport:
        """Run the cocycle identity on the sign function read off the algebra."""
        cocycle = self.extract_cocycle(algebra)
        if cocycle is None:
            return self._fail(
                algebra, 'cocycle', (),
                "not a twisted group algebra (products are not single signed basis elements)"
            )
        report = self.cocycles.is_cocycle(cocycle, elements=algebra.degrees)
        if not report.passed:
            logger.warning(f"{algebra}: sign function violates the cocycle identity")
        return report

    def run_checks(self, algebra: GradedAlgebra, checks: List[str]) -> List[VerificationReport]:
        """Run named checks ('assoc', 'grading', 'gamma-comm', 'cocycle') in order.

        gamma-comm is reported as failed, not raised, when grading fails.
        """
        reports = []
        grading: Optional[VerificationReport] = None
        for check in checks:
            if check == 'assoc':
                reports.append(self.check_associativity(algebra))
            elif check == 'grading':
                grading = self.check_grading(algebra)
                reports.append(grading)
            elif check == 'gamma-comm':
                grading = grading or self.check_grading(algebra)
                if not grading.passed:
                    reports.append(VerificationReport.failure(
                        'gamma-comm', grading.witness, "skipped: grading fails"
                    ))
                else:
                    reports.append(self.check_gamma_commutativity(algebra))
            elif check == 'cocycle':
                reports.append(self.check_twisted_cocycle(algebra))
            else:
                raise PreconditionError(f"Unknown check {check!r}")
        return reports

    # Helpers
    def _graded_degrees(self, algebra: GradedAlgebra) -> Tuple[GroupElement, ...]:
        grading = self.check_grading(algebra)
        if not grading.passed:
            raise PreconditionError(
                f"{algebra} is not graded by its degree map: {grading.summary()}"
            )
        return algebra.degrees

    def _check_sign_commutation(
        self,
        algebra: GradedAlgebra,
        check: str,
        sign: Callable[[int, int], int]
    ) -> VerificationReport:
        size = algebra.dimension
        for i in range(size):
            for j in range(size):
                forward = dict(algebra.product_terms(i, j))
                backward = algebra.product_terms(j, i)
                s = sign(i, j)
                expected = {k: c * s for k, c in backward}
                if forward != expected:
                    return self._fail(
                        algebra, check, (i, j),
                        f"{algebra.labels[i]}*{algebra.labels[j]} != "
                        f"{'+' if s == 1 else '-'}{algebra.labels[j]}*{algebra.labels[i]}"
                    )
        return self._pass(algebra, check)

    def _pass(self, algebra: GradedAlgebra, check: str) -> VerificationReport:
        logger.info(f"{check} holds on {algebra}")
        return VerificationReport.ok(check)

    def _fail(self, algebra: GradedAlgebra, check: str, witness: tuple, detail: str) -> VerificationReport:
        logger.warning(f"{check} fails on {algebra} at {witness}: {detail}")
        return VerificationReport.failure(check, witness, detail)


def _strip(terms: Dict[int, object], zero) -> Dict[int, object]:
    return {k: c for k, c in terms.items() if c != zero}

