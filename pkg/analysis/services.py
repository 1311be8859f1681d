"""Structure Analysis Service Layer - ideals, center, radical, minimal polynomials, simplicity"""
import logging
from typing import Iterator, List, Sequence

from sympy import Poly, Symbol
from sympy.polys.matrices import DomainMatrix

from core.conf import require_at_most
from core.exceptions import ParentMismatchError
from algebras.models import AlgebraElement, GradedAlgebra
from algebras.services import homogeneous_components
from analysis.models import (
    GRADED_SIMPLE,
    INDETERMINATE,
    NOT_GRADED_SIMPLE,
    NOT_SIMPLE,
    SIMPLE,
    UNSUPPORTED,
    GradedSimplicityVerdict,
    SimplicityVerdict,
    Subspace,
)

logger = logging.getLogger(__name__)

t = Symbol('t')


def _nullspace_rows(rows: List[List[object]], columns: int, domain) -> List[List[object]]:
    if not rows:
        return [[domain.one if r == c else domain.zero for c in range(columns)] for r in range(columns)]
    return DomainMatrix(rows, (len(rows), columns), domain).nullspace().to_list()


def _center_probes(central: Subspace) -> Iterator[AlgebraElement]:
    """Echelon rows, their sum, then sum (k+1)^i z_i for k = 1, 2, ..."""
    elements = central.elements()
    yield from elements
    algebra = central.algebra
    total = algebra.zero()
    for element in elements:
        total = total + element
    yield total
    for k in range(1, central.dimension + 2):
        combination = algebra.zero()
        for power, element in enumerate(elements):
            combination = combination + element.scale((k + 1) ** power)
        yield combination


class StructureAnalysisService:
    """Ideals, center, radical and the simplicity decision for one algebra at a time"""

    def _validate_size(self, algebra: GradedAlgebra) -> None:
        require_at_most(algebra.dimension, 'VERIFY_MAX_BASIS', f"Basis size of {algebra}")

    def _validate_parent(self, algebra: GradedAlgebra, elements: Sequence[AlgebraElement]) -> None:
        for element in elements:
            if element.algebra is not algebra:
                raise ParentMismatchError(f"Element {element} does not belong to {algebra}")

    def ideal_closure(self, algebra: GradedAlgebra, generators: Sequence[AlgebraElement]) -> Subspace:
        """Smallest two-sided ideal containing the generators.

        Multiplies the current echelon basis by every basis element on both
        sides until the dimension stops growing.
        """
        self._validate_size(algebra)
        self._validate_parent(algebra, generators)
        current = Subspace.span(algebra, [g.coordinates for g in generators])
        while True:
            vectors = list(current.rows)
            for row in current.rows:
                for i in range(algebra.dimension):
                    basis = algebra.basis_coordinates(i)
                    vectors.append(algebra.multiply(basis, row))
                    vectors.append(algebra.multiply(row, basis))
            extended = Subspace.span(algebra, vectors)
            if extended.dimension == current.dimension:
                return current
            current = extended

    def is_graded_simple(self, algebra: GradedAlgebra) -> GradedSimplicityVerdict:
        """Every basis element generates the whole algebra as an ideal.

        Complete only when each homogeneous component is at most
        one-dimensional; otherwise the verdict is ``unsupported``.

        Raises:
            PreconditionError: If the algebra has no degree map
        """
        self._validate_size(algebra)
        for degree, indices in homogeneous_components(algebra).items():
            if len(indices) > 1:
                return GradedSimplicityVerdict(
                    UNSUPPORTED, detail=f"component of degree {degree} has dimension {len(indices)}"
                )
        for i in range(algebra.dimension):
            ideal = self.ideal_closure(algebra, [algebra.basis_element(i)])
            if not ideal.is_whole():
                logger.info(f"{algebra} is not graded-simple: {algebra.labels[i]} generates {ideal}")
                return GradedSimplicityVerdict(
                    NOT_GRADED_SIMPLE, witness=i, detail=f"{algebra.labels[i]} generates {ideal}"
                )
        return GradedSimplicityVerdict(GRADED_SIMPLE)

    def center(self, algebra: GradedAlgebra) -> Subspace:
        """Solutions x of x b_i - b_i x = 0 for every basis element b_i."""
        self._validate_size(algebra)
        size, zero = algebra.dimension, algebra.domain.zero
        constraints = Subspace.zero(algebra)
        # one block per b_i: row l holds the b_l coefficient of x b_i - b_i x as a function of x
        for i in range(size):
            block = [[zero] * size for _ in range(size)]
            for k in range(size):
                for l, c in algebra.product_terms(k, i):
                    block[l][k] += c
                for l, c in algebra.product_terms(i, k):
                    block[l][k] -= c
            rows = [row for row in block if any(entry != zero for entry in row)]
            constraints = Subspace.span(algebra, list(constraints.rows) + rows)
        return Subspace.span(
            algebra, _nullspace_rows([list(row) for row in constraints.rows], size, algebra.domain)
        )

    def trace_form(self, algebra: GradedAlgebra) -> List[List[object]]:
        """T[i][j] = trace(L_i L_j) for the left multiplications L_i."""
        self._validate_size(algebra)
        size = algebra.dimension
        # coefficient of b_m in b_i b_l, keyed (i, l) -> {m: c}
        left = {pair: dict(terms) for pair, terms in algebra.table.items()}
        form = [[algebra.domain.zero] * size for _ in range(size)]
        for i in range(size):
            for j in range(i, size):
                total = algebra.domain.zero
                for l in range(size):
                    for m, c in left.get((i, l), {}).items():
                        d = left.get((j, m), {}).get(l)
                        if d is not None:
                            total += c * d
                form[i][j] = form[j][i] = total
        return form

    def radical(self, algebra: GradedAlgebra) -> Subspace:
        """Kernel of the trace form, which is the radical in characteristic 0."""
        form = self.trace_form(algebra)
        return Subspace.span(algebra, _nullspace_rows(form, algebra.dimension, algebra.domain))

    def minimal_polynomial(self, algebra: GradedAlgebra, x: AlgebraElement) -> Poly:
        """Least-degree monic m with m(x) = 0, over the algebra's scalar domain."""
        self._validate_size(algebra)
        self._validate_parent(algebra, [x])
        domain = algebra.domain
        powers = [list(algebra.unit)]
        while True:
            powers.append(list(algebra.multiply(powers[-1], x.coordinates)))
            # c_0 p_0 + ... + c_k p_k = 0 on the columns
            columns = DomainMatrix(powers, (len(powers), algebra.dimension), domain).transpose()
            relations = columns.nullspace().to_list()
            if relations:
                relation = relations[0]
                leading = relation[-1]
                expression = sum(
                    domain.to_sympy(domain.quo(c, leading)) * t ** power for power, c in enumerate(relation)
                )
                return Poly(expression, t, domain=domain)

    def evaluate_polynomial(self, algebra: GradedAlgebra, polynomial: Poly, x: AlgebraElement) -> AlgebraElement:
        """Horner evaluation of polynomial at x, constants times the unit."""
        domain = algebra.domain
        result = algebra.zero()
        for coefficient in polynomial.all_coeffs():
            result = result * x + algebra.one().scale(domain.from_sympy(coefficient))
        return result

    def is_simple(self, algebra: GradedAlgebra) -> SimplicityVerdict:
        """Decide simplicity: radical, then center dimension, then the center as a field.

        A nonzero radical is a proper ideal. With zero radical and a
        one-dimensional center the algebra is central simple. Otherwise a
        central element whose minimal polynomial has two coprime factors gives
        a proper ideal, and one whose minimal polynomial is irreducible of
        degree dim Z shows the center is a field.
        """
        nilpotent = self.radical(algebra)
        if not nilpotent.is_zero():
            logger.info(f"{algebra} is not simple: radical {nilpotent}")
            return SimplicityVerdict(NOT_SIMPLE, "nonzero radical", nilpotent)

        central = self.center(algebra)
        if central.dimension == 1:
            return SimplicityVerdict(SIMPLE, "semisimple with one-dimensional center")

        for z in _center_probes(central):
            polynomial = self.minimal_polynomial(algebra, z)
            _, factors = polynomial.factor_list()
            if len(factors) > 1:
                first, exponent = factors[0]
                cofactor = polynomial.quo(first ** exponent)
                witness = self.ideal_closure(algebra, [self.evaluate_polynomial(algebra, cofactor, z)])
                if not witness.is_zero() and not witness.is_whole():
                    logger.info(f"{algebra} is not simple: minimal polynomial {polynomial.as_expr()} splits")
                    return SimplicityVerdict(
                        NOT_SIMPLE, f"central element with split minimal polynomial {polynomial.as_expr()}", witness
                    )
            elif factors[0][1] == 1 and polynomial.degree() == central.dimension:
                return SimplicityVerdict(
                    SIMPLE, f"center is a field: minimal polynomial {polynomial.as_expr()} is irreducible"
                )

        logger.warning(f"Simplicity of {algebra} undecided after probing the center")
        return SimplicityVerdict(INDETERMINATE, f"center of dimension {central.dimension} not decided")
