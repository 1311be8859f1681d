"""Construction Service Layer - builders for every algebra in the catalogue"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from core.conf import require_at_most
from core.exceptions import AlgebraError, DimensionMismatchError, PreconditionError, StructureError
from core.reports import VerificationReport
from algebras.models import GradedAlgebra
from algebras.scalars import GAUSSIAN, RATIONAL, domain_for, to_scalar
from constructions.models import CliffordLabel, GeneratorMap
from groups.models import GroupElement, SignCocycle
from groups.services import enumerate_elements, enumerate_even, standard_cocycle

logger = logging.getLogger(__name__)

QUATERNION_LABELS = ("1", "i", "j", "k")
QUATERNION_DEGREES = ((0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0))
# (left, right) -> (sign, result) for the Hamilton relations
_HAMILTON = {
    ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
    ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
}


def group_element_label(element: GroupElement) -> str:
    """``1`` for the identity, else the product of e_i over the 1-entries: ``e1e3``."""
    indices = [i + 1 for i, bit in enumerate(element.coordinates()) if bit]
    return "".join(f"e{i}" for i in indices) if indices else "1"


def clifford_sign(s: int, t: int, p: int) -> int:
    """Sign of a_S a_T = sign a_(S xor T) by inversion counting.

    Each pair (s, t) in S x T with s > t is one exchange; each shared
    generator a_i with i > p squares to -1.
    """
    inversions = 0
    rest = t
    while rest:
        low = rest & -rest
        inversions += (s & ~((low << 1) - 1)).bit_count()
        rest ^= low
    negative_squares = (s & t) >> p
    return -1 if (inversions + negative_squares.bit_count()) & 1 else 1


def clifford_monomial_degree(mask: int, n: int) -> GroupElement:
    """Sum of the generator degrees over the monomial's generators."""
    return GroupElement(n=n + 1, bits=mask | ((mask.bit_count() & 1) << n))


def _to_domain_matrix(rows: Sequence[Sequence[object]], m: int, field: str) -> DomainMatrix:
    if len(rows) != m or any(len(row) != m for row in rows):
        raise StructureError(f"Every basis matrix must be {m}x{m}")
    return DomainMatrix(
        [[to_scalar(entry, field) for entry in row] for row in rows], (m, m), domain_for(field)
    )


def _flatten(matrix: DomainMatrix) -> List[object]:
    return [entry for row in matrix.to_list() for entry in row]


class ConstructionService:
    """Builders for twisted group algebras, Clifford algebras, H and matrix algebras"""

    def twisted_group_algebra(
        self,
        n: int,
        cocycle: Optional[SignCocycle] = None,
        field: str = RATIONAL
    ) -> GradedAlgebra:
        """The group algebra of (Z2)^n with g ._F h = F(g, h) (g + h).

        Args:
            n: Group dimension
            cocycle: Sign function F on (Z2)^n; the standard cocycle when omitted
            field: Field tag

        Raises:
            CapacityError: If n is above the twisted-algebra cap
            DimensionMismatchError: If F lives on another dimension
        """
        require_at_most(n, 'TWISTED_MAX_DIMENSION', "Twisted group dimension")
        cocycle = cocycle or standard_cocycle(n)
        if cocycle.n != n:
            raise DimensionMismatchError(f"Cocycle on (Z2)^{cocycle.n} used for (Z2)^{n}")
        elements = enumerate_elements(n)
        algebra = self._twisted_on(elements, cocycle, field, name=f"twisted(n={n}, {cocycle}, {field})")
        logger.info(f"Algebra built: {algebra} (dim {algebra.dimension})")
        return algebra

    def even_twisted_subalgebra(
        self,
        n_plus_1: int,
        cocycle: Optional[SignCocycle] = None,
        field: str = RATIONAL
    ) -> GradedAlgebra:
        """The twisted product restricted to the even subgroup of (Z2)^(n+1)."""
        require_at_most(n_plus_1, 'TWISTED_MAX_DIMENSION', "Twisted group dimension")
        cocycle = cocycle or standard_cocycle(n_plus_1)
        if cocycle.n != n_plus_1:
            raise DimensionMismatchError(f"Cocycle on (Z2)^{cocycle.n} used for (Z2)^{n_plus_1}")
        elements = enumerate_even(n_plus_1)
        algebra = self._twisted_on(
            elements, cocycle, field, name=f"even-twisted(n+1={n_plus_1}, {cocycle}, {field})"
        )
        logger.info(f"Algebra built: {algebra} (dim {algebra.dimension})")
        return algebra

    def _twisted_on(
        self,
        elements: Sequence[GroupElement],
        cocycle: SignCocycle,
        field: str,
        name: str
    ) -> GradedAlgebra:
        domain = domain_for(field)
        one, minus_one = domain.one, -domain.one
        position = {element.bits: index for index, element in enumerate(elements)}
        entries = []
        for i, g in enumerate(elements):
            for j, h in enumerate(elements):
                sign = cocycle.sign_bits(g.bits, h.bits)
                entries.append((i, j, position[g.bits ^ h.bits], one if sign == 1 else minus_one))
        unit = [domain.zero] * len(elements)
        unit[position[0]] = one
        return GradedAlgebra.from_entries(
            field=field,
            labels=[group_element_label(g) for g in elements],
            entries=entries,
            unit=unit,
            degrees=elements,
            n=cocycle.n,
            name=name,
        )

    def clifford_degree_map(self, n: int) -> List[GroupElement]:
        """Generator degrees e_i + e_(n+1) in (Z2)^(n+1)."""
        require_at_most(n, 'CLIFFORD_MAX_GENERATORS', "Clifford generator count")
        return [GroupElement(n=n + 1, bits=(1 << i) | (1 << n)) for i in range(n)]

    def clifford(self, p: int, q: int, field: str = RATIONAL, name: str = "") -> GradedAlgebra:
        """Cl_{p,q}: generators a_1..a_p square to +1, a_(p+1)..a_n to -1.

        Raises:
            AlgebraError: If p or q is negative
            CapacityError: If p + q is above the generator cap
        """
        if p < 0 or q < 0:
            raise AlgebraError(f"Clifford signature must be non-negative, got ({p}, {q})")
        n = p + q
        require_at_most(n, 'CLIFFORD_MAX_GENERATORS', "Clifford generator count")
        domain = domain_for(field)
        one, minus_one = domain.one, -domain.one
        size = 1 << n
        entries = [
            (s, t, s ^ t, one if clifford_sign(s, t, p) == 1 else minus_one)
            for s in range(size) for t in range(size)
        ]
        unit = [domain.zero] * size
        unit[0] = one
        algebra = GradedAlgebra.from_entries(
            field=field,
            labels=[CliffordLabel(n=n, mask=mask).text for mask in range(size)],
            entries=entries,
            unit=unit,
            degrees=[clifford_monomial_degree(mask, n) for mask in range(size)],
            n=n + 1,
            name=name or f"Cl_{{{p},{q}}}" + ("" if field == RATIONAL else f" over {field}"),
        )
        logger.info(f"Algebra built: {algebra} (dim {algebra.dimension})")
        return algebra

    def clifford_complex(self, n: int) -> GradedAlgebra:
        """Cl_n(C) in the presentation where every generator squares to +1."""
        return self.clifford(n, 0, field=GAUSSIAN, name=f"Cl_{n}(C)")

    def quaternions(self, field: str = RATIONAL) -> GradedAlgebra:
        """H with basis 1, i, j, k and triple degrees (0,0,0), (0,1,1), (1,0,1), (1,1,0)."""
        domain = domain_for(field)
        index = {label: position for position, label in enumerate(QUATERNION_LABELS)}
        entries = []
        for left in QUATERNION_LABELS:
            for right in QUATERNION_LABELS:
                if left == "1" or right == "1":
                    sign, result = 1, right if left == "1" else left
                else:
                    sign, result = _HAMILTON[(left, right)]
                entries.append((index[left], index[right], index[result], domain(sign)))
        algebra = GradedAlgebra.from_entries(
            field=field,
            labels=QUATERNION_LABELS,
            entries=entries,
            unit=[1, 0, 0, 0],
            degrees=[GroupElement.from_coordinates(d) for d in QUATERNION_DEGREES],
            name="H" if field == RATIONAL else f"H over {field}",
        )
        logger.info(f"Algebra built: {algebra} (dim 4)")
        return algebra

    def matrix_algebra(
        self,
        m: int,
        basis_elements: Sequence[Sequence[Sequence[object]]],
        field: str = RATIONAL,
        labels: Optional[Sequence[str]] = None,
        name: str = ""
    ) -> GradedAlgebra:
        """Structure constants of M_m in the given basis, by exact linear solves.

        The degree map is left unset.

        Raises:
            StructureError: If the basis has the wrong size or is linearly dependent
        """
        if m < 1:
            raise AlgebraError(f"Matrix size must be positive, got {m}")
        size = m * m
        if len(basis_elements) != size:
            raise StructureError(f"M_{m} needs {size} basis matrices, got {len(basis_elements)}")
        domain = domain_for(field)
        matrices = [_to_domain_matrix(matrix, m, field) for matrix in basis_elements]
        flattened = [_flatten(matrix) for matrix in matrices]
        columns = DomainMatrix(
            [[entries[r] for entries in flattened] for r in range(size)], (size, size), domain
        )
        if columns.rank() < size:
            raise StructureError(f"Basis matrices of M_{m} are linearly dependent")
        inverse = columns.inv()

        def coordinates_of(matrix: DomainMatrix) -> List[object]:
            vector = DomainMatrix([[entry] for entry in _flatten(matrix)], (size, 1), domain)
            return [row[0] for row in inverse.matmul(vector).to_list()]

        entries = []
        for i, left in enumerate(matrices):
            for j, right in enumerate(matrices):
                for k, c in enumerate(coordinates_of(left.matmul(right))):
                    if c != domain.zero:
                        entries.append((i, j, k, c))
        algebra = GradedAlgebra.from_entries(
            field=field,
            labels=list(labels) if labels else [f"m{i + 1}" for i in range(size)],
            entries=entries,
            unit=coordinates_of(DomainMatrix.eye(m, domain)),
            name=name or f"M_{m}",
        )
        logger.info(f"Algebra built: {algebra} (dim {size}, ungraded)")
        return algebra


class IsomorphismService:
    """Checks that a generator assignment extends to an algebra isomorphism"""

    def check_generator_iso(self, generator_map: GeneratorMap) -> VerificationReport:
        """Extend the map multiplicatively and compare all structure constants.

        Images of the remaining basis elements are derived from products of
        basis elements whose images are known and whose product in A is a
        single nonzero multiple of a basis element.

        Returns:
            VerificationReport; witness is (i, j) for a structure mismatch,
            the unmapped basis indices, or empty for rank failures

        Raises:
            PreconditionError: If the two algebras are over different fields
        """
        source, target = generator_map.source, generator_map.target
        if source.field != target.field:
            raise PreconditionError(
                f"Cannot compare {source} over {source.field} with {target} over {target.field}"
            )
        images = self._extend(generator_map)
        missing = tuple(i for i in range(source.dimension) if i not in images)
        if missing:
            return self._fail(
                'iso', missing,
                f"generators do not reach {', '.join(source.labels[i] for i in missing)}"
            )

        rows = [list(images[i]) for i in range(source.dimension)]
        rank = DomainMatrix(rows, (source.dimension, target.dimension), target.domain).rank()
        if rank < source.dimension:
            return self._fail('iso', (), "images are linearly dependent")
        if rank < target.dimension:
            return self._fail('iso', (), "not an isomorphism onto: images do not span the target")

        for i in range(source.dimension):
            for j in range(source.dimension):
                transported = self._combine(target, images, source.product_terms(i, j))
                actual = target.multiply(images[i], images[j])
                if transported != actual:
                    return self._fail(
                        'iso', (i, j),
                        f"phi({source.labels[i]})*phi({source.labels[j]}) does not match "
                        f"phi({source.labels[i]}*{source.labels[j]})"
                    )

        unit_image = self._combine(
            target, images, [(k, c) for k, c in enumerate(source.unit) if c != source.domain.zero]
        )
        if unit_image != target.unit:
            return self._fail('iso', (), "unit does not map to unit")

        logger.info(f"Generator map {source} -> {target} is an isomorphism")
        return VerificationReport.ok('iso', f"{source.dimension} basis images")

    def _extend(self, generator_map: GeneratorMap) -> Dict[int, Tuple[object, ...]]:
        source, target = generator_map.source, generator_map.target
        images: Dict[int, Tuple[object, ...]] = {}
        unit_support = [k for k, c in enumerate(source.unit) if c != source.domain.zero]
        if len(unit_support) == 1 and source.unit[unit_support[0]] == source.domain.one:
            images[unit_support[0]] = target.unit
        for label, image in generator_map:
            images[source.index_of(label)] = image.coordinates
        changed = True
        while changed:
            changed = False
            known = sorted(images)
            for u in known:
                for v in known:
                    terms = source.product_terms(u, v)
                    if len(terms) != 1 or terms[0][0] in images:
                        continue
                    k, c = terms[0]
                    product = target.multiply(images[u], images[v])
                    inverse = target.domain.quo(target.domain.one, target.domain.convert(c))
                    images[k] = tuple(inverse * x for x in product)
                    changed = True
        return images

    def _combine(self, target: GradedAlgebra, images, terms) -> Tuple[object, ...]:
        result = target.zero_coordinates()
        for k, c in terms:
            for position, x in enumerate(images[k]):
                result[position] += c * x
        return tuple(result)

    def _fail(self, check: str, witness: tuple, detail: str) -> VerificationReport:
        logger.warning(f"Generator map rejected: {detail}")
        return VerificationReport.failure(check, witness, detail)
