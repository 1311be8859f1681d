"""Result types of the structure analysis."""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from core.exceptions import ParentMismatchError
from algebras.models import AlgebraElement, GradedAlgebra, format_terms
from groups.models import GroupElement


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of an algebra held as the nonzero rows of its reduced echelon form."""

    algebra: GradedAlgebra
    rows: Tuple[Tuple[object, ...], ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, algebra: GradedAlgebra, vectors: Iterable[Sequence[object]]) -> "Subspace":
        vectors = [[algebra.domain.convert(c) for c in vector] for vector in vectors]
        if not vectors:
            return cls.zero(algebra)
        matrix = DomainMatrix(vectors, (len(vectors), algebra.dimension), algebra.domain)
        reduced, pivots = matrix.rref()
        rows = reduced.to_list()[:len(pivots)]
        return cls(algebra=algebra, rows=tuple(tuple(row) for row in rows), pivots=tuple(pivots))

    @classmethod
    def zero(cls, algebra: GradedAlgebra) -> "Subspace":
        return cls(algebra=algebra, rows=(), pivots=())

    @classmethod
    def whole(cls, algebra: GradedAlgebra) -> "Subspace":
        return cls.span(algebra, [algebra.basis_coordinates(i) for i in range(algebra.dimension)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return other.algebra is self.algebra and other.rows == self.rows

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.rows))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_whole(self) -> bool:
        return self.dimension == self.algebra.dimension

    def contains(self, vector) -> bool:
        """Exact membership test by reduction against the echelon rows."""
        if isinstance(vector, AlgebraElement):
            if vector.algebra is not self.algebra:
                raise ParentMismatchError("Element belongs to a different algebra")
            vector = vector.coordinates
        zero = self.algebra.domain.zero
        remainder = list(vector)
        for pivot, row in zip(self.pivots, self.rows):
            factor = remainder[pivot]
            if factor != zero:
                remainder = [r - factor * x for r, x in zip(remainder, row)]
        return all(r == zero for r in remainder)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.rows)

    def elements(self) -> List[AlgebraElement]:
        return [AlgebraElement(self.algebra, row) for row in self.rows]

    def __str__(self) -> str:
        if not self.rows:
            return "span{}"
        return "span{" + ", ".join(format_terms(self.algebra, row).lstrip("+") for row in self.rows) + "}"


SIMPLE = 'simple'
NOT_SIMPLE = 'not_simple'
INDETERMINATE = 'indeterminate'


@dataclass(frozen=True)
class SimplicityVerdict:
    """Tri-state outcome of is_simple; ``witness`` is a proper nonzero ideal for not_simple."""

    status: str
    reason: str
    witness: Optional[Subspace] = None

    @property
    def is_simple(self) -> bool:
        return self.status == SIMPLE

    def summary(self) -> str:
        line = f"{self.status} ({self.reason})"
        if self.witness is not None:
            line += f" witness {self.witness}"
        return line


GRADED_SIMPLE = 'graded_simple'
NOT_GRADED_SIMPLE = 'not_graded_simple'
UNSUPPORTED = 'unsupported'


@dataclass(frozen=True)
class GradedSimplicityVerdict:
    """``witness`` is the basis index whose ideal is proper."""

    status: str
    witness: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.status == GRADED_SIMPLE

    def summary(self) -> str:
        return f"{self.status}" + (f" ({self.detail})" if self.detail else "")


FOUND = 'found'
NONE_WITHIN_BOUND = 'none within bound'
BASIS_OBSTRUCTION = 'basis obstruction'
BOUND_EXHAUSTED = 'bound exhausted'


@dataclass(frozen=True)
class SearchOutcome:
    """Result of grading_search.

    ``degrees`` is set when found; ``witness`` is the basis pair (i, j) for
    a basis obstruction.
    """

    status: str
    m: Optional[int] = None
    degrees: Optional[Tuple[GroupElement, ...]] = None
    witness: Optional[Tuple[int, int]] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND
