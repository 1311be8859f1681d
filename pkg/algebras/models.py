"""Finite-dimensional algebras with structure constants and an optional (Z2)^n degree map."""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from core.exceptions import ParentMismatchError, StructureError
from algebras.scalars import RATIONAL, domain_for, format_scalar
from groups.models import GroupElement

logger = logging.getLogger(__name__)

# (i, j) -> ((k, c_ij^k), ...) sorted by k, zero coefficients never stored
ProductTable = Dict[Tuple[int, int], Tuple[Tuple[int, object], ...]]


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    """An algebra given by a basis, sparse structure constants and a unit.

    ``degrees`` is None for an ungraded algebra (e.g. a matrix algebra in an
    arbitrary basis). Grading compatibility is a checkable property, not an
    invariant of construction; the unit law is checked here.
    """

    field: str
    labels: Tuple[str, ...]
    table: ProductTable
    unit: Tuple[object, ...]
    degrees: Optional[Tuple[GroupElement, ...]] = None
    n: Optional[int] = None
    name: str = ""
    domain: object = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'domain', domain_for(self.field))
        self._validate_basis()
        self._validate_unit()

    @classmethod
    def from_entries(
        cls,
        field: str,
        labels: Sequence[str],
        entries: Iterable[Tuple[int, int, int, object]],
        unit: Sequence[object],
        degrees: Optional[Sequence[GroupElement]] = None,
        n: Optional[int] = None,
        name: str = ""
    ) -> "GradedAlgebra":
        """Build from (i, j, k, c) entries meaning b_i b_j has coefficient c on b_k.

        Raises:
            StructureError: On out-of-range indices, duplicate (i, j, k)
                entries, zero coefficients or a unit that is not a unit
        """
        size = len(labels)
        domain = domain_for(field)
        table: Dict[Tuple[int, int], Dict[int, object]] = {}
        for i, j, k, c in entries:
            if not all(0 <= index < size for index in (i, j, k)):
                raise StructureError(f"Structure entry ({i}, {j}, {k}) out of range for dimension {size}")
            if c == domain.zero:
                raise StructureError(f"Structure entry ({i}, {j}, {k}) has a zero coefficient")
            terms = table.setdefault((i, j), {})
            if k in terms:
                raise StructureError(f"Duplicate structure entry ({i}, {j}, {k})")
            terms[k] = domain.convert(c)
        frozen = {pair: tuple(sorted(terms.items())) for pair, terms in table.items()}
        if degrees is not None:
            degrees = tuple(degrees)
            if n is None and degrees:
                n = degrees[0].n
        return cls(
            field=field,
            labels=tuple(labels),
            table=frozen,
            unit=tuple(domain.convert(c) for c in unit),
            degrees=degrees,
            n=n,
            name=name,
        )

    def _validate_basis(self) -> None:
        if not self.labels:
            raise StructureError("An algebra needs at least one basis element")
        if len(set(self.labels)) != len(self.labels):
            raise StructureError("Basis labels must be distinct")
        if len(self.unit) != self.dimension:
            raise StructureError(
                f"Unit has {len(self.unit)} coordinates for a basis of size {self.dimension}"
            )
        if self.degrees is not None:
            if len(self.degrees) != self.dimension:
                raise StructureError(
                    f"Degree map has {len(self.degrees)} entries for a basis of size {self.dimension}"
                )
            if any(degree.n != self.n for degree in self.degrees):
                raise StructureError(f"Every degree must lie in (Z2)^{self.n}")

    def _validate_unit(self) -> None:
        for i in range(self.dimension):
            basis = self.basis_coordinates(i)
            if self.multiply(self.unit, basis) != basis or self.multiply(basis, self.unit) != basis:
                raise StructureError(f"Unit does not act as identity on basis element {self.labels[i]}")

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def is_graded(self) -> bool:
        return self.degrees is not None

    def __str__(self) -> str:
        return self.name or f"algebra(dim {self.dimension})"

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructureError(f"No basis element labelled {label!r} in {self}") from None

    def zero_coordinates(self) -> List[object]:
        return [self.domain.zero] * self.dimension

    def basis_coordinates(self, i: int) -> Tuple[object, ...]:
        coordinates = self.zero_coordinates()
        coordinates[i] = self.domain.one
        return tuple(coordinates)

    def product_terms(self, i: int, j: int) -> Tuple[Tuple[int, object], ...]:
        """Sparse expansion of b_i b_j."""
        return self.table.get((i, j), ())

    def multiply(self, x: Sequence[object], y: Sequence[object]) -> Tuple[object, ...]:
        """Bilinear extension of the structure constants on coordinate vectors."""
        zero = self.domain.zero
        result = self.zero_coordinates()
        right = [(j, yj) for j, yj in enumerate(y) if yj != zero]
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            for j, yj in right:
                coefficient = xi * yj
                for k, c in self.table.get((i, j), ()):
                    result[k] += coefficient * c
        return tuple(result)

    def structure_entries(self) -> Iterator[Tuple[int, int, int, object]]:
        """(i, j, k, c) in deterministic (i, j, k) order."""
        for (i, j) in sorted(self.table):
            for k, c in self.table[(i, j)]:
                yield i, j, k, c

    def with_degrees(self, degrees: Optional[Sequence[GroupElement]], name: str = "") -> "GradedAlgebra":
        """The same structure constants under another degree map."""
        degrees = tuple(degrees) if degrees is not None else None
        return GradedAlgebra(
            field=self.field,
            labels=self.labels,
            table=self.table,
            unit=self.unit,
            degrees=degrees,
            n=degrees[0].n if degrees else None,
            name=name or self.name,
        )

    def element(self, coordinates: Sequence[object]) -> "AlgebraElement":
        return AlgebraElement(self, tuple(self.domain.convert(c) for c in coordinates))

    def basis_element(self, i: int) -> "AlgebraElement":
        return AlgebraElement(self, self.basis_coordinates(i))

    def basis_element_by_label(self, label: str) -> "AlgebraElement":
        return self.basis_element(self.index_of(label))

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, tuple(self.zero_coordinates()))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """A coordinate vector over an algebra's basis."""

    algebra: GradedAlgebra
    coordinates: Tuple[object, ...]

    def __post_init__(self):
        if len(self.coordinates) != self.algebra.dimension:
            raise StructureError(
                f"Element has {len(self.coordinates)} coordinates for a basis of size "
                f"{self.algebra.dimension}"
            )

    def _same_parent(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise ParentMismatchError("Elements belong to different algebras")

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.algebra is self.algebra and other.coordinates == self.coordinates

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coordinates))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_parent(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_parent(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coordinates, other.coordinates)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, tuple(-a for a in self.coordinates))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_parent(other)
        return AlgebraElement(self.algebra, self.algebra.multiply(self.coordinates, other.coordinates))

    def scale(self, scalar) -> "AlgebraElement":
        c = self.algebra.domain.convert(scalar)
        return AlgebraElement(self.algebra, tuple(c * a for a in self.coordinates))

    def is_zero(self) -> bool:
        return all(a == self.algebra.domain.zero for a in self.coordinates)

    def support(self) -> Tuple[int, ...]:
        zero = self.algebra.domain.zero
        return tuple(i for i, a in enumerate(self.coordinates) if a != zero)

    def degree(self) -> Optional[GroupElement]:
        """The common degree of the support; None when inhomogeneous.

        The zero element is homogeneous of every degree and reports the
        identity.
        """
        degrees = self.algebra.degrees
        if degrees is None:
            raise StructureError(f"{self.algebra} has no degree map")
        found = {degrees[i] for i in self.support()}
        if not found:
            return GroupElement.zero(self.algebra.n)
        return found.pop() if len(found) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.degree() is not None

    def __str__(self) -> str:
        return format_terms(self.algebra, self.coordinates)


def format_terms(algebra: GradedAlgebra, coordinates: Sequence[object]) -> str:
    """Signed sum of labelled terms: ``-k``, ``+a1a3``, ``+1/2*e1-i*e2``; ``0`` if zero."""
    pieces = []
    for index, c in enumerate(coordinates):
        if c == algebra.domain.zero:
            continue
        label = algebra.labels[index]
        text = format_scalar(c, algebra.field)
        if algebra.field != RATIONAL and c.x and c.y:
            sign, magnitude = "+", f"({text})"
        elif text.startswith("-"):
            sign, magnitude = "-", text[1:]
        else:
            sign, magnitude = "+", text
        pieces.append(sign + (label if magnitude == "1" else f"{magnitude}*{label}"))
    return "".join(pieces) if pieces else "0"
