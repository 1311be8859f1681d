"""Labels for Clifford monomials and generator correspondences between algebras."""
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from core.exceptions import AlgebraError, PreconditionError
from algebras.models import AlgebraElement, GradedAlgebra

_MONOMIAL_PATTERN = re.compile(r'^(?:a\d+)+$')


@dataclass(frozen=True, order=True)
class CliffordLabel:
    """The monomial a_s1 ... a_sk for the subset S = {s1 < ... < sk} as a bit mask.

    Bit i - 1 of ``mask`` stands for generator a_i; the empty set is the unit.
    """

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0 or self.mask < 0 or self.mask >> self.n:
            raise AlgebraError(f"Mask {self.mask:#b} is not a subset of 1..{self.n}")

    def generators(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if (self.mask >> i) & 1)

    @property
    def text(self) -> str:
        indices = self.generators()
        return "".join(f"a{i}" for i in indices) if indices else "1"

    @classmethod
    def parse(cls, text: str, n: int) -> "CliffordLabel":
        """Parse ``1`` or ascending ``a1a3``."""
        if text == "1":
            return cls(n=n, mask=0)
        if not _MONOMIAL_PATTERN.match(text):
            raise AlgebraError(f"Not a Clifford monomial: {text!r}")
        indices = [int(part) for part in text.split("a")[1:]]
        if indices != sorted(set(indices)) or not all(1 <= i <= n for i in indices):
            raise AlgebraError(f"Generators of {text!r} must be ascending and within 1..{n}")
        return cls(n=n, mask=sum(1 << (i - 1) for i in indices))

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class GeneratorMap:
    """Pairs (generator label in A, image in B)."""

    source: GradedAlgebra
    target: GradedAlgebra
    pairs: Tuple[Tuple[str, AlgebraElement], ...]

    def __post_init__(self):
        for label, image in self.pairs:
            self.source.index_of(label)
            if image.algebra is not self.target:
                raise PreconditionError(f"Image of {label} is not an element of {self.target}")
            if self.target.is_graded and not image.is_homogeneous():
                raise PreconditionError(f"Image of {label} is not homogeneous in {self.target}")

    @classmethod
    def from_labels(
        cls,
        source: GradedAlgebra,
        target: GradedAlgebra,
        assignments: Sequence[Tuple[str, str]]
    ) -> "GeneratorMap":
        """Map each generator label of A to the basis element of B with the given label."""
        return cls(source=source, target=target, pairs=tuple(
            (left, target.basis_element_by_label(right)) for left, right in assignments
        ))

    @classmethod
    def parse(cls, source: GradedAlgebra, target: GradedAlgebra, text: str) -> "GeneratorMap":
        """Parse ``a1=e1,a2=e2``."""
        assignments = []
        for item in filter(None, (part.strip() for part in text.split(","))):
            left, sep, right = item.partition("=")
            if not sep or not left.strip() or not right.strip():
                raise AlgebraError(f"Malformed generator assignment {item!r}; expected label=label")
            assignments.append((left.strip(), right.strip()))
        if not assignments:
            raise AlgebraError("Empty generator map")
        return cls.from_labels(source, target, assignments)

    def __iter__(self) -> Iterator[Tuple[str, AlgebraElement]]:
        return iter(self.pairs)
