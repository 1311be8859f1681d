"""Domain types for the group (Z2)^n, bilinear forms on it and sign cocycles.

A GroupElement packs its coordinates into one int: bit i is coordinate i+1
of the printed tuple, so ``(0,1,1)`` has bits 0b110.
"""
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Tuple

from core.conf import get_limit
from core.exceptions import AlgebraError, DimensionMismatchError

_TUPLE_PATTERN = re.compile(r'^\(([01](?:,[01])*)\)$')


def _check_dimension(n: int) -> None:
    limit = get_limit('GROUP_MAX_DIMENSION')
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= limit:
        raise AlgebraError(f"Dimension must be between 1 and {limit}, got {n!r}")


@dataclass(frozen=True, order=True)
class GroupElement:
    """An element of (Z2)^n."""

    n: int
    bits: int

    def __post_init__(self):
        _check_dimension(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise AlgebraError(f"Bits {self.bits:#b} do not fit in dimension {self.n}")

    @classmethod
    def zero(cls, n: int) -> "GroupElement":
        return cls(n=n, bits=0)

    @classmethod
    def basis_vector(cls, i: int, n: int) -> "GroupElement":
        """The vector with a single 1 at coordinate ``i`` (1-indexed)."""
        if not 1 <= i <= n:
            raise AlgebraError(f"Coordinate {i} out of range 1..{n}")
        return cls(n=n, bits=1 << (i - 1))

    @classmethod
    def from_coordinates(cls, coordinates: Sequence[int]) -> "GroupElement":
        """Build from a tuple in printed order, leftmost coordinate first."""
        bits = 0
        for position, value in enumerate(coordinates):
            if value not in (0, 1):
                raise AlgebraError(f"Coordinates must be 0 or 1, got {value!r}")
            bits |= value << position
        return cls(n=len(coordinates), bits=bits)

    @classmethod
    def parse(cls, text: str) -> "GroupElement":
        """Parse the exact text form ``(0,1,1)``."""
        match = _TUPLE_PATTERN.match(text)
        if not match:
            raise AlgebraError(f"Not a group element: {text!r}")
        return cls.from_coordinates([int(c) for c in match.group(1).split(',')])

    def coordinates(self) -> Tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coordinates()) + ")"

    def _same_dimension(self, other: "GroupElement") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(
                f"Group elements of dimensions {self.n} and {other.n} cannot be combined"
            )

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._same_dimension(other)
        return GroupElement(n=self.n, bits=self.bits ^ other.bits)

    def scalar_product(self, other: "GroupElement") -> int:
        self._same_dimension(other)
        return (self.bits & other.bits).bit_count() & 1

    @property
    def parity(self) -> int:
        return self.bits.bit_count() & 1


@dataclass(frozen=True)
class BilinearFormZ2:
    """A bilinear form f(a, b) = sum m_ij a_i b_j mod 2 on (Z2)^n.

    ``matrix[i][j]`` is the coefficient of a_(i+1) b_(j+1).
    """

    n: int
    matrix: Tuple[Tuple[int, ...], ...]
    _row_masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _check_dimension(self.n)
        if len(self.matrix) != self.n or any(len(row) != self.n for row in self.matrix):
            raise AlgebraError(f"Form matrix must be {self.n}x{self.n}")
        masks = []
        for row in self.matrix:
            mask = 0
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise AlgebraError(f"Form entries must be 0 or 1, got {entry!r}")
                mask |= entry << j
            masks.append(mask)
        object.__setattr__(self, '_row_masks', tuple(masks))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BilinearFormZ2":
        matrix = tuple(tuple(int(entry) for entry in row) for row in rows)
        return cls(n=len(matrix), matrix=matrix)

    @classmethod
    def zero(cls, n: int) -> "BilinearFormZ2":
        return cls(n=n, matrix=tuple((0,) * n for _ in range(n)))

    def exponent_bits(self, a: int, b: int) -> int:
        """Evaluate on packed bit patterns without dimension checks."""
        total = 0
        i = 0
        while a:
            if a & 1:
                total ^= (self._row_masks[i] & b).bit_count() & 1
            a >>= 1
            i += 1
        return total

    def evaluate(self, a: GroupElement, b: GroupElement) -> int:
        if a.n != self.n or b.n != self.n:
            raise DimensionMismatchError(
                f"Form of dimension {self.n} evaluated on dimensions {a.n}, {b.n}"
            )
        return self.exponent_bits(a.bits, b.bits)


@dataclass(frozen=True)
class SignCocycle:
    """A sign-valued function F(a, b) = (-1)^f(a, b) on pairs of group elements.

    ``exponent`` works on packed bits. When the exponent comes from a
    BilinearFormZ2 the form is kept in ``form`` for serialization.
    """

    n: int
    exponent: Callable[[int, int], int] = field(compare=False)
    form: Optional[BilinearFormZ2] = None
    name: str = ""

    def __post_init__(self):
        _check_dimension(self.n)

    @classmethod
    def from_form(cls, form: BilinearFormZ2, name: str = "") -> "SignCocycle":
        return cls(n=form.n, exponent=form.exponent_bits, form=form, name=name)

    @classmethod
    def from_exponent(cls, n: int, exponent: Callable[[int, int], int], name: str = "") -> "SignCocycle":
        """Wrap an arbitrary exponent, bilinear or not."""
        return cls(n=n, exponent=lambda a, b: exponent(a, b) & 1, name=name)

    @classmethod
    def from_table(cls, n: int, signs: dict, name: str = "") -> "SignCocycle":
        """Wrap a table {(a_bits, b_bits): +1 or -1}; pairs not listed read as +1."""
        table = {pair: (0 if sign == 1 else 1) for pair, sign in signs.items()}
        return cls(n=n, exponent=lambda a, b: table.get((a, b), 0), name=name)

    def sign_bits(self, a: int, b: int) -> int:
        return -1 if self.exponent(a, b) & 1 else 1

    def __str__(self) -> str:
        return self.name or f"SignCocycle(n={self.n})"
