"""Group and Cocycle Service Layer - arithmetic, enumeration, cocycle checks"""
import logging
from typing import List, Optional, Sequence

from core.conf import get_limit, require_at_most
from core.exceptions import AlgebraError, DimensionMismatchError
from core.logging import log_duration
from core.reports import VerificationReport
from groups.models import BilinearFormZ2, GroupElement, SignCocycle

logger = logging.getLogger(__name__)


def gp_add(a: GroupElement, b: GroupElement) -> GroupElement:
    """Coordinate-wise sum mod 2."""
    return a + b


def scalar_product(a: GroupElement, b: GroupElement) -> int:
    """The standard form <a, b> = sum a_i b_i mod 2."""
    return a.scalar_product(b)


def parity(a: GroupElement) -> int:
    return a.parity


def enumerate_elements(n: int) -> List[GroupElement]:
    """All 2^n elements in increasing bit-pattern order."""
    _validate_enumeration_dimension(n, minimum=1)
    return [GroupElement(n=n, bits=bits) for bits in range(1 << n)]


def enumerate_even(n: int) -> List[GroupElement]:
    """The 2^(n-1) elements with an even number of 1-entries."""
    _validate_enumeration_dimension(n, minimum=2)
    return [GroupElement(n=n, bits=bits) for bits in range(1 << n) if not bits.bit_count() & 1]


def _validate_enumeration_dimension(n: int, minimum: int) -> None:
    limit = get_limit('ENUMERATION_MAX_DIMENSION')
    if not isinstance(n, int) or not minimum <= n <= limit:
        raise AlgebraError(f"Enumeration dimension must be between {minimum} and {limit}, got {n!r}")


def f_standard(n: int) -> BilinearFormZ2:
    """The form f(a, b) = sum over i > j of a_i b_j."""
    require_at_most(n, 'GROUP_MAX_DIMENSION', "Form dimension")
    if n < 1:
        raise AlgebraError(f"Form dimension must be positive, got {n}")
    return BilinearFormZ2(n=n, matrix=tuple(
        tuple(1 if i > j else 0 for j in range(n)) for i in range(n)
    ))


def standard_cocycle(n: int) -> SignCocycle:
    return SignCocycle.from_form(f_standard(n), name=f"standard(n={n})")


def eval_sign(cocycle: SignCocycle, a: GroupElement, b: GroupElement) -> int:
    """F(a, b) = (-1)^f(a, b)."""
    _check_cocycle_dimensions(cocycle, a, b)
    return cocycle.sign_bits(a.bits, b.bits)


def beta_of(cocycle: SignCocycle, a: GroupElement, b: GroupElement) -> int:
    """beta(a, b) = F(a, b) / F(b, a), which for signs is the product."""
    _check_cocycle_dimensions(cocycle, a, b)
    return cocycle.sign_bits(a.bits, b.bits) * cocycle.sign_bits(b.bits, a.bits)


def _check_cocycle_dimensions(cocycle: SignCocycle, a: GroupElement, b: GroupElement) -> None:
    if a.n != cocycle.n or b.n != cocycle.n:
        raise DimensionMismatchError(
            f"Cocycle on (Z2)^{cocycle.n} evaluated on dimensions {a.n} and {b.n}"
        )


class CocycleService:
    """Exhaustive checks on sign cocycles"""

    def is_cocycle(
        self,
        cocycle: SignCocycle,
        elements: Optional[Sequence[GroupElement]] = None
    ) -> VerificationReport:
        """Check F(a+b, c) F(a, b) = F(a, b+c) F(b, c) for every triple.

        Args:
            cocycle: The sign function to check
            elements: Optional subgroup to restrict to (must be closed under
                addition); defaults to the whole of (Z2)^n

        Returns:
            VerificationReport whose witness is the first violating (a, b, c)

        Raises:
            CapacityError: If n is above the exhaustive cap
        """
        require_at_most(cocycle.n, 'COCYCLE_MAX_DIMENSION', "Cocycle dimension")
        if elements is None:
            patterns = list(range(1 << cocycle.n))
        else:
            patterns = self._validate_subgroup(cocycle, elements)

        # Exponent table indexed by bit pattern; the triple loop only reads it.
        size = 1 << cocycle.n
        table = [[0] * size for _ in range(size)]
        for a in patterns:
            row = table[a]
            for b in patterns:
                row[b] = cocycle.exponent(a, b) & 1

        with log_duration(logger, f"is_cocycle({cocycle})"):
            for a in patterns:
                row_a = table[a]
                for b in patterns:
                    left_ab = row_a[b]
                    row_ab = table[a ^ b]
                    row_b = table[b]
                    for c in patterns:
                        if (row_ab[c] ^ left_ab) != (row_a[b ^ c] ^ row_b[c]):
                            witness = tuple(GroupElement(n=cocycle.n, bits=x) for x in (a, b, c))
                            logger.warning(
                                f"Cocycle identity fails for {cocycle} at "
                                f"{', '.join(str(w) for w in witness)}"
                            )
                            return VerificationReport.failure(
                                'cocycle', witness, "F(a+b,c)F(a,b) != F(a,b+c)F(b,c)"
                            )

        logger.info(f"Cocycle identity holds for {cocycle} on {len(patterns)} elements")
        return VerificationReport.ok('cocycle', f"{len(patterns) ** 3} triples")

    def _validate_subgroup(self, cocycle: SignCocycle, elements: Sequence[GroupElement]) -> List[int]:
        """Check dimensions and closure under addition.

        Raises:
            DimensionMismatchError: If an element has the wrong dimension
            AlgebraError: If the set is not closed under addition
        """
        patterns = []
        for element in elements:
            if element.n != cocycle.n:
                raise DimensionMismatchError(
                    f"Element {element} does not live in (Z2)^{cocycle.n}"
                )
            patterns.append(element.bits)
        present = set(patterns)
        if any((a ^ b) not in present for a in patterns for b in patterns):
            raise AlgebraError("Element set is not closed under addition")
        return patterns
