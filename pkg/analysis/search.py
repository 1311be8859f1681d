"""Bounded search for a (Z2)^m degree map making an algebra Gamma-commutative."""
import logging
from typing import Dict, List, Optional, Tuple

from core.conf import get_limit
from core.logging import log_duration
from algebras.models import GradedAlgebra
from analysis.models import (
    BASIS_OBSTRUCTION,
    BOUND_EXHAUSTED,
    FOUND,
    NONE_WITHIN_BOUND,
    SearchOutcome,
)
from groups.models import GroupElement

logger = logging.getLogger(__name__)


class _BudgetExhausted(Exception):
    pass


def commutation_exponents(
    algebra: GradedAlgebra
) -> Tuple[Optional[Tuple[int, int]], Dict[Tuple[int, int], int]]:
    """Observed sign exponents of b_i b_j = (-1)^s b_j b_i.

    Returns:
        (obstruction, exponents): the first pair (i, j) where b_i b_j is not
        plus or minus b_j b_i, and the exponent s for every pair whose products
        are nonzero (pairs with both products zero carry no constraint)
    """
    exponents: Dict[Tuple[int, int], int] = {}
    for i in range(algebra.dimension):
        for j in range(i, algebra.dimension):
            forward = dict(algebra.product_terms(i, j))
            backward = dict(algebra.product_terms(j, i))
            if not forward and not backward:
                continue
            if forward == backward:
                exponents[(i, j)] = exponents[(j, i)] = 0
            elif forward.keys() == backward.keys() and all(forward[k] == -backward[k] for k in forward):
                exponents[(i, j)] = exponents[(j, i)] = 1
            else:
                return (i, j), {}
    return None, exponents


def grading_search(
    algebra: GradedAlgebra,
    max_n: int,
    node_budget: Optional[int] = None
) -> SearchOutcome:
    """First degree map into (Z2)^m, m = 1..max_n, in deterministic order.

    Basis elements are assigned in index order, candidate degrees in bit
    order; the unit's support is fixed at degree 0. Every assignment is
    propagated through deg(k) = deg(i) + deg(j) for the terms of b_i b_j and
    pruned by the observed commutation signs.

    Returns:
        SearchOutcome with status found, none within bound, basis obstruction
        or bound exhausted
    """
    budget = node_budget if node_budget is not None else get_limit('SEARCH_NODE_BUDGET')
    obstruction, exponents = commutation_exponents(algebra)
    if obstruction is not None:
        i, j = obstruction
        logger.info(
            f"Basis obstruction in {algebra}: {algebra.labels[i]}*{algebra.labels[j]} "
            f"is not a signed multiple of {algebra.labels[j]}*{algebra.labels[i]}"
        )
        return SearchOutcome(BASIS_OBSTRUCTION, witness=obstruction)

    search = _DegreeSearch(algebra, exponents, budget)
    with log_duration(logger, f"grading_search({algebra}, max_n={max_n})"):
        for m in range(1, max_n + 1):
            try:
                degrees = search.run(m)
            except _BudgetExhausted:
                logger.warning(f"Search budget of {budget} nodes exhausted at m={m} for {algebra}")
                return SearchOutcome(BOUND_EXHAUSTED, m=m, nodes=search.nodes)
            if degrees is not None:
                logger.info(f"Degree map for {algebra} found in (Z2)^{m} after {search.nodes} nodes")
                return SearchOutcome(
                    FOUND, m=m,
                    degrees=tuple(GroupElement(n=m, bits=bits) for bits in degrees),
                    nodes=search.nodes,
                )
    return SearchOutcome(NONE_WITHIN_BOUND, m=max_n, nodes=search.nodes)


class _DegreeSearch:
    """Backtracking over degree assignments with propagation."""

    def __init__(self, algebra: GradedAlgebra, exponents: Dict[Tuple[int, int], int], budget: int):
        self.algebra = algebra
        self.exponents = exponents
        self.budget = budget
        self.nodes = 0
        zero = algebra.domain.zero
        self.unit_support = [k for k, c in enumerate(algebra.unit) if c != zero]

    def run(self, m: int) -> Optional[List[int]]:
        degrees: List[Optional[int]] = [None] * self.algebra.dimension
        for k in self.unit_support:
            degrees[k] = 0
        if not self._propagate(degrees, list(self.unit_support)):
            return None
        return self._extend(degrees, 1 << m)

    def _extend(self, degrees: List[Optional[int]], size: int) -> Optional[List[int]]:
        try:
            index = degrees.index(None)
        except ValueError:
            return list(degrees)
        for candidate in range(size):
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExhausted()
            trial = list(degrees)
            trial[index] = candidate
            if self._propagate(trial, [index]):
                found = self._extend(trial, size)
                if found is not None:
                    return found
        return None

    def _propagate(self, degrees: List[Optional[int]], queue: List[int]) -> bool:
        """Force product degrees and check signs; False on any contradiction."""
        while queue:
            a = queue.pop()
            for b in range(len(degrees)):
                if degrees[b] is None:
                    continue
                for i, j in ((a, b), (b, a)):
                    target = degrees[i] ^ degrees[j]
                    for k, _ in self.algebra.product_terms(i, j):
                        if degrees[k] is None:
                            degrees[k] = target
                            queue.append(k)
                        elif degrees[k] != target:
                            return False
                exponent = self.exponents.get((a, b))
                if exponent is not None and (degrees[a] & degrees[b]).bit_count() & 1 != exponent:
                    return False
        return True
