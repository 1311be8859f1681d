"""Text output for commands: multiplication tables, coordinates, element parsing."""
from typing import List, Sequence

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import parse_expr

from core.conf import require_at_most
from core.exceptions import AlgebraError
from algebras.models import AlgebraElement, GradedAlgebra, format_terms
from algebras.scalars import format_scalar, to_scalar


def table_lines(algebra: GradedAlgebra) -> List[str]:
    """The multiplication table as aligned rows; row i column j holds b_i * b_j.

    Raises:
        CapacityError: If the basis is larger than the table cap
    """
    require_at_most(algebra.dimension, 'TABLE_MAX_BASIS', "Basis size for table rendering")
    labels = list(algebra.labels)
    cells = [
        [format_terms(algebra, algebra.multiply(algebra.basis_coordinates(i), algebra.basis_coordinates(j))).lstrip("+")
         for j in range(algebra.dimension)]
        for i in range(algebra.dimension)
    ]
    width = max(len(text) for text in labels + [cell for row in cells for cell in row])
    header = " " * width + " | " + "  ".join(label.rjust(width) for label in labels)
    lines = [header.rstrip(), "-" * len(header.rstrip())]
    for label, row in zip(labels, cells):
        lines.append((label.rjust(width) + " | " + "  ".join(cell.rjust(width) for cell in row)).rstrip())
    return lines


def format_coordinates(algebra: GradedAlgebra, coordinates: Sequence[object]) -> str:
    """``[1, 0, -1/2]``"""
    return "[" + ", ".join(format_scalar(c, algebra.field) for c in coordinates) + "]"


def parse_element(algebra: GradedAlgebra, text: str) -> AlgebraElement:
    """Read a linear expression in the basis labels, e.g. ``1+a1`` or ``2*i - 1/2*k``.

    A bare number is a multiple of the unit; ``I`` is the imaginary unit in
    gaussian documents.

    Raises:
        AlgebraError: On unknown labels, non-linear terms or inexact scalars
    """
    symbols = {}
    for index, label in enumerate(algebra.labels):
        if label.isidentifier():
            symbols[label] = Symbol(f"basis_{index}")
    index_of = {symbol: algebra.index_of(label) for label, symbol in symbols.items()}
    try:
        expression = parse_expr(text, local_dict=dict(symbols))
    except Exception as e:
        raise AlgebraError(f"Cannot parse element {text!r}: {str(e)}") from e

    unknown = expression.free_symbols - set(index_of)
    if unknown:
        raise AlgebraError(f"Unknown basis labels in {text!r}: {', '.join(sorted(map(str, unknown)))}")

    generators = sorted(index_of, key=index_of.get)
    if not generators or not expression.free_symbols:
        return algebra.one().scale(to_scalar(expression, algebra.field))
    try:
        terms = Poly(expression, *generators).terms()
    except Exception as e:
        raise AlgebraError(f"Element {text!r} is not a polynomial in the basis labels") from e
    coordinates = algebra.zero_coordinates()
    unit_multiple = algebra.domain.zero
    for monomial, coefficient in terms:
        degree = sum(monomial)
        scalar = to_scalar(coefficient, algebra.field)
        if degree == 0:
            unit_multiple = scalar
        elif degree == 1:
            coordinates[index_of[generators[monomial.index(1)]]] += scalar
        else:
            raise AlgebraError(f"Element {text!r} is not linear in the basis labels")
    result = algebra.element(coordinates)
    return result + algebra.one().scale(unit_multiple)
