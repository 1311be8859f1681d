"""Exact scalars.

The ``rational`` field tag is modeled by sympy's ``QQ`` and the ``gaussian``
tag by ``QQ_I``. Scalars are the domain elements themselves; this module
only maps tags to domains and converts at the edges.
"""
from typing import Any, Dict

from sympy import sympify
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.domains.domain import Domain

from core.exceptions import AlgebraError

RATIONAL = 'rational'
GAUSSIAN = 'gaussian'
FIELD_TAGS = (RATIONAL, GAUSSIAN)

_DOMAINS = {RATIONAL: QQ, GAUSSIAN: QQ_I}


def domain_for(field: str) -> Domain:
    try:
        return _DOMAINS[field]
    except KeyError:
        raise AlgebraError(f"Unknown field tag {field!r}; expected one of {FIELD_TAGS}") from None


def to_scalar(value: Any, field: str):
    """Convert an int, Fraction, sympy number or domain element into the field.

    Raises:
        AlgebraError: If the value is not exact or not in the field
    """
    domain = domain_for(field)
    if isinstance(value, float):
        raise AlgebraError(f"Floating point value {value!r} is not exact")
    try:
        if isinstance(value, int):
            return domain(value)
        if domain.of_type(value):
            return value
        return domain.from_sympy(sympify(value))
    except Exception as e:
        raise AlgebraError(f"Cannot read {value!r} as a {field} scalar: {str(e)}") from e


def rational_parts(value) -> tuple:
    """(numerator, denominator) of a QQ element, lowest terms, positive denominator."""
    return int(value.numerator), int(value.denominator)


def scalar_to_dict(value, field: str) -> Dict[str, Any]:
    """The JSON shape: {"num", "den"} or {"re": {...}, "im": {...}}."""
    if field == RATIONAL:
        num, den = rational_parts(value)
        return {"num": num, "den": den}
    re_num, re_den = rational_parts(value.x)
    im_num, im_den = rational_parts(value.y)
    return {
        "re": {"num": re_num, "den": re_den},
        "im": {"num": im_num, "den": im_den},
    }


def scalar_from_parts(field: str, num: int, den: int, im_num: int = 0, im_den: int = 1):
    if field == RATIONAL:
        return QQ(num, den)
    return QQ_I(QQ(num, den), QQ(im_num, im_den))


def format_scalar(value, field: str) -> str:
    """Compact text: ``-1/2``, ``i``, ``1+2i``, ``-3/4i``."""
    if field == RATIONAL:
        return _format_rational(value)
    re_part, im_part = value.x, value.y
    if not im_part:
        return _format_rational(re_part)
    imag = _format_rational(im_part)
    imag = {"1": "", "-1": "-"}.get(imag, imag) + "i"
    if not re_part:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return f"{_format_rational(re_part)}{sign}{imag}"


def _format_rational(value) -> str:
    num, den = rational_parts(value)
    return str(num) if den == 1 else f"{num}/{den}"
