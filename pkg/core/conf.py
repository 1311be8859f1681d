"""Access to the desk-scale caps in ``settings.ALGEBRA_LIMITS``."""
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from core.exceptions import CapacityError

DEFAULT_LIMITS = {
    'GROUP_MAX_DIMENSION': 62,
    'ENUMERATION_MAX_DIMENSION': 20,
    'COCYCLE_MAX_DIMENSION': 8,
    'TWISTED_MAX_DIMENSION': 12,
    'CLIFFORD_MAX_GENERATORS': 10,
    'VERIFY_MAX_BASIS': 256,
    'TABLE_MAX_BASIS': 64,
    'SEARCH_NODE_BUDGET': 500000,
}


def get_limit(name: str) -> int:
    """Return a cap from settings, falling back to the built-in default."""
    if name not in DEFAULT_LIMITS:
        raise KeyError(f"Unknown limit: {name}")
    try:
        configured = getattr(settings, 'ALGEBRA_LIMITS', {})
    except ImproperlyConfigured:
        configured = {}
    return int(configured.get(name, DEFAULT_LIMITS[name]))


def require_at_most(value: int, name: str, what: str) -> None:
    """Raise CapacityError when ``value`` exceeds the cap ``name``."""
    cap = get_limit(name)
    if value > cap:
        raise CapacityError(f"{what} is {value}, above the cap of {cap}")
