"""Matrix bases and the construction catalogue used by audit and round-trips."""
from itertools import product
from typing import List, Sequence, Tuple

from sympy import Matrix, eye, kronecker_product, zeros

from algebras.models import GradedAlgebra
from algebras.scalars import GAUSSIAN
from constructions.models import CliffordLabel
from constructions.services import ConstructionService

PAULI_Z = Matrix([[1, 0], [0, -1]])
PAULI_X = Matrix([[0, 1], [1, 0]])
ROTATION_J = Matrix([[0, -1], [1, 0]])

MatrixBasis = Tuple[List[List[int]], List[str]]


def matrix_unit_basis(m: int) -> MatrixBasis:
    """e_11, e_12, ..., e_mm in row-major order."""
    matrices, labels = [], []
    for i, j in product(range(m), repeat=2):
        unit = zeros(m, m)
        unit[i, j] = 1
        matrices.append(unit.tolist())
        labels.append(f"e{i + 1}{j + 1}")
    return matrices, labels


def clifford_image_basis(generators: Sequence[Matrix]) -> MatrixBasis:
    """Ascending monomials in the given anticommuting matrices, labelled like Cl_{p,q}."""
    n = len(generators)
    size = generators[0].shape[0]
    matrices, labels = [], []
    for mask in range(1 << n):
        monomial = eye(size)
        for i in range(n):
            if (mask >> i) & 1:
                monomial = monomial * generators[i]
        matrices.append(monomial.tolist())
        labels.append(CliffordLabel(n=n, mask=mask).text)
    return matrices, labels


def m2_clifford_basis() -> MatrixBasis:
    """M_2 as the image of Cl_{2,0}: a1 -> Z, a2 -> X."""
    return clifford_image_basis([PAULI_Z, PAULI_X])


def m4_clifford_basis() -> MatrixBasis:
    """M_4 as the image of Cl_{2,2}: Z(x)1, X(x)1, J(x)Z, J(x)X."""
    identity = eye(2)
    return clifford_image_basis([
        kronecker_product(PAULI_Z, identity),
        kronecker_product(PAULI_X, identity),
        kronecker_product(ROTATION_J, PAULI_Z),
        kronecker_product(ROTATION_J, PAULI_X),
    ])


def m3_shift_diagonal_basis() -> MatrixBasis:
    """S^a D^b for the cyclic shift S and D = diag(1, 2, 4), 0 <= a, b < 3."""
    shift = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    diagonal = Matrix.diag(1, 2, 4)
    matrices, labels = [], []
    for a, b in product(range(3), repeat=2):
        matrices.append((shift ** a * diagonal ** b).tolist())
        labels.append("1" if a == b == 0 else f"s{a}d{b}")
    return matrices, labels


def matrix_preset(name: str) -> GradedAlgebra:
    """Ungraded matrix algebra for one of the named bases in MATRIX_PRESETS."""
    try:
        m, basis = MATRIX_PRESETS[name]
    except KeyError:
        raise KeyError(f"Unknown matrix basis {name!r}; expected one of {sorted(MATRIX_PRESETS)}") from None
    matrices, labels = basis()
    return ConstructionService().matrix_algebra(m, matrices, labels=labels, name=f"M_{m}[{name}]")


MATRIX_PRESETS = {
    'm2-units': (2, lambda: matrix_unit_basis(2)),
    'm2-clifford': (2, m2_clifford_basis),
    'm3-units': (3, lambda: matrix_unit_basis(3)),
    'm3-shift-diagonal': (3, m3_shift_diagonal_basis),
    'm4-clifford': (4, m4_clifford_basis),
}


def catalogue() -> List[Tuple[str, GradedAlgebra]]:
    """Every builder at desk scale, in a fixed order."""
    builders = ConstructionService()
    entries: List[Tuple[str, GradedAlgebra]] = [("quaternions", builders.quaternions())]
    for total in range(4):
        for p in range(total + 1):
            algebra = builders.clifford(p, total - p)
            entries.append((str(algebra), algebra))
    for n in range(1, 4):
        entries.append((f"Cl_{n}(C)", builders.clifford_complex(n)))
    for n in range(1, 4):
        entries.append((f"twisted(n={n})", builders.twisted_group_algebra(n)))
    entries.append(("twisted(n=2, gaussian)", builders.twisted_group_algebra(2, field=GAUSSIAN)))
    for n_plus_1 in range(2, 5):
        entries.append((f"even-twisted(n+1={n_plus_1})", builders.even_twisted_subalgebra(n_plus_1)))
    for name in ('m2-units', 'm2-clifford'):
        entries.append((name, matrix_preset(name)))
    return entries
