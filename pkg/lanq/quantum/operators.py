"""
Quantum operators and measurement bases with fixed matrices.

An operator is a superoperator given in Kraus form; a unitary is the one-Kraus
case. A basis is a spectral decomposition: orthogonal projectors, one per
distinct eigenvalue, labelled by the index of the first eigenvalue they cover.
"""

import numpy as np

from lanq.errors import DimensionMismatch
from lanq.tools.numpy_utils import matrices_close


class QuantumOperator:
    """
    A named superoperator acting on registers of the given dimensions.

    Args:
        name: The name programs call the operator by.
        kraus: One matrix (a unitary) or a list of Kraus matrices.
        dims: Dimension of each argument register. Defaults to qubits.
    """
    def __init__(self, name, kraus, dims=None):
        self.name = name
        self.kraus = kraus
        self.dims = dims

    @property
    def name(self):
        return self._name

    @name.setter
    def name(self, value):
        assert type(value) is str and value, "Operator name must be a non-empty string."
        self._name = value

    @property
    def kraus(self):
        """The Kraus matrices of the operator."""
        return self._kraus

    @kraus.setter
    def kraus(self, value):
        matrices = [value] if isinstance(value, np.ndarray) else list(value)
        assert matrices, "An operator needs at least one Kraus matrix."
        matrices = [np.asarray(matrix, dtype=complex) for matrix in matrices]
        order = matrices[0].shape[0]
        for matrix in matrices:
            assert matrix.shape == (order, order), \
                "Kraus matrices must be square and equal in size."
        completeness = sum(matrix.conj().T @ matrix for matrix in matrices)
        assert matrices_close(completeness, np.eye(order), 1e-8), \
            "Kraus matrices must preserve the trace."
        self._kraus = matrices

    @property
    def dims(self):
        """Dimension of each argument register."""
        return self._dims

    @dims.setter
    def dims(self, value):
        order = self.kraus[0].shape[0]
        if value is None:
            count = int(round(np.log2(order)))
            assert 2 ** count == order, \
                "Give the argument dimensions of operators that do not act on qubits."
            value = (2,) * count
        value = tuple(value)
        assert all(type(d) is int and d >= 2 for d in value), "Dimensions must be at least 2."
        assert int(np.prod(value)) == order, \
            "Argument dimensions must multiply to the matrix order."
        self._dims = value

    @property
    def order(self):
        return self.kraus[0].shape[0]


class MeasurementBasis:
    """
    A projective measurement given by its spectral decomposition.

    Args:
        name: The name programs refer to the basis by.
        projectors: Orthogonal projectors summing to the identity, or a callable
            that takes the measured dimension and returns such a list. A callable
            makes the basis usable at every dimension.
        eigenvalues: Optional eigenvalue per projector. Projectors sharing an
            eigenvalue are merged and labelled with the first index among them.
    """
    def __init__(self, name, projectors, eigenvalues=None):
        assert type(name) is str and name, "Basis name must be a non-empty string."
        self.name = name
        if callable(projectors):
            self._builder = projectors
            self._fixed = None
        else:
            self._builder = None
            self._fixed = self._decompose(projectors, eigenvalues)

    @staticmethod
    def _decompose(projectors, eigenvalues):
        projectors = [np.asarray(p, dtype=complex) for p in projectors]
        assert projectors, "A basis needs at least one projector."
        order = projectors[0].shape[0]
        for p in projectors:
            assert p.shape == (order, order), "Projectors must be square and equal in size."
            assert matrices_close(p @ p, p, 1e-8), "Basis elements must be projectors."
        assert matrices_close(sum(projectors), np.eye(order), 1e-8), \
            "Projectors must sum to the identity."
        if eigenvalues is None:
            eigenvalues = list(range(len(projectors)))
        assert len(eigenvalues) == len(projectors), "Give one eigenvalue per projector."
        merged = {}
        for index, (value, p) in enumerate(zip(eigenvalues, projectors)):
            if value in merged:
                label, total = merged[value]
                merged[value] = (label, total + p)
            else:
                merged[value] = (index, p)
        return [(label, p) for label, p in merged.values()]

    def decomposition(self, dimension):
        """
        The labelled projectors for a measured system of the given dimension.

        Returns:
            A list of (outcome label, projector) pairs.

        Raises:
            DimensionMismatch: if the basis does not exist at this dimension.
        """
        if self._builder is not None:
            return [(label, p) for label, p in enumerate(self._builder(dimension))]
        if self._fixed[0][1].shape[0] != dimension:
            raise DimensionMismatch(
                f"Basis {self.name} measures systems of dimension {self._fixed[0][1].shape[0]}, "
                f"not {dimension}."
            )
        return list(self._fixed)

    def __eq__(self, other):
        return isinstance(other, MeasurementBasis) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


def computational_projectors(dimension):
    projectors = []
    for k in range(dimension):
        p = np.zeros((dimension, dimension), dtype=complex)
        p[k, k] = 1
        projectors.append(p)
    return projectors


def _ket(*amplitudes):
    return np.array(amplitudes, dtype=complex).reshape(-1, 1)


def _projector(ket):
    return ket @ ket.conj().T


I2 = np.eye(2, dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
CNOT = np.array([
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1],
    [0, 0, 1, 0],
], dtype=complex)

_ROOT_HALF = 1 / np.sqrt(2)

# Bell states in outcome order Φ+, Ψ+, Φ-, Ψ-; the teleportation corrections
# opB0..opB3 are listed in the same order.
BELL_STATES = (
    _ket(_ROOT_HALF, 0, 0, _ROOT_HALF),
    _ket(0, _ROOT_HALF, _ROOT_HALF, 0),
    _ket(_ROOT_HALF, 0, 0, -_ROOT_HALF),
    _ket(0, _ROOT_HALF, -_ROOT_HALF, 0),
)

STD_BASIS = MeasurementBasis('StdBasis', computational_projectors)
BELL_BASIS = MeasurementBasis('BellBasis', [_projector(state) for state in BELL_STATES])

STANDARD_OPERATORS = (
    QuantumOperator('H', H),
    QuantumOperator('X', X),
    QuantumOperator('Y', Y),
    QuantumOperator('Z', Z),
    QuantumOperator('I2', I2),
    QuantumOperator('CNOT', CNOT),
    QuantumOperator('opB0', I2),
    QuantumOperator('opB1', X),
    QuantumOperator('opB2', Z),
    QuantumOperator('opB3', X @ Z),
)

STANDARD_BASES = (STD_BASIS, BELL_BASIS)
