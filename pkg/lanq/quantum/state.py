"""
The global state shared by all processes: a density matrix over the allocated
registers and the table of allocated channels.
"""

import numpy as np

from lanq.errors import DimensionMismatch
from lanq.tools.numpy_utils import (
    TOLERANCE, is_hermitian, matrices_close, matrix_to_json, partial_trace,
)


class GlobalState:
    """
    The pair (ρ, L) of a density matrix and register dimensions, plus channels.

    GlobalState is a value: allocation, operator application and measurement
    return new states and never modify the receiver.

    Args:
        rho: Density matrix of order equal to the product of dims.
        dims: Dimension of every register, in allocation order.
        channels: Element type of every allocated channel, in allocation order.
    """
    def __init__(self, rho=None, dims=(), channels=()):
        self.dims = dims
        self.rho = rho
        self.channels = tuple(channels)

    @property
    def dims(self):
        return self._dims

    @dims.setter
    def dims(self, value):
        value = tuple(value)
        assert all(type(d) is int and d >= 2 for d in value), \
            "Register dimensions must be integers of at least 2."
        self._dims = value

    @property
    def rho(self):
        """The density matrix; the empty register list gives the 1×1 matrix (1)."""
        return self._rho

    @rho.setter
    def rho(self, value):
        if value is None:
            value = np.ones((1, 1), dtype=complex)
        value = np.asarray(value, dtype=complex)
        assert value.shape == (self.order, self.order), \
            "The density matrix order must be the product of the register dimensions."
        assert is_hermitian(value), "The density matrix must be Hermitian."
        self._rho = value

    @property
    def order(self):
        return int(np.prod(self.dims, dtype=int))

    def alloc_q(self, dimension):
        """
        Append a register in the maximally mixed state.

        Returns:
            The new GlobalState and the index of the new register.
        """
        assert type(dimension) is int and dimension >= 2, "Registers have dimension at least 2."
        rho = np.kron(self.rho, np.eye(dimension, dtype=complex) / dimension)
        return GlobalState(rho, self.dims + (dimension,), self.channels), len(self.dims)

    def alloc_channel(self, element_type=None):
        """
        Append a channel record.

        Returns:
            The new GlobalState and the index of the new channel.
        """
        return GlobalState(self.rho, self.dims, self.channels + (element_type,)), \
            len(self.channels)

    def _check_targets(self, targets):
        targets = list(targets)
        if len(set(targets)) != len(targets):
            raise DimensionMismatch("Target registers must be pairwise distinct.")
        for target in targets:
            if not 0 <= target < len(self.dims):
                raise DimensionMismatch(f"There is no register {target}.")
        return targets

    def _permutation(self, targets):
        n = len(self.dims)
        return targets + [i for i in range(n) if i not in targets]

    def _to_front(self, matrix, permutation):
        """Conjugate by the permutation that moves the targets to the front, in order."""
        n = len(self.dims)
        tensor = matrix.reshape(list(self.dims) * 2)
        tensor = tensor.transpose(permutation + [p + n for p in permutation])
        return tensor.reshape(self.order, self.order)

    def _from_front(self, matrix, permutation):
        n = len(self.dims)
        permuted_dims = [self.dims[p] for p in permutation]
        inverse = list(np.argsort(permutation))
        tensor = matrix.reshape(permuted_dims * 2)
        tensor = tensor.transpose(inverse + [i + n for i in inverse])
        return tensor.reshape(self.order, self.order)

    def target_dimension(self, targets):
        return int(np.prod([self.dims[t] for t in targets], dtype=int))

    def apply_operator(self, operator, targets):
        """
        Apply a quantum operator to the listed registers.

        ρ' = Πᵀ (ℰ ⊗ I)(Π ρ Πᵀ) Π, where Π brings the targets to the front in
        the given order. Π is an index permutation, never a dense matrix.

        Args:
            operator: A QuantumOperator.
            targets: Flat list of register indices, one per operator argument
                dimension in order.

        Returns:
            The new GlobalState.

        Raises:
            DimensionMismatch: if the targets do not fit the operator.
        """
        targets = self._check_targets(targets)
        target_dims = tuple(self.dims[t] for t in targets)
        if target_dims != operator.dims:
            raise DimensionMismatch(
                f"{operator.name} acts on dimensions {operator.dims}, got {target_dims}."
            )
        permutation = self._permutation(targets)
        front = self._to_front(self.rho, permutation)
        identity = np.eye(self.order // operator.order, dtype=complex)
        result = np.zeros_like(front)
        for kraus in operator.kraus:
            full = np.kron(kraus, identity)
            result += full @ front @ full.conj().T
        return GlobalState(self._from_front(result, permutation), self.dims, self.channels)

    def measure(self, basis, targets):
        """
        Measure the listed registers projectively.

        Args:
            basis: A MeasurementBasis.
            targets: Flat list of register indices.

        Returns:
            A list of (probability, GlobalState, outcome) triples, one per outcome
            whose probability exceeds the tolerance, in outcome order.

        Raises:
            DimensionMismatch: if the basis does not exist at the measured dimension.
        """
        targets = self._check_targets(targets)
        decomposition = basis.decomposition(self.target_dimension(targets))
        permutation = self._permutation(targets)
        front = self._to_front(self.rho, permutation)
        identity = np.eye(self.order // self.target_dimension(targets), dtype=complex)
        outcomes = []
        for label, projector in decomposition:
            full = np.kron(projector, identity)
            post = full @ front @ full.conj().T
            probability = float(np.real(np.trace(post)))
            if probability > TOLERANCE:
                rho = self._from_front(post / probability, permutation)
                outcomes.append((probability, GlobalState(rho, self.dims, self.channels), label))
        return outcomes

    def close_to(self, other, tolerance=TOLERANCE):
        return isinstance(other, GlobalState) and self.dims == other.dims \
            and self.channels == other.channels and matrices_close(self.rho, other.rho, tolerance)

    def trace(self):
        return complex(np.trace(self.rho))

    def reduced(self, registers):
        """The reduced density matrix over the given registers, in the order given."""
        return partial_trace(self.rho, self.dims, list(registers))

    def to_json(self):
        return {
            'dims': list(self.dims),
            'channels': [str(element) for element in self.channels],
            'rho': matrix_to_json(self.rho),
        }

    def __repr__(self):
        return f'GlobalState(dims={list(self.dims)}, channels={len(self.channels)})'
