"""
The builtin names every program can use: quantum operators, measurement bases
and the classical primitives that binary operators lower to.

Operators and bases can be added from Python with register_operator and
register_basis. A program lowered afterwards sees the new names.
"""

from collections import namedtuple
import operator as _op

from lanq.lang.types import BOOL, INT, VOID, QuantumType
from lanq.quantum.operators import (
    MeasurementBasis, QuantumOperator, STANDARD_BASES, STANDARD_OPERATORS,
)

MethodType = namedtuple('MethodType', ['params', 'result'])
MethodType.__doc__ = "The type S1, ..., Sn -> S of a method."


class ClassicalPrimitive:
    """
    A classical operator evaluated in one step.

    Args:
        name: The operator symbol.
        signatures: Accepted MethodTypes; the first whose parameters match is used.
        function: Python function computing the result from the argument values.
    """
    def __init__(self, name, signatures, function):
        self.name = name
        self.signatures = tuple(signatures)
        self.function = function

    def signature_for(self, arg_types):
        for signature in self.signatures:
            if tuple(signature.params) == tuple(arg_types):
                return signature
        return None

    def __call__(self, *values):
        return self.function(*values)


_INT_OP = (MethodType((INT, INT), INT),)
_INT_CMP = (MethodType((INT, INT), BOOL),)
_EQUALITY = (MethodType((INT, INT), BOOL), MethodType((BOOL, BOOL), BOOL))

CLASSICAL_PRIMITIVES = {
    primitive.name: primitive for primitive in (
        ClassicalPrimitive('+', _INT_OP, _op.add),
        ClassicalPrimitive('-', _INT_OP, _op.sub),
        ClassicalPrimitive('*', _INT_OP, _op.mul),
        ClassicalPrimitive('==', _EQUALITY, _op.eq),
        ClassicalPrimitive('!=', _EQUALITY, _op.ne),
        ClassicalPrimitive('<', _INT_CMP, _op.lt),
        ClassicalPrimitive('<=', _INT_CMP, _op.le),
        ClassicalPrimitive('>', _INT_CMP, _op.gt),
        ClassicalPrimitive('>=', _INT_CMP, _op.ge),
    )
}

# The tensor symbol parses as a binary operator but has no expression semantics.
TENSOR_OPERATOR = '⊗'

_registered_operators = {operator.name: operator for operator in STANDARD_OPERATORS}
_registered_bases = {basis.name: basis for basis in STANDARD_BASES}


def operator_type(operator):
    """The method type of a quantum operator: one quantum parameter per argument register."""
    return MethodType(tuple(QuantumType(d) for d in operator.dims), VOID)


def register_operator(name, kraus, dims=None):
    """
    Register a quantum operator.

    Args:
        name: The name programs call the operator by. Registering an existing
            name replaces the operator.
        kraus: A unitary matrix or a list of Kraus matrices.
        dims: Dimension of each argument register. Defaults to qubits.

    Returns:
        The registered QuantumOperator.
    """
    if name in CLASSICAL_PRIMITIVES or name in _registered_bases:
        raise TypeError(f"{name} is already a builtin of another kind.")
    operator = QuantumOperator(name, kraus, dims)
    _registered_operators[name] = operator
    return operator


def register_basis(name, projectors, eigenvalues=None):
    """
    Register a measurement basis.

    Args:
        name: The name programs refer to the basis by.
        projectors: Orthogonal projectors summing to the identity.
        eigenvalues: Optional eigenvalue per projector.

    Returns:
        The registered MeasurementBasis.
    """
    if name in CLASSICAL_PRIMITIVES or name in _registered_operators:
        raise TypeError(f"{name} is already a builtin of another kind.")
    basis = MeasurementBasis(name, projectors, eigenvalues)
    _registered_bases[name] = basis
    return basis


class Builtins:
    """
    A snapshot of the builtin names, taken when a program is lowered.
    """
    def __init__(self, operators=None, bases=None, primitives=None):
        self.operators = dict(_registered_operators if operators is None else operators)
        self.bases = dict(_registered_bases if bases is None else bases)
        self.primitives = dict(CLASSICAL_PRIMITIVES if primitives is None else primitives)

    def __contains__(self, name):
        return name in self.operators or name in self.bases or name in self.primitives \
            or name == TENSOR_OPERATOR

    def is_operator(self, name):
        return name in self.operators

    def is_primitive(self, name):
        return name in self.primitives
