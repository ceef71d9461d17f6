"""
Type expressions of LanQ.

Quantum types are ``Q_d`` for a dimension ``d >= 2``; ``qbit`` and ``qtrit`` are
the names of ``Q_2`` and ``Q_3``. Tensor types are binary and always kept in a
canonical right-nested form, so structural equality of two tensor types is the
same as equality of their flattened dimension lists.
"""

from dataclasses import dataclass
import re


class TypeExpr:
    """Base class of all type expressions."""
    @property
    def is_quantum(self):
        return False


@dataclass(frozen=True)
class VoidType(TypeExpr):
    def __str__(self):
        return 'void'


@dataclass(frozen=True)
class IntType(TypeExpr):
    def __str__(self):
        return 'int'


@dataclass(frozen=True)
class BoolType(TypeExpr):
    def __str__(self):
        return 'bool'


@dataclass(frozen=True)
class MeasurementBasisType(TypeExpr):
    def __str__(self):
        return 'MeasurementBasis'


@dataclass(frozen=True)
class QuantumType(TypeExpr):
    dimension: int

    def __post_init__(self):
        assert type(self.dimension) is int and self.dimension >= 2, \
            "Quantum systems must have dimension at least 2."

    @property
    def is_quantum(self):
        return True

    def __str__(self):
        if self.dimension == 2:
            return 'qbit'
        elif self.dimension == 3:
            return 'qtrit'
        return f'q{self.dimension}it'


@dataclass(frozen=True)
class TensorType(TypeExpr):
    left: TypeExpr
    right: TypeExpr

    def __post_init__(self):
        assert self.left.is_quantum and self.right.is_quantum, \
            "Tensor products are only formed from quantum types."

    @property
    def is_quantum(self):
        return True

    def __str__(self):
        return f'{self.left} ⊗ {self.right}'


@dataclass(frozen=True)
class ChannelType(TypeExpr):
    element: TypeExpr

    def __str__(self):
        return f'channel[{self.element}]'


@dataclass(frozen=True)
class ChannelEndType(TypeExpr):
    element: TypeExpr

    def __str__(self):
        return f'channelEnd[{self.element}]'


VOID = VoidType()
INT = IntType()
BOOL = BoolType()
MEASUREMENT_BASIS = MeasurementBasisType()
QBIT = QuantumType(2)
QTRIT = QuantumType(3)

_DIMENSION_NAME = re.compile(r'q([0-9]+)it')


def quantum_type_named(name):
    """
    The quantum type named by an identifier, or None.

    Accepts ``qbit``, ``qtrit`` and ``q<d>it`` for any d >= 2.
    """
    if name == 'qbit':
        return QBIT
    elif name == 'qtrit':
        return QTRIT
    match = _DIMENSION_NAME.fullmatch(name)
    if match is None or match.group(1).startswith('0'):
        return None
    dimension = int(match.group(1))
    return QuantumType(dimension) if dimension >= 2 else None


def factors(qtype):
    """The basic quantum factors of a quantum type, left to right."""
    if isinstance(qtype, TensorType):
        return factors(qtype.left) + factors(qtype.right)
    assert isinstance(qtype, QuantumType), "Only quantum types have factors."
    return (qtype,)


def flat_dims(qtype):
    """The flattened dimension list of a quantum type."""
    return tuple(factor.dimension for factor in factors(qtype))


def tensor_of(types):
    """
    Build the canonical right-nested tensor of one or more quantum types.

    Nested tensors among the arguments are flattened first.
    """
    flat = [factor for qtype in types for factor in factors(qtype)]
    assert flat, "A tensor needs at least one factor."
    result = flat[-1]
    for factor in reversed(flat[:-1]):
        result = TensorType(factor, result)
    return result


def congruent(first, second):
    """Quantum-type congruence: equal flattened dimension lists."""
    if not (first.is_quantum and second.is_quantum):
        return False
    return flat_dims(first) == flat_dims(second)


def total_dimension(qtype):
    dimension = 1
    for d in flat_dims(qtype):
        dimension *= d
    return dimension


def assignable(target, value):
    """
    True when a value of type value may be assigned to a variable of type target.

    Quantum types only need the same total dimension, so a ``q4it`` can be
    assigned to a ``qbit ⊗ qbit`` variable; whether the structure fits is
    decided when the assignment runs.
    """
    if target == value:
        return True
    return target.is_quantum and value.is_quantum \
        and total_dimension(target) == total_dimension(value)
