from lanq.lang.types import (
    BOOL, INT, QBIT, QTRIT, ChannelEndType, ChannelType, QuantumType, TensorType, assignable,
    congruent, factors, flat_dims, quantum_type_named, tensor_of, total_dimension,
)


def test_quantum_type_names():
    assert quantum_type_named('qbit') == QBIT
    assert quantum_type_named('qtrit') == QTRIT
    assert quantum_type_named('q5it') == QuantumType(5)
    assert quantum_type_named('q1it') is None
    assert quantum_type_named('q05it') is None
    assert quantum_type_named('quit') is None


def test_tensor_is_right_nested_and_flattened():
    left_nested = tensor_of([tensor_of([QBIT, QTRIT]), QBIT])
    assert left_nested == TensorType(QBIT, TensorType(QTRIT, QBIT))
    assert factors(left_nested) == (QBIT, QTRIT, QBIT)
    assert flat_dims(left_nested) == (2, 3, 2)
    assert tensor_of([QBIT]) == QBIT


def test_congruence_and_total_dimension():
    assert congruent(tensor_of([QBIT, QBIT]), TensorType(QBIT, QBIT))
    assert not congruent(tensor_of([QBIT, QBIT]), QuantumType(4))
    assert not congruent(INT, INT)
    assert total_dimension(tensor_of([QBIT, QTRIT])) == 6


def test_assignable():
    assert assignable(INT, INT)
    assert not assignable(INT, BOOL)
    assert assignable(tensor_of([QBIT, QBIT]), QuantumType(4))
    assert not assignable(QBIT, QTRIT)


def test_rendering():
    assert str(tensor_of([QBIT, QTRIT, QuantumType(4)])) == 'qbit ⊗ qtrit ⊗ q4it'
    assert str(ChannelType(ChannelEndType(INT))) == 'channel[channelEnd[int]]'
    assert not ChannelType(QBIT).is_quantum
