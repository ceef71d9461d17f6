import pytest

from lanq import load_program
from lanq.errors import DuplicateMethod, ReservedName
from lanq.internal import terms
from lanq.internal.builtins import Builtins, MethodType
from lanq.internal.lower import lower_term
from lanq.lang import ast
from lanq.lang.types import BOOL, INT, QBIT, VOID
from lanq.quantum.operators import BELL_BASIS


def test_method_context():
    context = load_program(
        'int main() { return f(1, true); } void f(int x, bool b) { ; }'
    )
    assert 'main' in context and 'f' in context
    assert context.method_type('f') == MethodType((INT, BOOL), VOID)
    assert context.method_type('CNOT') == MethodType((QBIT, QBIT), VOID)
    assert context.method_type('nothing') is None
    assert context.is_classical('f')
    assert context.is_operator('H') and not context.is_operator('f')
    assert context.is_primitive('+')
    assert isinstance(context.body('main'), terms.IBlock)


def test_duplicate_method():
    with pytest.raises(DuplicateMethod) as error:
        load_program('void main() { } void main() { }')
    assert error.value.name == 'main'


def test_builtin_names_are_reserved():
    with pytest.raises(ReservedName):
        load_program('void H(qbit q) { }')
    with pytest.raises(ReservedName):
        load_program('void StdBasis() { }')


def test_operators_become_calls_and_literals_become_values():
    lowered = lower_term(ast.BinOp('+', ast.IntLit(1), ast.Var('x')))
    assert lowered == terms.ICall('+', (terms.constant(1, INT), terms.IVar('x')))
    assert lower_term(ast.BoolLit(False)) == terms.constant(False, BOOL)


def test_measurement_basis_is_a_value():
    lowered = lower_term(ast.Measure('BellBasis', ('a', 'b')))
    assert lowered.args[0].val == BELL_BASIS
    assert lowered.args[1:] == (terms.IVar('a'), terms.IVar('b'))
    unknown = lower_term(ast.Measure('Nope', ('a',)))
    assert unknown.args[0] == terms.IVar('Nope')


def test_if_without_else_gets_skip():
    lowered = lower_term(ast.If(ast.BoolLit(True), ast.Skip()))
    assert isinstance(lowered.orelse, terms.ISkip)


def test_builtins_snapshot_is_fixed_at_lowering():
    builtins = Builtins(operators={})
    with pytest.raises(KeyError):
        load_program('void main() { }', builtins).operator('H')
    assert not load_program('void main() { }', builtins).is_operator('H')
