import pytest

from lanq.errors import ParseError
from lanq.examples import corpus_names, load_corpus
from lanq.lang import ast
from lanq.lang.parser import parse_source
from lanq.lang.types import INT, QBIT, VOID, ChannelType, QuantumType, tensor_of


def only_body(source):
    return parse_source(source).methods[0].body.items


def test_method_header():
    program = parse_source('int f(qbit q, channelEnd[int] c) { return 1; }')
    header = program.methods[0].header
    assert header.name == 'f'
    assert header.return_type == INT
    assert [param.type for param in header.params][0] == QBIT
    assert [param.name for param in header.params] == ['q', 'c']
    assert program.method('f') is program.methods[0]


def test_declarations():
    items = only_body(
        'void main() { int x, y; channel[int] c withends [c0, c1]; e aliasfor [p, q]; '
        'qbit (*) q4it r; }'
    )
    assert items[0] == ast.TypedDecl(INT, ('x', 'y'))
    assert items[1] == ast.ChannelDecl(ChannelType(INT), 'c', 'c0', 'c1')
    assert items[2] == ast.AliasDecl('e', ('p', 'q'))
    assert items[3] == ast.TypedDecl(tensor_of([QBIT, QuantumType(4)]), ('r',))


def test_binary_operators_group_to_the_right():
    items = only_body('void main() { x = 1 - 2 - 3; }')
    assign = items[0].expr
    assert assign == ast.Assign('x', ast.BinOp(
        '-', ast.IntLit(1), ast.BinOp('-', ast.IntLit(2), ast.IntLit(3))
    ))


def test_statements():
    items = only_body(
        'void main() { ; if (b) x = 1; else { y = 2; } while (true) f(x); '
        'fork g(c1); send(c0, 5); return; }'
    )
    assert isinstance(items[0], ast.Skip)
    assert isinstance(items[1], ast.If) and isinstance(items[1].orelse, ast.Block)
    assert items[2] == ast.While(
        ast.BoolLit(True), ast.ExprStmt(ast.Call('f', (ast.Var('x'),)))
    )
    assert items[3] == ast.Fork(ast.Call('g', (ast.Var('c1'),)))
    assert items[4] == ast.Send(ast.Var('c0'), ast.IntLit(5))
    assert items[5] == ast.Return(None)


def test_promotable_expressions():
    items = only_body(
        'void main() { q = new qbit(); x = recv(c1); m = measure(BellBasis, a, b); }'
    )
    assert items[0].expr.expr == ast.New(QBIT)
    assert items[1].expr.expr == ast.Recv(ast.Var('c1'))
    assert items[2].expr.expr == ast.Measure('BellBasis', ('a', 'b'))


def test_void_return_type_only_for_methods():
    assert parse_source('void main() { }').methods[0].header.return_type == VOID
    with pytest.raises(ParseError):
        parse_source('void f(void x) { }')


def test_error_reports_expected_tokens():
    with pytest.raises(ParseError) as error:
        parse_source('void main() { int x }')
    assert "';'" in error.value.expected
    assert error.value.span.column == 21


def test_duplicate_parameter():
    with pytest.raises(ParseError):
        parse_source('void f(int x, bool x) { }')


def test_channel_ends_only_on_channels():
    with pytest.raises(ParseError):
        parse_source('void main() { int x withends [a, b]; }')


def test_empty_program_is_rejected():
    with pytest.raises(ParseError):
        parse_source('')


def test_every_corpus_program_parses():
    names = corpus_names()
    assert len(names) >= 30
    for name in names:
        assert parse_source(load_corpus(name)).methods
