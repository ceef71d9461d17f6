from hypothesis import given, settings, strategies as st

from lanq.examples import corpus_names, load_corpus
from lanq.lang import ast
from lanq.lang.parser import parse_source
from lanq.lang.printer import format_expr, format_program


def test_corpus_prints_back_to_the_same_tree():
    for name in corpus_names():
        program = parse_source(load_corpus(name))
        assert parse_source(format_program(program)) == program


def test_left_operands_are_bracketed():
    expr = ast.BinOp('-', ast.BinOp('-', ast.IntLit(1), ast.IntLit(2)), ast.IntLit(3))
    assert format_expr(expr) == '(1 - 2) - 3'


names = st.sampled_from(['x', 'y', 'n'])
operators = st.sampled_from(['+', '-', '*', '==', '<'])
leaves = st.one_of(
    st.integers(min_value=0, max_value=99).map(ast.IntLit),
    st.booleans().map(ast.BoolLit),
    names.map(ast.Var),
)
expressions = st.recursive(
    leaves,
    lambda children: st.one_of(
        st.builds(ast.BinOp, operators, children.filter(
            lambda expr: not isinstance(expr, ast.BinOp)
        ), children),
        children.map(ast.Paren),
        st.builds(ast.Call, st.just('f'), st.lists(children, max_size=2).map(tuple)),
    ),
    max_leaves=8,
)


@settings(max_examples=50, deadline=None)
@given(expressions)
def test_printed_expressions_parse_back(expr):
    program = ast.SourceProgram((ast.MethodDecl(
        parse_source('void main() { }').methods[0].header,
        ast.Block((ast.ExprStmt(ast.Assign('x', expr)),)),
    ),))
    assert parse_source(format_program(program)) == program
