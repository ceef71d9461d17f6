import pytest

from lanq.errors import LexError
from lanq.lang.lexer import Span, TokenKind, tokenize


def kinds_and_texts(source):
    return [(token.kind, token.text) for token in tokenize(source)]


def test_keywords_identifiers_and_literals():
    assert kinds_and_texts('int x = 42;') == [
        (TokenKind.KEYWORD, 'int'),
        (TokenKind.IDENTIFIER, 'x'),
        (TokenKind.SYMBOL, '='),
        (TokenKind.INTEGER, '42'),
        (TokenKind.SYMBOL, ';'),
        (TokenKind.EOF, ''),
    ]


def test_longest_operator_wins():
    texts = [token.text for token in tokenize('a <= b == c != d >= e')][:-1]
    assert texts == ['a', '<=', 'b', '==', 'c', '!=', 'd', '>=', 'e']


def test_ascii_tensor_is_normalised():
    tokens = tokenize('qbit (*) qtrit')
    assert tokens[1] == tokens[1]._replace(kind=TokenKind.OPERATOR, text='⊗')
    assert [token.text for token in tokenize('qbit ⊗ qtrit')] == \
        [token.text for token in tokens]


def test_comments_and_whitespace_are_dropped():
    tokens = tokenize('// a comment\n  x // trailing\n;')
    assert [token.text for token in tokens] == ['x', ';', '']


def test_spans_count_lines_and_columns():
    tokens = tokenize('int\n  x;')
    assert tokens[0].span == Span(1, 1)
    assert tokens[1].span == Span(2, 3)
    assert tokens[2].span == Span(2, 4)


def test_unicode_identifiers():
    tokens = tokenize('ψA φ')
    assert [(token.kind, token.text) for token in tokens[:-1]] == [
        (TokenKind.IDENTIFIER, 'ψA'), (TokenKind.IDENTIFIER, 'φ'),
    ]


def test_quantum_type_names_are_identifiers():
    assert tokenize('q4it')[0].kind is TokenKind.IDENTIFIER
    assert tokenize('qbit')[0].kind is TokenKind.KEYWORD


def test_unexpected_character():
    with pytest.raises(LexError) as error:
        tokenize('int x;\nx = 1 $ 2;')
    assert error.value.span == Span(2, 7)
    assert error.value.render('prog.lq').startswith('prog.lq:2:7: lex: ')
