"""Tokenizer for LanQ source text."""

from collections import namedtuple
from enum import Enum

from lanq.errors import LexError


Span = namedtuple('Span', ['line', 'column'])


class TokenKind(Enum):
    KEYWORD = 'keyword'
    IDENTIFIER = 'identifier'
    INTEGER = 'integer-literal'
    SYMBOL = 'symbol'
    OPERATOR = 'operator'
    EOF = 'eof'


Token = namedtuple('Token', ['kind', 'text', 'span'])

KEYWORDS = frozenset({
    'if', 'else', 'while', 'fork', 'return', 'send', 'recv', 'measure', 'new',
    'withends', 'aliasfor', 'void', 'int', 'bool', 'qbit', 'qtrit', 'channel',
    'channelEnd', 'true', 'false',
})

SYMBOLS = ('(', ')', '{', '}', '[', ']', ',', ';', '=')

# Longest first so that maximal munch falls out of the scan order.
OPERATORS = ('(*)', '==', '!=', '<=', '>=', '+', '-', '*', '<', '>', '⊗')


def _is_identifier_start(char):
    return char == '_' or char.isalpha()


def _is_identifier_part(char):
    return char == '_' or char.isalpha() or char.isdigit()


def tokenize(source):
    """
    Split source text into tokens.

    Whitespace and ``//`` line comments are discarded. The ASCII spelling
    ``(*)`` of the tensor operator is normalised to ``⊗``.

    Args:
        source: LanQ program text.

    Returns:
        A list of Tokens terminated by a single EOF token.

    Raises:
        LexError: on a character that starts no token.
    """
    tokens = []
    index, line, column = 0, 1, 1
    length = len(source)

    def advance(count):
        nonlocal index, line, column
        for char in source[index:index + count]:
            if char == '\n':
                line += 1
                column = 1
            else:
                column += 1
        index += count

    while index < length:
        char = source[index]
        if char.isspace():
            advance(1)
            continue
        if source.startswith('//', index):
            end = source.find('\n', index)
            advance((length if end == -1 else end) - index)
            continue

        span = Span(line, column)
        if _is_identifier_start(char):
            end = index + 1
            while end < length and _is_identifier_part(source[end]):
                end += 1
            text = source[index:end]
            kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENTIFIER
            tokens.append(Token(kind, text, span))
            advance(end - index)
        elif char.isdigit():
            end = index + 1
            while end < length and source[end].isdigit():
                end += 1
            tokens.append(Token(TokenKind.INTEGER, source[index:end], span))
            advance(end - index)
        else:
            for operator in OPERATORS:
                if source.startswith(operator, index):
                    text = '⊗' if operator == '(*)' else operator
                    tokens.append(Token(TokenKind.OPERATOR, text, span))
                    advance(len(operator))
                    break
            else:
                if char in SYMBOLS:
                    tokens.append(Token(TokenKind.SYMBOL, char, span))
                    advance(1)
                else:
                    raise LexError(f"Unexpected character {char!r}.", span)

    tokens.append(Token(TokenKind.EOF, '', Span(line, column)))
    return tokens
