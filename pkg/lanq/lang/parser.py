"""Recursive descent parser for LanQ, one method per grammar nonterminal."""

from lanq.errors import ParseError
from lanq.lang import ast
from lanq.lang.lexer import TokenKind, tokenize
from lanq.lang.types import (
    BOOL, INT, VOID, ChannelEndType, ChannelType, quantum_type_named, tensor_of,
)

BASIC_TYPE_KEYWORDS = {'int': INT, 'bool': BOOL}
TYPE_KEYWORDS = frozenset({'void', 'int', 'bool', 'qbit', 'qtrit', 'channel', 'channelEnd'})


class Parser:
    """
    Parses a token sequence into a SourceProgram.

    The parser stops at the first violation and reports the set of tokens it
    would have accepted there.
    """
    def __init__(self, tokens):
        assert tokens and tokens[-1].kind is TokenKind.EOF, \
            "The token sequence must be terminated by an EOF token."
        self.tokens = tokens
        self.pos = 0

    # Token helpers

    @property
    def current(self):
        return self.tokens[self.pos]

    def peek(self, offset=1):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def at(self, text, token=None):
        token = self.current if token is None else token
        return token.kind in (TokenKind.KEYWORD, TokenKind.SYMBOL, TokenKind.OPERATOR) \
            and token.text == text

    def advance(self):
        token = self.current
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    def fail(self, *expected):
        token = self.current
        found = 'end of input' if token.kind is TokenKind.EOF else repr(token.text)
        raise ParseError(
            f"Expected {' or '.join(expected)}, found {found}.", token.span, expected
        )

    def expect(self, text):
        if not self.at(text):
            self.fail(repr(text))
        return self.advance()

    def expect_identifier(self, what='identifier'):
        if self.current.kind is not TokenKind.IDENTIFIER:
            self.fail(what)
        return self.advance()

    # Program structure

    def parse_program(self):
        methods = [self.parse_method()]
        while self.current.kind is not TokenKind.EOF:
            methods.append(self.parse_method())
        return ast.SourceProgram(tuple(methods))

    def parse_method(self):
        header = self.parse_method_header()
        if not self.at('{'):
            self.fail("'{'")
        return ast.MethodDecl(header, self.parse_block())

    def parse_method_header(self):
        span = self.current.span
        return_type = self.parse_type(allow_void=True)
        name = self.expect_identifier('method name').text
        self.expect('(')
        params = []
        if not self.at(')'):
            params.append(self.parse_param())
            while self.at(','):
                self.advance()
                params.append(self.parse_param())
        self.expect(')')
        seen = set()
        for param in params:
            if param.name in seen:
                raise ParseError(
                    f"Parameter '{param.name}' is declared twice in method '{name}'.",
                    param.span, ()
                )
            seen.add(param.name)
        return ast.MethodHeader(return_type, name, tuple(params), span)

    def parse_param(self):
        span = self.current.span
        param_type = self.parse_type()
        name = self.expect_identifier('parameter name').text
        return ast.Param(param_type, name, span)

    # Types

    def starts_type(self, token=None):
        token = self.current if token is None else token
        if token.kind is TokenKind.KEYWORD:
            return token.text in TYPE_KEYWORDS
        return token.kind is TokenKind.IDENTIFIER and quantum_type_named(token.text) is not None

    def parse_type(self, allow_void=False):
        token = self.current
        if self.at('void'):
            if not allow_void:
                self.fail('a non-void type')
            self.advance()
            return VOID
        if token.kind is TokenKind.KEYWORD and token.text in BASIC_TYPE_KEYWORDS:
            self.advance()
            return BASIC_TYPE_KEYWORDS[token.text]
        if self.at('channel') or self.at('channelEnd'):
            constructor = ChannelType if token.text == 'channel' else ChannelEndType
            self.advance()
            self.expect('[')
            element = self.parse_type()
            self.expect(']')
            return constructor(element)
        if self.starts_quantum_type():
            return self.parse_quantum_type()
        self.fail('a type')

    def starts_quantum_type(self):
        token = self.current
        return quantum_type_named(token.text) is not None \
            and token.kind in (TokenKind.KEYWORD, TokenKind.IDENTIFIER)

    def parse_quantum_type(self):
        if not self.starts_quantum_type():
            self.fail('a quantum type')
        basic = quantum_type_named(self.advance().text)
        if self.at('⊗'):
            self.advance()
            return tensor_of([basic, self.parse_quantum_type()])
        return basic

    # Blocks and declarations

    def parse_block(self):
        span = self.expect('{').span
        items = []
        while not self.at('}'):
            if self.current.kind is TokenKind.EOF:
                self.fail("'}'")
            if self.starts_declaration():
                items.append(self.parse_var_declaration())
            else:
                items.append(self.parse_code())
        self.expect('}')
        return ast.Block(tuple(items), span)

    def starts_declaration(self):
        token, following = self.current, self.peek()
        if token.kind is TokenKind.IDENTIFIER and self.at('aliasfor', following):
            return True
        if token.kind is TokenKind.KEYWORD:
            return token.text in TYPE_KEYWORDS and token.text != 'void'
        # q<d>it names a type only when a name or a tensor follows it.
        return self.starts_type(token) and (
            following.kind is TokenKind.IDENTIFIER or self.at('⊗', following)
        )

    def parse_var_declaration(self):
        span = self.current.span
        if self.current.kind is TokenKind.IDENTIFIER and self.at('aliasfor', self.peek()):
            name = self.advance().text
            self.expect('aliasfor')
            self.expect('[')
            parts = [self.expect_identifier().text]
            while self.at(','):
                self.advance()
                parts.append(self.expect_identifier().text)
            self.expect(']')
            self.expect(';')
            return ast.AliasDecl(name, tuple(parts), span)

        decl_type = self.parse_type()
        first = self.expect_identifier('variable name').text
        if self.at('withends'):
            if not isinstance(decl_type, ChannelType):
                raise ParseError(
                    "Only channel declarations may name channel ends.", self.current.span,
                    ("';'", "','")
                )
            self.advance()
            self.expect('[')
            end0 = self.expect_identifier('channel end name').text
            self.expect(',')
            end1 = self.expect_identifier('channel end name').text
            self.expect(']')
            self.expect(';')
            return ast.ChannelDecl(decl_type, first, end0, end1, span)
        names = [first]
        while self.at(','):
            self.advance()
            names.append(self.expect_identifier('variable name').text)
        self.expect(';')
        return ast.TypedDecl(decl_type, tuple(names), span)

    # Statements

    def parse_code(self):
        token = self.current
        span = token.span
        if self.at(';'):
            self.advance()
            return ast.Skip(span)
        if self.at('{'):
            return self.parse_block()
        if self.at('if'):
            self.advance()
            self.expect('(')
            cond = self.parse_expr()
            self.expect(')')
            then = self.parse_code()
            orelse = None
            if self.at('else'):
                self.advance()
                orelse = self.parse_code()
            return ast.If(cond, then, orelse, span)
        if self.at('while'):
            self.advance()
            self.expect('(')
            cond = self.parse_expr()
            self.expect(')')
            return ast.While(cond, self.parse_code(), span)
        if self.at('return'):
            self.advance()
            if self.at(';'):
                self.advance()
                return ast.Return(None, span)
            expr = self.parse_expr()
            self.expect(';')
            return ast.Return(expr, span)
        if self.at('fork'):
            self.advance()
            if self.current.kind is not TokenKind.IDENTIFIER or not self.at('(', self.peek()):
                self.fail('a method call')
            call = self.parse_call()
            self.expect(';')
            return ast.Fork(call, span)
        if self.at('send'):
            self.advance()
            self.expect('(')
            channel = self.parse_expr()
            self.expect(',')
            value = self.parse_expr()
            self.expect(')')
            self.expect(';')
            return ast.Send(channel, value, span)
        expr = self.parse_promotable()
        self.expect(';')
        return ast.ExprStmt(expr, span)

    # Expressions

    def parse_promotable(self):
        token = self.current
        span = token.span
        if self.at('new'):
            self.advance()
            alloc_type = self.parse_type()
            self.expect('(')
            self.expect(')')
            return ast.New(alloc_type, span)
        if self.at('recv'):
            self.advance()
            self.expect('(')
            channel = self.parse_expr()
            self.expect(')')
            return ast.Recv(channel, span)
        if self.at('measure'):
            self.advance()
            self.expect('(')
            basis = self.expect_identifier('basis name').text
            self.expect(',')
            targets = [self.expect_identifier('quantum variable').text]
            while self.at(','):
                self.advance()
                targets.append(self.expect_identifier('quantum variable').text)
            self.expect(')')
            return ast.Measure(basis, tuple(targets), span)
        if token.kind is TokenKind.IDENTIFIER:
            following = self.peek()
            if self.at('=', following):
                self.advance()
                self.advance()
                return ast.Assign(token.text, self.parse_expr(), span)
            if self.at('(', following):
                return self.parse_call()
        self.fail("'new'", "'recv'", "'measure'", 'an assignment', 'a method call')

    def parse_call(self):
        token = self.expect_identifier('method name')
        self.expect('(')
        args = []
        if not self.at(')'):
            args.append(self.parse_expr())
            while self.at(','):
                self.advance()
                args.append(self.parse_expr())
        self.expect(')')
        return ast.Call(token.text, tuple(args), token.span)

    def parse_expr(self):
        left = self.parse_individual()
        if self.current.kind is TokenKind.OPERATOR:
            operator = self.advance()
            return ast.BinOp(operator.text, left, self.parse_expr(), operator.span)
        return left

    def parse_individual(self):
        token = self.current
        span = token.span
        if token.kind is TokenKind.INTEGER:
            self.advance()
            return ast.IntLit(int(token.text), span)
        if self.at('true') or self.at('false'):
            self.advance()
            return ast.BoolLit(token.text == 'true', span)
        if self.at('('):
            self.advance()
            inner = self.parse_expr()
            self.expect(')')
            return ast.Paren(inner, span)
        if token.kind is TokenKind.IDENTIFIER and not (
            self.at('=', self.peek()) or self.at('(', self.peek())
        ):
            self.advance()
            return ast.Var(token.text, span)
        if token.kind is TokenKind.IDENTIFIER or self.at('new') or self.at('recv') \
                or self.at('measure'):
            return self.parse_promotable()
        self.fail('an expression')


def parse(tokens):
    """
    Parse a token sequence into a SourceProgram.

    Args:
        tokens: The output of tokenize.

    Returns:
        The SourceProgram.

    Raises:
        ParseError: on the first token that does not fit the grammar.
    """
    return Parser(list(tokens)).parse_program()


def parse_source(source):
    """Tokenize and parse source text."""
    return parse(tokenize(source))
