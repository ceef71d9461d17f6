"""
Concrete syntax tree of LanQ programs, one node class per grammar production.

Spans are carried for diagnostics but take no part in equality, so two trees
parsed from differently formatted text compare equal.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from lanq.lang.lexer import Span
from lanq.lang.types import TypeExpr


def _span():
    return field(default=None, compare=False, repr=False)


# Expressions

class Expr:
    pass


@dataclass(frozen=True)
class Var(Expr):
    name: str
    span: Span = _span()


@dataclass(frozen=True)
class IntLit(Expr):
    value: int
    span: Span = _span()


@dataclass(frozen=True)
class BoolLit(Expr):
    value: bool
    span: Span = _span()


@dataclass(frozen=True)
class Paren(Expr):
    expr: Expr
    span: Span = _span()


@dataclass(frozen=True)
class BinOp(Expr):
    """``left op right``; right-associated, one precedence level."""
    op: str
    left: Expr
    right: Expr
    span: Span = _span()


@dataclass(frozen=True)
class Assign(Expr):
    name: str
    expr: Expr
    span: Span = _span()


@dataclass(frozen=True)
class Call(Expr):
    name: str
    args: Tuple[Expr, ...]
    span: Span = _span()


@dataclass(frozen=True)
class Recv(Expr):
    channel: Expr
    span: Span = _span()


@dataclass(frozen=True)
class Measure(Expr):
    basis: str
    targets: Tuple[str, ...]
    span: Span = _span()


@dataclass(frozen=True)
class New(Expr):
    type: TypeExpr
    span: Span = _span()


# Variable declarations

class VarDeclaration:
    pass


@dataclass(frozen=True)
class TypedDecl(VarDeclaration):
    type: TypeExpr
    names: Tuple[str, ...]
    span: Span = _span()


@dataclass(frozen=True)
class ChannelDecl(VarDeclaration):
    type: TypeExpr
    name: str
    end0: str
    end1: str
    span: Span = _span()


@dataclass(frozen=True)
class AliasDecl(VarDeclaration):
    name: str
    parts: Tuple[str, ...]
    span: Span = _span()


# Statements

class Stmt:
    pass


@dataclass(frozen=True)
class Skip(Stmt):
    span: Span = _span()


@dataclass(frozen=True)
class ExprStmt(Stmt):
    expr: Expr
    span: Span = _span()


@dataclass(frozen=True)
class Block(Stmt):
    items: Tuple[object, ...]
    span: Span = _span()


@dataclass(frozen=True)
class If(Stmt):
    cond: Expr
    then: Stmt
    orelse: Optional[Stmt] = None
    span: Span = _span()


@dataclass(frozen=True)
class While(Stmt):
    cond: Expr
    body: Stmt
    span: Span = _span()


@dataclass(frozen=True)
class Return(Stmt):
    expr: Optional[Expr] = None
    span: Span = _span()


@dataclass(frozen=True)
class Fork(Stmt):
    call: Call
    span: Span = _span()


@dataclass(frozen=True)
class Send(Stmt):
    channel: Expr
    value: Expr
    span: Span = _span()


# Program structure

@dataclass(frozen=True)
class Param:
    type: TypeExpr
    name: str
    span: Span = _span()


@dataclass(frozen=True)
class MethodHeader:
    return_type: TypeExpr
    name: str
    params: Tuple[Param, ...]
    span: Span = _span()


@dataclass(frozen=True)
class MethodDecl:
    header: MethodHeader
    body: Block

    @property
    def name(self):
        return self.header.name


@dataclass(frozen=True)
class SourceProgram:
    methods: Tuple[MethodDecl, ...]

    def method(self, name):
        for method in self.methods:
            if method.name == name:
                return method
        raise KeyError(name)
