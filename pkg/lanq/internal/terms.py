"""
Internal syntax: the terms the evaluator rewrites.

Every ``if`` has an ``else``, operators are prefix calls and constants are
internal values. Evaluation contexts are ordinary terms holding exactly one
HOLE in place of the subterm under evaluation; ``plug`` fills it.
"""

from dataclasses import dataclass, field, replace
from typing import Any, Optional, Tuple

from lanq.lang.lexer import Span
from lanq.lang.types import VOID, TypeExpr
from lanq.memory.reclist import BOT
from lanq.memory.refs import NONE, Ref


def _span():
    return field(default=None, compare=False, repr=False)


class Term:
    """Base class of every internal term and term-stack element."""
    pass


class Expr(Term):
    pass


class Stmt(Term):
    pass


class Decl(Term):
    pass


class _Hole(Expr):
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return '•'


HOLE = _Hole()


@dataclass(frozen=True)
class InternalValue(Expr):
    """The triplet (ref, val, T)."""
    ref: Ref
    val: Any
    type: TypeExpr

    def __repr__(self):
        val = str(self.val).lower() if isinstance(self.val, bool) else repr(self.val)
        return f'({self.ref!r},{val},{self.type})'


VOID_VALUE = InternalValue(NONE, BOT, VOID)


def constant(value, value_type):
    return InternalValue(NONE, value, value_type)


# Expressions

@dataclass(frozen=True)
class IVar(Expr):
    name: str
    span: Span = _span()

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class IBracket(Expr):
    expr: Expr
    span: Span = _span()

    def __repr__(self):
        return f'({self.expr!r})'


@dataclass(frozen=True)
class IAssign(Expr):
    name: str
    expr: Expr
    span: Span = _span()

    def __repr__(self):
        return f'{self.name} = {self.expr!r}'


@dataclass(frozen=True)
class ICall(Expr):
    name: str
    args: Tuple[Expr, ...]
    span: Span = _span()

    def __repr__(self):
        return f"{self.name}({', '.join(repr(arg) for arg in self.args)})"


@dataclass(frozen=True)
class IMeasure(Expr):
    """``measure(Es)``; the first argument is the basis."""
    args: Tuple[Expr, ...]
    span: Span = _span()

    def __repr__(self):
        return f"measure({', '.join(repr(arg) for arg in self.args)})"


@dataclass(frozen=True)
class IRecv(Expr):
    channel: Expr
    span: Span = _span()

    def __repr__(self):
        return f'recv({self.channel!r})'


@dataclass(frozen=True)
class INew(Expr):
    type: TypeExpr
    span: Span = _span()

    def __repr__(self):
        return f'new {self.type}()'


# Variable declarations

@dataclass(frozen=True)
class IVarDecl(Decl):
    type: TypeExpr
    names: Tuple[str, ...]
    span: Span = _span()

    def __repr__(self):
        return f"{self.type} {', '.join(self.names)};"


@dataclass(frozen=True)
class IChanDecl(Decl):
    type: TypeExpr
    name: str
    end0: str
    end1: str
    span: Span = _span()

    def __repr__(self):
        return f'{self.type} {self.name} withends [{self.end0},{self.end1}];'


@dataclass(frozen=True)
class IAliasDecl(Decl):
    name: str
    parts: Tuple[str, ...]
    span: Span = _span()

    def __repr__(self):
        return f"{self.name} aliasfor [{','.join(self.parts)}];"


# Statements

@dataclass(frozen=True)
class ISkip(Stmt):
    span: Span = _span()

    def __repr__(self):
        return ';'


@dataclass(frozen=True)
class IExprStmt(Stmt):
    expr: Expr
    span: Span = _span()

    def __repr__(self):
        return f'{self.expr!r};'


@dataclass(frozen=True)
class IBlock(Stmt):
    items: Tuple[Term, ...]
    span: Span = _span()

    def __repr__(self):
        return '{' + ' '.join(repr(item) for item in self.items) + '}'


@dataclass(frozen=True)
class ISeq(Stmt):
    """A block-forming sequence of two or more statements and declarations."""
    items: Tuple[Term, ...]

    def __post_init__(self):
        assert len(self.items) >= 2, "Sequences of fewer than two elements are not kept as ISeq."

    def __repr__(self):
        return ' '.join(repr(item) for item in self.items)


@dataclass(frozen=True)
class IIf(Stmt):
    cond: Expr
    then: Stmt
    orelse: Stmt
    span: Span = _span()

    def __repr__(self):
        return f'if ({self.cond!r}) {self.then!r} else {self.orelse!r}'


@dataclass(frozen=True)
class IWhile(Stmt):
    cond: Expr
    body: Stmt
    span: Span = _span()

    def __repr__(self):
        return f'while ({self.cond!r}) {self.body!r}'


@dataclass(frozen=True)
class IReturn(Stmt):
    expr: Optional[Expr] = None
    span: Span = _span()

    def __repr__(self):
        return 'return;' if self.expr is None else f'return {self.expr!r};'


@dataclass(frozen=True)
class IFork(Stmt):
    call: ICall
    span: Span = _span()

    def __repr__(self):
        return f'fork {self.call!r};'


@dataclass(frozen=True)
class ISend(Stmt):
    channel: Expr
    value: Expr
    span: Span = _span()

    def __repr__(self):
        return f'send({self.channel!r}, {self.value!r});'


# Term-stack marks and runtime errors

class _Mark(Term):
    def __init__(self, text):
        self.text = text

    def __repr__(self):
        return self.text


BLOCK_END = _Mark('∘L')
METHOD_END = _Mark('∘M')


@dataclass(frozen=True)
class RuntimeErrorTerm(Term):
    """A language runtime error; terminal for the process that raised it."""
    kind: str

    def __repr__(self):
        return self.kind


UV = RuntimeErrorTerm('UV')
OQV = RuntimeErrorTerm('OQV')
ISQV = RuntimeErrorTerm('ISQV')


def sequence(items):
    """
    The stack elements a block-forming sequence contributes.

    An empty sequence contributes nothing and a single element stands for itself.
    """
    items = tuple(items)
    if not items:
        return ()
    elif len(items) == 1:
        return items
    return (ISeq(items),)


def is_value(term):
    return isinstance(term, InternalValue)


def _has_hole(term):
    if isinstance(term, (IAssign, IExprStmt, IRecv, IReturn)):
        return getattr(term, _CHILD[type(term)]) is HOLE
    if isinstance(term, (ICall, IMeasure)):
        return any(arg is HOLE for arg in term.args)
    if isinstance(term, IIf):
        return term.cond is HOLE
    if isinstance(term, IFork):
        return any(arg is HOLE for arg in term.call.args)
    if isinstance(term, ISend):
        return term.channel is HOLE or term.value is HOLE
    return False


_CHILD = {IAssign: 'expr', IExprStmt: 'expr', IRecv: 'channel', IReturn: 'expr'}


def is_expr_context(term):
    """
    True for the contexts Ec: ``x = •``, ``m(vs, •, Es)``, ``measure(vs, •, Es)``
    and ``recv(•)``.
    """
    return isinstance(term, (IAssign, ICall, IMeasure, IRecv)) and _has_hole(term)


def is_stmt_context(term):
    """True for the contexts Sc: ``•;``, ``if (•) S else S``, ``fork m(vs, •, Es);``,
    ``send(•, E);``, ``send(v, •);`` and ``return •;``."""
    return isinstance(term, (IExprStmt, IIf, IFork, ISend, IReturn)) and _has_hole(term)


def _fill_args(args, value):
    return tuple(value if arg is HOLE else arg for arg in args)


def plug(context, value):
    """Fill the hole of an evaluation context with a value."""
    if isinstance(context, (IAssign, IExprStmt)):
        return replace(context, expr=value)
    elif isinstance(context, IReturn):
        return replace(context, expr=value)
    elif isinstance(context, IRecv):
        return replace(context, channel=value)
    elif isinstance(context, (ICall, IMeasure)):
        return replace(context, args=_fill_args(context.args, value))
    elif isinstance(context, IIf):
        return replace(context, cond=value)
    elif isinstance(context, IFork):
        return replace(context, call=plug(context.call, value))
    elif isinstance(context, ISend):
        if context.channel is HOLE:
            return replace(context, channel=value)
        return replace(context, value=value)
    raise TypeError(f"{context!r} is not an evaluation context.")


def first_pending(args):
    """Index of the first argument that is not yet a value, or None."""
    for index, arg in enumerate(args):
        if not is_value(arg):
            return index
    return None


def with_hole(args, index):
    return args[:index] + (HOLE,) + args[index + 1:]
