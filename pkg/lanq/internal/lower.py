"""
Lowering from the concrete syntax tree to internal syntax.

Three rewrites happen here: an ``if`` without ``else`` gets ``else ;``, every
constant becomes an internal value ``(none, C, T)`` and every binary operator
``E op F`` becomes the prefix call ``op(E, F)``. Multi-variable declarations
are kept whole; the evaluator splits them one name at a time.
"""

import logging

from lanq.errors import DuplicateMethod, ReservedName
from lanq.internal import terms
from lanq.internal.builtins import Builtins, MethodType, operator_type
from lanq.lang import ast
from lanq.lang.types import BOOL, INT, MEASUREMENT_BASIS
from lanq.memory.refs import NONE

logger = logging.getLogger(__name__)


def method_type_of(header):
    """
    The method type S1, ..., Sn -> S read off a method header.

    Args:
        header: A MethodHeader.

    Returns:
        MethodType with the parameter types in declaration order and the return type.
    """
    return MethodType(tuple(param.type for param in header.params), header.return_type)


class MethodContext:
    """
    The method typing context (M_T, M_H, M_B) of a lowered program.

    Args:
        types: Method name to MethodType, for user methods.
        headers: Method name to MethodHeader.
        bodies: Method name to the lowered IBlock body.
        builtins: The Builtins snapshot the program was lowered against.
    """
    def __init__(self, types, headers, bodies, builtins):
        assert set(types) == set(headers) == set(bodies), \
            "Method types, headers and bodies must cover the same methods."
        self.types = dict(types)
        self.headers = dict(headers)
        self.bodies = dict(bodies)
        self.builtins = builtins

    @property
    def builtins(self):
        return self._builtins

    @builtins.setter
    def builtins(self, value):
        assert isinstance(value, Builtins), "builtins must be a Builtins snapshot."
        self._builtins = value

    def is_classical(self, name):
        """True for methods with a LanQ body."""
        return name in self.bodies

    def is_operator(self, name):
        return name not in self.bodies and self.builtins.is_operator(name)

    def is_primitive(self, name):
        return name not in self.bodies and self.builtins.is_primitive(name)

    def method_type(self, name):
        """The MethodType of a user method or quantum operator, or None."""
        if name in self.types:
            return self.types[name]
        if self.builtins.is_operator(name):
            return operator_type(self.builtins.operators[name])
        return None

    def operator(self, name):
        return self.builtins.operators[name]

    def primitive(self, name):
        return self.builtins.primitives[name]

    def header(self, name):
        return self.headers[name]

    def body(self, name):
        return self.bodies[name]

    def __contains__(self, name):
        return name in self.bodies


class Lowerer:
    """Converts one program's syntax tree into internal terms."""
    def __init__(self, builtins):
        self.builtins = builtins

    def expr(self, node):
        if isinstance(node, terms.Term):
            return node
        elif isinstance(node, ast.Var):
            return terms.IVar(node.name, node.span)
        elif isinstance(node, ast.IntLit):
            return terms.constant(node.value, INT)
        elif isinstance(node, ast.BoolLit):
            return terms.constant(node.value, BOOL)
        elif isinstance(node, ast.Paren):
            return terms.IBracket(self.expr(node.expr), node.span)
        elif isinstance(node, ast.BinOp):
            return terms.ICall(node.op, (self.expr(node.left), self.expr(node.right)), node.span)
        elif isinstance(node, ast.Assign):
            return terms.IAssign(node.name, self.expr(node.expr), node.span)
        elif isinstance(node, ast.Call):
            return self.call(node)
        elif isinstance(node, ast.Recv):
            return terms.IRecv(self.expr(node.channel), node.span)
        elif isinstance(node, ast.Measure):
            return terms.IMeasure(
                (self.basis(node.basis, node.span),)
                + tuple(terms.IVar(target, node.span) for target in node.targets),
                node.span,
            )
        elif isinstance(node, ast.New):
            return terms.INew(node.type, node.span)
        raise TypeError(f"Cannot lower expression {node!r}.")

    def basis(self, name, span):
        # An unknown basis stays a variable so that typing reports it.
        if name in self.builtins.bases:
            return terms.InternalValue(NONE, self.builtins.bases[name], MEASUREMENT_BASIS)
        return terms.IVar(name, span)

    def call(self, node):
        if isinstance(node, terms.ICall):
            return node
        return terms.ICall(node.name, tuple(self.expr(arg) for arg in node.args), node.span)

    def item(self, node):
        """Lower a statement or a variable declaration."""
        if isinstance(node, terms.Term):
            return node
        elif isinstance(node, ast.TypedDecl):
            return terms.IVarDecl(node.type, node.names, node.span)
        elif isinstance(node, ast.ChannelDecl):
            return terms.IChanDecl(node.type, node.name, node.end0, node.end1, node.span)
        elif isinstance(node, ast.AliasDecl):
            return terms.IAliasDecl(node.name, node.parts, node.span)
        elif isinstance(node, ast.Skip):
            return terms.ISkip(node.span)
        elif isinstance(node, ast.ExprStmt):
            return terms.IExprStmt(self.expr(node.expr), node.span)
        elif isinstance(node, ast.Block):
            return terms.IBlock(tuple(self.item(item) for item in node.items), node.span)
        elif isinstance(node, ast.If):
            orelse = terms.ISkip(node.span) if node.orelse is None else self.item(node.orelse)
            return terms.IIf(self.expr(node.cond), self.item(node.then), orelse, node.span)
        elif isinstance(node, ast.While):
            return terms.IWhile(self.expr(node.cond), self.item(node.body), node.span)
        elif isinstance(node, ast.Return):
            expr = None if node.expr is None else self.expr(node.expr)
            return terms.IReturn(expr, node.span)
        elif isinstance(node, ast.Fork):
            return terms.IFork(self.call(node.call), node.span)
        elif isinstance(node, ast.Send):
            return terms.ISend(self.expr(node.channel), self.expr(node.value), node.span)
        raise TypeError(f"Cannot lower statement {node!r}.")


def lower_term(node, builtins=None):
    """
    Lower a single expression, statement or declaration.

    Internal terms are returned unchanged.
    """
    lowerer = Lowerer(Builtins() if builtins is None else builtins)
    if isinstance(node, ast.Expr):
        return lowerer.expr(node)
    return lowerer.item(node)


def lower(program, builtins=None):
    """
    Build the method typing context of a parsed program.

    Args:
        program: A SourceProgram.
        builtins: Builtins snapshot to lower against. Defaults to the names
            registered at call time.

    Returns:
        The MethodContext.

    Raises:
        DuplicateMethod: if two methods share a name.
        ReservedName: if a method shadows a builtin operator, basis or primitive.
    """
    builtins = Builtins() if builtins is None else builtins
    lowerer = Lowerer(builtins)
    types, headers, bodies = {}, {}, {}
    for method in program.methods:
        name = method.name
        if name in headers:
            raise DuplicateMethod(name, method.header.span)
        if name in builtins:
            raise ReservedName(name, method.header.span)
        headers[name] = method.header
        types[name] = method_type_of(method.header)
        bodies[name] = lowerer.item(method.body)
    logger.debug("Lowered %d methods: %s", len(bodies), ', '.join(sorted(bodies)))
    return MethodContext(types, headers, bodies, builtins)
