"""
Static typing of lowered programs.

Each check is named after the typing rule it implements and failures carry
that name. Variable typing contexts are plain dicts; the hole of an
evaluation context is typed through the ``HOLE`` key so that the same checker
types partially evaluated terms during configuration typing.
"""

import logging

from lanq.errors import LanQTypeError
from lanq.internal import terms
from lanq.internal.builtins import TENSOR_OPERATOR
from lanq.lang.types import (
    BOOL, INT, MEASUREMENT_BASIS, VOID, ChannelEndType, ChannelType, QuantumType, assignable,
    tensor_of,
)

logger = logging.getLogger(__name__)

RETVAL = '@retVal'


def ret_ok(term):
    """
    True when every control path through a block-forming statement reaches ``return E;``.

    The check is syntactic: ``while (true) return 1;`` does not satisfy it.
    """
    if isinstance(term, terms.IReturn):
        return term.expr is not None
    elif isinstance(term, terms.IIf):
        return ret_ok(term.then) and ret_ok(term.orelse)
    elif isinstance(term, (terms.IBlock, terms.ISeq)):
        return any(ret_ok(item) for item in term.items)
    return False


def extend(gamma, name, value_type, rule, span=None, method=None):
    """
    The extension Γ, name:T.

    Raises:
        LanQTypeError: if Γ already gives name a different type.
    """
    if name in gamma and gamma[name] != value_type:
        raise LanQTypeError(
            f"'{name}' is already declared with type {gamma[name]}, cannot redeclare as "
            f"{value_type}.", span, rule, method
        )
    extended = dict(gamma)
    extended[name] = value_type
    return extended


class TypeChecker:
    """
    Type checks the methods of a MethodContext.

    Args:
        context: The MethodContext of a lowered program.
    """
    def __init__(self, context):
        self.context = context
        self.method = None

    def fail(self, rule, message, term=None):
        raise LanQTypeError(message, getattr(term, 'span', None), rule, self.method)

    # Program and methods

    def check_program(self):
        for name in sorted(self.context.types):
            self.check_method(name)

    def check_method(self, name):
        header = self.context.header(name)
        body = self.context.body(name)
        self.method = name
        try:
            return_type = header.return_type
            if return_type != VOID and not ret_ok(body):
                self.fail(
                    'T-Method',
                    f"Not every path through '{name}' returns a value of type {return_type}.",
                    header,
                )
            gamma = {}
            for param in header.params:
                gamma = extend(gamma, param.name, param.type, 'T-Method', param.span, name)
            gamma = extend(gamma, RETVAL, return_type, 'T-Method', header.span, name)
            self.check_stmt(body, gamma)
        finally:
            self.method = None
        logger.debug("Method '%s' is well-typed", name)

    # Declarations

    def declare(self, decl, gamma):
        """Extend Γ with the variables a declaration introduces."""
        if isinstance(decl, terms.IVarDecl):
            for name in decl.names:
                gamma = extend(gamma, name, decl.type, 'T-VarDecl', decl.span, self.method)
            return gamma
        elif isinstance(decl, terms.IChanDecl):
            if not isinstance(decl.type, ChannelType):
                self.fail('T-VarDeclChE', "Only channels are declared with ends.", decl)
            end_type = ChannelEndType(decl.type.element)
            if len({decl.name, decl.end0, decl.end1}) != 3:
                self.fail('T-VarDeclChE', "A channel and its ends need distinct names.", decl)
            gamma = extend(gamma, decl.name, decl.type, 'T-VarDeclChE', decl.span, self.method)
            gamma = extend(gamma, decl.end0, end_type, 'T-VarDeclChE', decl.span, self.method)
            return extend(gamma, decl.end1, end_type, 'T-VarDeclChE', decl.span, self.method)
        elif isinstance(decl, terms.IAliasDecl):
            return extend(
                gamma, decl.name, self.alias_type(decl, gamma), 'T-VarDeclAlF', decl.span,
                self.method
            )
        self.fail('T-VarDecl', f"{decl!r} is not a declaration.", decl)

    def alias_type(self, decl, gamma):
        part_types = []
        for part in decl.parts:
            if part not in gamma:
                self.fail('T-VarDeclAlF', f"Undeclared variable '{part}'.", decl)
            if not gamma[part].is_quantum:
                self.fail(
                    'T-VarDeclAlF', f"'{part}' has type {gamma[part]}, not a quantum type.", decl
                )
            part_types.append(gamma[part])
        return tensor_of(part_types)

    # Statements

    def check_items(self, items, gamma):
        """
        Check a block-forming sequence left to right.

        Declarations extend Γ for the rest of the sequence only.
        """
        for item in items:
            if isinstance(item, terms.Decl):
                gamma = self.declare(item, gamma)
            else:
                self.check_stmt(item, gamma)
        return gamma

    def check_stmt(self, stmt, gamma):
        """
        Check that a statement has type void under Γ.

        Raises:
            LanQTypeError: naming the rule that does not apply.
        """
        if isinstance(stmt, terms.ISkip):
            return VOID
        elif isinstance(stmt, terms.IExprStmt):
            self.check_expr(stmt.expr, gamma)
        elif isinstance(stmt, (terms.IBlock, terms.ISeq)):
            self.check_items(stmt.items, gamma)
        elif isinstance(stmt, terms.IIf):
            self.expect(stmt.cond, gamma, BOOL, 'T-If')
            self.check_stmt(stmt.then, gamma)
            self.check_stmt(stmt.orelse, gamma)
        elif isinstance(stmt, terms.IWhile):
            self.expect(stmt.cond, gamma, BOOL, 'T-While')
            self.check_stmt(stmt.body, gamma)
        elif isinstance(stmt, terms.IReturn):
            self.check_return(stmt, gamma)
        elif isinstance(stmt, terms.IFork):
            if not self.context.is_classical(stmt.call.name):
                self.fail(
                    'T-Fork', f"Only classical methods can be forked, not '{stmt.call.name}'.",
                    stmt
                )
            self.check_expr(stmt.call, gamma)
        elif isinstance(stmt, terms.ISend):
            channel_type = self.check_expr(stmt.channel, gamma)
            if not isinstance(channel_type, ChannelEndType):
                self.fail('T-Send', f"Cannot send over a value of type {channel_type}.", stmt)
            self.expect(stmt.value, gamma, channel_type.element, 'T-Send')
        elif isinstance(stmt, terms.Decl):
            self.declare(stmt, gamma)
        else:
            self.fail('T-Stmt', f"{stmt!r} is not a statement.", stmt)
        return VOID

    def check_return(self, stmt, gamma):
        if RETVAL not in gamma:
            self.fail('T-ReturnExpr', "Return outside of a method.", stmt)
        if stmt.expr is None:
            if gamma[RETVAL] != VOID:
                self.fail(
                    'T-ReturnVoid', f"The method must return a value of type {gamma[RETVAL]}.",
                    stmt
                )
        else:
            self.expect(stmt.expr, gamma, gamma[RETVAL], 'T-ReturnExpr')

    # Expressions

    def expect(self, expr, gamma, expected, rule):
        actual = self.check_expr(expr, gamma)
        if actual != expected:
            self.fail(rule, f"Expected type {expected}, found {actual}.", expr)
        return actual

    def check_expr(self, expr, gamma):
        """
        The type of an expression under Γ.

        Raises:
            LanQTypeError: naming the rule that does not apply.
        """
        if expr is terms.HOLE:
            if terms.HOLE not in gamma:
                self.fail('T-Hole', "The hole has no type in this context.")
            return gamma[terms.HOLE]
        elif isinstance(expr, terms.InternalValue):
            return expr.type
        elif isinstance(expr, terms.IVar):
            if expr.name not in gamma:
                self.fail('T-Var', f"Undeclared variable '{expr.name}'.", expr)
            return gamma[expr.name]
        elif isinstance(expr, terms.IBracket):
            return self.check_expr(expr.expr, gamma)
        elif isinstance(expr, terms.INew):
            if not isinstance(expr.type, (QuantumType, ChannelType)):
                self.fail(
                    'T-Alloc', f"Only quantum systems and channels are allocated, not {expr.type}.",
                    expr
                )
            return expr.type
        elif isinstance(expr, terms.IAssign):
            if expr.name not in gamma:
                self.fail('T-Assign', f"Assignment to undeclared variable '{expr.name}'.", expr)
            actual = self.check_expr(expr.expr, gamma)
            if not assignable(gamma[expr.name], actual):
                self.fail(
                    'T-Assign', f"Cannot assign a value of type {actual} to '{expr.name}' of "
                    f"type {gamma[expr.name]}.", expr
                )
            return gamma[expr.name]
        elif isinstance(expr, terms.ICall):
            return self.check_call(expr, gamma)
        elif isinstance(expr, terms.IMeasure):
            return self.check_measure(expr, gamma)
        elif isinstance(expr, terms.IRecv):
            channel_type = self.check_expr(expr.channel, gamma)
            if not isinstance(channel_type, ChannelEndType):
                self.fail('T-Recv', f"Cannot receive from a value of type {channel_type}.", expr)
            return channel_type.element
        self.fail('T-Expr', f"{expr!r} is not an expression.", expr)

    def check_call(self, call, gamma):
        if call.name == TENSOR_OPERATOR:
            self.fail('T-MethodCall', "The tensor operator only combines types, not values.", call)
        arg_types = tuple(self.check_expr(arg, gamma) for arg in call.args)
        if self.context.is_primitive(call.name):
            signature = self.context.primitive(call.name).signature_for(arg_types)
            if signature is None:
                rendered = ', '.join(str(arg_type) for arg_type in arg_types)
                self.fail('T-MethodCall', f"'{call.name}' does not accept ({rendered}).", call)
            return signature.result
        method_type = self.context.method_type(call.name)
        if method_type is None:
            self.fail('T-MethodCall', f"Unknown method '{call.name}'.", call)
        if len(arg_types) != len(method_type.params):
            self.fail(
                'T-MethodCall',
                f"'{call.name}' takes {len(method_type.params)} arguments, "
                f"{len(arg_types)} given.", call
            )
        for index, (actual, expected) in enumerate(zip(arg_types, method_type.params)):
            if actual != expected:
                self.fail(
                    'T-MethodCall',
                    f"Argument {index} of '{call.name}' must have type {expected}, not {actual}.",
                    call
                )
        return method_type.result

    def check_measure(self, measure, gamma):
        if len(measure.args) < 2:
            self.fail(
                'T-Measurement', "Measurement needs a basis and at least one system.", measure
            )
        self.expect(measure.args[0], gamma, MEASUREMENT_BASIS, 'T-Measurement')
        for arg in measure.args[1:]:
            arg_type = self.check_expr(arg, gamma)
            if not arg_type.is_quantum:
                self.fail('T-Measurement', f"Cannot measure a value of type {arg_type}.", measure)
        return INT


def check_program(context):
    """
    Type check every method of a program.

    Args:
        context: The MethodContext of a lowered program.

    Raises:
        LanQTypeError: on the first method that is not well-typed.
    """
    TypeChecker(context).check_program()


def check_method(context, name):
    TypeChecker(context).check_method(name)
