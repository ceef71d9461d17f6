"""
Typing of running configurations.

A process is typed by walking its term stack from the top down. The walk
carries the variable properties of the process and the type σ the elements
above have produced, so each element is typed as a function from the type of
its hole to the type it hands on. Declarations still on the stack extend the
variable properties the way evaluating them would; ∘L and ∘M close a scope or
a method frame. The result is the type the process finally produces.
"""

import logging

from lanq.errors import ConfigTypeError, LanQTypeError
from lanq.internal import terms
from lanq.lang.types import VOID, ChannelEndType, tensor_of
from lanq.memory.refs import NONE
from lanq.memory.varprops import CH, QA, TYPE, VAR
from lanq.typecheck.checker import RETVAL, TypeChecker

logger = logging.getLogger(__name__)


class _AnyType:
    """The type of a process holding a runtime error: it stands for every type."""
    def __repr__(self):
        return 'any'

    __str__ = __repr__


ANY = _AnyType()


def same_type(first, second):
    return first is ANY or second is ANY or first == second


class ConfigurationTyper:
    """
    Types processes and configurations of one program.

    Args:
        context: The MethodContext of the program.
    """
    def __init__(self, context):
        self.context = context
        self.checker = TypeChecker(context)

    def fail(self, rule, message):
        raise ConfigTypeError(message, rule=rule)

    def _checked(self, rule, check, *args):
        try:
            return check(*args)
        except LanQTypeError as error:
            raise ConfigTypeError(f"{error.message} [{error.rule}]", error.span, rule)

    def _expect_void(self, rule, sigma, element):
        if not same_type(sigma, VOID):
            self.fail(rule, f"{element!r} expects the void type above it, found {sigma}.")

    def _redeclare(self, vp, name, value_type, rule):
        if vp.type_of(name) not in (None, value_type):
            self.fail(rule, f"'{name}' is already declared with type {vp.type_of(name)}.")

    def _declare(self, vp, decl):
        if isinstance(decl, terms.IVarDecl):
            rule = 'TC-VarDeclMulti' if len(decl.names) > 1 else 'TC-VarDeclOne'
            for name in decl.names:
                self._redeclare(vp, name, decl.type, rule)
                vp = vp.update(name, NONE, VAR).update(name, decl.type, TYPE)
            return vp
        elif isinstance(decl, terms.IChanDecl):
            names = (decl.name, decl.end0, decl.end1)
            if len(set(names)) != 3:
                self.fail('TC-VarDeclChE', "A channel and its ends need distinct names.")
            end_type = ChannelEndType(decl.type.element)
            for name, value_type in zip(names, (decl.type, end_type, end_type)):
                self._redeclare(vp, name, value_type, 'TC-VarDeclChE')
                vp = vp.update(name, NONE, VAR)
            return vp.update(decl.name, (decl.end0, decl.end1), CH) \
                .update(decl.name, decl.type, TYPE) \
                .update(decl.end0, end_type, TYPE) \
                .update(decl.end1, end_type, TYPE)
        gamma = vp.context()
        part_types = []
        for part in decl.parts:
            if part not in gamma or not gamma[part].is_quantum:
                self.fail('TC-VarDeclAlF', f"'{part}' is not a declared quantum variable.")
            part_types.append(gamma[part])
        alias_type = tensor_of(part_types)
        self._redeclare(vp, decl.name, alias_type, 'TC-VarDeclAlF')
        return vp.update(decl.name, NONE, VAR).update(decl.name, tuple(decl.parts), QA) \
            .update(decl.name, alias_type, TYPE)

    def _skip_to_method_end(self, ts, index, rule):
        for position in range(index + 1, len(ts)):
            if ts[position] is terms.METHOD_END:
                return position
        self.fail(rule, "A return statement is not inside a running method.")

    def type_process(self, process):
        """
        The type a process produces when started from the void type.

        Returns:
            A type expression, or ANY for a process holding a runtime error.

        Raises:
            ConfigTypeError: naming the first rule that does not apply.
        """
        vp, ts = process.vp, process.ts
        sigma = VOID
        index = 0
        while index < len(ts):
            element = ts[index]
            gamma = vp.context()
            if isinstance(element, terms.RuntimeErrorTerm):
                return ANY
            elif element is terms.BLOCK_END:
                self._expect_void('TC-BlockEnd', sigma, element)
                if not vp.current:
                    self.fail('TC-BlockEnd', "∘L has no matching block scope.")
                vp = vp.pop_scope()
            elif element is terms.METHOD_END:
                if vp.is_empty or RETVAL not in gamma:
                    self.fail('TC-RetImpl', "∘M has no matching method frame.")
                self._expect_void('TC-RetImpl', sigma, element)
                sigma = gamma[RETVAL]
                vp = vp.pop_frame()
            elif isinstance(element, terms.IReturn):
                sigma = self._type_return(element, sigma, gamma)
                index = self._skip_to_method_end(ts, index, 'TC-RetExpr')
                vp = vp.pop_frame()
            elif isinstance(element, terms.Decl):
                self._expect_void('TC-VarDeclOne', sigma, element)
                vp = self._declare(vp, element)
            elif isinstance(element, terms.ISeq):
                self._expect_void('TC-BlockHead', sigma, element)
                self._checked('TC-BlockHead', self.checker.check_items, element.items, gamma)
            elif terms.is_expr_context(element):
                gamma[terms.HOLE] = sigma
                sigma = self._checked('TC-ExprHole', self.checker.check_expr, element, gamma)
            elif terms.is_stmt_context(element):
                gamma[terms.HOLE] = sigma
                self._checked('TC-StatHole', self.checker.check_stmt, element, gamma)
                sigma = VOID
            elif isinstance(element, terms.Expr):
                if index != 0:
                    self.fail('TC-ExprClo', f"The closed expression {element!r} is not on top.")
                sigma = self._checked('TC-ExprClo', self.checker.check_expr, element, gamma)
            elif isinstance(element, terms.Stmt):
                self._expect_void('TC-StatClo', sigma, element)
                self._checked('TC-StatClo', self.checker.check_stmt, element, gamma)
                sigma = VOID
            else:
                self.fail('TC-Empty', f"{element!r} cannot be typed.")
            index += 1
        if not vp.is_empty:
            self.fail('TC-Empty', "The term stack ended inside a running method.")
        return sigma

    def _type_return(self, element, sigma, gamma):
        if RETVAL not in gamma:
            self.fail('TC-RetExpr', "A return statement is not inside a running method.")
        return_type = gamma[RETVAL]
        if element.expr is terms.HOLE:
            if not same_type(sigma, return_type):
                self.fail(
                    'TC-RetHole', f"The returned value has type {sigma}, expected {return_type}."
                )
        elif element.expr is None:
            self._expect_void('TC-RetVoid', sigma, element)
            if return_type != VOID:
                self.fail('TC-RetVoid', f"The method must return a value of type {return_type}.")
        else:
            self._expect_void('TC-RetExpr', sigma, element)
            actual = self._checked('TC-RetExpr', self.checker.check_expr, element.expr, gamma)
            if actual != return_type:
                self.fail('TC-RetExpr', f"Returned {actual}, expected {return_type}.")
        return return_type

    def type_configuration(self, config):
        """
        T-Config: the product of the process types, in process order.

        Raises:
            ConfigTypeError: naming the first rule that does not apply.
        """
        types = tuple(self.type_process(process) for process in config.processes)
        logger.debug("Configuration typed as %s", ' × '.join(str(t) for t in types))
        return types

    def type_mixed(self, mixed):
        """T-MixedConf: every branch must have the same configuration type."""
        types = None
        for _, config in mixed:
            branch_types = self.type_configuration(config)
            if types is not None and not types_agree(types, branch_types):
                self.fail('T-MixedConf', "Branches of a mixed configuration have different types.")
            types = branch_types
        return types


def types_agree(first, second):
    """True when two configuration types agree component by component."""
    return len(first) == len(second) and all(map(same_type, first, second))


def type_process(process, context):
    return ConfigurationTyper(context).type_process(process)


def type_configuration(config, context):
    """
    Type a configuration of a program.

    Args:
        config: A Configuration.
        context: The MethodContext of the program.

    Returns:
        Tuple with the type of every process; ANY for processes holding a runtime error.
    """
    return ConfigurationTyper(context).type_configuration(config)
