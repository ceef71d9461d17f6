"""
The transition rules of a single process, plus the communication rule between two.

Every rule is a function ``(process, gs, context)`` that returns None when the
rule does not apply, a Stepped outcome, or a Branching outcome for a
measurement. Rules register themselves with ``@rule`` under their name and the
term-stack top types they inspect; ``step_process`` dispatches on the top.
"""

from collections import namedtuple

from lanq.errors import DimensionMismatch
from lanq.internal.terms import (
    BLOCK_END, HOLE, ISQV, METHOD_END, OQV, UV, IAliasDecl, IAssign, IBlock, IBracket, ICall,
    IChanDecl, IExprStmt, IFork, IIf, IMeasure, INew, InternalValue, IRecv, IReturn, ISend, ISeq,
    ISkip, IVar, IVarDecl, IWhile, VOID_VALUE, constant, first_pending,
    is_expr_context, is_stmt_context, is_value, plug, sequence, with_hole,
)
from lanq.lang.types import INT, ChannelEndType, ChannelType, QuantumType, congruent, tensor_of
from lanq.memory.aliasing import assign_q_alias, assign_q_system, global_quantum
from lanq.memory.lms import LocalMemoryState
from lanq.memory.reclist import BOT
from lanq.memory.refs import (
    NONE, Ref, RefKind, channel, channel_end, classical, gchannel, gquantum, quantum,
)
from lanq.memory.varprops import CH, QA, TYPE, VAR, VarPropTuple, VarProps
from lanq.quantum.operators import MeasurementBasis
from lanq.typecheck.checker import RETVAL

Stepped = namedtuple('Stepped', ['rule', 'process', 'gs', 'forked'])
Stepped.__new__.__defaults__ = (None, None)
Branching = namedtuple('Branching', ['rule', 'branches'])
Branching.__doc__ = "A measurement outcome: branches is a list of (probability, process, gs)."

_registered_rules = []


def rule(name, *top_types):
    """
    Register a transition rule.

    Args:
        name: The rule name reported in traces.
        top_types: Types (or mark objects) of term-stack tops the rule can fire on.
    """
    def register(function):
        function.rule_name = name
        function.top_types = top_types
        _registered_rules.append(function)
        return function
    return register


def _stepped(process, gs, forked=None):
    return Stepped(None, process, gs, forked)


def _push(process, *elements, rest=None, **changes):
    rest = process.ts[1:] if rest is None else rest
    return process.evolve(ts=tuple(elements) + tuple(rest), **changes)


def _raise(process, error):
    return process.evolve(ts=(error,))


def _below(process):
    return process.ts[1] if len(process.ts) > 1 else None


def _pending(expr):
    return expr is not HOLE and not is_value(expr)


# Basic rules

@rule('OP-Skip', ISkip)
def op_skip(process, gs, context):
    if isinstance(process.top, ISkip):
        return _stepped(process.evolve(ts=process.ts[1:]), gs)


@rule('OP-Var', IVar)
def op_var(process, gs, context):
    top = process.top
    if not isinstance(top, IVar):
        return None
    ref = process.vp.var_ref(top.name)
    if ref is None:
        return None
    value = InternalValue(ref, process.lms.lookup(ref), process.vp.type_of(top.name))
    return _stepped(_push(process, value), gs)


@rule('OP-Bracket', IBracket)
def op_bracket(process, gs, context):
    if isinstance(process.top, IBracket):
        return _stepped(_push(process, process.top.expr), gs)


@rule('OP-BlockHead', ISeq)
def op_block_head(process, gs, context):
    top = process.top
    if isinstance(top, ISeq):
        return _stepped(_push(process, top.items[0], *sequence(top.items[1:])), gs)


@rule('OP-SubstE', InternalValue)
def op_subst_e(process, gs, context):
    below = _below(process)
    if is_value(process.top) and below is not None and is_expr_context(below):
        return _stepped(_push(process, plug(below, process.top), rest=process.ts[2:]), gs)


@rule('OP-SubstS', InternalValue)
def op_subst_s(process, gs, context):
    below = _below(process)
    if is_value(process.top) and below is not None and is_stmt_context(below):
        return _stepped(_push(process, plug(below, process.top), rest=process.ts[2:]), gs)


# Promotable expressions

@rule('OP-PromoExpr', IExprStmt)
def op_promo_expr(process, gs, context):
    top = process.top
    if isinstance(top, IExprStmt) and _pending(top.expr):
        return _stepped(_push(process, top.expr, IExprStmt(HOLE, top.span)), gs)


@rule('OP-PromoForget', IExprStmt)
def op_promo_forget(process, gs, context):
    top = process.top
    if isinstance(top, IExprStmt) and is_value(top.expr):
        return _stepped(process.evolve(ts=process.ts[1:]), gs)


# Allocation

@rule('OP-AllocQ', INew)
def op_alloc_q(process, gs, context):
    top = process.top
    if not (isinstance(top, INew) and isinstance(top.type, QuantumType)):
        return None
    gs, index = gs.alloc_q(top.type.dimension)
    ref, target = quantum((index,)), gquantum((index,))
    lms = process.lms.update(ref, target)
    return _stepped(_push(process, InternalValue(ref, target, top.type), lms=lms), gs)


@rule('OP-AllocC', INew)
def op_alloc_c(process, gs, context):
    top = process.top
    if not (isinstance(top, INew) and isinstance(top.type, ChannelType)):
        return None
    gs, index = gs.alloc_channel(top.type.element)
    target = gchannel(index)
    lms = process.lms.update(channel(index), target) \
        .update(channel_end(0, index), target) \
        .update(channel_end(1, index), target)
    value = InternalValue(channel(index), target, top.type)
    return _stepped(_push(process, value, lms=lms), gs)


# Variable declaration

@rule('OP-VarDeclMulti', IVarDecl)
def op_var_decl_multi(process, gs, context):
    top = process.top
    if isinstance(top, IVarDecl) and len(top.names) > 1:
        first = IVarDecl(top.type, top.names[:1], top.span)
        others = IVarDecl(top.type, top.names[1:], top.span)
        return _stepped(_push(process, first, others), gs)


@rule('OP-VarDecl', IVarDecl)
def op_var_decl(process, gs, context):
    top = process.top
    if not (isinstance(top, IVarDecl) and len(top.names) == 1):
        return None
    name = top.names[0]
    vp = process.vp.update(name, NONE, VAR).update(name, top.type, TYPE)
    return _stepped(process.evolve(vp=vp, ts=process.ts[1:]), gs)


@rule('OP-VarDeclChE', IChanDecl)
def op_var_decl_che(process, gs, context):
    top = process.top
    if not isinstance(top, IChanDecl):
        return None
    end_type = ChannelEndType(top.type.element)
    vp = process.vp
    for name in (top.name, top.end0, top.end1):
        vp = vp.update(name, NONE, VAR)
    vp = vp.update(top.name, (top.end0, top.end1), CH) \
        .update(top.name, top.type, TYPE) \
        .update(top.end0, end_type, TYPE) \
        .update(top.end1, end_type, TYPE)
    return _stepped(process.evolve(vp=vp, ts=process.ts[1:]), gs)


@rule('OP-VarDeclAlF', IAliasDecl)
def op_var_decl_alf(process, gs, context):
    top = process.top
    if not isinstance(top, IAliasDecl):
        return None
    vp = process.vp
    components, subsystems, part_types = [], [], []
    for part in top.parts:
        ref = vp.var_ref(part)
        if ref is None:
            return None
        components.append(ref.data if ref.kind is RefKind.QUANTUM else BOT)
        # Nested aliases are expanded to their proper subsystems.
        subsystems.extend(vp.alias_subsyst(part) or (part,))
        part_types.append(vp.type_of(part))
    ref = quantum(tuple(components))
    lms = process.lms.update(ref, global_quantum(process.lms, components))
    vp = vp.update(top.name, ref, VAR) \
        .update(top.name, tuple(subsystems), QA) \
        .update(top.name, tensor_of(part_types), TYPE)
    return _stepped(process.evolve(lms=lms, vp=vp, ts=process.ts[1:]), gs)


# Assignment

def _assigned_value(process):
    top = process.top
    if isinstance(top, IAssign) and is_value(top.expr):
        return top.name, top.expr
    return None, None


@rule('OP-AssignExpr', IAssign)
def op_assign_expr(process, gs, context):
    top = process.top
    if isinstance(top, IAssign) and _pending(top.expr):
        return _stepped(_push(process, top.expr, IAssign(top.name, HOLE, top.span)), gs)


@rule('OP-AssignNewValue', IAssign)
def op_assign_new_value(process, gs, context):
    name, value = _assigned_value(process)
    if value is None or not value.ref.is_none or value.val is BOT:
        return None
    ref = classical(process.lms.fresh_classical()[0])
    lms = process.lms.update(ref, value.val)
    vp = process.vp.replace(name, ref, VAR)
    return _stepped(_push(process, InternalValue(ref, value.val, value.type), lms=lms, vp=vp), gs)


@rule('OP-AssignQValue', IAssign)
def op_assign_q_value(process, gs, context):
    name, value = _assigned_value(process)
    if value is None or value.ref.kind is not RefKind.QUANTUM \
            or process.vp.alias_subsyst(name) is not None:
        return None
    lms, vp = assign_q_system(process.lms, process.vp, name, value.ref)
    return _stepped(_push(process, value, lms=lms, vp=vp), gs)


def _alias_compatible(vp, name, value):
    alias_type = vp.type_of(name)
    data = value.ref.data
    return alias_type is not None and value.type.is_quantum \
        and congruent(alias_type, value.type) and isinstance(data, tuple) \
        and len(data) == len(vp.alias_subsyst(name))


@rule('OP-AssignQAValue', IAssign)
def op_assign_qa_value(process, gs, context):
    name, value = _assigned_value(process)
    if value is None or value.ref.kind is not RefKind.QUANTUM \
            or process.vp.alias_subsyst(name) is None \
            or not _alias_compatible(process.vp, name, value):
        return None
    lms, vp = assign_q_alias(process.lms, process.vp, name, value.ref)
    return _stepped(_push(process, value, lms=lms, vp=vp), gs)


@rule('OP-AssignQAValueBad', IAssign)
def op_assign_qa_value_bad(process, gs, context):
    name, value = _assigned_value(process)
    if value is None or value.ref.kind is not RefKind.QUANTUM \
            or process.vp.alias_subsyst(name) is None \
            or _alias_compatible(process.vp, name, value):
        return None
    return _stepped(_raise(process, ISQV), gs)


@rule('OP-AssignValue', IAssign)
def op_assign_value(process, gs, context):
    name, value = _assigned_value(process)
    if value is None:
        return None
    ref = value.ref
    if ref.is_none and value.val is not BOT:
        return None
    if ref.kind is RefKind.QUANTUM:
        return None
    vp = process.vp.replace(name, ref, VAR)
    ends = process.vp.chan_ends(name)
    if ref.kind is RefKind.CHANNEL and ends is not None:
        vp = vp.replace(ends[0], channel_end(0, ref.data), VAR) \
            .replace(ends[1], channel_end(1, ref.data), VAR)
    return _stepped(_push(process, value, vp=vp), gs)


# Blocks

@rule('OP-Block', IBlock)
def op_block(process, gs, context):
    top = process.top
    if isinstance(top, IBlock):
        vp = process.vp.push_scope()
        return _stepped(_push(process, *sequence(top.items), BLOCK_END, vp=vp), gs)


@rule('OP-BlockEnd', BLOCK_END)
def op_block_end(process, gs, context):
    if process.top is BLOCK_END and process.vp.current:
        return _stepped(process.evolve(vp=process.vp.pop_scope(), ts=process.ts[1:]), gs)


# Conditionals and loops

@rule('OP-IfExpr', IIf)
def op_if_expr(process, gs, context):
    top = process.top
    if isinstance(top, IIf) and _pending(top.cond):
        context_term = IIf(HOLE, top.then, top.orelse, top.span)
        return _stepped(_push(process, top.cond, context_term), gs)


def _condition(process):
    top = process.top
    if isinstance(top, IIf) and is_value(top.cond):
        return top.cond.val
    return None


@rule('OP-IfTrue', IIf)
def op_if_true(process, gs, context):
    if _condition(process) is True:
        return _stepped(_push(process, process.top.then), gs)


@rule('OP-IfFalse', IIf)
def op_if_false(process, gs, context):
    if _condition(process) is False:
        return _stepped(_push(process, process.top.orelse), gs)


@rule('OP-IfUninit', IIf)
def op_if_uninit(process, gs, context):
    if _condition(process) is BOT:
        return _stepped(_raise(process, UV), gs)


@rule('OP-While', IWhile)
def op_while(process, gs, context):
    top = process.top
    if isinstance(top, IWhile):
        unrolled = IIf(top.cond, IBlock((top.body, top), top.span), ISkip(top.span), top.span)
        return _stepped(_push(process, unrolled), gs)


# Method calls

def _call_values(process, kind=ICall):
    top = process.top
    if isinstance(top, kind) and first_pending(top.args) is None:
        return top
    return None


@rule('OP-MethodCallExpr', ICall)
def op_method_call_expr(process, gs, context):
    top = process.top
    if not isinstance(top, ICall):
        return None
    index = first_pending(top.args)
    if index is None:
        return None
    call_context = ICall(top.name, with_hole(top.args, index), top.span)
    return _stepped(_push(process, top.args[index], call_context), gs)


def _bind_arguments(lms, values, avoid=()):
    """The references r'_i: fresh classical cells for values without a reference."""
    fresh = iter(lms.fresh_classical(sum(1 for v in values if v.ref.is_none), avoid))
    return [classical(next(fresh)) if value.ref.is_none else value.ref for value in values]


@rule('OP-DoMethodCallCl', ICall)
def op_do_method_call_cl(process, gs, context):
    call = _call_values(process)
    if call is None:
        return None
    if context.is_primitive(call.name):
        if any(value.val is BOT for value in call.args):
            return None
        primitive = context.primitive(call.name)
        signature = primitive.signature_for(tuple(value.type for value in call.args))
        if signature is None:
            return None
        result = constant(primitive(*(value.val for value in call.args)), signature.result)
        return _stepped(_push(process, result), gs)
    if not context.is_classical(call.name):
        return None
    header = context.header(call.name)
    if len(header.params) != len(call.args):
        return None
    refs = _bind_arguments(process.lms, call.args)
    lms = process.lms
    for ref, value in zip(refs, call.args):
        lms = lms.update(ref, value.val)
    types = {param.name: param.type for param in header.params}
    types[RETVAL] = header.return_type
    props = VarPropTuple(var={param.name: ref for param, ref in zip(header.params, refs)},
                         type=types)
    vp = process.vp.push_frame(props)
    body = context.body(call.name)
    return _stepped(_push(process, body, METHOD_END, lms=lms, vp=vp), gs)


@rule('OP-MethodCallClUninit', ICall)
def op_method_call_cl_uninit(process, gs, context):
    call = _call_values(process)
    if call is not None and context.is_primitive(call.name) \
            and any(value.val is BOT for value in call.args):
        return _stepped(_raise(process, UV), gs)


def _quantum_targets(values):
    """The flat register lists of quantum arguments, or None if one is not a global reference."""
    lists = []
    for value in values:
        if not (isinstance(value.val, Ref) and value.val.kind is RefKind.GQUANTUM):
            return None
        lists.append(value.val.data)
    return lists


def _overlapping(lists):
    seen = set()
    for registers in lists:
        if len(registers) != len(set(registers)) or seen & set(registers):
            return True
        seen.update(registers)
    return False


@rule('OP-MethodCallQUninit', ICall)
def op_method_call_q_uninit(process, gs, context):
    call = _call_values(process)
    if call is not None and context.is_operator(call.name) \
            and any(value.val is BOT for value in call.args):
        return _stepped(_raise(process, UV), gs)


@rule('OP-MethodCallQOverlap', ICall)
def op_method_call_q_overlap(process, gs, context):
    call = _call_values(process)
    if call is None or not context.is_operator(call.name) \
            or any(value.val is BOT for value in call.args):
        return None
    lists = _quantum_targets(call.args)
    if lists is not None and _overlapping(lists):
        return _stepped(_raise(process, OQV), gs)


@rule('OP-DoMethodCallQ', ICall)
def op_do_method_call_q(process, gs, context):
    call = _call_values(process)
    if call is None or not context.is_operator(call.name):
        return None
    lists = _quantum_targets(call.args)
    if lists is None or _overlapping(lists):
        return None
    try:
        gs = gs.apply_operator(context.operator(call.name), [i for l in lists for i in l])
    except DimensionMismatch:
        return None
    return _stepped(_push(process, VOID_VALUE), gs)


# Returning from a method

def _method_end(ts):
    """Index of the first ∘M below the top, or None."""
    for index in range(1, len(ts)):
        if ts[index] is METHOD_END:
            return index
    return None


def _return_with(process, gs, value):
    index = _method_end(process.ts)
    if index is None or process.vp.is_empty:
        return None
    return _stepped(
        process.evolve(vp=process.vp.pop_frame(), ts=(value,) + process.ts[index + 1:]), gs
    )


@rule('OP-ReturnVoid', IReturn)
def op_return_void(process, gs, context):
    top = process.top
    if isinstance(top, IReturn) and top.expr is None:
        return _return_with(process, gs, VOID_VALUE)


@rule('OP-ReturnValue', IReturn)
def op_return_value(process, gs, context):
    top = process.top
    if isinstance(top, IReturn) and is_value(top.expr):
        return _return_with(process, gs, top.expr)


@rule('OP-ReturnExpr', IReturn)
def op_return_expr(process, gs, context):
    top = process.top
    if isinstance(top, IReturn) and top.expr is not None and _pending(top.expr):
        return _stepped(_push(process, top.expr, IReturn(HOLE, top.span)), gs)


@rule('OP-ReturnVoidImpl', METHOD_END)
def op_return_void_impl(process, gs, context):
    if process.top is METHOD_END and not process.vp.is_empty:
        vp = process.vp.pop_frame()
        return _stepped(process.evolve(vp=vp, ts=(VOID_VALUE,) + process.ts[1:]), gs)


# Forking

@rule('OP-ForkExpr', IFork)
def op_fork_expr(process, gs, context):
    top = process.top
    if not isinstance(top, IFork):
        return None
    index = first_pending(top.call.args)
    if index is None:
        return None
    call = ICall(top.call.name, with_hole(top.call.args, index), top.call.span)
    return _stepped(_push(process, top.call.args[index], IFork(call, top.span)), gs)


@rule('OP-DoFork', IFork)
def op_do_fork(process, gs, context):
    top = process.top
    if not (isinstance(top, IFork) and first_pending(top.call.args) is None):
        return None
    if not context.is_classical(top.call.name):
        return None
    values = top.call.args
    parent_lms = process.lms.unmap_nd([value.ref for value in values])
    kept = [value.ref.data for value in values if value.ref.kind is RefKind.CLASSICAL]
    child_lms = LocalMemoryState()
    refs = _bind_arguments(child_lms, values, avoid=kept)
    for ref, value in zip(refs, values):
        child_lms = child_lms.update(ref, value.val)
    child_args = tuple(
        InternalValue(ref, value.val, value.type) for ref, value in zip(refs, values)
    )
    child = process.evolve(
        lms=child_lms, vp=VarProps(), ts=(ICall(top.call.name, child_args, top.call.span),)
    )
    parent = process.evolve(lms=parent_lms, ts=process.ts[1:])
    return _stepped(parent, gs, child)


# Measurement

@rule('OP-MeasureExpr', IMeasure)
def op_measure_expr(process, gs, context):
    top = process.top
    if not isinstance(top, IMeasure):
        return None
    index = first_pending(top.args)
    if index is None:
        return None
    measure_context = IMeasure(with_hole(top.args, index), top.span)
    return _stepped(_push(process, top.args[index], measure_context), gs)


@rule('OP-MeasureUninit', IMeasure)
def op_measure_uninit(process, gs, context):
    measure = _call_values(process, IMeasure)
    if measure is not None and any(value.val is BOT for value in measure.args):
        return _stepped(_raise(process, UV), gs)


@rule('OP-MeasureOverlap', IMeasure)
def op_measure_overlap(process, gs, context):
    measure = _call_values(process, IMeasure)
    if measure is None or any(value.val is BOT for value in measure.args):
        return None
    lists = _quantum_targets(measure.args[1:])
    if lists is not None and _overlapping(lists):
        return _stepped(_raise(process, OQV), gs)


@rule('OP-DoMeasure', IMeasure)
def op_do_measure(process, gs, context):
    measure = _call_values(process, IMeasure)
    if measure is None or not isinstance(measure.args[0].val, MeasurementBasis):
        return None
    lists = _quantum_targets(measure.args[1:])
    if lists is None or _overlapping(lists):
        return None
    try:
        outcomes = gs.measure(measure.args[0].val, [i for l in lists for i in l])
    except DimensionMismatch:
        return None
    branches = [
        (probability, _push(process, constant(label, INT)), branch_gs)
        for probability, branch_gs, label in outcomes
    ]
    return Branching(None, branches)


# Communication

@rule('OP-SendExpr1', ISend)
def op_send_expr1(process, gs, context):
    top = process.top
    if isinstance(top, ISend) and _pending(top.channel):
        return _stepped(_push(process, top.channel, ISend(HOLE, top.value, top.span)), gs)


@rule('OP-SendExpr2', ISend)
def op_send_expr2(process, gs, context):
    top = process.top
    if isinstance(top, ISend) and is_value(top.channel) and _pending(top.value):
        return _stepped(_push(process, top.value, ISend(top.channel, HOLE, top.span)), gs)


@rule('OP-SendUninit', ISend)
def op_send_uninit(process, gs, context):
    top = process.top
    if isinstance(top, ISend) and is_value(top.channel) and is_value(top.value) \
            and (top.channel.val is BOT or top.value.val is BOT):
        return _stepped(_raise(process, UV), gs)


@rule('OP-RecvExpr', IRecv)
def op_recv_expr(process, gs, context):
    top = process.top
    if isinstance(top, IRecv) and _pending(top.channel):
        return _stepped(_push(process, top.channel, IRecv(HOLE, top.span)), gs)


@rule('OP-RecvUninit', IRecv)
def op_recv_uninit(process, gs, context):
    top = process.top
    if isinstance(top, IRecv) and is_value(top.channel) and top.channel.val is BOT:
        return _stepped(_raise(process, UV), gs)


SEND_RECV = 'OP-SendRecv'


def waiting_on(process):
    """
    What a process blocked on communication waits for.

    Returns:
        ('send', channel) or ('recv', channel) with the global channel
        reference, or None when the process is not blocked on a channel.
    """
    top = process.top
    if isinstance(top, ISend) and is_value(top.channel) and is_value(top.value) \
            and top.channel.val is not BOT and top.value.val is not BOT \
            and not top.channel.ref.is_none:
        return 'send', top.channel.val
    if isinstance(top, IRecv) and is_value(top.channel) and top.channel.val is not BOT \
            and not top.channel.ref.is_none:
        return 'recv', top.channel.val
    return None


def communicate(sender, receiver):
    """
    OP-SendRecv: hand the sent value from the sender to the receiver.

    Non-duplicable values are unmapped from the sender and mapped in the
    receiver under the same local reference.

    Returns:
        The new (sender, receiver) pair, or None if the two do not match.
    """
    sending, receiving = waiting_on(sender), waiting_on(receiver)
    if sending is None or receiving is None or sending[0] != 'send' or receiving[0] != 'recv' \
            or sending[1] != receiving[1]:
        return None
    sent = sender.top.value
    sender = sender.evolve(lms=sender.lms.unmap_nd(sent.ref), ts=sender.ts[1:])
    if sent.ref.is_nonduplicable:
        received = InternalValue(sent.ref, sent.val, sent.type)
        receiver_lms = receiver.lms.update(sent.ref, sent.val)
    else:
        received = InternalValue(NONE, sent.val, sent.type)
        receiver_lms = receiver.lms
    receiver = receiver.evolve(lms=receiver_lms, ts=(received,) + receiver.ts[1:])
    return sender, receiver


# Dispatch

RULES = tuple(_registered_rules)
RULE_NAMES = tuple(function.rule_name for function in RULES) + (SEND_RECV,)


def _top_key(top):
    return top if top is BLOCK_END or top is METHOD_END else type(top)


_RULES_BY_TOP = {}
for _function in RULES:
    for _top in _function.top_types:
        _RULES_BY_TOP.setdefault(_top, []).append(_function)


def applicable_rules(process, gs, context):
    """Names of every registered rule that applies to the process, trying all of them."""
    if not process.ts:
        return []
    return [function.rule_name for function in RULES if function(process, gs, context) is not None]


def step_process(process, gs, context, strict=False):
    """
    Take one step of a single process.

    Args:
        process: The LocalProcess to step.
        gs: The GlobalState.
        context: The MethodContext of the program.
        strict: Try every rule and assert that at most one applies.

    Returns:
        A Stepped or Branching outcome carrying the rule name, or None when
        no rule applies.
    """
    if not process.ts:
        return None
    if strict:
        candidates = RULES
    else:
        candidates = _RULES_BY_TOP.get(_top_key(process.top), ())
    chosen = None
    for function in candidates:
        outcome = function(process, gs, context)
        if outcome is None:
            continue
        if not strict:
            return outcome._replace(rule=function.rule_name)
        assert chosen is None, \
            f"Rules {chosen.rule} and {function.rule_name} both apply to {process.top!r}."
        chosen = outcome._replace(rule=function.rule_name)
    return chosen


def diagnose(process):
    """A one-line explanation of why no rule applies to a process."""
    top = process.top
    waiting = waiting_on(process)
    if waiting is not None:
        return f"blocked: waiting to {waiting[0]} on channel {waiting[1].data}"
    if isinstance(top, IVar) and process.vp.var_ref(top.name) is None:
        return f"rule failure: variable '{top.name}' is not declared"
    return f"rule failure: no rule applies to {top!r}"
