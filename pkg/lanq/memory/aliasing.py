"""
Assignment to quantum variables in the presence of aliases.

A proper quantum variable holds a reference to its own system. An alias
declared with ``aliasfor`` holds a composite reference whose components are
the references of its proper subsystems, so assigning a proper variable has to
rebuild every alias that uses it, and assigning an alias assigns each of its
subsystems in turn.
"""

from lanq.memory.reclist import BOT, linearize_bot
from lanq.memory.refs import RefKind, gquantum, quantum
from lanq.memory.varprops import VAR


def global_quantum(lms, components):
    """
    The global reference a composite of component lists stands for.

    ⊥ when any component is ⊥ or is not mapped to a global reference.
    """
    for component in components:
        if component is BOT:
            return BOT
        value = lms.lookup(quantum(component))
        if value is BOT or value.kind is not RefKind.GQUANTUM:
            return BOT
    flat = linearize_bot(tuple(components))
    return BOT if flat is BOT else gquantum(flat)


def assign_q_system_direct(lms, vp, name, ref):
    flat = linearize_bot(ref.data)
    target = BOT if flat is BOT else gquantum(flat)
    return lms.update(ref, target), vp.replace(name, ref, VAR)


def assign_q_system_in_alias(lms, vp, alias, component, indices):
    """
    Rebuild the composite reference of one alias after a subsystem changed.

    Args:
        lms: The local memory state.
        vp: The variable properties.
        alias: Name of the alias to rebuild.
        component: The recursive list now held by the subsystem.
        indices: Positions of the subsystem in the alias's subsystem list.

    Returns:
        The new (lms, vp) pair.
    """
    subsystems = vp.alias_subsyst(alias)
    old = vp.var_ref(alias)
    if old is not None and old.kind is RefKind.QUANTUM and isinstance(old.data, tuple) \
            and len(old.data) == len(subsystems):
        components = list(old.data)
    else:
        components = []
        for subsystem in subsystems:
            ref = vp.var_ref(subsystem)
            has_list = ref is not None and ref.kind is RefKind.QUANTUM
            components.append(ref.data if has_list else BOT)
    for index in indices:
        components[index] = component

    new_ref = quantum(tuple(components))
    if old is not None and old.kind is RefKind.QUANTUM:
        lms = lms.replace(old, BOT)
    lms = lms.update(new_ref, global_quantum(lms, components))
    return lms, vp.replace(alias, new_ref, VAR)


def assign_q_system(lms, vp, name, ref):
    """
    Assign a quantum reference to a proper quantum variable.

    The variable is bound directly and every alias of the running method that
    lists it among its subsystems is rebuilt, at every position it occurs.

    Args:
        lms: The local memory state.
        vp: The variable properties.
        name: A proper quantum variable.
        ref: A Quantum reference.

    Returns:
        The new (lms, vp) pair.
    """
    assert ref.kind is RefKind.QUANTUM, "Only quantum references are assigned to quantum systems."
    lms, vp = assign_q_system_direct(lms, vp, name, ref)
    for alias in sorted(vp.local_aliased_vars()):
        indices = [
            index for index, subsystem in enumerate(vp.alias_subsyst(alias)) if subsystem == name
        ]
        if indices:
            lms, vp = assign_q_system_in_alias(lms, vp, alias, ref.data, indices)
    return lms, vp


def assign_q_alias(lms, vp, name, ref):
    """
    Assign a composite quantum reference to an alias, one subsystem at a time.

    The component count of the reference must equal the number of subsystems;
    the evaluator checks this before calling.
    """
    subsystems = vp.alias_subsyst(name)
    assert ref.kind is RefKind.QUANTUM and isinstance(ref.data, tuple) \
        and len(ref.data) == len(subsystems), \
        "The reference must have one component per subsystem of the alias."
    for subsystem, component in zip(subsystems, ref.data):
        lms, vp = assign_q_system(lms, vp, subsystem, quantum(component))
    return lms, vp
