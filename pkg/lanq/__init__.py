"""
LanQ: a typed imperative language for concurrent quantum programs.

The functions here chain the tool-chain stages: tokenize, parse, lower,
type check and run.
"""

from lanq.errors import LanQError
from lanq.eval.policy import RunLimits, SchedulerPolicy
from lanq.internal.builtins import register_basis, register_operator
from lanq.internal.lower import lower
from lanq.lang.parser import parse_source
from lanq.typecheck.checker import check_program


def load_program(source, builtins=None):
    """
    Tokenize, parse and lower LanQ source text.

    Returns:
        The MethodContext of the program.
    """
    return lower(parse_source(source), builtins)


def check(source, builtins=None):
    """Load a program and type check every method. Returns its MethodContext."""
    context = load_program(source, builtins)
    check_program(context)
    return context


def execute(source, policy=None, limits=None, trace=None, program='<program>'):
    """
    Check a program and run it from its start configuration.

    Args:
        source: LanQ source text.
        policy: SchedulerPolicy. Defaults to round-robin scheduling with
            exhaustive branching.
        limits: RunLimits.
        trace: Optional Trace to record the steps in.
        program: Name reported in the RunReport.

    Returns:
        RunReport.
    """
    from lanq.eval.runner import run
    return run(check(source), policy, limits, trace=trace, program=program)
