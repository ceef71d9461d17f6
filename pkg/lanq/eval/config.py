"""
Machine configurations: one global state shared by a list of local processes.

Term stacks are tuples with the top element at index 0.
"""

from lanq.errors import NoMain
from lanq.internal.terms import ICall, RuntimeErrorTerm, is_value
from lanq.memory.lms import LocalMemoryState
from lanq.memory.reclist import BOT
from lanq.memory.varprops import VarProps
from lanq.quantum.state import GlobalState
from lanq.tools.numpy_utils import TOLERANCE

MAIN = 'main'


class LocalProcess:
    """
    The local process configuration (lms, vp, ts).

    Args:
        lms: LocalMemoryState of the process.
        vp: VarProps of the process.
        ts: The term stack, top first.
    """
    def __init__(self, lms, vp, ts):
        self.lms = lms
        self.vp = vp
        self.ts = ts

    @property
    def lms(self):
        return self._lms

    @lms.setter
    def lms(self, value):
        assert isinstance(value, LocalMemoryState), "lms must be a LocalMemoryState."
        self._lms = value

    @property
    def vp(self):
        return self._vp

    @vp.setter
    def vp(self, value):
        assert isinstance(value, VarProps), "vp must be VarProps."
        self._vp = value

    @property
    def ts(self):
        return self._ts

    @ts.setter
    def ts(self, value):
        self._ts = tuple(value)

    @property
    def top(self):
        return self.ts[0] if self.ts else None

    @property
    def is_silent(self):
        """True for a process with an empty term stack."""
        return not self.ts

    @property
    def is_terminal(self):
        """
        True when the process has finished.

        A finished process is silent, holds a single value with no running
        method, or holds a single runtime error.
        """
        if not self.ts:
            return True
        if len(self.ts) != 1:
            return False
        only = self.ts[0]
        return isinstance(only, RuntimeErrorTerm) or (is_value(only) and self.vp.is_empty)

    @property
    def result(self):
        """The internal value or runtime error a terminal process holds; None when silent."""
        assert self.is_terminal, "Only terminal processes have a result."
        return self.ts[0] if self.ts else None

    def evolve(self, lms=None, vp=None, ts=None):
        return LocalProcess(
            self.lms if lms is None else lms,
            self.vp if vp is None else vp,
            self.ts if ts is None else ts,
        )

    def __eq__(self, other):
        return isinstance(other, LocalProcess) and self.lms == other.lms \
            and self.vp == other.vp and self.ts == other.ts

    def __repr__(self):
        return f'({self.lms!r}, {self.vp!r}, {render_stack(self.ts)})'


def render_stack(ts):
    if not ts:
        return 'ε'
    return ' '.join(f'⟨{element!r}⟩' for element in ts)


def render_global_state(gs):
    channels = ', '.join(str(element) for element in gs.channels)
    return f'((ρ, {list(gs.dims)}), [{channels}])'


def render_result(result):
    """A process result as text: ε, the value component, or the runtime error."""
    if result is None:
        return 'ε'
    if isinstance(result, RuntimeErrorTerm):
        return result.kind
    value = result.val
    if value is BOT:
        return '⊥'
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


class Configuration:
    """
    A machine configuration ``[gs | ls_1 || ... || ls_n]``.

    Processes keep their creation order, so a process index is stable over a run.

    Args:
        gs: The GlobalState.
        processes: The LocalProcesses, in creation order.
    """
    def __init__(self, gs, processes):
        assert isinstance(gs, GlobalState), "gs must be a GlobalState."
        self.gs = gs
        self.processes = tuple(processes)
        assert all(isinstance(process, LocalProcess) for process in self.processes), \
            "processes must be LocalProcesses."

    @property
    def is_terminal(self):
        return all(process.is_terminal for process in self.processes)

    def replace(self, index, process, gs=None, forked=None):
        """A new configuration with one process replaced and optionally a forked one appended."""
        processes = list(self.processes)
        processes[index] = process
        if forked is not None:
            processes.append(forked)
        return Configuration(self.gs if gs is None else gs, processes)

    def results(self):
        return tuple(process.result for process in self.processes)

    def __repr__(self):
        rendered = ' || '.join(repr(process) for process in self.processes)
        return f'[{render_global_state(self.gs)} | {rendered}]'


class MixedConfiguration:
    """
    A probability-weighted list of configurations.

    Args:
        branches: List of (probability, Configuration) pairs whose probabilities sum to 1.
    """
    def __init__(self, branches):
        branches = list(branches)
        assert branches, "A mixed configuration needs at least one branch."
        assert all(0 < p <= 1 + TOLERANCE for p, _ in branches), \
            "Branch probabilities must lie in (0, 1]."
        assert abs(sum(p for p, _ in branches) - 1) <= TOLERANCE, \
            "Branch probabilities must sum to 1."
        self.branches = branches

    def __iter__(self):
        return iter(self.branches)

    def __len__(self):
        return len(self.branches)

    def __repr__(self):
        return ' ⊞ '.join(f'{p:.6f}•{config!r}' for p, config in self.branches)


def initial_config(context):
    """
    The starting configuration ``[((1), []), [] | (([],[],[],[]), ■, main())]``.

    Raises:
        NoMain: if the program has no method called main.
    """
    if MAIN not in context:
        raise NoMain()
    main = LocalProcess(LocalMemoryState(), VarProps(), (ICall(MAIN, ()),))
    return Configuration(GlobalState(), (main,))
