"""The local memory state of a process: four finite partial maps keyed by reference kind."""

from lanq.memory.reclist import BOT, rec_set
from lanq.memory.refs import RefKind, channel, channel_end, classical

_COMPONENT = {
    RefKind.CLASSICAL: 'classical',
    RefKind.QUANTUM: 'quantum',
    RefKind.CHANNEL: 'channels',
    RefKind.CHANNEL_END0: 'channel_ends',
    RefKind.CHANNEL_END1: 'channel_ends',
}


class LocalMemoryState:
    """
    The quadruple (lms_Cl, lms_Q, lms_Ch, lms_ChE).

    Instances are treated as values: every operation returns a new state. An
    absent key is undefined, which is different from a key mapped to ⊥.
    """
    def __init__(self, classical=None, quantum=None, channels=None, channel_ends=None):
        self.classical = {} if classical is None else dict(classical)
        self.quantum = {} if quantum is None else dict(quantum)
        self.channels = {} if channels is None else dict(channels)
        self.channel_ends = {} if channel_ends is None else dict(channel_ends)

    def _component(self, ref):
        assert ref.kind in _COMPONENT, f"{ref!r} does not name local memory."
        return getattr(self, _COMPONENT[ref.kind])

    def _copy(self):
        return LocalMemoryState(self.classical, self.quantum, self.channels, self.channel_ends)

    def is_defined(self, ref):
        if ref.kind not in _COMPONENT:
            return False
        return ref in self._component(ref)

    def lookup(self, ref):
        """
        The value stored under a local reference.

        ``none`` and undefined references read as ⊥.
        """
        if ref.kind not in _COMPONENT:
            return BOT
        return self._component(ref).get(ref, BOT)

    def update(self, ref, value):
        """Always-define update ``lms[ref ↦ value]+``."""
        new = self._copy()
        new._component(ref)[ref] = value
        return new

    def replace(self, ref, value):
        """Replacement ``lms[ref ↦ value]``: only a defined key changes."""
        if not self.is_defined(ref):
            return self
        return self.update(ref, value)

    def fresh_classical(self, count=1, avoid=()):
        """
        The smallest ``count`` classical indices not in the domain of lms_Cl.

        Args:
            count: How many distinct indices to return.
            avoid: Further indices that must not be returned.
        """
        taken = {ref.data for ref in self.classical} | set(avoid)
        fresh, n = [], 0
        while len(fresh) < count:
            if n not in taken:
                fresh.append(n)
            n += 1
        return fresh

    def unmap_nd(self, refs):
        """
        Unmap one non-duplicable reference, or a set of them.

        Quantum: every quantum key sharing a register with the reference maps to ⊥.
        Channel: the channel and both its ends map to ⊥.
        ChannelEnd: the channel and that end map to ⊥.
        Any other reference leaves the state unchanged.
        """
        if not hasattr(refs, 'kind'):
            result = self
            for ref in refs:
                result = result.unmap_nd(ref)
            return result

        ref = refs
        if ref.kind is RefKind.QUANTUM:
            registers = rec_set(ref.data) - {BOT}
            new = self._copy()
            for key in self.quantum:
                if rec_set(key.data) & registers:
                    new.quantum[key] = BOT
            return new
        elif ref.kind is RefKind.CHANNEL:
            n = ref.data
            return self.replace(channel(n), BOT) \
                .replace(channel_end(0, n), BOT) \
                .replace(channel_end(1, n), BOT)
        elif ref.kind in (RefKind.CHANNEL_END0, RefKind.CHANNEL_END1):
            return self.replace(channel(ref.data), BOT).replace(ref, BOT)
        return self

    def __eq__(self, other):
        if not isinstance(other, LocalMemoryState):
            return False
        return (self.classical, self.quantum, self.channels, self.channel_ends) == \
            (other.classical, other.quantum, other.channels, other.channel_ends)

    def key(self):
        """A hashable snapshot, ordered independently of insertion order."""
        return tuple(
            tuple(sorted((repr(key), repr(value)) for key, value in component.items()))
            for component in (self.classical, self.quantum, self.channels, self.channel_ends)
        )

    def __repr__(self):
        parts = []
        for component in self.key():
            parts.append('[' + ', '.join(f'{key}↦{value}' for key, value in component) + ']')
        return '(' + ', '.join(parts) + ')'


def fresh_classical_ref(lms):
    return classical(lms.fresh_classical()[0])
