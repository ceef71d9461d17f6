"""
Local and global references.

Local references name cells of one process's memory; global references name
quantum registers and channels of the shared global state.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from lanq.memory.reclist import BOT, format_reclist


class RefKind(Enum):
    NONE = 'none'
    CLASSICAL = 'Classical'
    QUANTUM = 'Quantum'
    CHANNEL = 'Channel'
    CHANNEL_END0 = 'ChannelEnd0'
    CHANNEL_END1 = 'ChannelEnd1'
    GQUANTUM = 'GQuantum'
    GCHANNEL = 'GChannel'


@dataclass(frozen=True)
class Ref:
    kind: RefKind
    data: Any = None

    @property
    def is_none(self):
        return self.kind is RefKind.NONE

    @property
    def is_nonduplicable(self):
        return self.kind in NONDUPLICABLE_KINDS

    def __repr__(self):
        if self.kind is RefKind.NONE:
            return 'none'
        data = format_reclist(self.data) if isinstance(self.data, tuple) else repr(self.data)
        return f'({self.kind.value},{data})'


NONDUPLICABLE_KINDS = frozenset({
    RefKind.QUANTUM, RefKind.CHANNEL, RefKind.CHANNEL_END0, RefKind.CHANNEL_END1,
})

NONE = Ref(RefKind.NONE)


def classical(n):
    return Ref(RefKind.CLASSICAL, n)


def quantum(l):
    assert type(l) is tuple or l is BOT, "Quantum references hold a recursive list or ⊥."
    return Ref(RefKind.QUANTUM, l)


def channel(n):
    return Ref(RefKind.CHANNEL, n)


def channel_end(i, n):
    assert i in (0, 1), "A channel has exactly two ends."
    return Ref(RefKind.CHANNEL_END0 if i == 0 else RefKind.CHANNEL_END1, n)


def gquantum(l):
    assert type(l) is tuple, "GQuantum references hold a flat list of register indices."
    return Ref(RefKind.GQUANTUM, l)


def gchannel(n):
    return Ref(RefKind.GCHANNEL, n)
