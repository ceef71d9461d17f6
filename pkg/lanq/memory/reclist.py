"""
Recursive lists and the ⊥ sentinel.

A recursive list is a tuple whose elements are leaves (naturals or ⊥) or
further recursive lists. Tuples keep references built from them hashable.
"""


class Bottom:
    """The undefined value ⊥. There is exactly one instance, ``BOT``."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return '⊥'

    def __reduce__(self):
        return (Bottom, ())


BOT = Bottom()


def leaves(l):
    """Yield the leaves of a recursive list depth first."""
    if isinstance(l, tuple):
        for element in l:
            yield from leaves(element)
    else:
        yield l


def linearize(l):
    """
    Flatten a recursive list into a flat list of its leaves.

    Example:
        ``linearize(((1, 2, 3), (2, 3)), (1,))`` is ``(1, 2, 3, 2, 3, 1)``.
    """
    return tuple(leaves(l))


def linearize_bot(l):
    """Like linearize, but ⊥ when any leaf is ⊥."""
    flat = linearize(l)
    return BOT if any(leaf is BOT for leaf in flat) else flat


def rec_set(l):
    return set(leaves(l))


def rec_len(l):
    return len(linearize(l))


def format_reclist(l):
    if isinstance(l, tuple):
        return '[' + ','.join(format_reclist(element) for element in l) + ']'
    return repr(l)
