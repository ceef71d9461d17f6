from lanq.memory.lms import LocalMemoryState, fresh_classical_ref
from lanq.memory.reclist import BOT
from lanq.memory.refs import NONE, channel, channel_end, classical, gchannel, gquantum, quantum


def test_lookup_and_update():
    lms = LocalMemoryState()
    ref = classical(0)
    assert lms.lookup(ref) is BOT
    assert lms.lookup(NONE) is BOT
    updated = lms.update(ref, 5)
    assert updated.lookup(ref) == 5
    assert not lms.is_defined(ref)
    assert updated.is_defined(ref)


def test_replace_only_changes_defined_references():
    lms = LocalMemoryState().update(classical(0), 1)
    assert lms.replace(classical(1), 2) == lms
    assert lms.replace(classical(0), 2).lookup(classical(0)) == 2


def test_fresh_classical():
    lms = LocalMemoryState().update(classical(0), 1).update(classical(2), 1)
    assert lms.fresh_classical(2) == [1, 3]
    assert lms.fresh_classical(1, avoid=[1]) == [3]
    assert fresh_classical_ref(lms) == classical(1)


def test_unmap_quantum_overlaps():
    pair = quantum(((0,), (1,)))
    lms = LocalMemoryState() \
        .update(quantum((0,)), gquantum((0,))) \
        .update(quantum((1,)), gquantum((1,))) \
        .update(pair, gquantum((0, 1)))
    unmapped = lms.unmap_nd(quantum((0,)))
    assert unmapped.lookup(quantum((0,))) is BOT
    assert unmapped.lookup(pair) is BOT
    assert unmapped.lookup(quantum((1,))) == gquantum((1,))


def test_unmap_channels():
    lms = LocalMemoryState() \
        .update(channel(0), gchannel(0)) \
        .update(channel_end(0, 0), gchannel(0)) \
        .update(channel_end(1, 0), gchannel(0))
    by_end = lms.unmap_nd(channel_end(1, 0))
    assert by_end.lookup(channel(0)) is BOT
    assert by_end.lookup(channel_end(1, 0)) is BOT
    assert by_end.lookup(channel_end(0, 0)) == gchannel(0)
    whole = lms.unmap_nd(channel(0))
    assert all(whole.lookup(ref) is BOT
               for ref in (channel(0), channel_end(0, 0), channel_end(1, 0)))


def test_unmap_ignores_duplicable_references():
    lms = LocalMemoryState().update(classical(0), 1)
    assert lms.unmap_nd([classical(0), NONE]) == lms


def test_key_is_insertion_order_independent():
    first = LocalMemoryState().update(classical(0), 1).update(classical(1), 2)
    second = LocalMemoryState().update(classical(1), 2).update(classical(0), 1)
    assert first.key() == second.key()
    assert repr(first) == '([(Classical,0)↦1, (Classical,1)↦2], [], [], [])'
