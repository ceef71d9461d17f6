import pytest

from lanq.eval.policy import RunLimits, SchedulerPolicy


def test_defaults():
    policy = SchedulerPolicy()
    assert policy.to_json() == {'kind': 'round-robin', 'seed': 0, 'branch': 'exhaustive'}
    limits = RunLimits()
    assert (limits.max_steps, limits.max_paths) == (100000, 10000)


@pytest.mark.parametrize('kwargs', [
    {'kind': 'fifo'},
    {'seed': -1},
    {'seed': 2 ** 64},
    {'seed': 1.5},
    {'branch': 'first'},
])
def test_invalid_policies(kwargs):
    with pytest.raises(AssertionError):
        SchedulerPolicy(**kwargs)


def test_invalid_limits():
    with pytest.raises(AssertionError):
        RunLimits(max_steps=0)
    with pytest.raises(AssertionError):
        RunLimits(max_paths=2.0)


def test_repr():
    assert repr(SchedulerPolicy('random', 3, 'sample')) == \
        'SchedulerPolicy(kind=random, seed=3, branch=sample)'
