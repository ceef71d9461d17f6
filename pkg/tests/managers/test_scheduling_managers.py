import pytest

from lanq.eval.policy import SchedulerPolicy
from lanq.managers import (
    ExhaustiveManager, Move, RandomOrderManager, RoundRobinManager, manager_for, registry,
)


def started(manager_class, **kwargs):
    manager = manager_class(SchedulerPolicy(**kwargs))
    manager.reset()
    return manager


def test_registry():
    assert set(registry) == {'round-robin', 'random', 'exhaustive'}
    assert isinstance(manager_for(SchedulerPolicy('random')), RandomOrderManager)
    policy = SchedulerPolicy()
    policy._kind = 'lottery'
    with pytest.raises(KeyError):
        manager_for(policy)


def test_manager_needs_a_policy():
    with pytest.raises(AssertionError):
        RoundRobinManager({'kind': 'round-robin'})


def test_round_robin_takes_turns():
    manager = started(RoundRobinManager)
    moves = [Move(0, None), Move(1, None), Move(2, None)]
    assert manager.schedule(moves, 0, 3) == [(Move(0, None), 1)]
    assert manager.schedule(moves, 1, 3) == [(Move(1, None), 2)]
    assert manager.schedule(moves, 2, 3) == [(Move(2, None), 0)]


def test_round_robin_skips_blocked_processes_and_wraps():
    manager = started(RoundRobinManager)
    moves = [Move(0, None), Move(2, None)]
    assert manager.schedule(moves, 1, 3) == [(Move(2, None), 0)]
    assert manager.schedule([Move(0, None)], 2, 3) == [(Move(0, None), 1)]
    assert manager.schedule([], 0, 3) == []


def test_round_robin_picks_the_lowest_enabled_index_from_the_cursor():
    manager = started(RoundRobinManager)
    moves = [Move(3, None), Move(1, None), Move(2, None)]
    assert manager.schedule(moves, 0, 4) == [(Move(1, None), 2)]
    assert manager.schedule(moves, 2, 4) == [(Move(2, None), 3)]


def test_round_robin_pairs_with_the_lowest_receiver():
    manager = started(RoundRobinManager)
    moves = [Move(1, 3), Move(1, 2)]
    assert manager.schedule(moves, 0, 4) == [(Move(1, 2), 2)]


def test_random_order_repeats_with_the_seed():
    moves = [Move(index, None) for index in range(5)]

    def picks(seed):
        manager = started(RandomOrderManager, kind='random', seed=seed)
        return [manager.schedule(moves, 0, 5)[0][0].process for _ in range(20)]

    assert picks(7) == picks(7)
    assert len(set(picks(7))) > 1


def test_exhaustive_keeps_every_move():
    manager = started(ExhaustiveManager, kind='exhaustive')
    moves = [Move(0, None), Move(1, 0)]
    assert manager.schedule(moves, 3, 2) == [(Move(0, None), 3), (Move(1, 0), 3)]


def test_sample_branch():
    manager = started(RoundRobinManager, seed=11)
    assert manager.sample_branch([0.0, 1.0]) == 1
    draws = [manager.sample_branch([0.5, 0.5]) for _ in range(50)]
    assert set(draws) == {0, 1}
    again = started(RoundRobinManager, seed=11)
    again.sample_branch([0.0, 1.0])
    assert [again.sample_branch([0.5, 0.5]) for _ in range(50)] == draws
