from abc import ABC, abstractmethod
from collections import namedtuple

import numpy as np

from lanq.eval.policy import SchedulerPolicy

Move = namedtuple('Move', ['process', 'partner'])
Move.__doc__ = """
One enabled step of a configuration.

A single process step has partner None; a communication names the sending
process and the receiving partner.
"""


class SchedulingManager(ABC):
    """
    Choose which enabled moves the driver takes from a configuration.

    A Manager implements the reset and schedule API. The driver calls reset
    once per run and schedule once per configuration it steps.

    Attributes:
        policy: The SchedulerPolicy.
        rng: Random number generator seeded from the policy at reset.
    """
    def __init__(self, policy, **kwargs):
        assert isinstance(policy, SchedulerPolicy), \
            "SchedulingManager is configured through a SchedulerPolicy."
        self.policy = policy
        self.rng = None

    def reset(self, **kwargs):
        """Reseed the random number generator so runs can be repeated exactly."""
        self.rng = np.random.default_rng(self.policy.seed)

    @abstractmethod
    def schedule(self, moves, cursor, count, **kwargs):
        """
        Pick the moves to explore.

        Args:
            moves: The enabled Moves, ordered by process and then partner.
            cursor: Scheduler state carried along the current path.
            count: Number of processes in the configuration.

        Returns:
            List of (Move, cursor) pairs. Every pair starts its own path with
            the new cursor.
        """
        pass

    def sample_branch(self, probabilities):
        """Index of one measurement outcome, drawn with the given probabilities."""
        probabilities = np.asarray(probabilities, dtype=float)
        return int(self.rng.choice(len(probabilities), p=probabilities / probabilities.sum()))
