"""Validated run settings: how processes are scheduled and how long a run may take."""

SCHEDULER_KINDS = ('round-robin', 'random', 'exhaustive')
BRANCH_MODES = ('exhaustive', 'sample')


class SchedulerPolicy:
    """
    How the driver chooses among enabled processes and measurement outcomes.

    Args:
        kind: One of round-robin, random or exhaustive.
        seed: Seed of the random number generator used by random scheduling
            and branch sampling.
        branch: exhaustive keeps every measurement outcome, sample draws one.
    """
    def __init__(self, kind='round-robin', seed=0, branch='exhaustive'):
        self.kind = kind
        self.seed = seed
        self.branch = branch

    @property
    def kind(self):
        return self._kind

    @kind.setter
    def kind(self, value):
        assert value in SCHEDULER_KINDS, f"kind must be one of {', '.join(SCHEDULER_KINDS)}."
        self._kind = value

    @property
    def seed(self):
        return self._seed

    @seed.setter
    def seed(self, value):
        assert type(value) is int and 0 <= value < 2 ** 64, \
            "seed must be a non-negative 64-bit integer."
        self._seed = value

    @property
    def branch(self):
        return self._branch

    @branch.setter
    def branch(self, value):
        assert value in BRANCH_MODES, f"branch must be one of {', '.join(BRANCH_MODES)}."
        self._branch = value

    def to_json(self):
        return {'kind': self.kind, 'seed': self.seed, 'branch': self.branch}

    def __repr__(self):
        return f'SchedulerPolicy(kind={self.kind}, seed={self.seed}, branch={self.branch})'


class RunLimits:
    """
    Bounds on a single run.

    Args:
        max_steps: Steps allowed along one path before the run is abandoned.
        max_paths: Scheduling paths the exhaustive manager may explore.
    """
    def __init__(self, max_steps=100000, max_paths=10000):
        self.max_steps = max_steps
        self.max_paths = max_paths

    @property
    def max_steps(self):
        return self._max_steps

    @max_steps.setter
    def max_steps(self, value):
        assert type(value) is int and value > 0, "max_steps must be a positive integer."
        self._max_steps = value

    @property
    def max_paths(self):
        return self._max_paths

    @max_paths.setter
    def max_paths(self, value):
        assert type(value) is int and value > 0, "max_paths must be a positive integer."
        self._max_paths = value
