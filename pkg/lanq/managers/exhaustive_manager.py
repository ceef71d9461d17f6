from .scheduling_manager import SchedulingManager


class ExhaustiveManager(SchedulingManager):
    """
    The ExhaustiveManager explores every interleaving.

    Each enabled move starts its own path. The driver walks the paths depth
    first and stops with StepLimitExceeded once RunLimits.max_paths is reached.
    """
    def schedule(self, moves, cursor, count, **kwargs):
        return [(move, cursor) for move in moves]
