from .scheduling_manager import SchedulingManager


class RandomOrderManager(SchedulingManager):
    """
    The RandomOrderManager picks one enabled move uniformly at random.

    Draws come from the generator seeded at reset, so the same seed repeats
    the same interleaving.
    """
    def schedule(self, moves, cursor, count, **kwargs):
        if not moves:
            return []
        return [(moves[int(self.rng.integers(len(moves)))], cursor)]
