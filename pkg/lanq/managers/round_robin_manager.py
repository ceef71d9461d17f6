from .scheduling_manager import SchedulingManager


class RoundRobinManager(SchedulingManager):
    """
    The RoundRobinManager lets processes take turns in creation order.

    The cursor is the index of the process whose turn it is. The first enabled
    process at or after the cursor moves, wrapping around, and the turn passes
    to the process after it. A send pairs with the lowest-index matching
    receiver.

    Round-robin therefore picks the lowest-index enabled process counted from
    the cursor, so a process that just moved goes to the back of the rotation.
    """
    def schedule(self, moves, cursor, count, **kwargs):
        if not moves:
            return []
        count = max(count, 1)
        move = min(moves, key=lambda m: ((m.process - cursor) % count, m.partner or 0))
        return [(move, (move.process + 1) % count)]
