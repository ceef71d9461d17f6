from .scheduling_manager import Move, SchedulingManager
from .round_robin_manager import RoundRobinManager
from .random_order_manager import RandomOrderManager
from .exhaustive_manager import ExhaustiveManager

registry = {
    'round-robin': RoundRobinManager,
    'random': RandomOrderManager,
    'exhaustive': ExhaustiveManager,
}


def manager_for(policy):
    """
    Build the manager a SchedulerPolicy asks for.

    Raises:
        KeyError: if no manager is registered for the policy kind.
    """
    return registry[policy.kind](policy)
