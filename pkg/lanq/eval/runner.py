"""
The driver: steps a configuration until every process has finished.

The driver walks the tree of configurations depth first. Measurements branch
it with their outcome probabilities and the exhaustive manager branches it on
every scheduling choice; round-robin and random scheduling follow one
interleaving. Leaves that agree on the global state and on the multiset of
process results are merged.
"""

from collections import namedtuple
import json
import logging
import time
import warnings

import numpy as np

from lanq.errors import DeadlockDetected, EvaluationStuck, StepLimitExceeded
from lanq.eval.config import MixedConfiguration, initial_config, render_result
from lanq.eval.policy import RunLimits, SchedulerPolicy
from lanq.eval.rules import Branching, SEND_RECV, communicate, diagnose, step_process, waiting_on
from lanq.internal.terms import RuntimeErrorTerm
from lanq.managers import Move, manager_for
from lanq.tools.numpy_utils import TOLERANCE, matrix_to_json

logger = logging.getLogger(__name__)

BRANCH_RULE = 'NP-ProbEvol'

Leaf = namedtuple('Leaf', ['probability', 'results', 'gs'])
Leaf.__doc__ = "A terminal configuration reached with some probability mass."


def _quotient(results):
    """Rendered results of the non-silent processes, as an order-insensitive key."""
    return tuple(sorted(render_result(result) for result in results if result is not None))


class RunReport:
    """
    The outcome distribution of a run.

    Args:
        program: Path or name of the program that ran.
        policy: The SchedulerPolicy.
        leaves: List of Leaf, in the order they were first reached.
        steps: Total number of steps over all paths.
        paths: Number of paths explored.
        wall_time: Seconds the run took.
    """
    def __init__(self, program, policy, leaves, steps, paths, wall_time=0.0):
        self.program = program
        self.policy = policy
        self.leaves = list(leaves)
        self.steps = steps
        self.paths = paths
        self.wall_time = wall_time

    @property
    def total_probability(self):
        return sum(leaf.probability for leaf in self.leaves)

    @property
    def has_runtime_error(self):
        return any(
            isinstance(result, RuntimeErrorTerm)
            for leaf in self.leaves for result in leaf.results
        )

    def distribution(self, process=0):
        """Probability of each rendered result of one process."""
        distribution = {}
        for leaf in self.leaves:
            key = render_result(leaf.results[process]) if process < len(leaf.results) else 'ε'
            distribution[key] = distribution.get(key, 0.0) + leaf.probability
        return distribution

    def to_table(self, emit_rho=False):
        lines = [f'# {self.program}  policy={self.policy.kind} branch={self.policy.branch} '
                 f'seed={self.policy.seed}', 'probability  results']
        for leaf in self.leaves:
            results = ' || '.join(render_result(result) for result in leaf.results)
            lines.append(f'{leaf.probability:.6f}     {results}')
            if emit_rho:
                rho = np.array2string(
                    leaf.gs.rho, precision=6, suppress_small=True, max_line_width=100
                )
                lines.extend('    ' + line for line in rho.splitlines())
        lines.append(f'# {len(self.leaves)} leaves, {self.paths} paths, {self.steps} steps')
        return '\n'.join(lines) + '\n'

    def to_json(self, emit_rho=False):
        leaves = []
        for leaf in self.leaves:
            entry = {
                'probability': round(leaf.probability, 12),
                'results': [render_result(result) for result in leaf.results],
                'dims': list(leaf.gs.dims),
            }
            if emit_rho:
                entry['rho'] = matrix_to_json(leaf.gs.rho)
            leaves.append(entry)
        return json.dumps({
            'program': str(self.program),
            'policy': self.policy.to_json(),
            'leaves': leaves,
            'steps': self.steps,
            'paths': self.paths,
        }, ensure_ascii=False, sort_keys=True)


class Runner:
    """
    Runs the configurations of one program.

    Args:
        context: The MethodContext of a lowered, type-checked program.
        policy: The SchedulerPolicy. Defaults to round-robin with exhaustive branching.
        limits: The RunLimits.
        trace: Optional Trace that receives one record per step.
        observer: Optional callable ``observer(before, after, rule)`` called on
            every transition.
        strict: Try every rule on every step and assert that at most one applies.
    """
    def __init__(self, context, policy=None, limits=None, trace=None, observer=None,
                 strict=False):
        self.context = context
        self.policy = SchedulerPolicy() if policy is None else policy
        self.limits = RunLimits() if limits is None else limits
        self.trace = trace
        self.observer = observer
        self.strict = strict
        assert isinstance(self.policy, SchedulerPolicy), "policy must be a SchedulerPolicy."
        assert isinstance(self.limits, RunLimits), "limits must be RunLimits."
        if self.policy.kind == 'exhaustive' and self.policy.branch == 'sample':
            warnings.warn(
                "Exhaustive scheduling with sampled measurement outcomes explores every "
                "interleaving of one sampled run."
            )
        self.manager = manager_for(self.policy)

    def enabled_moves(self, config):
        """
        Every move some process can take.

        Returns:
            The Moves in process order and a dict from each Move to its outcome:
            a Stepped or Branching outcome, or the (sender, receiver) pair of a
            communication.
        """
        moves, outcomes = [], {}
        processes = config.processes
        for index, process in enumerate(processes):
            if process.is_terminal:
                continue
            outcome = step_process(process, config.gs, self.context, strict=self.strict)
            if outcome is not None:
                moves.append(Move(index, None))
                outcomes[moves[-1]] = outcome
                continue
            waiting = waiting_on(process)
            if waiting is None or waiting[0] != 'send':
                continue
            for partner, receiver in enumerate(processes):
                if partner == index or receiver.is_terminal:
                    continue
                pair = communicate(process, receiver)
                if pair is not None:
                    moves.append(Move(index, partner))
                    outcomes[moves[-1]] = pair
        return moves, outcomes

    def successors(self, config, move, outcome):
        """The (probability, rule, configuration) triples one move leads to."""
        if move.partner is not None:
            sender, receiver = outcome
            after = config.replace(move.process, sender).replace(move.partner, receiver)
            return [(1.0, SEND_RECV, after)]
        if isinstance(outcome, Branching):
            return [
                (probability, outcome.rule, config.replace(move.process, process, gs=gs))
                for probability, process, gs in outcome.branches
            ]
        after = config.replace(
            move.process, outcome.process, gs=outcome.gs, forked=outcome.forked
        )
        return [(1.0, outcome.rule, after)]

    def step(self, config, cursor=0):
        """
        Take one scheduling step of a configuration.

        Args:
            config: The Configuration to step.
            cursor: The scheduling cursor, the position round-robin continues from.

        Returns:
            A MixedConfiguration over every configuration the scheduled moves
            lead to, or None if config is terminal.

        Raises:
            DeadlockDetected: if every unfinished process waits on a channel.
            EvaluationStuck: if no rule applies and no process waits on a channel.
        """
        if config.is_terminal:
            return None
        moves, outcomes = self.enabled_moves(config)
        if not moves:
            self._stuck(config)
        chosen = self.manager.schedule(moves, cursor, len(config.processes))
        return MixedConfiguration([
            (probability / len(chosen), after)
            for move, _ in chosen
            for probability, _, after in self.successors(config, move, outcomes[move])
        ])

    def _record(self, path, step, process, rule, weight, config):
        logger.debug("path %d step %d: process %d %s", path, step, process, rule)
        if self.trace is not None:
            self.trace.record(path, step, process, rule, weight, config)

    def _stuck(self, config):
        waiting = [
            index for index, process in enumerate(config.processes)
            if not process.is_terminal and waiting_on(process) is not None
        ]
        blocked = [index for index, process in enumerate(config.processes)
                   if not process.is_terminal]
        if waiting and len(waiting) == len(blocked):
            raise DeadlockDetected(
                f"Processes {', '.join(str(index) for index in waiting)} wait on channels "
                "with no matching partner."
            )
        index = next(index for index in blocked if index not in waiting)
        raise EvaluationStuck(f"Process {index}: {diagnose(config.processes[index])}")

    def _add_leaf(self, leaves, weight, config):
        results = config.results()
        key = _quotient(results)
        for position, leaf in enumerate(leaves):
            if _quotient(leaf.results) == key and leaf.gs.close_to(config.gs):
                leaves[position] = leaf._replace(probability=leaf.probability + weight)
                return
        leaves.append(Leaf(weight, results, config.gs))

    def run(self, config=None, program='<program>'):
        """
        Run a configuration to termination.

        Args:
            config: Starting Configuration. Defaults to the start configuration
                of the program.
            program: Name reported in the RunReport.

        Returns:
            RunReport.

        Raises:
            NoMain: if config is omitted and the program has no main method.
            StepLimitExceeded: if a path takes more than max_steps steps or the
                exhaustive manager needs more than max_paths paths.
            DeadlockDetected: if every unfinished process waits on a channel.
            EvaluationStuck: if no rule applies and no process waits on a channel.
        """
        start = time.perf_counter()
        config = initial_config(self.context) if config is None else config
        self.manager.reset()
        leaves, total_steps, paths = [], 0, 1
        stack = [(config, 1.0, 0, 0, 0)]
        while stack:
            config, weight, cursor, steps, path = stack.pop()
            while not config.is_terminal:
                if steps >= self.limits.max_steps:
                    raise StepLimitExceeded(
                        f"Path {path} did not finish within {self.limits.max_steps} steps."
                    )
                moves, outcomes = self.enabled_moves(config)
                if not moves:
                    self._stuck(config)
                chosen = self.manager.schedule(moves, cursor, len(config.processes))
                children = []
                for move, next_cursor in chosen:
                    share = weight / len(chosen)
                    successors = self.successors(config, move, outcomes[move])
                    if len(successors) > 1 and self.policy.branch == 'sample':
                        pick = self.manager.sample_branch([p for p, _, _ in successors])
                        successors = [(1.0, successors[pick][1], successors[pick][2])]
                    branching = len(successors) > 1 or isinstance(outcomes[move], Branching)
                    for probability, rule, after in successors:
                        if self.observer is not None:
                            self.observer(config, after, rule)
                        children.append(
                            (after, share * probability, next_cursor, move, rule, branching)
                        )
                steps += 1
                total_steps += 1
                for position, (after, child_weight, next_cursor, move, rule, branching) \
                        in enumerate(children):
                    child_path = path
                    if position:
                        child_path = paths
                        paths += 1
                        if paths > self.limits.max_paths:
                            raise StepLimitExceeded(
                                f"More than {self.limits.max_paths} paths to explore."
                            )
                    if branching:
                        self._record(child_path, steps, move.process, rule, weight, config)
                        rule = BRANCH_RULE
                    self._record(child_path, steps, move.process, rule, child_weight, after)
                    children[position] = (after, child_weight, next_cursor, steps, child_path)
                stack.extend(reversed(children[1:]))
                config, weight, cursor, steps, path = children[0]
            self._add_leaf(leaves, weight, config)

        wall_time = time.perf_counter() - start
        total = sum(leaf.probability for leaf in leaves)
        if abs(total - 1) > TOLERANCE:
            warnings.warn(f"Leaf probabilities sum to {total:.12f}, not 1.")
        logger.info(
            "Run finished: %d leaves, %d paths, %d steps in %.3fs",
            len(leaves), paths, total_steps, wall_time
        )
        return RunReport(program, self.policy, leaves, total_steps, paths, wall_time)


def run(context, policy=None, limits=None, trace=None, observer=None, strict=False,
        program='<program>'):
    """Run the start configuration of a program. See Runner."""
    return Runner(context, policy, limits, trace, observer, strict).run(program=program)
