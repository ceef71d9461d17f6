import itertools
import json

import numpy as np
import pytest

from lanq import check, execute
from lanq.errors import DeadlockDetected, EvaluationStuck, NoMain, StepLimitExceeded
from lanq.eval.config import Configuration, LocalProcess, initial_config
from lanq.eval.policy import RunLimits, SchedulerPolicy
from lanq.eval.runner import Runner
from lanq.eval.trace import Trace
from lanq.examples import corpus_names, load_corpus
from lanq.internal.builtins import Builtins
from lanq.internal.terms import METHOD_END, IVar
from lanq.memory.lms import LocalMemoryState
from lanq.memory.varprops import EMPTY_TUPLE, VarProps
from lanq.quantum.operators import QuantumOperator
from lanq.quantum.state import GlobalState
from lanq.tools.numpy_utils import matrices_close

GOLDEN_RNG_RULES = [
    'OP-DoMethodCallCl', 'OP-Block', 'OP-BlockHead', 'OP-VarDecl', 'OP-BlockHead',
    'OP-PromoExpr', 'OP-AssignExpr', 'OP-AllocQ', 'OP-SubstE', 'OP-AssignQValue',
    'OP-SubstS', 'OP-PromoForget', 'OP-ReturnExpr', 'OP-MeasureExpr', 'OP-Var', 'OP-SubstE',
    'OP-DoMeasure', 'NP-ProbEvol', 'OP-SubstS', 'OP-ReturnValue',
]


def test_rng_golden_trace():
    trace = Trace()
    report = execute(load_corpus('rng'), trace=trace)
    assert trace.rule_names(0) == GOLDEN_RNG_RULES
    assert trace.rule_names(1)[:2] == ['OP-DoMeasure', 'NP-ProbEvol']
    assert report.distribution() == pytest.approx({'0': 0.5, '1': 0.5})
    assert report.paths == 2


def test_rng_leaves_hold_the_measured_state():
    report = execute(load_corpus('rng'))
    zero, one = report.leaves
    assert zero.gs.dims == (2,)
    assert matrices_close(zero.gs.rho, np.diag([1, 0]))
    assert matrices_close(one.gs.rho, np.diag([0, 1]))


@pytest.mark.parametrize('name, error', [
    ('rte_uninitialised', 'UV'),
    ('rte_overlapping', 'OQV'),
    ('rte_incompatible', 'ISQV'),
    ('rte_uninitialised_if', 'UV'),
])
def test_runtime_errors(name, error):
    report = execute(load_corpus(name))
    assert report.has_runtime_error
    assert report.distribution(0) == pytest.approx({error: 1.0})


def test_sink_still_receives_when_the_sender_fails():
    report = execute(load_corpus('rte_uninitialised'))
    assert report.distribution(1) == pytest.approx({'⊥': 1.0})


@pytest.mark.parametrize('name', [
    'linear_send_qubit', 'linear_fork_qubit', 'linear_fork_channel_end',
    'linear_send_channel_end', 'linear_fork_alias',
])
def test_values_given_away_are_no_longer_usable(name):
    report = execute(load_corpus(name))
    assert report.distribution(0) == pytest.approx({'UV': 1.0})
    assert report.distribution(1) == pytest.approx({'⊥': 1.0})


@pytest.mark.parametrize('name, expected', [
    ('wt_arithmetic', {'21': 1.0}),
    ('wt_comparison', {'true': 1.0}),
    ('wt_countdown', {'10': 1.0}),
    ('wt_factorial', {'120': 1.0}),
    ('wt_fibonacci', {'55': 1.0}),
    ('wt_mutual_recursion', {'true': 1.0}),
    ('wt_nested_blocks', {'20': 1.0}),
    ('wt_void_main', {'⊥': 1.0}),
    ('wt_skip', {'⊥': 1.0}),
    ('wt_if_chain', {'40': 1.0}),
    ('wt_coin', {'0': 0.5, '1': 0.5}),
    ('wt_deterministic_flip', {'1': 1.0}),
    ('wt_double_hadamard', {'0': 1.0}),
    ('wt_bell_pair', {'0': 0.5, '3': 0.5}),
    ('wt_bell_measure', {'0': 1.0}),
    ('wt_ghz', {'0': 0.5, '7': 0.5}),
    ('wt_alias_pair', {'2': 1.0}),
    ('wt_qtrit', {'0': 1 / 3, '1': 1 / 3, '2': 1 / 3}),
    ('wt_qubit_return', {'1': 1.0}),
    ('wt_repeat_until_one', {'1': 0.5, '2': 0.25, '3': 0.125, '4': 0.125}),
    ('wt_fork_classical', {'10': 1.0}),
    ('wt_fork_qubit', {'⊥': 1.0}),
    ('wt_fork_many', {'3': 1.0}),
    ('wt_channel_decl', {'0': 1.0}),
    ('wt_bool_method', {'1': 1.0}),
    ('wt_measure_in_loop', {'0': 0.25, '1': 0.5, '2': 0.25}),
    ('wt_two_registers', {'0': 1 / 6, '1': 1 / 3, '2': 1 / 3, '3': 1 / 6}),
])
def test_corpus_distributions(name, expected):
    report = execute(load_corpus(name))
    assert not report.has_runtime_error
    assert report.total_probability == pytest.approx(1)
    assert report.distribution(0) == pytest.approx(expected)


def test_every_well_typed_program_is_covered():
    covered = {
        'wt_arithmetic', 'wt_comparison', 'wt_countdown', 'wt_factorial', 'wt_fibonacci',
        'wt_mutual_recursion', 'wt_nested_blocks', 'wt_void_main', 'wt_skip', 'wt_if_chain',
        'wt_coin', 'wt_deterministic_flip', 'wt_double_hadamard', 'wt_bell_pair',
        'wt_bell_measure', 'wt_ghz', 'wt_alias_pair', 'wt_qtrit', 'wt_qubit_return',
        'wt_repeat_until_one', 'wt_fork_classical', 'wt_fork_qubit', 'wt_fork_many',
        'wt_channel_decl', 'wt_bool_method', 'wt_measure_in_loop', 'wt_two_registers',
    }
    assert set(corpus_names('wt_')) == covered


def test_teleportation():
    report = execute(load_corpus('teleportation'))
    assert len(report.leaves) == 4
    assert report.distribution(1) == pytest.approx({str(i): 0.25 for i in range(4)})
    plus = np.full((2, 2), 0.5)
    for leaf in report.leaves:
        assert matrices_close(leaf.gs.reduced([1]), plus, 1e-9)


def random_qubit_state(seed):
    rng = np.random.default_rng(seed)
    vector = rng.normal(size=2) + 1j * rng.normal(size=2)
    return (vector / np.linalg.norm(vector)).reshape(-1, 1)


def teleportation_oracle(psi, outcome):
    """Full three-register density matrix over (psiA, psiB, phi) after Bert's correction."""
    root_half = 1 / np.sqrt(2)
    bell = np.array([
        [root_half, 0, 0, root_half],
        [0, root_half, root_half, 0],
        [root_half, 0, 0, -root_half],
        [0, root_half, -root_half, 0],
    ], dtype=complex)[outcome]
    pauli_x = np.array([[0, 1], [1, 0]], dtype=complex)
    pauli_z = np.array([[1, 0], [0, -1]], dtype=complex)
    correction = [np.eye(2), pauli_x, pauli_z, pauli_x @ pauli_z][outcome]
    epr = np.array([[root_half], [0], [0], [root_half]], dtype=complex)
    rho = np.kron(epr @ epr.conj().T, psi @ psi.conj().T)
    # The measurement acts on (phi, psiA) with phi the more significant factor.
    projector = np.zeros((8, 8), dtype=complex)
    for a, b, p, a2, p2 in itertools.product(range(2), repeat=5):
        projector[4 * a + 2 * b + p, 4 * a2 + 2 * b + p2] = \
            bell[2 * p + a] * np.conj(bell[2 * p2 + a2])
    projected = projector @ rho @ projector.conj().T
    probability = np.real(np.trace(projected))
    corrected = np.kron(np.kron(np.eye(2), correction), np.eye(2))
    return probability, corrected @ projected @ corrected.conj().T / probability


@pytest.mark.parametrize('seed', range(20))
def test_teleportation_of_prepared_states(seed):
    psi = random_qubit_state(seed)
    kraus = [psi @ np.array([[1, 0]]), psi @ np.array([[0, 1]])]
    operators = dict(Builtins().operators)
    operators['Prep'] = QuantumOperator('Prep', kraus)
    context = check(load_corpus('teleport_prep'), Builtins(operators=operators))
    report = Runner(context).run()
    assert report.total_probability == pytest.approx(1, abs=1e-9)
    assert len(report.leaves) == 4
    assert sorted(leaf.results[1].val for leaf in report.leaves) == [0, 1, 2, 3]
    expected = psi @ psi.conj().T
    for leaf in report.leaves:
        assert leaf.probability == pytest.approx(0.25, abs=1e-9)
        probability, rho = teleportation_oracle(psi, leaf.results[1].val)
        assert probability == pytest.approx(0.25, abs=1e-9)
        assert leaf.gs.dims == (2, 2, 2)
        assert matrices_close(leaf.gs.rho, rho, 1e-9)
        assert matrices_close(leaf.gs.reduced([1]), expected, 1e-9)


def test_exhaustive_scheduling_explores_interleavings():
    source = 'int main() { qbit q; q = new qbit(); fork f(); return measure(StdBasis, q); } ' \
        'void f() { ; }'
    report = execute(source, SchedulerPolicy('exhaustive'))
    assert report.paths > 2
    assert report.total_probability == pytest.approx(1)
    assert report.distribution(0) == pytest.approx({'0': 0.5, '1': 0.5})
    assert len(report.leaves) == 2


def test_sampled_branches_keep_one_outcome():
    reports = [
        execute(load_corpus('wt_ghz'), SchedulerPolicy(seed=5, branch='sample'))
        for _ in range(2)
    ]
    assert len(reports[0].leaves) == 1
    assert reports[0].leaves[0].probability == 1.0
    assert reports[0].to_json() == reports[1].to_json()


def test_random_scheduling_is_repeatable():
    outputs = []
    for _ in range(2):
        trace = Trace(render=True)
        report = execute(load_corpus('teleportation'), SchedulerPolicy('random', seed=7),
                         trace=trace)
        outputs.append((report.to_table(), report.to_json(emit_rho=True), trace.to_jsonl()))
    assert outputs[0] == outputs[1]


def test_step_limit():
    with pytest.raises(StepLimitExceeded):
        execute('void main() { while (true) ; }', limits=RunLimits(max_steps=50))


def test_path_limit():
    source = 'void main() { fork f(); fork f(); } void f() { int x; x = 1; }'
    with pytest.raises(StepLimitExceeded):
        execute(source, SchedulerPolicy('exhaustive'), RunLimits(max_paths=3))


def test_deadlock():
    source = 'void main() { channel[int] c withends [c0, c1]; int x; ' \
        'c = new channel[int](); x = recv(c1); }'
    with pytest.raises(DeadlockDetected):
        execute(source)


def test_stuck_configuration():
    context = check('void main() { }')
    process = LocalProcess(
        LocalMemoryState(), VarProps().push_frame(EMPTY_TUPLE), (IVar('ghost'),)
    )
    with pytest.raises(EvaluationStuck) as error:
        Runner(context).run(Configuration(GlobalState(), (process,)))
    assert 'not declared' in error.value.message


def test_stuck_report_names_the_process_that_is_not_waiting():
    context = check('void main() { channel[int] c withends [c0, c1]; int x; '
                    'c = new channel[int](); x = recv(c1); }')
    runner = Runner(context)
    config = initial_config(context)
    with pytest.raises(DeadlockDetected):
        while True:
            (_, waiting), = runner.step(config)
            config = waiting
    ghost = LocalProcess(
        LocalMemoryState(), VarProps().push_frame(EMPTY_TUPLE), (IVar('ghost'),)
    )
    with pytest.raises(EvaluationStuck) as error:
        runner.run(Configuration(config.gs, tuple(config.processes) + (ghost,)))
    assert error.value.message.startswith('Process 1:')
    assert 'not declared' in error.value.message


def test_no_main():
    with pytest.raises(NoMain):
        execute('void helper() { }')


def test_report_rendering():
    report = execute(load_corpus('rng'), program='rng.lq')
    table = report.to_table()
    assert table.splitlines()[0] == '# rng.lq  policy=round-robin branch=exhaustive seed=0'
    assert '0.500000     0' in table
    assert '0.500000     1' in table
    data = json.loads(report.to_json(emit_rho=True))
    assert [leaf['results'] for leaf in data['leaves']] == [['0'], ['1']]
    assert data['leaves'][0]['rho'] == [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]
    assert 'wall_time' not in data


def test_strict_mode_finds_one_rule_per_step():
    for name in ('rng', 'teleportation', 'wt_alias_pair', 'rte_incompatible'):
        execute_strict = Runner(check(load_corpus(name)), strict=True)
        assert execute_strict.run().total_probability == pytest.approx(1)


def test_step_enters_main():
    context = check(load_corpus('rng'))
    mixed = Runner(context).step(initial_config(context))
    (probability, config), = mixed
    assert probability == 1.0
    main = config.processes[0]
    assert repr(main.vp) == '[■ ∘G [□ ∘L ◊]]'
    assert main.ts[-1] is METHOD_END


def test_step_branches_on_measurement():
    context = check('int main() { qbit q; q = new qbit(); return measure(StdBasis, q); }')
    runner = Runner(context)
    mixed = runner.step(initial_config(context))
    while len(mixed) == 1:
        (_, config), = mixed
        mixed = runner.step(config)
    assert [probability for probability, _ in mixed] == pytest.approx([0.5, 0.5])
    results = []
    for _, config in mixed:
        while not config.is_terminal:
            (_, config), = runner.step(config)
        assert runner.step(config) is None
        results.append(config.processes[0].result.val)
    assert results == [0, 1]
