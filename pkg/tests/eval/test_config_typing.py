from hypothesis import given, settings, strategies as st
import pytest

from lanq import check
from lanq.errors import ConfigTypeError
from lanq.eval.config import Configuration, LocalProcess, MixedConfiguration, initial_config
from lanq.eval.config_typing import (
    ANY, ConfigurationTyper, same_type, type_configuration, type_process, types_agree,
)
from lanq.eval.policy import SchedulerPolicy
from lanq.eval.runner import Runner
from lanq.examples import corpus_names, load_corpus
from lanq.internal.terms import METHOD_END, ICall, IChanDecl, IReturn, UV, constant
from lanq.lang.types import BOOL, INT, VOID, ChannelType
from lanq.memory.lms import LocalMemoryState
from lanq.memory.varprops import VarPropTuple, VarProps
from lanq.quantum.state import GlobalState
from lanq.typecheck.checker import RETVAL

PROGRAMS = [name for name in corpus_names() if name != 'teleport_prep']


class PreservationObserver:
    """Types every configuration the driver passes through."""
    def __init__(self, context):
        self.typer = ConfigurationTyper(context)
        self.transitions = 0

    def __call__(self, before, after, rule):
        before_types = self.typer.type_configuration(before)
        after_types = self.typer.type_configuration(after)
        assert types_agree(before_types, after_types[:len(before_types)]), rule
        self.transitions += 1


@pytest.mark.parametrize('name', PROGRAMS)
def test_types_are_preserved_by_every_step(name):
    context = check(load_corpus(name))
    observer = PreservationObserver(context)
    start = initial_config(context)
    main_type = context.method_type('main').result
    assert type_configuration(start, context) == (main_type,)
    report = Runner(context, observer=observer).run()
    assert observer.transitions > 0
    for leaf in report.leaves:
        assert same_type(type_process(LocalProcess(
            LocalMemoryState(), VarProps(), (leaf.results[0],)
        ), context), main_type)


def test_exhaustive_interleavings_preserve_types():
    context = check('int main() { fork f(); return 1; } void f() { int x; x = 2; }')
    observer = PreservationObserver(context)
    Runner(context, SchedulerPolicy('exhaustive'), observer=observer).run()
    assert observer.transitions > 50


def test_runtime_errors_have_every_type():
    context = check('void main() { }')
    process = LocalProcess(LocalMemoryState(), VarProps(), (UV,))
    assert type_process(process, context) is ANY
    assert same_type(ANY, INT) and same_type(BOOL, ANY)
    assert not same_type(INT, BOOL)


def test_method_frames_are_typed_by_their_return_type():
    context = check('int main() { return 1; }')
    frame = VarProps().push_frame(VarPropTuple(type={RETVAL: INT}))
    process = LocalProcess(
        LocalMemoryState(), frame, (IReturn(constant(1, INT)), METHOD_END)
    )
    assert type_process(process, context) == INT


def test_mistyped_return_is_reported():
    context = check('int main() { return 1; }')
    frame = VarProps().push_frame(VarPropTuple(type={RETVAL: INT}))
    process = LocalProcess(LocalMemoryState(), frame, (IReturn(constant(True, BOOL)),))
    with pytest.raises(ConfigTypeError) as error:
        type_process(process, context)
    assert error.value.rule == 'TC-RetExpr'


def test_unfinished_frame_is_reported():
    context = check('void main() { }')
    frame = VarProps().push_frame(VarPropTuple(type={RETVAL: VOID}))
    process = LocalProcess(LocalMemoryState(), frame, (constant(1, INT),))
    with pytest.raises(ConfigTypeError) as error:
        type_process(process, context)
    assert error.value.rule == 'TC-Empty'


def test_mixed_configurations_need_one_type():
    context = check('int main() { return 1; } bool other() { return true; }')
    typer = ConfigurationTyper(context)
    ints = Configuration(GlobalState(), (
        LocalProcess(LocalMemoryState(), VarProps(), (ICall('main', ()),)),
    ))
    bools = Configuration(GlobalState(), (
        LocalProcess(LocalMemoryState(), VarProps(), (ICall('other', ()),)),
    ))
    assert typer.type_mixed(MixedConfiguration([(0.5, ints), (0.5, ints)])) == (INT,)
    with pytest.raises(ConfigTypeError) as error:
        typer.type_mixed(MixedConfiguration([(0.5, ints), (0.5, bools)]))
    assert error.value.rule == 'T-MixedConf'


@pytest.mark.parametrize('source', [
    'void main() { channel[int] c withends [c0, c1]; { channel[int] c withends [c0, c1]; } }',
    'void main() { qbit a, b; ab aliasfor [a, b]; a = new qbit(); b = new qbit(); '
    '{ ab aliasfor [a, b]; } }',
    'void main() { int i; i = 2; while (i > 0) { qbit a, b; ab aliasfor [a, b]; '
    'channel[int] c withends [c0, c1]; i = i - 1; } }',
])
def test_redeclaring_with_the_same_type_preserves_types(source):
    context = check(source)
    observer = PreservationObserver(context)
    Runner(context, observer=observer).run()
    assert observer.transitions > 0


def test_redeclaring_a_channel_with_another_type_is_reported():
    context = check('void main() { }')
    frame = VarProps().push_frame(VarPropTuple(type={RETVAL: VOID, 'c': INT}))
    process = LocalProcess(
        LocalMemoryState(), frame, (IChanDecl(ChannelType(INT), 'c', 'c0', 'c1'), METHOD_END)
    )
    with pytest.raises(ConfigTypeError) as error:
        type_process(process, context)
    assert error.value.rule == 'TC-VarDeclChE'


HELPERS = 'int helper(int v) { return v + 1; } ' \
    'int coin(qbit r) { return measure(StdBasis, r); } ' \
    'void work(int v) { int w; w = v * 2; }'

int_exprs = st.sampled_from([
    'x', 'n', '0', '2', 'x + 1', 'helper(x)', 'coin(q)', 'measure(StdBasis, q)',
])
bool_exprs = st.sampled_from(['b', 'true', 'false', 'x == 0', 'x < n'])

simple_statements = st.one_of(
    st.builds('x = {};'.format, int_exprs),
    st.builds('b = {};'.format, bool_exprs),
    st.sampled_from([
        'H(q);',
        'x = helper(x);',
        'fork work(x);',
        '{ int x; x = 1; }',
        '{ channel[int] c withends [c0, c1]; c = new channel[int](); }',
        '{ qbit a, r; e aliasfor [a, r]; a = new qbit(); r = new qbit(); '
        'x = measure(StdBasis, e); }',
        '{ qbit r; r = new qbit(); H(r); }',
    ]),
)


def compound_statements(children):
    return st.one_of(
        st.builds('if ({}) {} else {}'.format, bool_exprs, children, children),
        st.builds('while (n > 0) {{ n = n - 1; {} }}'.format, children),
        st.builds('{{ {} }}'.format, children),
    )


def well_typed_program(count, body):
    return 'int main() { int n, x; bool b; qbit q; n = ' + str(count) + '; x = 0; ' \
        'b = true; q = new qbit(); ' + ' '.join(body) + ' return x; } ' + HELPERS


well_typed_programs = st.builds(
    well_typed_program,
    st.integers(min_value=0, max_value=2),
    st.lists(st.recursive(simple_statements, compound_statements, max_leaves=3),
             min_size=1, max_size=3),
)


@settings(max_examples=30, deadline=None)
@given(well_typed_programs)
def test_generated_programs_make_progress_and_preserve_types(source):
    context = check(source)
    observer = PreservationObserver(context)
    report = Runner(context, observer=observer).run()
    assert observer.transitions > 0
    assert report.total_probability == pytest.approx(1)
