import pytest
from hypothesis import given, settings, strategies as st

from pgaext.mul.core import (
    RegisterRef, FwdJump, HALT, InstructionSequence, INPUT, OUTPUT,
    AUXILIARY, Plain, PosTest, NegTest, bits, parse,
)
from pgaext.mul.execution import (
    RegisterFile, Machine, Terminated, Inaction, BudgetExceeded,
    initial_state, step, run, compute, BudgetError,
    IndexedAddressingDisabledError, ComputationError,
)
from pgaext.mul.multiplication import gen_lmul1, gen_lmul2, gen_lmul3


def test_step_halt():
    outcome = step(parse('!'), initial_state(bits('')))
    assert isinstance(outcome, Terminated)
    assert outcome.steps == 1


def test_step_zero_jump_is_inaction():
    outcome = step(parse('#0;!'), initial_state(bits('')))
    assert isinstance(outcome, Inaction)
    assert outcome.pc_at_failure == 1


def test_step_test_skips():
    x = parse('+aux:1.get;!;!')
    state = step(x, initial_state(bits('')))
    assert state.pc == 3
    outcome = step(x, state)
    assert isinstance(outcome, Terminated)
    assert outcome.steps == 2


def test_run_sets_output():
    outcome = run(parse('out:1.set:1;!'), bits(''), 10)
    assert isinstance(outcome, Terminated)
    assert outcome.steps == 2
    assert outcome.outputs(1) == bits('1')


def test_run_budget_exceeded():
    outcome = run(parse('#1;\\1'), bits(''), 100)
    assert isinstance(outcome, BudgetExceeded)
    assert outcome.steps == 100
    assert outcome.budget == 100


@pytest.mark.parametrize('text,pc', [
    ('aux:1.set:1', 1),
    ('\\5;!', 1),
    ('#3;!', 1),
    ('+in:1.get;!', 1),
    ('!;#0', None),
])
def test_inaction(text, pc):
    outcome = run(parse(text), bits('0'), 10)
    if pc is None:
        assert outcome.terminated
    else:
        assert isinstance(outcome, Inaction)
        assert outcome.pc_at_failure == pc


def test_set_replies_with_the_written_bit():
    x = parse('+out:1.set:0;out:2.set:1;!')
    assert run(x, bits(''), 10).outputs(2) == bits('00')
    y = parse('+out:1.set:1;out:2.set:1;!')
    assert run(y, bits(''), 10).outputs(2) == bits('11')
    z = parse('-aux:3.set:0;out:1.set:1;!')
    assert run(z, bits(''), 10).outputs(1) == bits('1')


def test_registers_start_at_zero():
    registers = RegisterFile()
    for kind in (INPUT, OUTPUT, AUXILIARY):
        assert registers.read(kind, 7) == 0
    registers = RegisterFile.with_inputs(bits('01'))
    assert registers.read(INPUT, 2) == 1
    assert registers.word(INPUT, 1, 3) == bits('010')


def test_register_file_diff():
    before = RegisterFile.with_inputs(bits('1'))
    after = before.copy()
    after.write(AUXILIARY, 4, 1)
    assert before.diff(after) == {('aux', 4)}
    assert before != after
    after.write(AUXILIARY, 4, 0)
    assert before == after


def test_budget_must_be_positive():
    with pytest.raises(BudgetError):
        run(parse('!'), bits(''), 0)


def test_run_multiplication():
    outcome = run(gen_lmul1(2), bits('1111'), 10 ** 6)
    assert outcome.terminated
    assert outcome.outputs(4) == bits('1001')


@pytest.mark.parametrize('gen,n,inputs,expected', [
    (gen_lmul3, 1, '11', '10'),
    (gen_lmul2, 4, '10101100', '11110000'),
    (gen_lmul1, 4, '00001111', '00000000'),
])
def test_compute(gen, n, inputs, expected):
    assert compute(gen(n), bits(inputs), 2 * n, 10 ** 6) == bits(expected)


def test_compute_carries_the_outcome():
    with pytest.raises(ComputationError) as e:
        compute(parse('#0'), bits(''), 1, 10)
    assert isinstance(e.value.outcome, Inaction)
    with pytest.raises(ComputationError) as e:
        compute(parse('#1;\\1'), bits(''), 1, 10)
    assert isinstance(e.value.outcome, BudgetExceeded)


def test_indexed_addressing():
    x = parse('aux:1.set:1;out:1(aux:1:1).set:1;!')
    assert run(x, bits(''), 10).outputs(2) == bits('01')
    with pytest.raises(IndexedAddressingDisabledError):
        run(x, bits(''), 10, indexed=False)


def test_indexed_addressing_can_be_forced_on():
    x = parse('out:2.set:1;!')
    assert run(x, bits(''), 10, indexed=True).outputs(2) == bits('01')


def test_visit_counts():
    outcome = run(parse('aux:1.set:1;#1;!'), bits(''), 10,
                  count_visits=True)
    assert outcome.visits[1:] == [1, 1, 1]


def test_machine_is_reusable():
    machine = Machine(gen_lmul3(2))
    first = machine.run(bits('1111'), 10 ** 5)
    second = machine.run(bits('1011'), 10 ** 5)
    again = machine.run(bits('1111'), 10 ** 5)
    assert first.outputs(4) == again.outputs(4) == bits('1001')
    assert second.outputs(4) == bits('1100')
    assert first.steps == again.steps


def forward_instructions(draw):
    ref = draw(st.sampled_from([
        RegisterRef(INPUT, 1), RegisterRef(INPUT, 2),
        RegisterRef(AUXILIARY, 1), RegisterRef(AUXILIARY, 2),
    ]))
    target = draw(st.sampled_from([RegisterRef(AUXILIARY, 1),
                                   RegisterRef(OUTPUT, 1)]))
    basic = draw(st.sampled_from([
        ref.get(), target.set(0), target.set(1),
    ]))
    return draw(st.sampled_from([
        Plain(basic), PosTest(basic), NegTest(basic),
        FwdJump(draw(st.integers(0, 4))), HALT,
    ]))


@given(st.data())
@settings(deadline=None, max_examples=500)
def test_forward_only_runs_are_single_pass(data):
    size = data.draw(st.integers(1, 30))
    x = InstructionSequence([forward_instructions(data.draw)
                             for _ in range(size)])
    inputs = bits(data.draw(st.sampled_from(['00', '01', '10', '11'])))
    outcome = run(x, inputs, len(x) + 1)
    assert not isinstance(outcome, BudgetExceeded)
    assert outcome.steps <= len(x)
    assert run(x, inputs, len(x) + 1).registers == outcome.registers


@given(st.data())
@settings(deadline=None, max_examples=200)
def test_step_agrees_with_run(data):
    size = data.draw(st.integers(1, 20))
    x = InstructionSequence([forward_instructions(data.draw)
                             for _ in range(size)])
    inputs = bits('10')
    state = initial_state(inputs)
    for _ in range(len(x)):
        state = step(x, state)
        if not hasattr(state, 'pc'):
            break
    expected = run(x, inputs, len(x) + 1)
    assert type(state) is type(expected)
    assert state.steps == expected.steps
    assert state.registers == expected.registers
