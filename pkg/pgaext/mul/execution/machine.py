from dataclasses import dataclass, field
from typing import List, Optional

from pgaext.mul.core import (
    INPUT, OUTPUT, AUXILIARY, BitWord, Plain, PosTest, NegTest, FwdJump,
    BwdJump, Halt, FeatureLevel, feature_level, check_well_formed,
    SequenceError,
)
from pgaext.mul.indexed.addressing import resolve_address

import logging
log = logging.getLogger(__name__)

KINDS = (INPUT, OUTPUT, AUXILIARY)
BANK = {INPUT: 0, OUTPUT: 1, AUXILIARY: 2}

# compiled opcodes
PLAIN, POS, NEG, FWD, BWD, HALT = range(6)


class RegisterFile(object):
    """ Boolean registers of the three kinds; absent entries read as 0 """

    def __init__(self, banks=None):
        self.banks = banks if banks is not None else ({}, {}, {})

    @classmethod
    def with_inputs(cls, inputs):
        registers = cls()
        registers.load(INPUT, 1, inputs)
        return registers

    def bank(self, kind):
        return self.banks[BANK[kind]]

    def read(self, kind, number):
        return self.banks[BANK[kind]].get(number, 0)

    def write(self, kind, number, bit):
        self.banks[BANK[kind]][number] = int(bit)

    def load(self, kind, base, word):
        bank = self.banks[BANK[kind]]
        for i, bit in enumerate(word):
            bank[base + i] = bit

    def word(self, kind, base, width):
        bank = self.banks[BANK[kind]]
        return BitWord(tuple(bank.get(base + i, 0) for i in range(width)))

    def outputs(self, m):
        return self.word(OUTPUT, 1, m)

    def copy(self):
        return RegisterFile(tuple(dict(bank) for bank in self.banks))

    def contents(self):
        """ The registers holding 1, as {(kind token, number): 1} """
        return dict(((kind.token, number), 1)
                    for kind in KINDS
                    for number, bit in self.bank(kind).items() if bit)

    def diff(self, other):
        mine, theirs = self.contents(), other.contents()
        return set(mine) ^ set(theirs)

    def __eq__(self, other):
        if not isinstance(other, RegisterFile):
            return NotImplemented
        return self.contents() == other.contents()

    def __repr__(self):
        return '<RegisterFile %s>' % ' '.join(
            '%s:%d' % key for key in sorted(self.contents())
        )


@dataclass
class MachineState:
    pc: int
    registers: RegisterFile
    steps: int = 0


@dataclass
class ExecutionOutcome:
    registers: RegisterFile
    steps: int
    visits: Optional[List[int]] = field(default=None, repr=False)

    kind = None

    @property
    def terminated(self):
        return False

    def outputs(self, m):
        return self.registers.outputs(m)


@dataclass
class Terminated(ExecutionOutcome):
    kind = 'terminated'

    @property
    def terminated(self):
        return True


@dataclass
class Inaction(ExecutionOutcome):
    pc_at_failure: int = 0

    kind = 'inaction'


@dataclass
class BudgetExceeded(ExecutionOutcome):
    budget: int = 0

    kind = 'budget-exceeded'


def _compile(item):
    if isinstance(item, Halt):
        return (HALT, 0, 0, None, None)
    if isinstance(item, FwdJump):
        return (FWD, 0, item.distance, None, None)
    if isinstance(item, BwdJump):
        return (BWD, 0, item.distance, None, None)
    op = {Plain: PLAIN, PosTest: POS, NegTest: NEG}[type(item)]
    ref = item.basic.target
    indexed = None if ref.index is None else ref
    return (op, BANK[ref.kind], ref.base, item.basic.bit, indexed)


class Machine(object):
    """
    Executes one instruction sequence. The compiled form is immutable
    and may be shared; every run gets a private register file.
    """

    def __init__(self, sequence, indexed=True):
        check_well_formed(sequence)
        self.sequence = sequence
        self.size = len(sequence)
        self.indexed = indexed
        self.level = feature_level(sequence)
        self.code = (None,) + tuple(_compile(item) for item in sequence)

    def advance(self, pc, registers):
        """
        Execute the instruction at pc; returns the next pc, None on
        termination, or 0 for a jump of distance 0.
        """
        op, bank, number, bit, indexed = self.code[pc]
        if op <= NEG:
            banks = registers.banks
            if indexed is not None:
                if not self.indexed:
                    raise IndexedAddressingDisabledError(
                        'Instruction %d (%s) uses indexed addressing, '
                        'which is disabled' % (pc, self.sequence.at(pc))
                    )
                number = resolve_address(indexed, registers).number
            if bit is None:
                reply = banks[bank].get(number, 0)
            else:
                banks[bank][number] = bit
                reply = bit
            if op == PLAIN or (op == POS) == bool(reply):
                return pc + 1
            return pc + 2
        if op == FWD:
            return pc + number if number else 0
        if op == BWD:
            return pc - number if number else 0
        return None

    def step(self, state):
        """ One instruction; returns the state or a terminal outcome """
        if not 1 <= state.pc <= self.size:
            raise ExecutionError('No instruction at position %d' % state.pc)
        at = state.pc
        nxt = self.advance(at, state.registers)
        state.steps += 1
        if nxt is None:
            return Terminated(state.registers, state.steps)
        if not 1 <= nxt <= self.size:
            return Inaction(state.registers, state.steps, pc_at_failure=at)
        state.pc = nxt
        return state

    def run(self, inputs, budget, count_visits=False):
        if budget < 1:
            raise BudgetError('The step budget must be at least 1, got %s'
                              % budget)
        registers = RegisterFile.with_inputs(inputs)
        advance = self.advance
        size = self.size
        visits = [0] * (size + 1) if count_visits else None
        pc = 1
        steps = 0
        while steps < budget:
            if visits is not None:
                visits[pc] += 1
            nxt = advance(pc, registers)
            steps += 1
            if nxt is None:
                return Terminated(registers, steps, visits)
            if not 1 <= nxt <= size:
                return Inaction(registers, steps, visits, pc_at_failure=pc)
            pc = nxt
        return BudgetExceeded(registers, steps, visits, budget=budget)

    def compute(self, inputs, m, budget):
        outcome = self.run(inputs, budget)
        if not outcome.terminated:
            raise ComputationError(outcome)
        return outcome.outputs(m)


def initial_state(inputs):
    return MachineState(1, RegisterFile.with_inputs(inputs))


def machine_for(x, indexed=None):
    """ indexed=None enables indexed addressing when X uses it """
    if indexed is None:
        indexed = feature_level(x) is FeatureLevel.WITH_INDEXED_ADDRESSING
    return Machine(x, indexed=indexed)


def step(x, state, indexed=True):
    return Machine(x, indexed=indexed).step(state)


def run(x, inputs, budget, indexed=None, count_visits=False):
    machine = machine_for(x, indexed)
    outcome = machine.run(inputs, budget, count_visits=count_visits)
    log.debug('Run of %d instructions: %s after %d steps'
              % (machine.size, outcome.kind, outcome.steps))
    return outcome


def compute(x, inputs, m, budget, indexed=None):
    return machine_for(x, indexed).compute(inputs, m, budget)


class ExecutionError(SequenceError):
    pass


class BudgetError(ExecutionError):
    pass


class IndexedAddressingDisabledError(ExecutionError):
    pass


class ComputationError(ExecutionError):
    def __init__(self, outcome):
        super(ComputationError, self).__init__(
            'Execution did not terminate: %s after %d steps'
            % (outcome.kind, outcome.steps)
        )
        self.outcome = outcome
