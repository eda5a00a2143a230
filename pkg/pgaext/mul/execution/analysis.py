import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from pgaext.mul.core import BitWord
from pgaext.mul.execution.machine import machine_for, ExecutionError

import logging
log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 24
DEFAULT_STATE_BOUND_LIMIT = 2 ** 24
EXACT_BOUND_BITS = 256


@dataclass(frozen=True)
class StateBound:
    """
    Positions (plus one) times 2 to the number of writable registers,
    held as its two factors. ``value`` is None above EXACT_BOUND_BITS
    registers.
    """
    positions: int
    registers: int

    @property
    def value(self):
        if self.registers > EXACT_BOUND_BITS:
            return None
        return self.positions << self.registers

    def exceeds(self, limit):
        if self.registers >= limit.bit_length():
            return True
        return self.positions << self.registers > limit

    def __str__(self):
        if self.registers > EXACT_BOUND_BITS:
            return '%d*2^%d' % (self.positions, self.registers)
        return str(self.value)


@dataclass(frozen=True)
class Halts:
    steps: int
    bound: StateBound

    def __str__(self):
        return 'Halts(%d)' % self.steps


@dataclass(frozen=True)
class NeverHalts:
    bound: StateBound
    reason: str

    def __str__(self):
        return 'NeverHalts'


def writable_ranges(x):
    """
    Registers X can change, per kind, as sorted disjoint ranges
    (first, last): set targets, with an indexed target standing for its
    whole block of 2^width registers
    """
    spans = {}
    for item in x:
        basic = item.basic
        if basic is None or basic.is_get:
            continue
        ref = basic.target
        width = 0 if ref.index is None else ref.index.width
        spans.setdefault(ref.kind, []).append(
            (ref.base, ref.base + 2 ** width - 1))
    return dict((kind, _merge(ranges)) for kind, ranges in spans.items())


def _merge(ranges):
    merged = []
    for first, last in sorted(ranges):
        if merged and first <= merged[-1][1] + 1:
            if last > merged[-1][1]:
                merged[-1] = (merged[-1][0], last)
        else:
            merged.append((first, last))
    return merged


def writable_count(x):
    return sum(last - first + 1
               for ranges in writable_ranges(x).values()
               for first, last in ranges)


def state_bound(x):
    """
    Upper bound on the distinct machine states a run of X visits: every
    position (plus one) times every content of the writable registers.
    """
    return StateBound(len(x) + 1, writable_count(x))


def decide_halts(x, inputs, limit=DEFAULT_STATE_BOUND_LIMIT, indexed=None):
    """
    Decide termination of X on inputs. Runs X for at most the state
    bound; a run that survives that many steps has repeated a state.
    Inaction is reported as NeverHalts. When the bound exceeds ``limit``
    a run that has not terminated within ``limit`` steps is undecided
    and StateBoundError is raised.
    """
    bound = state_bound(x)
    over = bound.exceeds(limit)
    budget = limit if over else bound.positions << bound.registers
    outcome = machine_for(x, indexed).run(inputs, budget)
    if outcome.terminated:
        return Halts(outcome.steps, bound)
    if outcome.kind == 'inaction':
        return NeverHalts(bound, 'inaction at %d' % outcome.pc_at_failure)
    if not over:
        return NeverHalts(bound, 'state repeated within %s steps' % bound)
    raise StateBoundError(bound, limit)


@dataclass(frozen=True)
class Sampled:
    count: int
    seed: int = 0


EXHAUSTIVE = 'exhaustive'


def input_values(n, mode):
    """ Input values in ascending order, all of them or a seeded sample """
    if mode == EXHAUSTIVE:
        if n > EXHAUSTIVE_LIMIT:
            raise ExhaustiveLimitError(
                'Exhaustive mode enumerates 2^%d inputs; the limit is 2^%d'
                % (n, EXHAUSTIVE_LIMIT)
            )
        return list(range(2 ** n))
    rng = random.Random(mode.seed)
    return sorted(rng.getrandbits(n) if n else 0 for _ in range(mode.count))


@dataclass(frozen=True)
class Witness:
    input: BitWord
    out_x: object
    out_y: object

    def __str__(self):
        return 'Witness(%s, %s, %s)' % (self.input or '-', self.out_x,
                                        self.out_y)


@dataclass(frozen=True)
class Equivalent:

    def __str__(self):
        return 'Equivalent'


@dataclass(frozen=True)
class VerificationReport:
    cases: int
    counterexample: Optional[Witness] = None

    @property
    def passed(self):
        return self.counterexample is None


def observe(machine, inputs, m, budget):
    """ Output word of a terminated run, else the outcome kind """
    outcome = machine.run(inputs, budget)
    if outcome.terminated:
        return outcome.outputs(m)
    return outcome.kind


class Comparison(object):
    """
    One side is always a sequence; the other is a second sequence or a
    Python oracle mapping the input word to the expected output word.
    """

    def __init__(self, x, n, m, budget, y=None, oracle=None, indexed=None):
        self.x = x
        self.y = y
        self.oracle = oracle
        self.n = n
        self.m = m
        self.budget = budget
        self.indexed = indexed

    def machines(self):
        mx = machine_for(self.x, self.indexed)
        my = machine_for(self.y, self.indexed) if self.y is not None else None
        return mx, my

    def first_difference(self, values):
        mx, my = self.machines()
        for value in values:
            word = BitWord.from_int(value, self.n)
            out_x = observe(mx, word, self.m, self.budget)
            if my is not None:
                out_y = observe(my, word, self.m, self.budget)
            else:
                out_y = self.oracle(word)
            if out_x != out_y:
                return value, out_x, out_y
        return None


def _scan(comparison, values):
    return comparison.first_difference(values)


def _chunks(values, jobs):
    size = max(1, -(-len(values) // (jobs * 4)))
    return [values[i:i + size] for i in range(0, len(values), size)]


def compare(comparison, mode=EXHAUSTIVE, jobs=1):
    """
    Run the comparison over the inputs of ``mode``. With several jobs the
    inputs are split into ascending chunks and the lowest failing input
    over all chunks is reported, whatever order the workers finish in.
    """
    values = input_values(comparison.n, mode)
    if jobs <= 1 or len(values) < 2:
        found = [comparison.first_difference(values)]
    else:
        chunks = _chunks(values, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = list(pool.map(_scan, [comparison] * len(chunks), chunks))
    failures = [f for f in found if f is not None]
    log.info('Compared %d inputs, %d failing chunks'
             % (len(values), len(failures)))
    if not failures:
        return VerificationReport(len(values))
    value, out_x, out_y = min(failures, key=lambda f: f[0])
    witness = Witness(BitWord.from_int(value, comparison.n), out_x, out_y)
    log.warning('Counterexample: %s' % witness)
    return VerificationReport(len(values), witness)


def io_equivalent(x, y, n, m, budget, mode=EXHAUSTIVE, jobs=1, indexed=None):
    """
    Compare the input/output behaviour of X and Y on n input bits and m
    output bits. Runs that do not terminate compare by outcome kind, so
    all inaction outcomes are equal to each other.
    """
    report = compare(Comparison(x, n, m, budget, y=y, indexed=indexed),
                     mode, jobs)
    if report.passed:
        return Equivalent()
    return report.counterexample


def verify_function(x, oracle, n, m, budget, mode=EXHAUSTIVE, jobs=1,
                    indexed=None):
    """ Check that X computes ``oracle`` on n-bit inputs """
    return compare(Comparison(x, n, m, budget, oracle=oracle,
                              indexed=indexed), mode, jobs)


class StateBoundError(ExecutionError):
    def __init__(self, bound, limit):
        super(StateBoundError, self).__init__(
            'State bound %s exceeds the limit %d' % (bound, limit)
        )
        self.bound = bound
        self.limit = limit


class ExhaustiveLimitError(ExecutionError):
    pass
