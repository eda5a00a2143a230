"""
Programs that run one gadget on input registers and report its
effect in output registers, with the arithmetic each should compute.

Word gadgets copy their operands from in:1.. into auxiliary words when
run in place, apply the gadget, and copy the result to out:1... Test
gadgets are followed by 'out:1.set:1 ; out:2.set:1 ; !': out:1 is set
only when the gadget continues at the first following instruction.

Not imported by pgaext.mul.gadgets: it needs the indexed generators.
"""
from dataclasses import dataclass
from typing import Callable

from pgaext.mul.core import (
    BitWord, RegisterRef, InstructionSequence, INPUT, OUTPUT, AUXILIARY,
    Plain, HALT,
)
from pgaext.mul.gadgets.generators import (
    gen_tstnz, gen_dec, gen_shl, gen_shr, gen_add, gen_set, gen_mov,
    gen_zpad,
)
from pgaext.mul.gadgets.words import WordRef, OperandError
from pgaext.mul.indexed.generators import gen_inc, gen_tstne

GADGET_KINDS = ('tstnz', 'tstne', 'dec', 'inc', 'shl', 'shr', 'add', 'set',
                'mov', 'zpad')
SHIFTING = ('shl', 'shr', 'zpad')

REPORT = InstructionSequence.of(
    Plain(RegisterRef(OUTPUT, 1).set(1)),
    Plain(RegisterRef(OUTPUT, 2).set(1)),
    HALT,
)
NONZERO = BitWord.from_text('11')
ZERO = BitWord.from_text('01')


@dataclass(frozen=True)
class Harness:
    kind: str
    sequence: InstructionSequence
    n_in: int
    m_out: int
    oracle: Callable

    @property
    def budget(self):
        return len(self.sequence) + 1


WORD_RESULTS = {
    'dec': lambda oracle, value, inputs: value - 1,
    'inc': lambda oracle, value, inputs: value + 1,
    'shl': lambda oracle, value, inputs: value << oracle.shift,
    'shr': lambda oracle, value, inputs: value >> oracle.shift,
    'add': lambda oracle, value, inputs: (
        value + BitWord(inputs.bits[oracle.n:]).value),
    'zpad': lambda oracle, value, inputs: value % 2 ** oracle.shift,
    'mov': lambda oracle, value, inputs: value,
}


class GadgetOracle(object):
    """ What a gadget harness leaves in out:1.. for an input word """

    def __init__(self, kind, n, shift=None, word=None):
        self.kind = kind
        self.n = n
        self.shift = shift
        self.word = word

    def __call__(self, inputs):
        value = BitWord(inputs.bits[:self.n]).value
        if self.kind == 'set':
            return self.word
        if self.kind == 'tstnz':
            return NONZERO if value else ZERO
        if self.kind == 'tstne':
            return NONZERO if value != self.word.value else ZERO
        result = WORD_RESULTS[self.kind](self, value, inputs)
        return BitWord.from_int(result % 2 ** self.n, self.n)


def _word(kind, base, n):
    return WordRef(RegisterRef(kind, base), n)


def harness(kind, n, shift=None, word=None, in_place=False):
    """
    Build the harness program for gadget ``kind`` at width n. ``shift`` is
    m for SHL, SHR and ZPAD; ``word`` is the constant of SET and TSTNE.
    ``in_place`` runs word gadgets on one auxiliary word (and the test
    gadgets on an auxiliary copy of the input).
    """
    if kind not in GADGET_KINDS:
        raise OperandError("Unknown gadget '%s' (expected one of %s)"
                           % (kind, ', '.join(GADGET_KINDS)))
    if kind in ('set', 'tstne'):
        if word is None:
            raise OperandError('%s needs a constant word' % kind.upper())
        if isinstance(word, str):
            word = BitWord.from_text(word)
        n = len(word)
    if kind in ('tstnz', 'tstne'):
        return _test_harness(kind, n, word, in_place)
    if kind == 'set':
        return _set_harness(n, word, in_place)
    if kind in SHIFTING and shift is None:
        shift = 1
    return _word_harness(kind, n, shift, in_place)


def _test_harness(kind, n, word, in_place):
    src = _word(INPUT, 1, n)
    parts = []
    if in_place:
        parts.append(gen_mov(n, src, _word(AUXILIARY, 2, n)))
        src = _word(AUXILIARY, 2, n)
    if kind == 'tstnz':
        parts.append(gen_tstnz(n, src))
    else:
        parts.append(gen_tstne(n, src, word))
    parts.append(REPORT)
    return Harness(kind, InstructionSequence.of(*parts), n, 2,
                   GadgetOracle(kind, n, word=word))


def _set_harness(n, word, in_place):
    aux, out = _word(AUXILIARY, 2, n), _word(OUTPUT, 1, n)
    if in_place:
        parts = [gen_set(word, aux), gen_mov(n, aux, out)]
    else:
        parts = [gen_set(word, out)]
    return Harness('set', InstructionSequence.of(*parts, HALT), 0, n,
                   GadgetOracle('set', n, word=word))


def _word_harness(kind, n, shift, in_place):
    src = _word(INPUT, 1, n)
    aux = _word(AUXILIARY, 2, n)
    out = _word(OUTPUT, 1, n)
    other = _word(INPUT, n + 1, n)
    if kind == 'add' and in_place:
        result = _word(AUXILIARY, n + 2, n)
        parts = [gen_mov(n, src, aux), gen_mov(n, other, result),
                 gen_add(n, aux, result, result), gen_mov(n, result, out)]
    elif kind == 'add':
        parts = [gen_add(n, src, other, out)]
    elif kind == 'zpad' or in_place:
        parts = [gen_mov(n, src, aux), _apply(kind, n, shift, aux, aux),
                 gen_mov(n, aux, out)]
    else:
        parts = [_apply(kind, n, shift, src, out)]
    n_in = 2 * n if kind == 'add' else n
    return Harness(kind, InstructionSequence.of(*parts, HALT), n_in, n,
                   GadgetOracle(kind, n, shift=shift))


def _apply(kind, n, shift, src, dst):
    if kind == 'dec':
        return gen_dec(n, src, dst)
    if kind == 'inc':
        return gen_inc(n, src, dst)
    if kind == 'shl':
        return gen_shl(n, shift, src, dst)
    if kind == 'shr':
        return gen_shr(n, shift, src, dst)
    if kind == 'zpad':
        return gen_zpad(n, shift, dst)
    return gen_mov(n, src, dst)


def gadget_length(kind, n, shift=None):
    """ Closed-form length of a gadget used in place """
    if kind == 'tstnz' or kind == 'tstne':
        return 3 * n + 1
    if kind in ('dec', 'inc'):
        return 5 * n + 3
    if kind in ('shl', 'shr'):
        return 4 * n - 3 * (shift or 1)
    if kind == 'add':
        return 26 * n + 1
    if kind == 'set':
        return n
    if kind == 'mov':
        return 4 * n
    if kind == 'zpad':
        return n - (shift or 1)
    raise OperandError("Unknown gadget '%s'" % kind)
