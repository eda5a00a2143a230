"""
Long multiplication of two n-bit words into a 2n-bit product.

LMUL1 runs the schoolbook algorithm unrolled with growing word widths,
LMUL2 shifts the multiplier right so the tested bit is always bit 0,
LMUL3 repeats the LMUL2 step in a loop closed by a backward jump and
LMUL4 (in pgaext.mul.indexed) loops over indexed registers.
"""
import enum
from collections import OrderedDict
from functools import lru_cache

from pgaext.mul.core import BitWord, HALT, feature_level, SequenceValueError
from pgaext.mul.execution.machine import compute
from pgaext.mul.gadgets import (
    Assembler, LengthCounter, emit_mov, emit_zpad, emit_set, emit_add,
    emit_shl, emit_shr, emit_dec, emit_tstnz, OperandError,
)
from pgaext.mul.indexed import emit_lmul4
from pgaext.mul.multiplication.layout import layout

import logging
log = logging.getLogger(__name__)


class LmulVariant(enum.IntEnum):
    LMUL1 = 1
    LMUL2 = 2
    LMUL3 = 3
    LMUL4 = 4

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, int):
            value = str(value)
        text = value.strip().upper()
        if text.startswith('LMUL'):
            text = text[4:]
        try:
            return cls(int(text))
        except ValueError:
            raise MultiplicationError(
                "Unknown variant '%s' (expected 1, 2, 3 or 4)" % value
            )

    @property
    def label(self):
        return self.name


def log2_floor(n):
    return n.bit_length() - 1


def _check_n(n):
    if n < 1:
        raise MultiplicationError('Operand width must be at least 1, got %s'
                                  % n)


def _emit_lmul1(asm, n):
    lay = layout(n)
    emit_mov(asm, n, lay.I1, lay.T1)
    emit_zpad(asm, 2 * n, n, lay.T1)
    emit_set(asm, BitWord.repeat(0, 2 * n), lay.T2)
    for i in range(n):
        width = n + i + 1
        t1, t2 = lay.temp_word(1, width), lay.temp_word(2, width)
        skip = asm.label('skip')
        asm.neg(lay.input_bit(2, i).get())
        asm.jump(skip, tag='l_%d' % i)
        emit_add(asm, width, t1, t2, t2)
        asm.place(skip)
        emit_shl(asm, width, 1, t1, t1)
    emit_mov(asm, 2 * n, lay.T2, lay.O)
    asm.emit(HALT)


def _prologue(asm, lay):
    n = lay.n
    emit_mov(asm, n, lay.I1, lay.T1)
    emit_zpad(asm, 2 * n, n, lay.T1)
    emit_mov(asm, n, lay.I2, lay.T2)
    emit_set(asm, BitWord.repeat(0, 2 * n), lay.T3)


def _emit_step(asm, lay):
    """ One shift-and-add step, testing bit 0 of the multiplier in T2 """
    n = lay.n
    t1, t2, t3 = (lay.temp_word(1), lay.temp_word(2, n),
                  lay.temp_word(3))
    skip = asm.label('skip')
    asm.neg(lay.temp_bit(2, 0).get())
    asm.jump(skip, tag='l')
    emit_add(asm, 2 * n, t1, t3, t3)
    asm.place(skip)
    emit_shl(asm, 2 * n, 1, t1, t1)
    emit_shr(asm, n, 1, t2, t2)


def _emit_lmul2(asm, n):
    lay = layout(n)
    _prologue(asm, lay)
    asm.repeat(n, lambda i: _emit_step(asm, lay))
    emit_mov(asm, 2 * n, lay.T3, lay.O)
    asm.emit(HALT)


def _emit_lmul3(asm, n):
    lay = layout(n)
    width = log2_floor(n) + 1
    counter = lay.temp_word(4, width)
    _prologue(asm, lay)
    emit_set(asm, BitWord.from_int(n, width), counter)
    top = asm.here('loop')
    _emit_step(asm, lay)
    emit_dec(asm, width, counter, counter)
    emit_tstnz(asm, width, counter)
    asm.jump(top, tag='l2')
    emit_mov(asm, 2 * n, lay.T3, lay.O)
    asm.emit(HALT)


EMITTERS = {
    LmulVariant.LMUL1: _emit_lmul1,
    LmulVariant.LMUL2: _emit_lmul2,
    LmulVariant.LMUL3: _emit_lmul3,
    LmulVariant.LMUL4: emit_lmul4,
}


def _emit(asm, variant, n):
    _check_n(n)
    try:
        EMITTERS[variant](asm, n)
    except OperandError as e:
        raise MultiplicationError('Cannot generate %s for n=%s: %s'
                                  % (variant.label, n, e))
    return asm


def _build(variant, n):
    asm = _emit(Assembler(), variant, n)
    sequence = asm.assemble()
    log.debug('%s %d: %d instructions, %s'
              % (variant.label, n, len(sequence),
                 feature_level(sequence).label))
    return sequence, asm.tagged


def gen_lmul1(n):
    """ Forward-only, 45n^2 + 30n + 1 instructions """
    return _build(LmulVariant.LMUL1, n)[0]


def gen_lmul2(n):
    """ Forward-only, 64n^2 + 16n + 1 instructions """
    return _build(LmulVariant.LMUL2, n)[0]


def gen_lmul3(n):
    """
    One backward jump closing a loop counted down in T4 from n; the loop
    body starts at the multiplier test. 83n + 9 floor(log2 n) + 12
    instructions. The backward jump distance is
    64n + 8 floor(log2 n) + 9.
    """
    return _build(LmulVariant.LMUL3, n)[0]


@lru_cache(maxsize=32)
def generate(variant, n):
    return _build(LmulVariant.parse(variant), n)[0]


def measured_length(variant, n):
    """
    Length of the generated sequence, counted from the generator's own
    emitting calls without building it
    """
    variant = LmulVariant.parse(variant)
    return _emit(LengthCounter(), variant, n).assemble()


def lmul_offsets(variant, n):
    """ Jump distances the generator computed, by name """
    variant = LmulVariant.parse(variant)
    if variant is LmulVariant.LMUL4:
        return OrderedDict()
    tagged = _build(variant, n)[1]
    if variant is LmulVariant.LMUL1:
        return OrderedDict(('l_%d' % i, tagged['l_%d' % i])
                           for i in range(n))
    if variant is LmulVariant.LMUL2:
        return OrderedDict([('l', tagged['l'])])
    return OrderedDict([('l1', tagged['l']), ('l2', tagged['l2'])])


def expected_offsets(variant, n):
    variant = LmulVariant.parse(variant)
    if variant is LmulVariant.LMUL1:
        return OrderedDict(('l_%d' % i, 26 * n + 26 * i + 28)
                           for i in range(n))
    if variant is LmulVariant.LMUL2:
        return OrderedDict([('l', 52 * n + 2)])
    if variant is LmulVariant.LMUL3:
        return OrderedDict([('l1', 52 * n + 2),
                            ('l2', 64 * n + 8 * log2_floor(n) + 9)])
    return OrderedDict()


# LMUL4: A * floor(log2 n) + B * floor(log2(2n - 1)) + C
LMUL4_CONSTANTS = (9, 36, 116)
LMUL4_TARGETS = (100, 10, 250)


def expected_length(variant, n):
    """ Closed-form length of the variant at width n """
    variant = LmulVariant.parse(variant)
    _check_n(n)
    if variant is LmulVariant.LMUL1:
        return 45 * n * n + 30 * n + 1
    if variant is LmulVariant.LMUL2:
        return 64 * n * n + 16 * n + 1
    if variant is LmulVariant.LMUL3:
        return 83 * n + 9 * log2_floor(n) + 12
    a, b, c = LMUL4_CONSTANTS
    return a * log2_floor(n) + b * log2_floor(2 * n - 1) + c


def auto_budget(variant, n, size):
    """ Step budget that no correct run of the variant exhausts """
    variant = LmulVariant.parse(variant)
    if variant is LmulVariant.LMUL4:
        return 4 * (2 * n + 1) ** 2 * size
    if variant is LmulVariant.LMUL3:
        return 4 * n * size
    return 4 * size


def multiply(variant, n, a, b, budget=None):
    """ The 2n-bit product of the n-bit words a and b, by execution """
    if isinstance(a, str):
        a = BitWord.from_text(a)
    if isinstance(b, str):
        b = BitWord.from_text(b)
    if len(a) != n or len(b) != n:
        raise MultiplicationError(
            'Operands must be %d bits wide, got %d and %d'
            % (n, len(a), len(b))
        )
    sequence = generate(LmulVariant.parse(variant), n)
    if budget is None:
        budget = auto_budget(variant, n, len(sequence))
    return compute(sequence, a + b, 2 * n, budget)


class ProductOracle(object):
    """ a || b -> the 2n-bit product, natively """

    def __init__(self, n):
        self.n = n

    def __call__(self, word):
        a = BitWord(word.bits[:self.n]).value
        b = BitWord(word.bits[self.n:]).value
        return BitWord.from_int(a * b, 2 * self.n)


class MultiplicationError(SequenceValueError):
    pass
