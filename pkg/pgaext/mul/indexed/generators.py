"""
Generators that need indexed addressing: the loop gadgets INC and
TSTNE, and LMUL4, a long multiplication whose length grows with the
logarithm of the operand width.
"""
from pgaext.mul.core import (
    BitWord, RegisterRef, IndexBlock, AUXILIARY, INPUT, OUTPUT, HALT,
    feature_level,
)
from pgaext.mul.gadgets import (
    Assembler, CARRY, as_word, check_source, emit_mov_bit,
    emit_add_bit, emit_differs_chain, emit_ripple, ripple_gadget,
    OperandError,
)

import logging
log = logging.getLogger(__name__)


def gen_inc(w, src, dst):
    """
    dst := (src + 1) mod 2^w: 5w+3 instructions in place and 11w-5 into
    a disjoint word, which is only written, as for DEC.
    """
    return ripple_gadget('INC', w, src, dst, increment=True)


def gen_tstne(w, src, const):
    """
    Test on not equal to a constant. Control leaves at the first
    following instruction when the word differs from ``const`` and at
    the second one when it is equal; 3w+1 instructions. With const 0^w
    this is TSTNZ.
    """
    if isinstance(const, str):
        const = BitWord.from_text(const)
    if len(const) != w or w < 1:
        raise OperandError('TSTNE %s needs a %s-bit constant, got %s'
                           % (w, w, const.to_text() or '-'))
    src = as_word(src, w)
    check_source(src)
    asm = Assembler()
    emit_differs_chain(asm, src.bits(), const)
    sequence = asm.assemble()
    log.debug('TSTNE %d: %d instructions' % (w, len(sequence)))
    return sequence


class CounterLoop(object):
    """
    Emits a loop over a counter word in the auxiliary index zone.

    Ascending: SET 0 ; body ; INC ; TSTNE bound ; \\body, the body runs
    for 0 .. bound-1; the counter wraps to 0 when bound is 2^w.
    Descending: SET start ; body ; DEC ; TSTNZ ; \\body, the body runs for
    start .. 1. Either adds 9w+5 instructions around the body.
    """

    def __init__(self, asm, block):
        self.asm = asm
        self.block = block
        self.refs = [RegisterRef(AUXILIARY, block.start + i)
                     for i in range(block.width)]

    def _set(self, value):
        word = BitWord.from_int(value, self.block.width)
        for ref, bit in zip(self.refs, word):
            self.asm.plain(ref.set(bit))

    def ascending(self, bound, body):
        self._set(0)
        top = self.asm.here('loop')
        body()
        emit_ripple(self.asm, self.refs, increment=True)
        emit_differs_chain(self.asm, self.refs, BitWord.from_int(
            bound % 2 ** self.block.width, self.block.width))
        self.asm.jump(top)

    def descending(self, start, body):
        self._set(start)
        top = self.asm.here('loop')
        body()
        emit_ripple(self.asm, self.refs, increment=False)
        emit_differs_chain(self.asm, self.refs,
                           BitWord.repeat(0, self.block.width))
        self.asm.jump(top)


def index_zone(n):
    """ Counter blocks for LMUL4, above T4 of the register layout """
    zone = 8 * n + 2
    outer = IndexBlock(zone, n.bit_length())
    inner = IndexBlock(zone + outer.width, (2 * n - 1).bit_length())
    return outer, inner


def gen_lmul4(n):
    """
    Long multiplication with loops over indexed registers. T1 = aux:2
    holds the shifted multiplicand and T2 = aux:(2n+2) the product, both
    2n bits; the outer counter i picks the multiplier bit in:(n+1+i) and
    every word operation is a loop over bit position j at width 2n.
    Length 9*floor(log2 n) + 36*floor(log2(2n-1)) + 116.
    """
    asm = Assembler()
    emit_lmul4(asm, n)
    sequence = asm.assemble()
    log.debug('LMUL4 %d: %d instructions, %s'
              % (n, len(sequence), feature_level(sequence).label))
    return sequence


def emit_lmul4(asm, n):
    if n < 1:
        raise OperandError('LMUL4 needs n >= 1, got %s' % n)
    outer, inner = index_zone(n)
    i_loop = CounterLoop(asm, outer)
    j_loop = CounterLoop(asm, inner)

    def at(kind, base, block=inner):
        return RegisterRef(kind, base, block)

    t1, t2 = 2, 2 * n + 2

    def init():
        emit_mov_bit(asm, at(INPUT, 1), at(AUXILIARY, t1))
        asm.plain(at(AUXILIARY, t1 + n).set(0))
        asm.plain(at(AUXILIARY, t2).set(0))
        asm.plain(at(AUXILIARY, t2 + n).set(0))

    def add():
        emit_add_bit(asm, at(AUXILIARY, t1), at(AUXILIARY, t2),
                     at(AUXILIARY, t2), CARRY)

    def shift():
        emit_mov_bit(asm, at(AUXILIARY, t1 - 1), at(AUXILIARY, t1))

    def step():
        skip = asm.label('skip')
        asm.neg(at(INPUT, n + 1, outer).get())
        asm.jump(skip)
        asm.plain(CARRY.set(0))
        j_loop.ascending(2 * n, add)
        asm.place(skip)
        j_loop.descending(2 * n - 1, shift)
        asm.plain(RegisterRef(AUXILIARY, t1).set(0))

    def output():
        emit_mov_bit(asm, at(AUXILIARY, t2), at(OUTPUT, 1))

    j_loop.ascending(n, init)
    i_loop.ascending(n, step)
    j_loop.ascending(2 * n, output)
    asm.emit(HALT)
