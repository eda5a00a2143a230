"""
Generators for the word operations on n-bit words. Every generator
returns a forward-only InstructionSequence whose length is an exact
function of its parameters, and every jump inside it is resolved from
labels by the Assembler.

Word operands are WordRef values; a bare RegisterRef is taken as the
base of a word of the width the generator is asked for.
"""
from pgaext.mul.core import BitWord, feature_level
from pgaext.mul.gadgets.assembler import Assembler
from pgaext.mul.gadgets.words import (
    CARRY, OverlapRelation, as_word, classify, check_source,
    check_destination, check_carry, validate_operands, OperandError,
    ShiftRangeError,
)

import logging
log = logging.getLogger(__name__)


def _done(name, asm):
    sequence = asm.assemble()
    log.debug('%s: %d instructions, %s'
              % (name, len(sequence), feature_level(sequence).label))
    return sequence


def _check_width(n):
    if n < 1:
        raise OperandError('Word width must be at least 1, got %s' % n)


def emit_mov_bit(asm, s, d):
    """ d := s in four instructions; s and d may be indexed """
    one = asm.label('mov')
    asm.pos(s.get())
    asm.jump(one)
    asm.pos(d.set(0))
    asm.place(one)
    asm.plain(d.set(1))


def emit_add_bit(asm, s1, s2, d, c):
    """
    One full-adder step: d := s1 xor s2 xor c and c := carry out, in 26
    instructions. Both source bits are read before d is written, so d
    may be either source. Leaves control after the block.
    """
    s1_one = asm.label('s1')
    s2_only = asm.label('s2')
    neither = asm.label('none')
    both = asm.label('both')
    sum0_carry1 = asm.label('s0c1')
    sum1 = asm.label('s1c0')
    carry0_sum1 = asm.label('c0s1')
    sum1_carry1 = asm.label('s1c1')
    sum0 = asm.label('s0')
    end = asm.label('end')

    asm.pos(s1.get())
    asm.jump(s1_one)
    asm.pos(s2.get())
    asm.jump(s2_only)
    asm.jump(neither)
    asm.place(s1_one)
    asm.pos(s2.get())
    asm.jump(both)
    # exactly one source bit is 1
    asm.pos(c.get())
    asm.jump(sum0_carry1)
    asm.jump(sum1)
    asm.place(s2_only)
    asm.pos(c.get())
    asm.jump(sum0_carry1)
    asm.jump(sum1)
    asm.place(neither)
    asm.pos(c.get())
    asm.jump(carry0_sum1)
    asm.jump(sum0)
    asm.place(both)
    asm.pos(c.get())
    asm.jump(sum1_carry1)
    asm.place(sum0_carry1)
    asm.plain(d.set(0))
    asm.plain(c.set(1))
    asm.jump(end)
    asm.place(carry0_sum1)
    asm.plain(c.set(0))
    asm.place(sum1_carry1)
    asm.plain(d.set(1))
    asm.jump(end)
    asm.place(sum0)
    asm.pos(d.set(0))
    asm.place(sum1)
    asm.plain(d.set(1))
    asm.place(end)


def emit_differs_chain(asm, refs, word):
    """
    Compare the registers ``refs`` with the constant ``word``. Control
    continues at the first instruction after the chain when some bit
    differs and at the second one when all bits are equal. Three
    instructions per bit plus one.
    """
    tests = [asm.label('test') for _ in refs]
    chain = [asm.label('diff') for _ in refs]
    equal = asm.label('equal')
    end = asm.label('end')
    last = len(refs) - 1

    def block(i):
        asm.place(tests[i])
        if word[i]:
            asm.neg(refs[i].get())
        else:
            asm.pos(refs[i].get())
        asm.place(chain[i])
        asm.jump(chain[i + 1] if i < last else end)
        asm.jump(tests[i + 1] if i < last else equal)
    asm.repeat(len(refs), block)
    asm.place(equal)
    asm.jump(end, offset=1)
    asm.place(end)


def emit_ripple(asm, refs, increment):
    """
    Add or subtract one in place: scanning from the least significant
    bit, bits equal to the borrow value flip and the ripple continues;
    the first other bit flips and control leaves. Five instructions per
    bit plus three.
    """
    dones = [asm.label('done') for _ in refs]
    end = asm.label('end')
    last = len(refs) - 1
    stop = 1 if increment else 0

    def block(i):
        ref = refs[i]
        if increment:
            asm.pos(ref.get())
        else:
            asm.neg(ref.get())
        ripple = asm.label('ripple')
        asm.jump(ripple)
        asm.plain(ref.set(stop))
        asm.place(dones[i])
        asm.jump(dones[i + 1] if i < last else end)
        asm.place(ripple)
        asm.plain(ref.set(1 - stop))
    asm.repeat(len(refs), block)
    for _ in range(3):
        trail = asm.label('trail')
        asm.jump(trail)
        asm.place(trail)
    asm.place(end)


def emit_ripple_into(asm, srcs, dsts, increment):
    """
    dsts := srcs plus or minus one without reading dsts. Two tracks run
    side by side: the ripple track writes the borrow value into each
    destination bit until the first other source bit, which gets the
    stop value and hands over to the copy track for the bits above.
    Eleven instructions per bit minus five.
    """
    ripples = [asm.label('ripple') for _ in srcs]
    copies = [asm.label('copy') for _ in srcs]
    end = asm.label('end')
    last = len(srcs) - 1
    stop = 1 if increment else 0

    def ripple(i):
        asm.place(ripples[i])
        found = asm.label('found')
        if increment:
            asm.neg(srcs[i].get())
        else:
            asm.pos(srcs[i].get())
        asm.jump(found)
        asm.plain(dsts[i].set(1 - stop))
        asm.jump(ripples[i + 1] if i < last else end)
        asm.place(found)
        asm.plain(dsts[i].set(stop))
        asm.jump(copies[i + 1] if i < last else end)

    def block(k):
        i = k + 1
        asm.place(copies[i])
        emit_mov_bit(asm, srcs[i], dsts[i])
        asm.jump(copies[i + 1] if i < last else end)
        ripple(i)
    ripple(0)
    asm.repeat(last, block)
    asm.place(end)


def _generate(name, emit, *args):
    asm = Assembler()
    emit(asm, *args)
    return _done(name, asm)


def emit_tstnz(asm, n, src):
    _check_width(n)
    src = as_word(src, n)
    check_source(src)
    emit_differs_chain(asm, src.bits(), BitWord.repeat(0, n))


def gen_tstnz(n, src):
    """
    Test on nonzero. Control leaves at the first following instruction
    when the word is nonzero and at the second one when it is zero.

    The chain per bit is '+s.get ; #3 ; #1' closed by '#2'; the form
    '+s.get ; #2 ; #3' with a closing '#1' reaches the first following
    instruction only when every bit is 1, so it is not used.
    """
    return _generate('TSTNZ %d' % n, emit_tstnz, n, src)


def emit_ripple_word(asm, n, src, dst, increment):
    _check_width(n)
    src, dst = as_word(src, n), as_word(dst, n)
    validate_operands(dst, [src])
    if classify(dst, src) is OverlapRelation.FULLY_COINCIDING:
        emit_ripple(asm, dst.bits(), increment)
    else:
        emit_ripple_into(asm, src.bits(), dst.bits(), increment)


def ripple_gadget(name, n, src, dst, increment):
    return _generate('%s %d' % (name, n), emit_ripple_word, n, src, dst,
                     increment)


def emit_dec(asm, n, src, dst):
    emit_ripple_word(asm, n, src, dst, increment=False)


def gen_dec(n, src, dst):
    """
    dst := (src - 1) mod 2^n: 5n+3 instructions in place and 11n-5 into
    a disjoint word. A disjoint destination is only written, so it may
    be an output word.
    """
    return ripple_gadget('DEC', n, src, dst, increment=False)


def _check_shift(n, m):
    if not 1 <= m <= n:
        raise ShiftRangeError('Shift %s outside 1..%d for %d-bit words'
                              % (m, n, n))


def _shift_operands(n, m, src, dst):
    _check_width(n)
    _check_shift(n, m)
    src, dst = as_word(src, n), as_word(dst, n)
    validate_operands(dst, [src])
    return src, dst


def emit_shl(asm, n, m, src, dst):
    src, dst = _shift_operands(n, m, src, dst)
    asm.repeat(n - m, lambda k: emit_mov_bit(asm, src.bit(n - 1 - k - m),
                                             dst.bit(n - 1 - k)))
    asm.repeat(m, lambda k: asm.plain(dst.bit(m - 1 - k).set(0)))


def gen_shl(n, m, src, dst):
    """
    dst := (src * 2^m) mod 2^n in 4n - 3m instructions. Writes descend
    from the top bit, so src and dst may coincide. m = n zero-fills dst.
    """
    return _generate('SHL %d %d' % (n, m), emit_shl, n, m, src, dst)


def emit_shr(asm, n, m, src, dst):
    src, dst = _shift_operands(n, m, src, dst)
    asm.repeat(n - m, lambda j: emit_mov_bit(asm, src.bit(j + m),
                                             dst.bit(j)))
    asm.repeat(m, lambda k: asm.plain(dst.bit(n - m + k).set(0)))


def gen_shr(n, m, src, dst):
    """ dst := src div 2^m in 4n - 3m instructions, writes ascending """
    return _generate('SHR %d %d' % (n, m), emit_shr, n, m, src, dst)


def emit_add(asm, n, src1, src2, dst):
    _check_width(n)
    src1, src2, dst = (as_word(src1, n), as_word(src2, n),
                       as_word(dst, n))
    validate_operands(dst, [src1, src2])
    check_carry([src1, src2, dst])
    asm.plain(CARRY.set(0))
    asm.repeat(n, lambda i: emit_add_bit(asm, src1.bit(i), src2.bit(i),
                                         dst.bit(i), CARRY))


def gen_add(n, src1, src2, dst):
    """
    dst := (src1 + src2) mod 2^n with the carry in aux:1; 26n+1
    instructions. dst may coincide with either source.

    Per bit, operand bits (0, 0) with carry 1 give sum 1 and must clear
    the carry; they enter at 'c.set:0 ; d.set:1', and (1, 1) with carry
    1 enters the same pair at 'd.set:1'.
    """
    return _generate('ADD %d' % n, emit_add, n, src1, src2, dst)


def emit_set(asm, word, dst):
    if isinstance(word, str):
        word = BitWord.from_text(word)
    if len(word) < 1:
        raise OperandError('SET needs a nonempty word')
    dst = as_word(dst, len(word))
    check_destination(dst)
    asm.repeat(len(word), lambda i: asm.plain(dst.bit(i).set(word[i])))


def gen_set(word, dst):
    return _generate('SET %d' % len(word), emit_set, word, dst)


def emit_mov(asm, n, src, dst):
    _check_width(n)
    src, dst = as_word(src, n), as_word(dst, n)
    validate_operands(dst, [src])
    asm.repeat(n, lambda i: emit_mov_bit(asm, src.bit(i), dst.bit(i)))


def gen_mov(n, src, dst):
    """ dst := src, 4n instructions """
    return _generate('MOV %d' % n, emit_mov, n, src, dst)


def emit_zpad(asm, n, m, dst):
    """ Zero the registers m .. n-1 of an n-bit word: SET of 0^(n-m) """
    if not 0 < m < n:
        raise ShiftRangeError('ZPAD needs 0 < m < n, got n=%s m=%s'
                              % (n, m))
    dst = as_word(dst, n)
    emit_set(asm, BitWord.repeat(0, n - m), dst.offset(m))


def gen_zpad(n, m, dst):
    return _generate('ZPAD %d %d' % (n, m), emit_zpad, n, m, dst)
