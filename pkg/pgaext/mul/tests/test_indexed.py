import functools

import pytest

from pgaext.mul.core import (
    BitWord, RegisterRef, IndexBlock, InstructionSequence, FeatureLevel,
    INPUT, OUTPUT, AUXILIARY, HALT, bits, feature_level,
)
from pgaext.mul.execution import (
    RegisterFile, Equivalent, compute, io_equivalent, verify_function,
)
from pgaext.mul.gadgets import (
    WordRef, gen_mov, gen_dec, gen_tstnz, OperandError,
)
from pgaext.mul.gadgets.harness import GadgetOracle, harness
from pgaext.mul.indexed import (
    EffectiveAddress, resolve_address, gen_inc, gen_tstne, gen_lmul4,
    index_zone,
)
from pgaext.mul.multiplication import (
    LmulVariant, expected_length, log2_floor, LMUL4_CONSTANTS,
    LMUL4_TARGETS,
)


@functools.lru_cache(maxsize=None)
def lmul4_length(n):
    return len(gen_lmul4(n))


def aux_word(n, base=2):
    return WordRef(RegisterRef(AUXILIARY, base), n)


def in_word(n):
    return WordRef(RegisterRef(INPUT, 1), n)


def registers(**aux):
    """ A register file with the given aux:N bits set """
    registers = RegisterFile()
    for name, bit in aux.items():
        registers.write(AUXILIARY, int(name[1:]), bit)
    return registers


@pytest.mark.parametrize('ref,regs,expected', [
    (RegisterRef(INPUT, 1, IndexBlock(9, 3)),
     registers(a9=1, a10=0, a11=1), EffectiveAddress(INPUT, 6)),
    (RegisterRef(AUXILIARY, 7, IndexBlock(1, 1)),
     registers(a1=0), EffectiveAddress(AUXILIARY, 7)),
    (RegisterRef(OUTPUT, 1, IndexBlock(2, 2)),
     registers(a2=1, a3=1), EffectiveAddress(OUTPUT, 4)),
    (RegisterRef(OUTPUT, 3), registers(a2=1), EffectiveAddress(OUTPUT, 3)),
])
def test_resolve_address(ref, regs, expected):
    assert resolve_address(ref, regs) == expected


def test_resolution_follows_the_current_index():
    ref = RegisterRef(INPUT, 1, IndexBlock(4, 2))
    regs = registers(a4=1)
    assert str(resolve_address(ref, regs)) == 'in:2'
    regs.write(AUXILIARY, 5, 1)
    assert str(resolve_address(ref, regs)) == 'in:4'


def test_machine_addresses_through_resolve_address(monkeypatch):
    from pgaext.mul.execution import machine
    seen = []

    def spy(ref, regs):
        address = resolve_address(ref, regs)
        seen.append(address)
        return address
    monkeypatch.setattr(machine, 'resolve_address', spy)
    ref = RegisterRef(OUTPUT, 1, IndexBlock(1, 2))
    x = InstructionSequence.of(
        RegisterRef(AUXILIARY, 2).set(1), ref.set(1),
        RegisterRef(AUXILIARY, 1).set(1), ref.set(1), HALT,
    )
    assert compute(x, bits(''), 4, 10) == bits('0011')
    assert seen == [EffectiveAddress(OUTPUT, 3), EffectiveAddress(OUTPUT, 4)]


def test_inc_examples():
    assert len(gen_inc(3, aux_word(3), aux_word(3))) == 18
    h = harness('inc', 2, in_place=True)
    assert compute(h.sequence, bits('00'), 2, h.budget) == bits('10')
    assert compute(h.sequence, bits('11'), 2, h.budget) == bits('00')


@pytest.mark.parametrize('w', range(1, 7))
@pytest.mark.parametrize('in_place', [False, True])
def test_inc(w, in_place):
    h = harness('inc', w, in_place=in_place)
    assert verify_function(h.sequence, h.oracle, h.n_in, h.m_out,
                           h.budget).passed
    assert feature_level(gen_inc(w, aux_word(w), aux_word(w))) is \
        FeatureLevel.FORWARD_ONLY


@pytest.mark.parametrize('w', range(1, 7))
def test_inc_and_dec_are_inverse(w):
    word = aux_word(w)
    x = InstructionSequence.of(
        gen_mov(w, in_word(w), word), gen_inc(w, word, word),
        gen_dec(w, word, word),
        gen_mov(w, word, WordRef(RegisterRef(OUTPUT, 1), w)), HALT,
    )
    assert verify_function(x, GadgetOracle('mov', w), w, w,
                           len(x) + 1).passed


def test_tstne_examples():
    h = harness('tstne', 2, word='10')
    assert compute(h.sequence, bits('10'), 2, h.budget) == bits('01')
    assert compute(h.sequence, bits('00'), 2, h.budget) == bits('11')


@pytest.mark.parametrize('w', range(1, 7))
def test_tstne(w):
    assert len(gen_tstne(w, aux_word(w), BitWord.repeat(1, w))) == 3 * w + 1
    for value in range(2 ** w):
        for in_place in (False, True):
            h = harness('tstne', w, word=BitWord.from_int(value, w),
                        in_place=in_place)
            assert verify_function(h.sequence, h.oracle, h.n_in, h.m_out,
                                   h.budget).passed


@pytest.mark.parametrize('w', range(1, 7))
def test_tstne_against_zero_is_tstnz(w):
    src = aux_word(w, base=3)
    assert gen_tstne(w, src, BitWord.repeat(0, w)) == gen_tstnz(w, src)
    ne = harness('tstne', w, word=BitWord.repeat(0, w))
    nz = harness('tstnz', w)
    assert io_equivalent(ne.sequence, nz.sequence, w, 2,
                         nz.budget) == Equivalent()


def test_tstne_needs_a_matching_constant():
    with pytest.raises(OperandError):
        gen_tstne(3, aux_word(3), '10')


def test_index_zone():
    outer, inner = index_zone(6)
    assert outer == IndexBlock(50, 3)
    assert inner == IndexBlock(53, 4)
    assert index_zone(1) == (IndexBlock(10, 1), IndexBlock(11, 1))


def test_lmul4_feature_level():
    x = gen_lmul4(3)
    assert feature_level(x) is FeatureLevel.WITH_INDEXED_ADDRESSING


@pytest.mark.parametrize('n,length', [(1, 116), (2, 161), (6, 242)])
def test_lmul4_length_examples(n, length):
    assert len(gen_lmul4(n)) == length


def test_lmul4_lengths():
    sizes = list(range(1, 200)) + [2 ** k + d for k in range(8, 11)
                                   for d in (-1, 0, 1)]
    a, b, c = LMUL4_CONSTANTS
    for n in sizes:
        size = lmul4_length(n)
        assert size == a * log2_floor(n) + b * log2_floor(2 * n - 1) + c
        assert size == expected_length(LmulVariant.LMUL4, n)


def test_lmul4_is_affine_in_the_logarithm():
    lengths = [(k, lmul4_length(2 ** k)) for k in range(0, 11)]
    slope = lengths[1][1] - lengths[0][1]
    for k, size in lengths[1:]:
        assert size - lengths[1][1] == slope * (k - 1)


def test_lmul4_shorter_than_lmul3():
    for n in range(6, 1025):
        assert lmul4_length(n) < expected_length(LmulVariant.LMUL3, n)


def test_lmul4_against_target_constants():
    a, b, c = LMUL4_CONSTANTS
    ta, tb, tc = LMUL4_TARGETS
    assert a < ta
    assert c < tc
    # four inner counter loops at 9 instructions per index bit
    assert b >= tb
    for n in range(1, 1025):
        assert lmul4_length(n) < \
            ta * log2_floor(n) + tb * log2_floor(2 * n - 1) + tc
