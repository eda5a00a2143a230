import pytest

from pgaext.mul.core import (
    RegisterRef, IndexBlock, BasicInstruction, Plain, PosTest, NegTest,
    FwdJump, BwdJump, HALT, InstructionSequence, BitWord, FeatureLevel,
    INPUT, OUTPUT, AUXILIARY, RegisterKind, bits, concat, power, length,
    feature_level, required_registers, is_well_formed, check_well_formed,
    parse, SequenceValueError,
)
from pgaext.mul.multiplication import gen_lmul3


def seq(*items):
    return InstructionSequence(items)


def test_register_kind_tokens():
    assert [k.token for k in RegisterKind] == ['in', 'out', 'aux']
    for kind in RegisterKind:
        assert RegisterKind.from_token(kind.token) is kind
    with pytest.raises(SequenceValueError):
        RegisterKind.from_token('reg')


def test_register_numbers_are_positive():
    with pytest.raises(SequenceValueError):
        RegisterRef(INPUT, 0)
    with pytest.raises(SequenceValueError):
        IndexBlock(0, 2)
    with pytest.raises(SequenceValueError):
        IndexBlock(3, 0)


def test_jump_distances_are_natural():
    assert str(FwdJump(0)) == '#0'
    with pytest.raises(SequenceValueError):
        BwdJump(-1)


def test_of_takes_register_commands_as_plain_instructions():
    ref = RegisterRef(OUTPUT, 1)
    x = InstructionSequence.of(ref.set(1), seq(FwdJump(1)), HALT)
    assert list(x) == [Plain(ref.set(1)), FwdJump(1), HALT]
    assert is_well_formed(x)


def test_concat():
    x = concat(seq(HALT), seq(FwdJump(1)))
    assert len(x) == 2
    assert x.at(1) == HALT
    assert x.at(2) == FwdJump(1)


def test_concat_is_additive_and_associative():
    a = parse('!;!;!')
    b = parse('#1;#2;#3;#4;!')
    c = parse('aux:1.set:1;!')
    assert length(concat(a, b)) == 8
    assert concat(concat(a, b), c) == concat(a, concat(b, c))
    assert a + b == concat(a, b)


def test_power():
    x = parse('+in:1.get;#2;!')
    assert power(x, 1) == x
    assert length(power(seq(HALT, HALT), 3)) == 6
    assert power(x, 4) == concat(x, power(x, 3))
    y = parse('aux:1.set:1;aux:2.set:0;#1;#1;#1;#1;!')
    assert length(y * 5) == 35


def test_power_zero_is_rejected():
    with pytest.raises(SequenceValueError):
        power(seq(HALT), 0)


def test_sequences_are_nonempty_and_immutable():
    with pytest.raises(SequenceValueError):
        InstructionSequence([])
    x = seq(HALT)
    with pytest.raises(AttributeError):
        x.items = ()


def test_feature_level():
    assert feature_level(parse('+in:1.get;#2;!')) is \
        FeatureLevel.FORWARD_ONLY
    assert feature_level(parse('#1;\\1')) is \
        FeatureLevel.WITH_BACKWARD_JUMPS
    assert feature_level(parse('\\1;out:1(aux:2:3).set:1')) is \
        FeatureLevel.WITH_INDEXED_ADDRESSING
    assert FeatureLevel.WITH_BACKWARD_JUMPS.label == 'with-backward-jumps'


def test_required_registers():
    assert required_registers(parse('+in:4.get;!')) == (4, 0, 0)
    assert required_registers(parse('out:1(aux:2:3).set:1')) == (0, 8, 4)
    assert required_registers(gen_lmul3(4))[2] == 28


def test_well_formedness():
    assert is_well_formed(parse('in:1.get;out:1.set:1;aux:1.get;!'))
    for text in ('in:1.set:1;!', '!;+out:2.get'):
        x = parse(text)
        assert not is_well_formed(x)
        with pytest.raises(SequenceValueError):
            check_well_formed(x)


def test_basic_instruction_text():
    ref = RegisterRef(OUTPUT, 1, IndexBlock(9, 3))
    assert str(ref.set(1)) == 'out:1(aux:9:3).set:1'
    assert str(PosTest(RegisterRef(INPUT, 1).get())) == '+in:1.get'
    assert str(NegTest(RegisterRef(AUXILIARY, 3).get())) == '-aux:3.get'
    assert Plain(BasicInstruction(RegisterRef(AUXILIARY, 2), 0)).basic.bit \
        == 0


def test_bit_words():
    word = bits('1011')
    assert word.value == 13
    assert len(word) == 4
    assert word.to_text() == '1011'
    assert BitWord.from_int(13, 4) == word
    assert BitWord.repeat(1, 3) == bits('111')
    assert bits('10') + bits('01') == bits('1001')
    assert bits('').value == 0
    assert len(bits('-')) == 0


def test_bit_words_reject_other_characters():
    with pytest.raises(SequenceValueError):
        bits('10a1')
    with pytest.raises(SequenceValueError):
        BitWord.from_int(16, 4)


@pytest.mark.parametrize('n', range(0, 9))
def test_bit_word_values_stay_below_the_width(n):
    for bit in (0, 1):
        word = BitWord.repeat(bit, n)
        assert len(word) == n
        assert word.value < 2 ** n
