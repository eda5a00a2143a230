from pgaext.mul.core.instructions import (  # noqa
    RegisterKind, INPUT, OUTPUT, AUXILIARY, IndexBlock, RegisterRef,
    BasicInstruction, Instruction, Plain, PosTest, NegTest, FwdJump,
    BwdJump, Halt, HALT, FeatureLevel, InstructionSequence, BitWord, bits,
    concat, power, length, feature_level, required_registers,
    is_well_formed, check_well_formed,
    SequenceError, SequenceValueError,
)
from pgaext.mul.core.text import (  # noqa
    serialize, parse, load_sequence, write_sequence,
    SequenceSyntaxError, ContentFetchError,
)
