from pgaext.mul.gadgets.assembler import (  # noqa
    Assembler, LengthCounter, Label, AssemblyError,
)
from pgaext.mul.gadgets.words import (  # noqa
    WordRef, OverlapRelation, CARRY, as_word, classify, check_source,
    check_destination, validate_operands,
    OperandError, ShiftRangeError,
)
from pgaext.mul.gadgets.generators import (  # noqa
    gen_tstnz, gen_dec, gen_shl, gen_shr, gen_add, gen_set, gen_mov,
    gen_zpad, emit_tstnz, emit_dec, emit_shl, emit_shr, emit_add,
    emit_set, emit_mov, emit_zpad, emit_mov_bit, emit_add_bit,
    emit_differs_chain, emit_ripple, emit_ripple_into, ripple_gadget,
)
