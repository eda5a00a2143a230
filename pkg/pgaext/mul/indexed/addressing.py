from dataclasses import dataclass

from pgaext.mul.core import RegisterKind, AUXILIARY


@dataclass(frozen=True)
class EffectiveAddress:
    kind: RegisterKind
    number: int

    def __str__(self):
        return '%s:%d' % (self.kind.token, self.number)


def index_value(aux_bank, start, width):
    """ Value of the index word held in aux:start .., LSB first """
    value = 0
    for i in range(width):
        if aux_bank.get(start + i, 0):
            value |= 1 << i
    return value


def resolve_address(ref, registers):
    """
    Effective register of a reference: the base for direct references,
    base plus the current index word for indexed ones. Resolution reads
    the register file as it is now.
    """
    if ref.index is None:
        return EffectiveAddress(ref.kind, ref.base)
    offset = index_value(registers.bank(AUXILIARY), ref.index.start,
                         ref.index.width)
    return EffectiveAddress(ref.kind, ref.base + offset)
