import enum
import re
from dataclasses import dataclass

from pgaext.mul.core import (
    RegisterKind, RegisterRef, INPUT, OUTPUT, AUXILIARY, SequenceError,
    SequenceValueError,
)

import logging
log = logging.getLogger(__name__)

REF_RE = re.compile(r'^(in|out|aux):([0-9]+)$')

SOURCE_KINDS = (INPUT, AUXILIARY)
DESTINATION_KINDS = (AUXILIARY, OUTPUT)

CARRY = RegisterRef(AUXILIARY, 1)


@dataclass(frozen=True)
class WordRef:
    """ The n registers ref.base .. ref.base+width-1, LSB at ref.base """
    ref: RegisterRef
    width: int

    def __post_init__(self):
        if self.width < 1:
            raise OperandError('Words are at least one bit wide, got %s'
                               % self.width)
        if not self.ref.is_direct:
            raise OperandError('Word %s must use a direct reference'
                               % self.ref)

    @classmethod
    def parse(cls, text, width):
        match = REF_RE.match(text.strip())
        if match is None:
            raise OperandError("'%s' is not a register name like aux:2"
                               % text)
        try:
            ref = RegisterRef(RegisterKind.from_token(match.group(1)),
                              int(match.group(2)))
        except SequenceValueError as e:
            raise OperandError(str(e))
        return cls(ref, width)

    @property
    def kind(self):
        return self.ref.kind

    @property
    def base(self):
        return self.ref.base

    @property
    def last(self):
        return self.ref.base + self.width - 1

    def bit(self, i):
        if not 0 <= i < self.width:
            raise OperandError('Bit %d outside the %d-bit word %s'
                               % (i, self.width, self))
        return self.ref.offset(i)

    def bits(self):
        return [self.ref.offset(i) for i in range(self.width)]

    def offset(self, k, width=None):
        return WordRef(self.ref.offset(k),
                       self.width - k if width is None else width)

    def contains(self, ref):
        return (ref.kind is self.kind and
                self.base <= ref.base <= self.last)

    def __str__(self):
        return '%s[%d]' % (self.ref, self.width)


def as_word(operand, width):
    """ Accept a WordRef of the given width or a bare RegisterRef """
    if isinstance(operand, WordRef):
        if operand.width != width:
            raise OperandError('Word %s is not %d bits wide'
                               % (operand, width))
        return operand
    return WordRef(operand, width)


class OverlapRelation(enum.Enum):
    DISJOINT = 'disjoint'
    FULLY_COINCIDING = 'fully-coinciding'
    PARTIALLY_COINCIDING = 'partially-coinciding'


def classify(a, b):
    if a.kind is not b.kind:
        return OverlapRelation.DISJOINT
    distance = abs(a.base - b.base)
    if distance == 0:
        return OverlapRelation.FULLY_COINCIDING
    if distance < max(a.width, b.width):
        return OverlapRelation.PARTIALLY_COINCIDING
    return OverlapRelation.DISJOINT


def check_source(src):
    if src.kind not in SOURCE_KINDS:
        raise OperandError('Source word %s must be of kind in or aux'
                           % src)


def check_destination(dst):
    if dst.kind not in DESTINATION_KINDS:
        raise OperandError('Destination word %s must be of kind aux or out'
                           % dst)


def validate_operands(dst, srcs):
    """
    Accept dst and srcs when the kinds fit and dst is disjoint from or
    fully coincides with every source; partially coinciding words are
    rejected naming the pair.
    """
    check_destination(dst)
    for src in srcs:
        check_source(src)
        if src.width != dst.width:
            raise OperandError('Operand widths differ: %s and %s'
                               % (src, dst))
        if classify(dst, src) is OverlapRelation.PARTIALLY_COINCIDING:
            raise OperandError(
                'Words %s and %s partially coincide (bases %d and %d, '
                'offset %d < %d)'
                % (dst, src, dst.base, src.base, abs(dst.base - src.base),
                   dst.width)
            )
    return True


def check_carry(words):
    for word in words:
        if word.contains(CARRY):
            raise OperandError('Word %s overlaps the carry register %s'
                               % (word, CARRY))


class OperandError(SequenceError):
    pass


class ShiftRangeError(OperandError):
    pass
