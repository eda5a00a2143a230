import enum
from dataclasses import dataclass
from typing import Optional, Tuple

import logging
log = logging.getLogger(__name__)


class RegisterKind(enum.Enum):
    INPUT = 'in'
    OUTPUT = 'out'
    AUXILIARY = 'aux'

    @classmethod
    def from_token(cls, token):
        try:
            return cls(token)
        except ValueError:
            raise SequenceValueError(
                "Unknown register kind '%s' (expected in, out or aux)"
                % token
            )

    @property
    def token(self):
        return self.value


INPUT = RegisterKind.INPUT
OUTPUT = RegisterKind.OUTPUT
AUXILIARY = RegisterKind.AUXILIARY


@dataclass(frozen=True)
class IndexBlock:
    """ The auxiliary registers aux:start .. aux:start+width-1 holding an
    index word, least significant bit first """
    start: int
    width: int

    def __post_init__(self):
        if self.start < 1 or self.width < 1:
            raise SequenceValueError(
                'Index block aux:%s:%s must have positive start and width'
                % (self.start, self.width)
            )

    @property
    def last(self):
        return self.start + self.width - 1

    def __str__(self):
        return 'aux:%d:%d' % (self.start, self.width)


@dataclass(frozen=True)
class RegisterRef:
    kind: RegisterKind
    base: int
    index: Optional[IndexBlock] = None

    def __post_init__(self):
        if self.base < 1:
            raise SequenceValueError(
                'Register numbers are positive, got %s:%s'
                % (self.kind.token, self.base)
            )

    @property
    def is_direct(self):
        return self.index is None

    def offset(self, k):
        return RegisterRef(self.kind, self.base + k, self.index)

    def indexed(self, block):
        return RegisterRef(self.kind, self.base, block)

    def get(self):
        return BasicInstruction(self, None)

    def set(self, bit):
        return BasicInstruction(self, int(bit))

    def __str__(self):
        if self.index is None:
            return '%s:%d' % (self.kind.token, self.base)
        return '%s:%d(%s)' % (self.kind.token, self.base, self.index)


@dataclass(frozen=True)
class BasicInstruction:
    """ A register command; ``bit`` is None for get, 0 or 1 for set """
    target: RegisterRef
    bit: Optional[int] = None

    def __post_init__(self):
        if self.bit not in (None, 0, 1):
            raise SequenceValueError('Set commands take a bit, got %r'
                                     % (self.bit,))

    @property
    def is_get(self):
        return self.bit is None

    @property
    def is_well_formed(self):
        if self.is_get:
            return self.target.kind is not OUTPUT
        return self.target.kind is not INPUT

    def __str__(self):
        if self.is_get:
            return '%s.get' % self.target
        return '%s.set:%d' % (self.target, self.bit)


class Instruction(object):
    """ Base class of the primitive instructions """
    __slots__ = ()

    @property
    def basic(self):
        return None


@dataclass(frozen=True)
class Plain(Instruction):
    instruction: BasicInstruction

    @property
    def basic(self):
        return self.instruction

    def __str__(self):
        return str(self.instruction)


@dataclass(frozen=True)
class PosTest(Instruction):
    instruction: BasicInstruction

    @property
    def basic(self):
        return self.instruction

    def __str__(self):
        return '+%s' % self.instruction


@dataclass(frozen=True)
class NegTest(Instruction):
    instruction: BasicInstruction

    @property
    def basic(self):
        return self.instruction

    def __str__(self):
        return '-%s' % self.instruction


@dataclass(frozen=True)
class FwdJump(Instruction):
    distance: int

    def __post_init__(self):
        if self.distance < 0:
            raise SequenceValueError('Jump distances are natural numbers')

    def __str__(self):
        return '#%d' % self.distance


@dataclass(frozen=True)
class BwdJump(Instruction):
    distance: int

    def __post_init__(self):
        if self.distance < 0:
            raise SequenceValueError('Jump distances are natural numbers')

    def __str__(self):
        return '\\%d' % self.distance


@dataclass(frozen=True)
class Halt(Instruction):

    def __str__(self):
        return '!'


HALT = Halt()


class FeatureLevel(enum.IntEnum):
    FORWARD_ONLY = 0
    WITH_BACKWARD_JUMPS = 1
    WITH_INDEXED_ADDRESSING = 2

    @property
    def label(self):
        return self.name.lower().replace('_', '-')


class InstructionSequence(object):
    """
    A nonempty finite sequence of primitive instructions.

    Positions used by jumps and diagnostics are 1-based; Python indexing
    on the sequence itself stays 0-based.
    """
    __slots__ = ('items',)

    def __init__(self, items):
        items = tuple(items)
        if not items:
            raise SequenceValueError('An instruction sequence is nonempty')
        for item in items:
            if not isinstance(item, Instruction):
                raise SequenceValueError('Not a primitive instruction: %r'
                                         % (item,))
        object.__setattr__(self, 'items', items)

    def __setattr__(self, name, value):
        raise AttributeError('Instruction sequences are immutable')

    def __reduce__(self):
        return (InstructionSequence, (self.items,))

    @classmethod
    def of(cls, *parts):
        """
        Flatten instructions and sequences into one sequence; a bare
        register command stands for its plain instruction
        """
        items = []
        for part in parts:
            if isinstance(part, BasicInstruction):
                items.append(Plain(part))
            elif isinstance(part, Instruction):
                items.append(part)
            else:
                items.extend(part)
        return cls(items)

    def at(self, position):
        return self.items[position - 1]

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, key):
        return self.items[key]

    def __eq__(self, other):
        if not isinstance(other, InstructionSequence):
            return NotImplemented
        return self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def __add__(self, other):
        return concat(self, other)

    def __mul__(self, n):
        return power(self, n)

    def __repr__(self):
        text = ';'.join(str(item) for item in self.items[:8])
        if len(self.items) > 8:
            text += ';...'
        return '<InstructionSequence len=%d %s>' % (len(self.items), text)

    def __str__(self):
        return ';'.join(str(item) for item in self.items)


def concat(x, y):
    return InstructionSequence(x.items + y.items)


def power(x, n):
    if n < 1:
        raise SequenceValueError(
            'Powers of instruction sequences are defined for n > 0, got %s'
            % n
        )
    return InstructionSequence(x.items * n)


def length(x):
    return len(x.items)


def feature_level(x):
    level = FeatureLevel.FORWARD_ONLY
    for item in x:
        if isinstance(item, BwdJump):
            level = max(level, FeatureLevel.WITH_BACKWARD_JUMPS)
        elif item.basic is not None and not item.basic.target.is_direct:
            return FeatureLevel.WITH_INDEXED_ADDRESSING
    return level


def required_registers(x):
    """
    Per-kind highest register number X can touch, as
    (max_in, max_out, max_aux).
    """
    highest = {INPUT: 0, OUTPUT: 0, AUXILIARY: 0}
    for item in x:
        if item.basic is None:
            continue
        ref = item.basic.target
        top = ref.base
        if ref.index is not None:
            top = ref.base + 2 ** ref.index.width - 1
            highest[AUXILIARY] = max(highest[AUXILIARY], ref.index.last)
        highest[ref.kind] = max(highest[ref.kind], top)
    return highest[INPUT], highest[OUTPUT], highest[AUXILIARY]


def ill_formed_positions(x):
    return [position for position, item in enumerate(x, 1)
            if item.basic is not None and not item.basic.is_well_formed]


def is_well_formed(x):
    return not ill_formed_positions(x)


def check_well_formed(x):
    positions = ill_formed_positions(x)
    if positions:
        raise SequenceValueError(
            'Instruction %d (%s) is not a basic instruction: inputs are '
            'read-only and outputs are write-only'
            % (positions[0], x.at(positions[0]))
        )
    return x


@dataclass(frozen=True)
class BitWord:
    """ A finite bit string, position 0 least significant """
    bits: Tuple[int, ...] = ()

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        for b in bits:
            if b not in (0, 1):
                raise SequenceValueError('Bits are 0 or 1, got %r' % (b,))
        object.__setattr__(self, 'bits', bits)

    @classmethod
    def from_text(cls, text):
        text = text.strip()
        if text in ('', '-'):
            return cls(())
        if set(text) - set('01'):
            raise SequenceValueError(
                "Bit strings are written with '0' and '1' only, got '%s'"
                % text
            )
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_int(cls, value, width):
        if value < 0 or value >= 2 ** width:
            raise SequenceValueError('%d does not fit in %d bits'
                                     % (value, width))
        return cls(tuple((value >> i) & 1 for i in range(width)))

    @classmethod
    def repeat(cls, bit, n):
        return cls((int(bit),) * n)

    @property
    def value(self):
        return sum(b << i for i, b in enumerate(self.bits))

    def to_text(self):
        return ''.join(str(b) for b in self.bits)

    def concat(self, other):
        return BitWord(self.bits + other.bits)

    def __add__(self, other):
        return self.concat(other)

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __str__(self):
        return self.to_text()


def bits(text):
    return BitWord.from_text(text)


class SequenceError(Exception):
    pass


class SequenceValueError(SequenceError):
    pass
