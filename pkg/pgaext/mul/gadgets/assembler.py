from pgaext.mul.core import (
    Instruction, BasicInstruction, Plain, PosTest, NegTest, FwdJump, BwdJump,
    InstructionSequence, SequenceError,
)

import logging
log = logging.getLogger(__name__)


class Label(object):
    """ A position in the sequence being assembled, placed once """
    __slots__ = ('name', 'position')

    def __init__(self, name):
        self.name = name
        self.position = None

    def __repr__(self):
        return '<Label %s @%s>' % (self.name, self.position)


class Assembler(object):
    """
    Collects primitive instructions and resolves jumps to labels once
    every label is placed. A jump to a label at or after the jump is a
    forward jump, one to an earlier label a backward jump. Positions are
    1-based; a label placed after the last instruction stands for the
    first instruction following the assembled sequence.
    """

    def __init__(self):
        self.items = []
        self.jumps = []
        self.tagged = {}
        self.count = 0

    @property
    def position(self):
        """ Position the next emitted instruction will take """
        return len(self.items) + 1

    def label(self, name='L'):
        self.count += 1
        return Label('%s%d' % (name, self.count))

    def place(self, label):
        if label.position is not None:
            raise AssemblyError('Label %s placed twice' % label.name)
        label.position = self.position
        return label

    def here(self, name='L'):
        return self.place(self.label(name))

    def emit(self, item):
        if isinstance(item, BasicInstruction):
            item = Plain(item)
        if not isinstance(item, Instruction):
            raise AssemblyError('Not an instruction: %r' % (item,))
        self.items.append(item)

    def plain(self, basic):
        self.emit(Plain(basic))

    def pos(self, basic):
        self.emit(PosTest(basic))

    def neg(self, basic):
        self.emit(NegTest(basic))

    def extend(self, sequence):
        for item in sequence:
            self.emit(item)

    def jump(self, label, offset=0, tag=None):
        """
        Emit a jump to ``label``, or to the ``offset``-th instruction after
        it. ``tag`` records the resolved distance under that name.
        """
        self.jumps.append((len(self.items), label, offset, tag))
        self.items.append(None)

    def repeat(self, times, block):
        """
        Call block(i) for i in 0 .. times-1. Every call must emit the
        same number of instructions.
        """
        for i in range(times):
            block(i)

    def assemble(self):
        for index, label, offset, tag in self.jumps:
            if label.position is None:
                raise AssemblyError('Label %s is never placed' % label.name)
            source = index + 1
            target = label.position + offset
            if target >= source:
                self.items[index] = FwdJump(target - source)
            else:
                self.items[index] = BwdJump(source - target)
            if tag is not None:
                self.tagged[tag] = abs(target - source)
        sequence = InstructionSequence(self.items)
        log.debug('Assembled %d instructions with %d jumps'
                  % (len(sequence), len(self.jumps)))
        return sequence


class LengthCounter(Assembler):
    """
    Takes the emitting calls of an Assembler and only counts the
    instructions; a repeated block is emitted once and multiplied.
    assemble() returns the length. Jumps are never resolved, so labels
    of repeated blocks after the first may stay unplaced.
    """

    def __init__(self):
        super(LengthCounter, self).__init__()
        self.size = 0

    @property
    def position(self):
        return self.size + 1

    def emit(self, item):
        self.size += 1

    def jump(self, label, offset=0, tag=None):
        self.size += 1

    def repeat(self, times, block):
        if times < 1:
            return
        start = self.size
        block(0)
        self.size += (self.size - start) * (times - 1)

    def assemble(self):
        return self.size


class AssemblyError(SequenceError):
    pass
