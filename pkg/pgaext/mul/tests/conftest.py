import io

import pytest

from pgaext.mul.core import parse, write_sequence
from pgaext.mul.commands.mul import MulCommand


@pytest.fixture
def sequence_file(tmp_path):
    """ Write a sequence, given as text or InstructionSequence, to a file """
    counter = [0]

    def write(sequence):
        counter[0] += 1
        path = tmp_path / ('seq%d.pga' % counter[0])
        if isinstance(sequence, str):
            sequence = parse(sequence)
        write_sequence(sequence, str(path))
        return str(path)
    return write


@pytest.fixture
def cli():
    """ Run the command line; returns (exit code, standard output) """
    def invoke(*argv):
        out = io.StringIO()
        code = MulCommand(out=out).command([str(a) for a in argv])
        return code, out.getvalue()
    return invoke
