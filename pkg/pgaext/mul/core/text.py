import re
import string
import io

import requests

from pgaext.mul.core.instructions import (
    RegisterKind, RegisterRef, IndexBlock, BasicInstruction,
    Plain, PosTest, NegTest, FwdJump, BwdJump, HALT,
    InstructionSequence, SequenceError, SequenceValueError,
)

import logging
log = logging.getLogger(__name__)

# One primitive instruction, anchored at the current scan position.
INSTRUCTION_RE = re.compile(
    r'(?P<halt>!)'
    r'|#(?P<fwd>[0-9]+)'
    r'|\\(?P<bwd>[0-9]+)'
    r'|(?P<sign>[+-]?)'
    r'(?P<kind>in|out|aux):(?P<base>[0-9]+)'
    r'(?:\(aux:(?P<start>[0-9]+):(?P<width>[0-9]+)\))?'
    r'\.(?P<cmd>get|set:[01])'
)


def serialize(x, newlines=False):
    """
    Canonical text of an instruction sequence: instructions separated by
    ';', optionally one per line.
    """
    separator = ';\n' if newlines else ';'
    text = separator.join(str(item) for item in x)
    return text + '\n' if newlines else text


def parse(text):
    """
    Parse the text format into an InstructionSequence.

    '#' followed by a digit in instruction position is a forward jump.
    Anywhere else a '#' opens a comment running to the end of the line,
    and it must be preceded by whitespace (or start the text).
    """
    items = []
    pos = 0
    size = len(text)
    expecting = True
    while True:
        pos = _skip_blank(text, pos, expecting, len(items) + 1)
        if pos >= size:
            break
        if expecting:
            match = INSTRUCTION_RE.match(text, pos)
            if match is None:
                raise SequenceSyntaxError(
                    len(items) + 1,
                    "unexpected text '%s'" % _excerpt(text, pos)
                )
            items.append(_build(match, len(items) + 1))
            pos = match.end()
            expecting = False
        elif text[pos] == ';':
            pos += 1
            expecting = True
        else:
            raise SequenceSyntaxError(
                len(items),
                "expected ';' before '%s'" % _excerpt(text, pos)
            )
    if not items:
        raise SequenceSyntaxError(1, 'empty sequence')
    if expecting:
        raise SequenceSyntaxError(len(items) + 1,
                                  "missing instruction after ';'")
    log.debug('Parsed %d instructions' % len(items))
    return InstructionSequence(items)


def _skip_blank(text, pos, expecting, position):
    size = len(text)
    while pos < size:
        char = text[pos]
        if char.isspace():
            pos += 1
        elif char == '#':
            is_jump = (expecting and pos + 1 < size and
                       text[pos + 1] in string.digits)
            if is_jump:
                return pos
            if pos > 0 and not text[pos - 1].isspace():
                raise SequenceSyntaxError(
                    position,
                    "a comment '#' must be preceded by whitespace"
                )
            end = text.find('\n', pos)
            pos = size if end < 0 else end + 1
        else:
            return pos
    return pos


def _build(match, position):
    if match.group('halt'):
        return HALT
    if match.group('fwd') is not None:
        return FwdJump(int(match.group('fwd')))
    if match.group('bwd') is not None:
        return BwdJump(int(match.group('bwd')))
    try:
        index = None
        if match.group('start') is not None:
            index = IndexBlock(int(match.group('start')),
                               int(match.group('width')))
        ref = RegisterRef(RegisterKind.from_token(match.group('kind')),
                          int(match.group('base')), index)
    except SequenceValueError as e:
        raise SequenceSyntaxError(position, str(e))
    cmd = match.group('cmd')
    basic = BasicInstruction(ref, None if cmd == 'get' else int(cmd[-1]))
    sign = match.group('sign')
    if sign == '+':
        return PosTest(basic)
    if sign == '-':
        return NegTest(basic)
    return Plain(basic)


def _excerpt(text, pos):
    return text[pos:pos + 20].split('\n')[0]


def load_sequence(path_or_url):
    """ Read and parse a sequence from a local file or an http(s) URL """
    if path_or_url.startswith(('http:', 'https:')):
        log.debug('Fetch sequence from %s' % path_or_url)
        try:
            r = requests.get(path_or_url)
            r.raise_for_status()
        except requests.exceptions.RequestException as e:
            raise ContentFetchError(
                'Error while getting URL %s: %r'
                % (path_or_url, e)
            )
        r.encoding = 'utf-8'
        text = r.text
    else:
        with io.open(path_or_url, 'r', encoding='utf-8') as seq_file:
            text = seq_file.read()
    try:
        return parse(text)
    except SequenceSyntaxError as e:
        raise SequenceSyntaxError(
            e.position, '%s (in %s)' % (e.message, path_or_url)
        )


def write_sequence(x, path):
    with io.open(path, 'w', encoding='utf-8') as seq_file:
        seq_file.write(serialize(x, newlines=True))


class SequenceSyntaxError(SequenceError):
    def __init__(self, position, message):
        super(SequenceSyntaxError, self).__init__(
            'instruction %d: %s' % (position, message)
        )
        self.position = position
        self.message = message


class ContentFetchError(SequenceError):
    pass
