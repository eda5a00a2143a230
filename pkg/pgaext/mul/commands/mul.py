import argparse
import json
import sys
import time
from pprint import pprint

from pgaext.mul.config import get_config, indexed_flag
from pgaext.mul.core import (
    BitWord, feature_level, required_registers, serialize, load_sequence,
    write_sequence, FeatureLevel, SequenceError,
)
from pgaext.mul.execution import (
    run, decide_halts, io_equivalent, verify_function, Sampled, EXHAUSTIVE,
    Equivalent, StateBoundError,
)
from pgaext.mul.gadgets import (
    WordRef, gen_tstnz, gen_dec, gen_shl, gen_shr, gen_add, gen_set,
    gen_mov, gen_zpad,
)
from pgaext.mul.gadgets.harness import harness, GADGET_KINDS
from pgaext.mul.indexed import gen_inc, gen_tstne
from pgaext.mul.multiplication import (
    LmulVariant, generate, expected_length, measured_length, auto_budget,
    ProductOracle,
)

import logging
log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INACTION = 2
EXIT_BUDGET = 3
EXIT_WITNESS = 4
EXIT_BOUND = 5
EXIT_VERIFY_FAILED = 6

OUTCOME_EXIT = {
    'terminated': EXIT_OK,
    'inaction': EXIT_INACTION,
    'budget-exceeded': EXIT_BUDGET,
}


class MulCommand(object):
    '''Command to generate, run and check PGA multiplication sequences

    Usage:

        # Show this help
        pgaext-mul help

        # Show the effective configuration
        pgaext-mul config

        # Generate a gadget or a multiplication sequence
        pgaext-mul gen gadget --kind add --n 4 --src1 in:1 --src2 in:5 \\
            --dst out:1 [--out FILE]
        pgaext-mul gen lmul --variant 3 --n 4 [--out FILE]

        # Run a sequence on LSB-first input bits
        pgaext-mul run FILE --in 1111 --m 4 [--budget B] [--no-indexed]

        # Compare a generator with its arithmetic oracle
        pgaext-mul verify lmul --variant 2 --n 4 --mode exhaustive
        pgaext-mul verify gadget --kind dec --n 6 --mode sample:1000 \\
            --seed 7 --jobs 4

        # Sequence lengths against the closed forms
        pgaext-mul len lmul --n-range 1..8 [--variants 1,2,3,4] \\
            [--csv] [--check]

        # Input/output equivalence of two sequence files
        pgaext-mul equiv A B --n 6 --m 6 --mode exhaustive

        # Decide termination within the finite state bound
        pgaext-mul halts FILE --in 01

    Every command accepts --config PATH (or $PGAEXT_MUL_CONFIG) and -v.
    Exit codes: 0 success, 1 usage or input error, 2 inaction,
    3 budget exceeded, 4 not equivalent, 5 state bound refused,
    6 verification failed.
    '''
    summary = __doc__.split('\n')[0]
    usage = __doc__

    def __init__(self, out=None):
        self.out = out or sys.stdout
        self.config = None

    def command(self, argv):
        options = {
            'gen': self.genCmd,
            'run': self.runCmd,
            'verify': self.verifyCmd,
            'len': self.lenCmd,
            'equiv': self.equivCmd,
            'halts': self.haltsCmd,
            'config': self.configCmd,
            'help': self.helpCmd,
        }
        try:
            args = build_parser().parse_args(argv)
        except UsageError as e:
            self.helpCmd()
            sys.stderr.write('error: %s\n' % e)
            return EXIT_USAGE
        try:
            self.config = get_config(args.config)
            setup_logging(self.config['log_level'], args.verbose)
            return options[args.command](args) or EXIT_OK
        except StateBoundError as e:
            self.write('refused bound=%s limit=%d' % (e.bound, e.limit))
            return EXIT_BOUND
        except (SequenceError, UsageError, IOError, OSError) as e:
            sys.stderr.write('error: %s\n' % e)
            return EXIT_USAGE

    def write(self, line):
        self.out.write(line + '\n')

    def helpCmd(self, args=None):
        self.write(self.__doc__)

    def configCmd(self, args):
        pprint(json.loads(json.dumps(self.config)), stream=self.out)

    def genCmd(self, args):
        if args.target == 'lmul':
            _check_positive('--n', args.n)
            sequence = generate(LmulVariant.parse(args.variant), args.n)
        else:
            sequence = build_gadget(args)
        level = feature_level(sequence).label
        if args.out:
            write_sequence(sequence, args.out)
            self.write('wrote %s length=%d feature_level=%s'
                       % (args.out, len(sequence), level))
        else:
            self.out.write(serialize(sequence, newlines=True))
            self.write('# length=%d feature_level=%s'
                       % (len(sequence), level))

    def runCmd(self, args):
        sequence = load_sequence(args.file)
        inputs = _bits(args.inputs)
        max_in, max_out, _ = required_registers(sequence)
        level = feature_level(sequence)
        direct = level is not FeatureLevel.WITH_INDEXED_ADDRESSING
        if direct and len(inputs) != max_in and not args.any_width:
            raise UsageError(
                'The sequence reads %d input bits, got %d (use --any-width)'
                % (max_in, len(inputs))
            )
        m = max_out if args.m is None else args.m
        outcome = run(sequence, inputs, self._budget(args),
                      indexed=self._indexed(args))
        self.write('outcome=%s steps=%d out=%s'
                   % (outcome.kind, outcome.steps,
                      outcome.outputs(m).to_text() or '-'))
        return OUTCOME_EXIT[outcome.kind]

    def verifyCmd(self, args):
        if args.target == 'lmul':
            _check_positive('--n', args.n)
            variant = LmulVariant.parse(args.variant)
            sequence = generate(variant, args.n)
            n_in, m_out = 2 * args.n, 2 * args.n
            oracle = ProductOracle(args.n)
            budget = auto_budget(variant, args.n, len(sequence))
        else:
            if args.kind not in ('set', 'tstne'):
                _check_positive('--n', args.n)
            rig = harness(args.kind, args.n, shift=args.shift,
                          word=args.word, in_place=args.in_place)
            sequence, n_in, m_out = rig.sequence, rig.n_in, rig.m_out
            oracle, budget = rig.oracle, rig.budget
        started = time.time()
        report = verify_function(sequence, oracle, n_in, m_out, budget,
                                 mode=self._mode(args),
                                 jobs=self._jobs(args))
        sys.stderr.write('time=%.2fs\n' % (time.time() - started))
        if report.passed:
            self.write('result=pass cases=%d' % report.cases)
            return EXIT_OK
        witness = report.counterexample
        self.write('result=fail cases=%d input=%s got=%s expected=%s'
                   % (report.cases, witness.input.to_text() or '-',
                      _show(witness.out_x), _show(witness.out_y)))
        return EXIT_VERIFY_FAILED

    def lenCmd(self, args):
        first, last = _range(args.n_range)
        variants = [LmulVariant.parse(v) for v in args.variants.split(',')]
        checks = ordering_columns(variants)
        header = (['n'] + ['len%d' % v for v in variants] +
                  [name for name, _, _ in checks])
        separator = ',' if args.csv else ' '
        self.write(separator.join(header))
        failures = []
        for n in range(first, last + 1):
            row, failed = length_row(n, variants, checks)
            self.write(separator.join(str(cell) for cell in row))
            failures.extend(failed)
        if args.check:
            for failure in failures:
                sys.stderr.write('check failed: %s\n' % failure)
            return EXIT_VERIFY_FAILED if failures else EXIT_OK

    def equivCmd(self, args):
        x, y = load_sequence(args.a), load_sequence(args.b)
        result = io_equivalent(x, y, args.n, args.m, self._budget(args),
                               mode=self._mode(args), jobs=self._jobs(args),
                               indexed=self._indexed(args))
        if isinstance(result, Equivalent):
            self.write('Equivalent')
            return EXIT_OK
        self.write('Witness input=%s out_a=%s out_b=%s'
                   % (result.input.to_text() or '-', _show(result.out_x),
                      _show(result.out_y)))
        return EXIT_WITNESS

    def haltsCmd(self, args):
        sequence = load_sequence(args.file)
        limit = args.limit or self.config['state_bound_limit']
        decision = decide_halts(sequence, _bits(args.inputs), limit=limit,
                                indexed=self._indexed(args))
        self.write('%s bound=%s' % (decision, decision.bound))

    def _budget(self, args):
        budget = args.budget or self.config['budget']
        _check_positive('--budget', budget)
        return budget

    def _jobs(self, args):
        jobs = args.jobs or self.config['jobs']
        _check_positive('--jobs', jobs)
        return jobs

    def _indexed(self, args):
        if args.indexed is not None:
            return args.indexed
        return indexed_flag(self.config)

    def _mode(self, args):
        seed = self.config['seed'] if args.seed is None else args.seed
        if not 0 <= seed < 2 ** 64:
            raise UsageError('--seed must be an unsigned 64-bit integer')
        return parse_mode(args.mode, seed, self.config['sample_size'])


def parse_mode(value, seed, sample_size):
    """ 'exhaustive', 'sample' (config sample_size) or 'sample:K' """
    name, colon, count = (value or EXHAUSTIVE).partition(':')
    if name == EXHAUSTIVE and not colon:
        return EXHAUSTIVE
    if name != 'sample':
        raise UsageError("--mode is 'exhaustive' or 'sample[:K]', got '%s'"
                         % value)
    try:
        count = int(count) if colon else sample_size
    except ValueError:
        raise UsageError('Sample size must be an integer, got %s' % count)
    _check_positive('sample size', count)
    return Sampled(count, seed)


def ordering_columns(variants):
    """
    (name, measured comparison, expected value per n); None where the
    ordering is not required either way
    """
    columns = []
    if {1, 2} <= set(variants):
        columns.append(('len2_gt_len1', lambda ls: ls[2] > ls[1],
                        lambda n: True))
    if {1, 3} <= set(variants):
        columns.append(('len3_lt_len1', lambda ls: ls[3] < ls[1],
                        lambda n: n > 1))
    if {3, 4} <= set(variants):
        columns.append(('len4_lt_len3', lambda ls: ls[4] < ls[3],
                        lambda n: True if n > 5 else None))
    return columns


def length_row(n, variants, checks):
    """ Measured lengths at n, the ordering columns and what failed """
    lengths = dict((v, measured_length(v, n)) for v in variants)
    row = [n] + [lengths[v] for v in variants]
    failures = ['n=%d len%d=%d expected %d'
                % (n, v, lengths[v], expected_length(v, n))
                for v in variants if lengths[v] != expected_length(v, n)]
    for name, holds, expected in checks:
        value = holds(lengths)
        row.append('true' if value else 'false')
        want = expected(n)
        if want is not None and value != want:
            failures.append('n=%d %s=%s' % (n, name, row[-1]))
    return row, failures


def build_gadget(args):
    kind = args.kind
    if kind in ('set', 'tstne'):
        if args.word is None:
            raise UsageError('--word is required for %s' % kind)
        word = _bits(args.word)
        if kind == 'set':
            return gen_set(word, WordRef.parse(args.dst, len(word)))
        return gen_tstne(len(word), WordRef.parse(args.src1, len(word)),
                         word)
    n = args.n
    _check_positive('--n', n)
    dst = WordRef.parse(args.dst, n)
    src = WordRef.parse(args.src1, n)
    shift = 1 if args.shift is None else args.shift
    if kind == 'zpad':
        return gen_zpad(n, shift, dst)
    if kind in ('shl', 'shr'):
        return (gen_shl if kind == 'shl' else gen_shr)(n, shift, src, dst)
    if kind == 'add':
        src2 = WordRef.parse(args.src2 or 'in:%d' % (n + 1), n)
        return gen_add(n, src, src2, dst)
    if kind == 'tstnz':
        return gen_tstnz(n, src)
    return {'dec': gen_dec, 'inc': gen_inc, 'mov': gen_mov}[kind](n, src, dst)


def _bits(text):
    try:
        return BitWord.from_text(text or '')
    except SequenceError as e:
        raise UsageError(str(e))


def _show(observed):
    if isinstance(observed, BitWord):
        return observed.to_text() or '-'
    return observed


def _range(text):
    try:
        first, _, last = text.partition('..')
        first, last = int(first), int(last or first)
    except ValueError:
        raise UsageError("--n-range is A..B, got '%s'" % text)
    if not 1 <= first <= last:
        raise UsageError('--n-range %s is empty or not positive' % text)
    return first, last


def _check_positive(name, value):
    if value is None or value < 1:
        raise UsageError('%s must be at least 1, got %s' % (name, value))


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_mode(parser):
    parser.add_argument('--mode', default=EXHAUSTIVE,
                        help="'exhaustive', 'sample' or 'sample:K'")
    parser.add_argument('--seed', type=int)
    parser.add_argument('--jobs', type=int)


def _add_indexed(parser):
    parser.add_argument('--indexed', dest='indexed', action='store_true',
                        default=None)
    parser.add_argument('--no-indexed', dest='indexed',
                        action='store_false')


def _add_gadget(parser):
    parser.add_argument('--kind', required=True, choices=GADGET_KINDS)
    parser.add_argument('--n', type=int, default=None)
    parser.add_argument('--shift', '--m', dest='shift', type=int)
    parser.add_argument('--word')


def build_parser():
    parser = ArgumentParser(prog='pgaext-mul', add_help=False)
    parser.add_argument('--config')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    commands = parser.add_subparsers(dest='command', required=True,
                                     parser_class=ArgumentParser)

    gen = commands.add_parser('gen')
    gen_targets = gen.add_subparsers(dest='target', required=True,
                                     parser_class=ArgumentParser)
    gen_lmul = gen_targets.add_parser('lmul')
    gen_lmul.add_argument('--variant', required=True)
    gen_lmul.add_argument('--n', type=int, required=True)
    gen_lmul.add_argument('--out')
    gen_gadget = gen_targets.add_parser('gadget')
    _add_gadget(gen_gadget)
    gen_gadget.add_argument('--src1', '--src', dest='src1', default='in:1')
    gen_gadget.add_argument('--src2')
    gen_gadget.add_argument('--dst', default='aux:2')
    gen_gadget.add_argument('--out')

    run_cmd = commands.add_parser('run')
    run_cmd.add_argument('file')
    run_cmd.add_argument('--in', dest='inputs', default='')
    run_cmd.add_argument('--m', type=int)
    run_cmd.add_argument('--budget', type=int)
    run_cmd.add_argument('--any-width', action='store_true')
    _add_indexed(run_cmd)

    verify = commands.add_parser('verify')
    verify_targets = verify.add_subparsers(dest='target', required=True,
                                           parser_class=ArgumentParser)
    verify_lmul = verify_targets.add_parser('lmul')
    verify_lmul.add_argument('--variant', required=True)
    verify_lmul.add_argument('--n', type=int, required=True)
    _add_mode(verify_lmul)
    verify_gadget = verify_targets.add_parser('gadget')
    _add_gadget(verify_gadget)
    verify_gadget.add_argument('--in-place', action='store_true')
    _add_mode(verify_gadget)

    length = commands.add_parser('len')
    length.add_argument('target', nargs='?', choices=['lmul'],
                        default='lmul')
    length.add_argument('--n-range', required=True)
    length.add_argument('--variants', default='1,2,3')
    length.add_argument('--csv', action='store_true')
    length.add_argument('--check', action='store_true')

    equiv = commands.add_parser('equiv')
    equiv.add_argument('a')
    equiv.add_argument('b')
    equiv.add_argument('--n', type=int, required=True)
    equiv.add_argument('--m', type=int, required=True)
    equiv.add_argument('--budget', type=int)
    _add_mode(equiv)
    _add_indexed(equiv)

    halts = commands.add_parser('halts')
    halts.add_argument('file')
    halts.add_argument('--in', dest='inputs', default='')
    halts.add_argument('--limit', type=int)
    _add_indexed(halts)

    commands.add_parser('config')
    commands.add_parser('help')
    return parser


def setup_logging(level, verbose=0):
    if verbose:
        level = 'DEBUG' if verbose > 1 else 'INFO'
    logging.basicConfig(
        stream=sys.stderr, level=getattr(logging, level),
        format='%(levelname)s %(name)s: %(message)s'
    )
    logging.getLogger().setLevel(getattr(logging, level))


def main(argv=None):
    sys.exit(MulCommand().command(sys.argv[1:] if argv is None else argv))


class UsageError(Exception):
    pass

