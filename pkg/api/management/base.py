"""Shared plumbing for the complexity management commands."""
import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from api.services.complexity_service import Alphabet
from api.services.exceptions import ComplexityError, InvalidInputError
from api.services.input_service import FORMAT_SYMBOLS, FORMATS, InputSpec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IDENTITY_VIOLATION = 2
EXIT_CRITICAL_SET = 3


class ComplexityCommand(BaseCommand):
    """
    Base for the complexity commands.

    Exit codes: 0 pass, 1 usage/decode/budget error, 2 identity violation,
    3 sequence in the critical set.
    """

    def run_from_argv(self, argv):
        # argparse would exit with 2, which is reserved for identity violations
        parser = self.create_parser(argv[0], argv[1])
        parser.called_from_command_line = False
        try:
            parser.parse_args(argv[2:])
        except CommandError as e:
            self.stderr.write(str(e))
            sys.exit(EXIT_USAGE)
        super().run_from_argv(argv)

    def add_input_arguments(self, parser):
        parser.add_argument('sequence', nargs='?', help='Inline sequence; reads --file or standard input when omitted')
        parser.add_argument('--file', type=str, help='Read the sequence from this file')
        parser.add_argument('--format', choices=FORMATS, default=FORMAT_SYMBOLS,
                            help='symbols: one token per byte; bits: bytes unpacked MSB first; bytes: byte mod alphabet size')
        self.add_alphabet_arguments(parser)

    def add_alphabet_arguments(self, parser, default_tokens='01'):
        parser.add_argument('--alphabet', type=str, default=default_tokens,
                            help='Alphabet tokens in symbol order, one character each (default: %(default)s)')
        parser.add_argument('--alphabet-size', type=int,
                            help='Use the default alphabet 0-9a-zA-Z of this size instead of --alphabet')

    def add_output_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='Emit JSON')
        parser.add_argument('--output', type=str, help='Write to this file instead of standard output')

    def add_enumeration_arguments(self, parser):
        parser.add_argument('--nmax', type=int, required=True, help='Largest sequence length to enumerate')
        parser.add_argument('--budget', type=int, help='Maximum number of sequences per length (default: LZ_ENUMERATION_BUDGET)')
        parser.add_argument('--workers', type=int, help='Worker processes per length (default: LZ_ENUMERATION_WORKERS)')

    def alphabet_from_options(self, options):
        try:
            if options.get('alphabet_size') is not None:
                return Alphabet.of_size(options['alphabet_size'])
            return Alphabet.from_tokens(options['alphabet'])
        except InvalidInputError as e:
            raise self.failure(e)

    def input_spec(self, options):
        try:
            return InputSpec(
                inline=options.get('sequence'),
                path=options.get('file'),
                format=options['format'],
                alphabet=self.alphabet_from_options(options),
            )
        except InvalidInputError as e:
            raise self.failure(e)

    def load_sequence(self, options):
        spec = self.input_spec(options)
        try:
            return spec.load()
        except ComplexityError as e:
            raise self.failure(e)

    def emit(self, text, options):
        """Write ``text`` verbatim to --output or standard output."""
        path = options.get('output')
        if path:
            Path(path).write_bytes(text.encode('utf-8'))
            self.stdout.write(self.style.SUCCESS(f"Wrote {path}"))
        else:
            self.stdout.write(text, ending='')

    def failure(self, error, returncode=EXIT_USAGE):
        return CommandError(str(error), returncode=returncode)
