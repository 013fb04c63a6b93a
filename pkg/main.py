#!/usr/bin/env python
"""
Command-line entry point: ``lzc complexity | table | verify | test``.

Each subcommand runs the matching Django management command; ``test`` maps to
``randomness_test`` so that ``manage.py test`` remains the test runner.
"""
import os
import sys

SUBCOMMANDS = {
    'complexity': 'complexity',
    'table': 'table',
    'verify': 'verify',
    'test': 'randomness_test',
}

USAGE = (
    "usage: lzc {complexity,table,verify,test} [options]\n"
    "Run 'lzc <subcommand> --help' for the options of one subcommand.\n"
    "Exit codes: 0 pass, 1 usage or input error, 2 identity violation, 3 in critical set.\n"
)


def main(argv=None):
    argv = list(sys.argv if argv is None else argv)
    if len(argv) < 2:
        sys.stderr.write(USAGE)
        return 1
    if argv[1] in ('-h', '--help'):
        sys.stdout.write(USAGE)
        return 0
    if argv[1] not in SUBCOMMANDS:
        sys.stderr.write(f"Unknown subcommand {argv[1]!r}\n{USAGE}")
        return 1

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'lzcomplexity_backend.settings')
    from django.core.management import execute_from_command_line

    execute_from_command_line([argv[0], SUBCOMMANDS[argv[1]], *argv[2:]])
    return 0


if __name__ == "__main__":
    sys.exit(main())
