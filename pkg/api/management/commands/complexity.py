import json

from api.management.base import ComplexityCommand
from api.services.complexity_service import describe
from api.services.exceptions import ComplexityError


class Command(ComplexityCommand):
    help = 'Parse a sequence into its exhaustive history and report its Lempel-Ziv complexity'

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        sequence = self.load_sequence(options)
        try:
            summary = describe(sequence)
        except ComplexityError as e:
            raise self.failure(e)

        if options['json']:
            self.emit(json.dumps(summary, indent=2) + '\n', options)
            return

        lines = [
            f"n: {summary['n']}",
            f"complexity: {summary['complexity']}",
            f"exact: {'true' if summary['exact'] else 'false'}",
        ]
        if 'normalized_complexity' in summary:
            lines.append(f"normalized: {summary['normalized_complexity']:.6f}")
        if options['verbosity'] >= 2:
            lines.append(f"components: {'|'.join(summary['components'])}")
            lines.append(f"boundaries: {' '.join(str(h) for h in summary['boundaries'])}")
        self.emit('\n'.join(lines) + '\n', options)
