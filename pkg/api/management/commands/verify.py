import json

from api.management.base import ComplexityCommand, EXIT_IDENTITY_VIOLATION
from api.services.distribution_service import DistributionService
from api.services.exceptions import ComplexityError
from api.services.table_io_service import report_to_dict


class Command(ComplexityCommand):
    help = 'Enumerate tables up to nmax and check the complexity-distribution identities exactly'

    def add_arguments(self, parser):
        self.add_alphabet_arguments(parser)
        self.add_enumeration_arguments(parser)
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        alphabet = self.alphabet_from_options(options)
        service = DistributionService(budget=options['budget'], workers=options['workers'])
        try:
            report = service.build_report(alphabet.size, options['nmax'])
        except ComplexityError as e:
            raise self.failure(e)

        if options['json']:
            document = report_to_dict(report.tables, report.identity_results)
            document['passed'] = report.passed
            self.emit(json.dumps(document, indent=2) + '\n', options)
        else:
            lines = [f"alphabet size {report.alphabet_size}, n = 1..{report.n_max}"]
            for result in report.identity_results:
                if not result.required:
                    observed = 'holds' if result.passed else f"does not hold, first witness {result.detail}"
                    lines.append(f"NOTE {result.name}: {observed} ({result.witnesses} of {result.checked}; reported only)")
                elif result.passed:
                    lines.append(f"PASS {result.name}: {result.checked} case(s)")
                else:
                    lines.append(f"FAIL {result.name}: first counterexample {result.detail}")
            self.emit('\n'.join(lines) + '\n', options)

        if not report.passed:
            names = ', '.join(result.name for result in report.failures)
            raise self.failure(f"Required identities failed: {names}", returncode=EXIT_IDENTITY_VIOLATION)
