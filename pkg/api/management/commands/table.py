from api.management.base import ComplexityCommand
from api.services.distribution_service import DistributionService, extend_cdf
from api.services.exceptions import ComplexityError
from api.services.table_io_service import FORMAT_CSV, FORMAT_JSON, dump_tables


class Command(ComplexityCommand):
    help = 'Enumerate every sequence of length 1..nmax and write the complexity count tables'

    def add_arguments(self, parser):
        self.add_alphabet_arguments(parser)
        self.add_enumeration_arguments(parser)
        parser.add_argument('--format', choices=[FORMAT_CSV, FORMAT_JSON], default=FORMAT_CSV,
                            help='Table format (default: %(default)s)')
        parser.add_argument('--output', type=str, help='Write to this file instead of standard output')
        parser.add_argument('--extend', action='store_true',
                            help='JSON only: append the CDF at nmax + 1 computed from the last table')

    def handle(self, *args, **options):
        alphabet = self.alphabet_from_options(options)
        service = DistributionService(budget=options['budget'], workers=options['workers'])
        try:
            tables = service.enumerate_tables(alphabet.size, options['nmax'])
        except ComplexityError as e:
            raise self.failure(e)

        extended = None
        if options['extend']:
            if options['format'] != FORMAT_JSON:
                raise self.failure('--extend needs --format json')
            extended = extend_cdf(tables[-1], tables[-1].cdf_map())

        self.emit(dump_tables(tables, options['format'], extended_cdf=extended), options)
