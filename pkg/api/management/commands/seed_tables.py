from django.core.management.base import BaseCommand, CommandError
from api.models import StoredCountTable
from api.services.distribution_service import DistributionService
from api.services.exceptions import ComplexityError
import logging

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Enumerate count tables and store them for significance lookups'

    def add_arguments(self, parser):
        parser.add_argument('--alphabet-size', type=int, default=2, help='Alphabet size (default: %(default)s)')
        parser.add_argument('--nmax', type=int, default=12, help='Largest length to enumerate (default: %(default)s)')
        parser.add_argument('--budget', type=int, help='Maximum number of sequences per length')
        parser.add_argument('--workers', type=int, help='Worker processes per length')

    def handle(self, *args, **options):
        alphabet_size = options['alphabet_size']
        self.stdout.write(f'🌱 Seeding count tables for alphabet size {alphabet_size}, n = 1..{options["nmax"]}...')

        service = DistributionService(budget=options['budget'], workers=options['workers'])
        try:
            tables = service.enumerate_tables(alphabet_size, options['nmax'])
        except ComplexityError as e:
            raise CommandError(str(e))

        for table in tables:
            StoredCountTable.store(table)
            self.stdout.write(f'✅ Stored: a={alphabet_size}, n={table.length} ({table.total} sequences)')
        logger.info(f"Seeded {len(tables)} tables for alphabet size {alphabet_size}")

        self.stdout.write(
            self.style.SUCCESS(f'\n🎉 Seeding completed! {len(tables)} tables stored.')
        )
