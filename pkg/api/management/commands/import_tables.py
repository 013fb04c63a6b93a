from django.core.management.base import BaseCommand, CommandError
from api.models import StoredCountTable
from api.services.exceptions import ComplexityError
from api.services.table_io_service import FORMAT_CSV, FORMAT_JSON, load_tables
import os
from pathlib import Path


class Command(BaseCommand):
    help = 'Import count tables from a CSV or JSON file written by the table command'

    def add_arguments(self, parser):
        parser.add_argument(
            '--file',
            type=str,
            required=True,
            help='Path to the table file'
        )
        parser.add_argument(
            '--format',
            choices=[FORMAT_CSV, FORMAT_JSON],
            help='Table format (default: from the file extension)'
        )
        parser.add_argument(
            '--clear',
            action='store_true',
            help='Delete all stored tables before importing'
        )

    def handle(self, *args, **options):
        file_path = Path(options['file'])

        if not os.path.exists(file_path):
            raise CommandError(f'File not found: {file_path}', returncode=1)

        try:
            tables = load_tables(file_path, options['format'])
        except ComplexityError as e:
            raise CommandError(f'Error reading table file: {e}', returncode=1)

        if options['clear']:
            count = StoredCountTable.objects.count()
            StoredCountTable.objects.all().delete()
            self.stdout.write(
                self.style.WARNING(f'Cleared {count} existing tables')
            )

        imported_count = 0
        for table in tables:
            problems = table.check_invariants()
            if problems:
                self.stdout.write(
                    self.style.ERROR(
                        f'❌ Skipped a={table.alphabet_size}, n={table.length}: {"; ".join(problems)}'
                    )
                )
                continue
            StoredCountTable.store(table)
            self.stdout.write(f'✅ Imported: a={table.alphabet_size}, n={table.length}')
            imported_count += 1

        self.stdout.write(
            self.style.SUCCESS(
                f'\n🎉 Import completed!\n'
                f'   Imported: {imported_count} tables\n'
                f'   Total stored: {StoredCountTable.objects.count()} tables'
            )
        )
