from django.db import models, transaction
from django.utils import timezone
import uuid

from .services.distribution_service import CountTable
from .services.exceptions import TableUnavailableError


class StoredCountTable(models.Model):
    """An enumerated CountTable for one (alphabet size, length)"""
    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    alphabet_size = models.PositiveIntegerField()
    length = models.PositiveIntegerField()
    total = models.CharField(max_length=64, help_text="alphabet_size ** length as a decimal string")
    created_at = models.DateTimeField(default=timezone.now)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        db_table = 'count_tables'
        unique_together = ['alphabet_size', 'length']
        ordering = ['alphabet_size', 'length']

    def __str__(self):
        return f"a={self.alphabet_size}, n={self.length}"

    def to_count_table(self):
        rows = list(self.rows.all())
        return CountTable(
            alphabet_size=self.alphabet_size,
            length=self.length,
            counts={row.k: row.count for row in rows},
            exact_counts={row.k: row.exact_count for row in rows},
        )

    @classmethod
    def store(cls, table):
        """Insert or replace the rows for ``table``'s (alphabet size, length)."""
        with transaction.atomic():
            stored, _ = cls.objects.update_or_create(
                alphabet_size=table.alphabet_size,
                length=table.length,
                defaults={'total': str(table.total)},
            )
            stored.rows.all().delete()
            StoredCount.objects.bulk_create([
                StoredCount(table=stored, k=k, count=table.count(k), exact_count=table.exact_count(k))
                for k in table.support
            ])
        return stored

    @classmethod
    def load(cls, alphabet_size, length):
        try:
            stored = cls.objects.get(alphabet_size=alphabet_size, length=length)
        except cls.DoesNotExist:
            raise TableUnavailableError(
                f"No stored table for alphabet size {alphabet_size}, length {length}"
            ) from None
        return stored.to_count_table()


class StoredCount(models.Model):
    """N_n(k) and N_n(k_e) for one k of a stored table"""
    table = models.ForeignKey(StoredCountTable, on_delete=models.CASCADE, related_name='rows')
    k = models.PositiveIntegerField()
    count = models.BigIntegerField()
    exact_count = models.BigIntegerField()

    class Meta:
        db_table = 'count_table_rows'
        unique_together = ['table', 'k']
        ordering = ['k']

    def __str__(self):
        return f"{self.table} k={self.k}: {self.count} ({self.exact_count} exact)"
