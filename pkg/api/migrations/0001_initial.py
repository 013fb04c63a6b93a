# Generated by Django 5.2.6 on 2026-10-19 10:40

import django.db.models.deletion
import django.utils.timezone
import uuid
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='StoredCountTable',
            fields=[
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ('alphabet_size', models.PositiveIntegerField()),
                ('length', models.PositiveIntegerField()),
                ('total', models.CharField(help_text='alphabet_size ** length as a decimal string', max_length=64)),
                ('created_at', models.DateTimeField(default=django.utils.timezone.now)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'db_table': 'count_tables',
                'ordering': ['alphabet_size', 'length'],
                'unique_together': {('alphabet_size', 'length')},
            },
        ),
        migrations.CreateModel(
            name='StoredCount',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('k', models.PositiveIntegerField()),
                ('count', models.BigIntegerField()),
                ('exact_count', models.BigIntegerField()),
                ('table', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='rows', to='api.storedcounttable')),
            ],
            options={
                'db_table': 'count_table_rows',
                'ordering': ['k'],
                'unique_together': {('table', 'k')},
            },
        ),
    ]
