from django.contrib import admin
from .models import StoredCountTable, StoredCount


class StoredCountInline(admin.TabularInline):
    """Per-k rows shown inside a stored table"""
    model = StoredCount
    extra = 0
    readonly_fields = ['k', 'count', 'exact_count']


@admin.register(StoredCountTable)
class StoredCountTableAdmin(admin.ModelAdmin):
    """Admin configuration for StoredCountTable model"""
    list_display = ['alphabet_size', 'length', 'total', 'updated_at']
    list_filter = ['alphabet_size']
    readonly_fields = ['id', 'total', 'created_at', 'updated_at']
    inlines = [StoredCountInline]

    fieldsets = (
        (None, {'fields': ('id', 'alphabet_size', 'length', 'total')}),
        ('Timestamps', {'fields': ('created_at', 'updated_at')}),
    )
