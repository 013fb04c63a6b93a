from django.apps import AppConfig


class ApiConfig(AppConfig):
    """Complexity services, count-table storage and the REST API"""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'api'
    verbose_name = 'Lempel-Ziv complexity'
