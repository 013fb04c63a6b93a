"""
WSGI entry point for the complexity API.

Serve with any WSGI server, e.g. ``gunicorn lzcomplexity_backend.wsgi``.
``runserver`` uses it through ``WSGI_APPLICATION``.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'lzcomplexity_backend.settings')

application = get_wsgi_application()
