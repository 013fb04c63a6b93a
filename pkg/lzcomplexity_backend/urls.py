"""
URL configuration for lzcomplexity_backend project.

The complexity API lives under ``/api/``; the admin lists stored count tables.
"""
from django.contrib import admin
from django.urls import path, include

urlpatterns = [
    path('admin/', admin.site.urls),
    path('api/', include('api.urls')),
]
