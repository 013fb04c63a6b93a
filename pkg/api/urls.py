from django.urls import path
from . import views

urlpatterns = [
    # Sequence endpoints
    path('complexity/', views.complexity_view, name='complexity'),
    path('test/', views.randomness_test_view, name='randomness-test'),

    # Distribution endpoints
    path('verify/', views.verify_view, name='verify'),
    path('tables/', views.StoredCountTableListView.as_view(), name='table-list'),
    path('tables/<int:alphabet_size>/<int:length>/', views.StoredCountTableDetailView.as_view(), name='table-detail'),
]
