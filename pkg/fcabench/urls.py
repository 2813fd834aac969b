"""
URL configuration for fcabench project.

Only the admin is served; it browses the experiment ledger.
"""
from django.contrib import admin
from django.urls import path

urlpatterns = [
    path('admin/', admin.site.urls),
]
