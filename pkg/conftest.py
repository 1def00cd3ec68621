"""Pytest wiring: point Django at the project settings before test collection."""
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
django.setup()
