from django.apps import AppConfig


class FunctionsConfig(AppConfig):
    name = "apps.functions"
    verbose_name = "Algebra-valued functions on finite spaces"
