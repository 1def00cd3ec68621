from django.apps import AppConfig


class AlgebraConfig(AppConfig):
    name = "apps.algebra"
    verbose_name = "Finite-dimensional algebras and Gelfand theory"
