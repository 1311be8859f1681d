from django.apps import AppConfig


class AlgebrasConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'algebras'
    verbose_name = 'Graded algebras and their verifiers'
