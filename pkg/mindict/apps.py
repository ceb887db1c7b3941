from django.apps import AppConfig


class MindictConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "mindict"
    verbose_name = "Minimal dictionaries"
