from django.apps import AppConfig


class AttackConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "attack"
    verbose_name = "Dictionary attack model"
