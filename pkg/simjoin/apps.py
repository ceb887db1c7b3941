from django.apps import AppConfig


class SimjoinConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "simjoin"
    verbose_name = "Password similarity graph"
