from django.apps import AppConfig


class SkewCatConfig(AppConfig):
    name = 'skewcat'
    verbose_name = 'Skew-monoidal workbench'
