from django.apps import AppConfig


class PadicConfig(AppConfig):
    name = 'padic'
