from django.apps import AppConfig


class ArchimedeanConfig(AppConfig):
    name = 'archimedean'
