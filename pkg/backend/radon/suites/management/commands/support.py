from suites.management.base import SuiteCommand
from suites.serializers import SUPPORT


class Command(SuiteCommand):
    help = 'Поляры и нулевая компонента sMf на плоскости'
    suite = SUPPORT
