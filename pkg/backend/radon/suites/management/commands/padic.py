from suites.management.base import SuiteCommand
from suites.serializers import PADIC


class Command(SuiteCommand):
    help = 'Точные тождества p-адического преобразования Радона'
    suite = PADIC
