from suites.management.base import SuiteCommand
from suites.serializers import REAL


class Command(SuiteCommand):
    help = 'Меллин, взаимность и обращение в R^n'
    suite = REAL
