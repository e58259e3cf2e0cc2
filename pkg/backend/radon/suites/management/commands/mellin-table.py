from suites.management.base import SuiteCommand
from suites.serializers import MELLIN_TABLE


class Command(SuiteCommand):
    help = 'Таблица преобразований Меллина ядер alpha'
    suite = MELLIN_TABLE
