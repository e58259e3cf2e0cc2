from suites.management.base import SuiteCommand
from suites.serializers import COMPLEX


class Command(SuiteCommand):
    help = 'Меллин, взаимность и обращение в C^n'
    suite = COMPLEX
