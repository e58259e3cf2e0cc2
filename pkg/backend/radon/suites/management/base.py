import json
try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from radon.exceptions import RadonError
from suites.reports import write_report
from suites.runners import run_suite
from suites.serializers import FORMATS, RunConfigSerializer

LIST_FLAGS = ('q', 'n', 'k', 'pq', 'shells')
FLAGS = LIST_FLAGS + (
    'precision', 'order', 'seed', 'rtol', 'output', 'format', 'cases',
    'points', 'max_cells', 'max_level', 'grid', 'jobs',
)


def load_config(path):
    """Options from a TOML or JSON file; the keys mirror the flags."""
    if not path:
        return {}
    path = Path(path)
    try:
        if path.suffix == '.toml':
            with path.open('rb') as file:
                data = tomllib.load(file)
        else:
            data = json.loads(path.read_text(encoding='utf-8'))
    except (OSError, ValueError) as exc:
        raise CommandError(
            f'Не удалось прочитать конфигурацию {path}: {exc}'
        ) from exc
    if not isinstance(data, dict):
        raise CommandError(f'Конфигурация {path} должна быть объектом')
    return {key.replace('-', '_'): value for key, value in data.items()}


def format_errors(errors):
    return '; '.join(
        f'{field}: {" ".join(str(message) for message in messages)}'
        for field, messages in errors.items()
    )


class SuiteCommand(BaseCommand):
    suite = None

    def add_arguments(self, parser):
        parser.add_argument('--q', help='Простые q: 2,3 или 2..5')
        parser.add_argument('--n', help='Размерности: 2,3 или 2..4')
        parser.add_argument('--k', help='Степени гармоник k: 0..4')
        parser.add_argument('--pq', help='Бистепени p и q: 0..2')
        parser.add_argument('--precision', type=int)
        parser.add_argument('--order', type=int,
                            help='Порядок квадратур')
        parser.add_argument('--seed', type=int)
        parser.add_argument('--rtol', type=float,
                            help='Допуск вместо допусков по умолчанию')
        parser.add_argument('-o', '--output', help='Файл отчета')
        parser.add_argument('--format', choices=FORMATS)
        parser.add_argument('--config', help='Файл TOML или JSON')
        parser.add_argument('--cases', type=int,
                            help='Случайных функций на набор параметров')
        parser.add_argument('--points', type=int,
                            help='Точек проверки на функцию')
        parser.add_argument('--max-cells', type=int,
                            help='Не больше ячеек в p-адической функции')
        parser.add_argument('--shells',
                            help='Слои носителя: --shells=-2..2')
        parser.add_argument('--max-level', type=int,
                            help='Наибольший относительный уровень ячеек')
        parser.add_argument('--grid', type=float,
                            help='Шаг сетки для опорной геометрии')
        parser.add_argument('--jobs', type=int,
                            help='Число процессов')

    def build_config(self, options):
        data = load_config(options.get('config'))
        for name in FLAGS:
            if options.get(name) is not None:
                data[name] = options[name]
        data['suite'] = self.suite
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(format_errors(serializer.errors))
        return serializer.save()

    def handle(self, *args, **options):
        cfg = self.build_config(options)
        try:
            report = run_suite(cfg)
        except RadonError as exc:
            raise CommandError(str(exc)) from exc
        content = write_report(report, cfg.format, cfg.output)
        if not cfg.output:
            self.stdout.write(content, ending='')
        failure = report.first_failure()
        if failure is not None:
            raise CommandError(
                f'Тождество не выполнено: {json.dumps(failure)}'
            )
        if cfg.output:
            self.stdout.write(self.style.SUCCESS(
                f'Набор {cfg.suite}: {len(report.rows)} проверок, '
                f'отчет {cfg.output}'
            ))
