import re
from dataclasses import asdict, dataclass

from django.conf import settings
from rest_framework import serializers

from padic.exceptions import PAdicError
from padic.scalars import check_prime

PADIC = 'padic'
REAL = 'real'
COMPLEX = 'complex'
SUPPORT = 'support'
MELLIN_TABLE = 'mellin-table'

SUITES = (PADIC, REAL, COMPLEX, SUPPORT, MELLIN_TABLE)
FORMATS = ('csv', 'json')

MAX_DIMENSION = 6
MAX_DEGREE = 12
MAX_SHELL = 8

CASES = 2
POINTS = 3
PADIC_CASES = 25
PADIC_POINTS = 20

RANGE = re.compile(r'^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$')


@dataclass(frozen=True)
class RunConfig:
    suite: str
    q: tuple
    n: tuple
    k: tuple
    pq: tuple
    precision: int
    order: int
    seed: int
    rtol: float
    output: str
    format: str
    cases: int
    points: int
    max_cells: int
    shells: tuple
    max_level: int
    grid: float
    jobs: int

    def as_dict(self):
        data = asdict(self)
        for key in ('q', 'n', 'k', 'pq', 'shells'):
            data[key] = list(data[key])
        return data


class IntegerListField(serializers.Field):
    """Integers given as a list, a number, "2,3" or a range "0..4"."""

    default_error_messages = {
        'invalid': 'Ожидается список целых чисел, например 2,3 или 0..4',
        'empty': 'Список не должен быть пустым',
    }

    def to_internal_value(self, data):
        if isinstance(data, bool):
            self.fail('invalid')
        if isinstance(data, int):
            return (data,)
        if isinstance(data, str):
            data = [part for part in data.split(',') if part.strip()]
        if not isinstance(data, (list, tuple)):
            self.fail('invalid')
        values = set()
        for item in data:
            values.update(self._parse_item(item))
        if not values:
            self.fail('empty')
        return tuple(sorted(values))

    def _parse_item(self, item):
        if isinstance(item, int) and not isinstance(item, bool):
            return [item]
        if not isinstance(item, str):
            self.fail('invalid')
        match = RANGE.match(item)
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            return range(low, high + 1)
        try:
            return [int(item)]
        except ValueError:
            self.fail('invalid')

    def to_representation(self, value):
        return list(value)


class RunConfigSerializer(serializers.Serializer):
    suite = serializers.ChoiceField(choices=SUITES)
    q = IntegerListField(required=False, default=(2, 3, 5))
    n = IntegerListField(required=False, default=None)
    k = IntegerListField(required=False, default=(0, 1, 2, 3, 4))
    pq = IntegerListField(required=False, default=(0, 1, 2))
    precision = serializers.IntegerField(
        required=False, min_value=4, max_value=64, default=None
    )
    order = serializers.IntegerField(
        required=False, min_value=8, max_value=2000, default=None
    )
    seed = serializers.IntegerField(
        required=False, min_value=0, max_value=2 ** 32 - 1, default=None
    )
    rtol = serializers.FloatField(
        required=False, min_value=0, allow_null=True, default=None
    )
    output = serializers.CharField(
        required=False, allow_null=True, default=None
    )
    format = serializers.ChoiceField(
        choices=FORMATS, required=False, allow_null=True, default=None
    )
    cases = serializers.IntegerField(
        required=False, min_value=1, default=None
    )
    points = serializers.IntegerField(
        required=False, min_value=1, default=None
    )
    max_cells = serializers.IntegerField(
        required=False, min_value=1, max_value=32, default=8
    )
    shells = IntegerListField(required=False, default=(-2, 2))
    max_level = serializers.IntegerField(
        required=False, min_value=1, max_value=6, default=2
    )
    grid = serializers.FloatField(
        required=False, min_value=1e-4, max_value=0.5, default=1 / 200
    )
    jobs = serializers.IntegerField(required=False, min_value=1, default=1)

    def validate_q(self, value):
        try:
            return tuple(check_prime(q) for q in value)
        except PAdicError as exc:
            raise serializers.ValidationError(str(exc)) from exc

    def validate_k(self, value):
        if min(value) < 0 or max(value) > MAX_DEGREE:
            raise serializers.ValidationError(
                f'Степени должны лежать в 0..{MAX_DEGREE}'
            )
        return value

    validate_pq = validate_k

    def validate_shells(self, value):
        if max(abs(v) for v in value) > MAX_SHELL:
            raise serializers.ValidationError(
                f'Слои должны лежать в -{MAX_SHELL}..{MAX_SHELL}'
            )
        return (min(value), max(value))

    def validate(self, data):
        suite = data['suite']
        if data['n'] is None:
            data['n'] = (2,) if suite == COMPLEX else (2, 3)
        if data['cases'] is None:
            data['cases'] = PADIC_CASES if suite == PADIC else CASES
        if data['points'] is None:
            data['points'] = PADIC_POINTS if suite == PADIC else POINTS
        if min(data['n']) < 2 or max(data['n']) > MAX_DIMENSION:
            raise serializers.ValidationError(
                {'n': f'Размерность должна лежать в 2..{MAX_DIMENSION}'}
            )
        radon = settings.RADON
        if data['precision'] is None:
            data['precision'] = radon['PRECISION']
        if data['order'] is None:
            data['order'] = radon['QUADRATURE_ORDER']
        if data['seed'] is None:
            data['seed'] = radon['SEED']
        if data['format'] is None:
            output = data['output'] or ''
            data['format'] = 'csv' if output.endswith('.csv') else 'json'
        return data

    def create(self, validated_data):
        return RunConfig(**validated_data)
