from fractions import Fraction

from rest_framework import serializers

from .cells import CYCLOTOMIC, RATIONAL, Cell, make_cell_function
from .cyclotomic import CyclotomicNumber
from .exceptions import PAdicError
from .scalars import PAdicScalar, check_prime


def format_coefficient(value):
    if isinstance(value, CyclotomicNumber) and not value.is_rational:
        return value.serialize()
    if isinstance(value, CyclotomicNumber):
        value = value.to_fraction()
    return f'{value.numerator}/{value.denominator}'


def parse_coefficient(text, q):
    if '|' in text:
        return CyclotomicNumber.parse(q, text)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise serializers.ValidationError(
            f'Некорректный коэффициент: {text}'
        ) from exc


class CellSerializer(serializers.Serializer):
    center = serializers.ListField(child=serializers.CharField())
    level = serializers.IntegerField()
    coeff = serializers.CharField()

    def to_representation(self, instance):
        cell, coeff = instance
        return {
            'center': [
                PAdicScalar(cell.q, c).to_digit_string() for c in cell.center
            ],
            'level': cell.level,
            'coeff': format_coefficient(coeff),
        }


class CellFunctionSerializer(serializers.Serializer):
    q = serializers.IntegerField()
    n = serializers.IntegerField(min_value=1)
    value_ring = serializers.ChoiceField(choices=(RATIONAL, CYCLOTOMIC))
    cells = CellSerializer(many=True)
    contains_zero = serializers.BooleanField(required=False, default=False)

    def to_representation(self, instance):
        data = {
            'q': instance.q,
            'n': instance.n,
            'value_ring': instance.value_ring,
            'cells': CellSerializer(instance.terms, many=True).data,
        }
        if instance.contains_zero:
            data['contains_zero'] = True
        return data

    def validate_q(self, value):
        try:
            return check_prime(value)
        except PAdicError as exc:
            raise serializers.ValidationError(str(exc)) from exc

    def validate(self, data):
        q, n = data['q'], data['n']
        cells, coeffs = [], []
        for item in data['cells']:
            if len(item['center']) != n:
                raise serializers.ValidationError(
                    f'Центр ячейки должен иметь {n} координат'
                )
            try:
                center = tuple(
                    PAdicScalar.from_digit_string(q, text).value
                    for text in item['center']
                )
            except PAdicError as exc:
                raise serializers.ValidationError(str(exc)) from exc
            cells.append(Cell(q, item['level'], center))
            coeffs.append(parse_coefficient(item['coeff'], q))
        try:
            data['function'] = make_cell_function(
                cells,
                coeffs,
                require_cc=not data.get('contains_zero', False),
                q=q,
                n=n,
            )
        except PAdicError as exc:
            raise serializers.ValidationError(str(exc)) from exc
        if data['function'].value_ring != data['value_ring'] and (
            data['value_ring'] == RATIONAL
        ):
            raise serializers.ValidationError(
                'Коэффициенты из Q(ζ) требуют value_ring = cyclotomic'
            )
        return data

    def create(self, validated_data):
        return validated_data['function']
