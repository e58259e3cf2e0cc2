import string
from dataclasses import dataclass, field
from fractions import Fraction

from django.conf import settings

from .exceptions import IndeterminateValuationError, PAdicError, PrecisionError

DIGITS = string.digits + string.ascii_lowercase


def is_prime(q):
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q ** 0.5) + 1))


def check_prime(q):
    if not is_prime(q) or q > len(DIGITS):
        raise PAdicError(
            f'Поле вычетов должно быть F_q с простым q <= {len(DIGITS)}, '
            f'получено q = {q}'
        )
    return q


def default_precision():
    return settings.RADON['PRECISION']


def power(q, exponent):
    return Fraction(q) ** exponent


def _split(value, q):
    count = 0
    while value % q == 0:
        value //= q
        count += 1
    return count, value


def unit_decomposition(x, q):
    """Return (v, num, den) with x = q^v * num / den; num, den prime to q."""
    x = Fraction(x)
    if not x:
        raise IndeterminateValuationError('Нормирование нуля не определено')
    v_num, num = _split(x.numerator, q)
    v_den, den = _split(x.denominator, q)
    return v_num - v_den, num, den


def valuation(x, q):
    return unit_decomposition(x, q)[0]


def in_ball(x, center, level, q):
    """True when v(x - center) >= level."""
    difference = Fraction(x) - center
    return not difference or valuation(difference, q) >= level


def reduce_mod(x, q, level):
    """Canonical representative of x + q^level O.

    The representative keeps the q-adic digits of x below position
    ``level`` and nothing else, so two points of the same ball reduce to the
    same rational number.
    """
    x = Fraction(x)
    if not x:
        return x
    v, num, den = unit_decomposition(x, q)
    if v >= level:
        return Fraction(0)
    modulus = q ** (level - v)
    return Fraction(num * pow(den, -1, modulus) % modulus) * power(q, v)


def vector_valuation(coordinates, q):
    values = [valuation(c, q) for c in coordinates if c]
    if not values:
        raise IndeterminateValuationError(
            'Нормирование нулевого вектора не определено'
        )
    return min(values)


def anchor_index(coordinates, q):
    """Smallest index of a coordinate of maximal norm."""
    v = vector_valuation(coordinates, q)
    for index, c in enumerate(coordinates):
        if c and valuation(c, q) == v:
            return index, v


def dot(xs, ys):
    return sum((Fraction(a) * b for a, b in zip(xs, ys)), Fraction(0))


def as_coordinates(point):
    if isinstance(point, PAdicVector):
        return point.coordinates
    if isinstance(point, PAdicScalar):
        return (point.value,)
    return tuple(
        c.value if isinstance(c, PAdicScalar) else Fraction(c) for c in point
    )


@dataclass(frozen=True)
class PAdicScalar:
    q: int
    value: Fraction
    precision: int = field(default_factory=default_precision)

    def __post_init__(self):
        check_prime(self.q)
        if self.precision < 1:
            raise PrecisionError(
                f'Окно точности N должно быть положительным, '
                f'получено {self.precision}'
            )
        object.__setattr__(self, 'value', Fraction(self.value))

    @property
    def is_zero(self):
        return not self.value

    @property
    def valuation(self):
        return valuation(self.value, self.q)

    @property
    def norm(self):
        if self.is_zero:
            return Fraction(0)
        return power(self.q, -self.valuation)

    @property
    def unit(self):
        return self.value / power(self.q, self.valuation)

    @property
    def digits(self):
        """Base-q digits of the unit part, lowest first, mod q^precision."""
        if self.is_zero:
            return (0,)
        unit = self.unit
        if unit.denominator == 1 and unit.numerator > 0:
            residue = unit.numerator
        else:
            modulus = self.q ** self.precision
            residue = (
                unit.numerator * pow(unit.denominator, -1, modulus) % modulus
            )
        digits = []
        while residue:
            residue, digit = divmod(residue, self.q)
            digits.append(digit)
        return tuple(digits)

    def to_digit_string(self):
        if self.is_zero:
            return '0:0'
        text = ''.join(DIGITS[d] for d in self.digits)
        return f'{self.valuation}:{text}'

    @classmethod
    def from_digit_string(cls, q, text, precision=None):
        precision = default_precision() if precision is None else precision
        check_prime(q)
        try:
            head, tail = text.split(':')
            v = int(head)
            digits = [DIGITS.index(char) for char in tail.lower()]
        except ValueError as exc:
            raise PAdicError(
                f'Некорректная запись p-адического числа: {text}'
            ) from exc
        if not digits or any(d >= q for d in digits):
            raise PAdicError(f'Цифры записи {text} должны быть меньше {q}')
        if any(digits) and digits[0] == 0:
            raise PAdicError(
                f'Младшая цифра записи {text} должна быть ненулевой'
            )
        unit = sum(d * q ** i for i, d in enumerate(digits))
        # a finite digit string is exact; the window grows to hold it
        return cls(
            q, Fraction(unit) * power(q, v), max(precision, len(digits))
        )

    def _coerce(self, other):
        if isinstance(other, PAdicScalar):
            if other.q != self.q:
                raise PAdicError('Нельзя смешивать числа над разными Q_p')
            return other.value, min(self.precision, other.precision)
        return Fraction(other), self.precision

    def __add__(self, other):
        value, precision = self._coerce(other)
        return PAdicScalar(self.q, self.value + value, precision)

    __radd__ = __add__

    def __sub__(self, other):
        value, precision = self._coerce(other)
        return PAdicScalar(self.q, self.value - value, precision)

    def __rsub__(self, other):
        value, precision = self._coerce(other)
        return PAdicScalar(self.q, value - self.value, precision)

    def __neg__(self):
        return PAdicScalar(self.q, -self.value, self.precision)

    def __mul__(self, other):
        value, precision = self._coerce(other)
        return PAdicScalar(self.q, self.value * value, precision)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise IndeterminateValuationError('Обращение нуля невозможно')
        return PAdicScalar(self.q, 1 / self.value, self.precision)

    def __truediv__(self, other):
        value, precision = self._coerce(other)
        if not value:
            raise IndeterminateValuationError('Деление на ноль')
        return PAdicScalar(self.q, self.value / value, precision)

    def congruent(self, other, level):
        value, _ = self._coerce(other)
        return in_ball(self.value, value, level, self.q)

    def __str__(self):
        return self.to_digit_string()


@dataclass(frozen=True)
class PAdicVector:
    q: int
    coordinates: tuple
    precision: int = field(default_factory=default_precision)

    def __post_init__(self):
        check_prime(self.q)
        coordinates = as_coordinates(self.coordinates)
        if len(coordinates) < 2:
            raise PAdicError('Вектор должен иметь не менее двух координат')
        object.__setattr__(self, 'coordinates', coordinates)

    @classmethod
    def from_scalars(cls, scalars):
        scalars = list(scalars)
        return cls(
            scalars[0].q,
            tuple(s.value for s in scalars),
            min(s.precision for s in scalars),
        )

    @property
    def dimension(self):
        return len(self.coordinates)

    @property
    def scalars(self):
        return tuple(
            PAdicScalar(self.q, c, self.precision) for c in self.coordinates
        )

    @property
    def is_zero(self):
        return not any(self.coordinates)

    @property
    def valuation(self):
        return vector_valuation(self.coordinates, self.q)

    @property
    def norm(self):
        return power(self.q, -self.valuation)

    def dot(self, other):
        return PAdicScalar(
            self.q,
            dot(self.coordinates, as_coordinates(other)),
            self.precision,
        )

    def scale(self, factor):
        factor = factor.value if isinstance(factor, PAdicScalar) else factor
        return PAdicVector(
            self.q,
            tuple(c * factor for c in self.coordinates),
            self.precision,
        )

    def __add__(self, other):
        return PAdicVector(
            self.q,
            tuple(a + b for a, b in zip(self.coordinates,
                                        as_coordinates(other))),
            self.precision,
        )

    def __sub__(self, other):
        return PAdicVector(
            self.q,
            tuple(a - b for a, b in zip(self.coordinates,
                                        as_coordinates(other))),
            self.precision,
        )

    def __neg__(self):
        return self.scale(-1)

    def __iter__(self):
        return iter(self.coordinates)

    def __len__(self):
        return len(self.coordinates)


def vnorm(x):
    """v(x) = min of the coordinate valuations, so that ||x|| = q^(-v(x))."""
    return x.valuation
