import cmath
from collections import defaultdict
from fractions import Fraction

from .exceptions import PAdicError


class CyclotomicNumber:
    """Exact element of Q(z) for z a primitive q^level-th root of unity.

    Coefficients live on the power basis z^e, 0 <= e < (q - 1) q^(level - 1),
    so every element has exactly one representation.  The level is always
    lowered to the smallest subfield that contains the element, which makes
    rational elements sit at level 0 and compare equal to Fractions.
    """

    __slots__ = ('q', 'level', 'coefficients')

    def __init__(self, q, level=0, coefficients=None):
        modulus = q ** level
        terms = defaultdict(Fraction)
        for exponent, coeff in (coefficients or {}).items():
            terms[exponent % modulus] += Fraction(coeff)
        self.q = q
        self.level = level
        self.coefficients = self._reduce(q, level, terms)
        self._normalize()

    @staticmethod
    def _reduce(q, level, terms):
        if level == 0:
            constant = sum(terms.values(), Fraction(0))
            return {0: constant} if constant else {}
        block = q ** (level - 1)
        top = (q - 1) * block
        reduced = defaultdict(Fraction)
        for exponent, coeff in terms.items():
            if not coeff:
                continue
            if exponent < top:
                reduced[exponent] += coeff
                continue
            offset = exponent - top
            for j in range(q - 1):
                reduced[j * block + offset] -= coeff
        return {e: c for e, c in reduced.items() if c}

    def _normalize(self):
        while self.level > 0 and all(
            e % self.q == 0 for e in self.coefficients
        ):
            self.coefficients = {
                e // self.q: c for e, c in self.coefficients.items()
            }
            self.level -= 1

    @classmethod
    def root(cls, q, level, exponent=1):
        return cls(q, level, {exponent: 1})

    @classmethod
    def coerce(cls, value, q):
        if isinstance(value, CyclotomicNumber):
            return value
        return cls(q, 0, {0: Fraction(value)})

    def lift(self, level):
        if level < self.level:
            raise PAdicError('Нельзя опустить элемент в меньшее подполе')
        step = self.q ** (level - self.level)
        return {e * step: c for e, c in self.coefficients.items()}

    def _common(self, other):
        if isinstance(other, CyclotomicNumber):
            q = self.q if self.level else other.q
            if self.level and other.level and self.q != other.q:
                raise PAdicError('Корни из единицы разных порядков q')
        elif isinstance(other, (int, Fraction)):
            other = CyclotomicNumber(self.q, 0, {0: other})
            q = self.q
        else:
            return None
        self_q = CyclotomicNumber(q, self.level, self.coefficients)
        other_q = CyclotomicNumber(q, other.level, other.coefficients)
        level = max(self_q.level, other_q.level)
        return q, level, self_q.lift(level), other_q.lift(level)

    @property
    def is_rational(self):
        return self.level == 0

    def to_fraction(self):
        if not self.is_rational:
            raise PAdicError(f'{self} не является рациональным числом')
        return self.coefficients.get(0, Fraction(0))

    def __add__(self, other):
        common = self._common(other)
        if common is None:
            return NotImplemented
        q, level, left, right = common
        terms = defaultdict(Fraction, left)
        for e, c in right.items():
            terms[e] += c
        return CyclotomicNumber(q, level, terms)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(
            self.q, self.level, {e: -c for e, c in self.coefficients.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(
                self.q,
                self.level,
                {e: c * other for e, c in self.coefficients.items()},
            )
        common = self._common(other)
        if common is None:
            return NotImplemented
        q, level, left, right = common
        modulus = q ** level
        terms = defaultdict(Fraction)
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                terms[(e1 + e2) % modulus] += c1 * c2
        return CyclotomicNumber(q, level, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, CyclotomicNumber) and other.is_rational:
            return self * (1 / other.to_fraction())
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.to_fraction() == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if self.is_rational or other.is_rational:
            return (
                self.is_rational and other.is_rational
                and self.to_fraction() == other.to_fraction()
            )
        return (
            self.q == other.q and self.level == other.level
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        if self.is_rational:
            return hash(self.to_fraction())
        return hash(
            (self.q, self.level, tuple(sorted(self.coefficients.items())))
        )

    def __bool__(self):
        return bool(self.coefficients)

    def __complex__(self):
        if not self.level:
            return complex(float(self.to_fraction()))
        modulus = self.q ** self.level
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * e / modulus)
             for e, c in self.coefficients.items()),
            0j,
        )

    def serialize(self):
        body = ';'.join(
            f'{e}:{c}' for e, c in sorted(self.coefficients.items())
        )
        return f'{self.level}|{body}'

    @classmethod
    def parse(cls, q, text):
        try:
            head, body = text.split('|')
            level = int(head)
            terms = {}
            for item in filter(None, body.split(';')):
                exponent, coeff = item.split(':')
                terms[int(exponent)] = Fraction(coeff)
        except ValueError as exc:
            raise PAdicError(
                f'Некорректная запись элемента Q(z): {text}'
            ) from exc
        return cls(q, level, terms)

    def __repr__(self):
        if self.is_rational:
            return f'CyclotomicNumber({self.to_fraction()})'
        return f'CyclotomicNumber(q={self.q}, {self.serialize()})'

    __str__ = serialize


def to_value(value):
    """Rational elements of Q(z) come back as Fractions."""
    if isinstance(value, CyclotomicNumber) and value.is_rational:
        return value.to_fraction()
    return value


def format_value(value):
    if isinstance(value, CyclotomicNumber):
        return str(to_value(value))
    return str(value)
