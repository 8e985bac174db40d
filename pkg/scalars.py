"""Exact arithmetic over Q[x^±1, v^±1, s^±1] and its fraction field.

Polynomials are sympy sparse ring elements with no monomial content; the
content lives in an integer shift vector so negative exponents never reach
sympy. Scalars are reduced fractions of such polynomials.
"""
import logging
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from config import Config
from errors import EnumerationLimitError, PoleError, SpecializationError

logger = logging.getLogger(__name__)

LAMBDA_RING, _, _, _ = ring("x,v,s", QQ)
T_RING, _ = ring("t", QQ)

_RATIONAL_TYPES = (int, Fraction, type(QQ.one))


def to_rational(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        num, _, den = value.partition('/')
        return QQ(int(num), int(den or 1))
    return QQ.convert(value)


def format_rational(value):
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class LaurentPoly:
    """A Laurent polynomial stored as shift monomial times a content-free polynomial."""

    def __init__(self, poly, shift=None):
        poly_ring = poly.ring
        ngens = poly_ring.ngens
        shift = tuple(shift) if shift is not None else (0,) * ngens
        if not poly:
            shift = (0,) * ngens
        else:
            lowest = tuple(min(monom[i] for monom in poly.keys()) for i in range(ngens))
            if any(lowest):
                poly = poly_ring.from_dict({
                    tuple(e - m for e, m in zip(monom, lowest)): coeff
                    for monom, coeff in poly.items()
                })
                shift = tuple(a + b for a, b in zip(shift, lowest))
        self.ring = poly_ring
        self.poly = poly
        self.shift = shift

    @classmethod
    def from_terms(cls, terms, poly_ring=LAMBDA_RING):
        """Build from a mapping of integer exponent tuples to rationals."""
        ngens = poly_ring.ngens
        terms = {tuple(monom): to_rational(coeff) for monom, coeff in terms.items()}
        terms = {monom: coeff for monom, coeff in terms.items() if coeff}
        if not terms:
            return cls(poly_ring.zero)
        lowest = tuple(min(monom[i] for monom in terms) for i in range(ngens))
        poly = poly_ring.from_dict({
            tuple(e - m for e, m in zip(monom, lowest)): coeff
            for monom, coeff in terms.items()
        })
        return cls(poly, lowest)

    @classmethod
    def monomial(cls, exponents, coeff=1, poly_ring=LAMBDA_RING):
        return cls.from_terms({tuple(exponents): coeff}, poly_ring)

    @classmethod
    def constant(cls, value, poly_ring=LAMBDA_RING):
        return cls(poly_ring.ground_new(to_rational(value)))

    @classmethod
    def coerce(cls, value, poly_ring=LAMBDA_RING):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, _RATIONAL_TYPES):
            return cls.constant(value, poly_ring)
        raise TypeError(f"Cannot use {type(value).__name__} as a Laurent polynomial")

    def terms(self):
        return {
            tuple(e + m for e, m in zip(monom, self.shift)): coeff
            for monom, coeff in self.poly.items()
        }

    def sorted_terms(self):
        """Terms in descending lexicographic order of their exponent tuples."""
        return sorted(self.terms().items(), key=lambda term: term[0], reverse=True)

    def is_zero(self):
        return not self.poly

    def __bool__(self):
        return bool(self.poly)

    def is_one(self):
        return self.poly == self.ring.one and not any(self.shift)

    def is_monomial(self):
        return len(self.poly) == 1

    def __len__(self):
        return len(self.poly)

    def _aligned(self, other):
        common = tuple(min(a, b) for a, b in zip(self.shift, other.shift))
        left = self.poly.mul_monom(tuple(a - c for a, c in zip(self.shift, common)))
        right = other.poly.mul_monom(tuple(b - c for b, c in zip(other.shift, common)))
        return left, right, common

    def __add__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            other = LaurentPoly.constant(other, self.ring)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other.poly:
            return self
        if not self.poly:
            return other
        left, right, common = self._aligned(other)
        return LaurentPoly(left + right, common)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(-self.poly, self.shift)

    def __sub__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            other = LaurentPoly.constant(other, self.ring)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            return LaurentPoly(self.poly.mul_ground(to_rational(other)), self.shift)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(self.poly * other.poly,
                           tuple(a + b for a, b in zip(self.shift, other.shift)))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            if not self.is_monomial():
                raise ValueError("Only monomials have Laurent inverses")
            (coeff,) = self.poly.values()
            return LaurentPoly(self.ring.ground_new((1 / coeff) ** -exponent),
                               tuple(a * exponent for a in self.shift))
        return LaurentPoly(self.poly ** exponent,
                           tuple(a * exponent for a in self.shift))

    def __eq__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            other = LaurentPoly.constant(other, self.ring)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.shift == other.shift and self.poly == other.poly

    def __hash__(self):
        return hash((self.shift, frozenset(self.poly.items())))

    def leading_coefficient(self):
        if not self.poly:
            return QQ.zero
        return self.sorted_terms()[0][1]

    def map_exponents(self, func, poly_ring=None):
        """Send each monomial to the monomial func(exponents), collecting coefficients."""
        target = poly_ring or self.ring
        collected = {}
        for monom, coeff in self.terms().items():
            image = tuple(func(monom))
            collected[image] = collected.get(image, QQ.zero) + coeff
        return LaurentPoly.from_terms(collected, target)

    def mirror(self):
        return self.map_exponents(lambda monom: [-e for e in monom])

    def __str__(self):
        if not self.poly:
            return "0"
        names = [str(symbol) for symbol in self.ring.symbols]
        pieces = [_format_term(coeff, monom, names) for monom, coeff in self.sorted_terms()]
        return _join_signed(pieces)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self):
        return [list(monom) + [format_rational(coeff)] for monom, coeff in self.sorted_terms()]

    @classmethod
    def from_json(cls, records, poly_ring=LAMBDA_RING):
        terms = {}
        for record in records:
            *monom, coeff = record
            terms[tuple(int(e) for e in monom)] = to_rational(coeff)
        return cls.from_terms(terms, poly_ring)


def _format_term(coeff, monom, names):
    factors = []
    for name, exponent in zip(names, monom):
        if exponent == 1:
            factors.append(name)
        elif exponent:
            factors.append(f"{name}^{exponent}")
    if not factors:
        return format_rational(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{format_rational(coeff)}*{body}"


def _join_signed(pieces):
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            text += f" - {piece[1:]}"
        else:
            text += f" + {piece}"
    return text


class Scalar:
    """A reduced fraction num/den of Laurent polynomials; den is a monic polynomial."""

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.coerce(num)
        poly_ring = num.ring
        if den is None:
            den = LaurentPoly(poly_ring.one)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.coerce(den, poly_ring)
        if _reduced:
            self.num, self.den = num, den
            return
        if not den.poly:
            raise ZeroDivisionError("Scalar with zero denominator")
        if not num.poly:
            self.num, self.den = LaurentPoly(poly_ring.zero), LaurentPoly(poly_ring.one)
            return
        shift = tuple(a - b for a, b in zip(num.shift, den.shift))
        top, bottom = num.poly, den.poly
        if not bottom.is_ground:
            top, bottom = top.cancel(bottom)
        lead = bottom.LC
        if lead != 1:
            top, bottom = top.quo_ground(lead), bottom.quo_ground(lead)
        self.num = LaurentPoly(top, shift)
        self.den = LaurentPoly(bottom)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value, _reduced=True)
        if isinstance(value, _RATIONAL_TYPES):
            return cls(LaurentPoly.constant(value), _reduced=True)
        raise TypeError(f"Cannot use {type(value).__name__} as a scalar")

    @property
    def ring(self):
        return self.num.ring

    def is_zero(self):
        return not self.num.poly

    def __bool__(self):
        return bool(self.num.poly)

    def is_laurent(self):
        return self.den.is_one()

    def as_laurent(self):
        if not self.den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def _other(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, LaurentPoly):
            return Scalar(other, LaurentPoly(other.ring.one), _reduced=True)
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar(LaurentPoly.constant(other, self.ring),
                          LaurentPoly(self.ring.one), _reduced=True)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not other.num.poly:
            return self
        if not self.num.poly:
            return other
        if self.den.is_one() and other.den.is_one():
            total = self.num + other.num
            return Scalar(total, other.den, _reduced=True) if total.poly else Scalar(total)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        common = self.den.poly.gcd(other.den.poly)
        left = LaurentPoly(other.den.poly.exquo(common))
        right = LaurentPoly(self.den.poly.exquo(common))
        return Scalar(self.num * left + other.num * right, self.den * left)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not self.num.poly or not other.num.poly:
            return Scalar(LaurentPoly(self.ring.zero))
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, self.den, _reduced=True)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not other.num.poly:
            raise ZeroDivisionError(f"Division of {self} by zero")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self):
        return Scalar(self.den, self.num)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        if self.den.is_one():
            return Scalar(self.num ** exponent, self.den, _reduced=True)
        return Scalar(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def mirror(self):
        return Scalar(self.num.mirror(), self.den.mirror())

    def is_negative_leading(self):
        return self.num.leading_coefficient() < 0

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        top = str(self.num)
        bottom = str(self.den)
        if len(self.num) > 1:
            top = f"({top})"
        if len(self.den) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def __repr__(self):
        return f"Scalar({self})"

    def to_json(self):
        return {'num': self.num.to_json(), 'den': self.den.to_json()}

    @classmethod
    def from_json(cls, payload, poly_ring=LAMBDA_RING):
        if isinstance(payload, list):
            return cls(LaurentPoly.from_json(payload, poly_ring))
        num = LaurentPoly.from_json(payload['num'], poly_ring)
        den = LaurentPoly.from_json(payload.get('den') or [[0] * poly_ring.ngens + ["1"]], poly_ring)
        return cls(num, den)


def scalar_monomial(ex=0, ev=0, es=0, coeff=1):
    return Scalar(LaurentPoly.monomial((ex, ev, es), coeff), _reduced=True)


ONE = Scalar.coerce(1)
ZERO = Scalar.coerce(0)
X = scalar_monomial(1, 0, 0)
V = scalar_monomial(0, 1, 0)
S = scalar_monomial(0, 0, 1)
Z = S - S ** -1
DELTA = (V ** -1 - V) / Z


def quantum_int(i):
    """[i] = s^(i-1) + s^(i-3) + ... + s^(1-i)."""
    if i < 0:
        raise ValueError(f"quantum_int needs i >= 0, got {i}")
    if i > Config.MAX_QINT:
        raise EnumerationLimitError(f"[{i}] exceeds the configured cap of {Config.MAX_QINT}")
    return LaurentPoly.from_terms({(0, 0, i - 1 - 2 * j): 1 for j in range(i)})


def quantum_factorial(i):
    if i < 0:
        raise ValueError(f"quantum_factorial needs i >= 0, got {i}")
    result = LaurentPoly.constant(1)
    for j in range(2, i + 1):
        result = result * quantum_int(j)
    return result


def specialize_slN(value, N):
    """Substitute s -> t^N, x -> t^-1, v -> t^-(N^2); returns a Scalar over Q(t)."""
    if N < 2:
        raise ValueError(f"sl(N) specialization needs N >= 2, got {N}")
    value = Scalar.coerce(value)

    def exponent(monom):
        ex, ev, es = monom
        return (-ex - N * N * ev + N * es,)

    num = value.num.map_exponents(exponent, T_RING)
    den = value.den.map_exponents(exponent, T_RING)
    if not den.poly:
        raise SpecializationError(f"Denominator {value.den} vanishes under the sl({N}) specialization")
    return Scalar(num, den)


def _exp_series(poly, N, order):
    coeffs = [QQ.zero] * (order + 1)
    for (exponent,), coeff in poly.terms().items():
        rate = QQ(exponent, 2 * N)
        term = coeff
        for j in range(order + 1):
            coeffs[j] += term
            term = term * rate / (j + 1)
    return coeffs


def h_expand(value, N, order):
    """Taylor coefficients of value(t = e^(h/2N)) for h^0 .. h^order."""
    if N < 1:
        raise ValueError(f"h_expand needs N >= 1, got {N}")
    if order < 0:
        raise ValueError(f"h_expand needs order >= 0, got {order}")
    if order > Config.MAX_EXPONENT:
        raise EnumerationLimitError(f"h-expansion order {order} exceeds the configured cap of {Config.MAX_EXPONENT}")
    value = Scalar.coerce(value)
    if value.ring is not T_RING:
        if set(value.num.terms()) - {(0, 0, 0)} or not value.den.is_one():
            raise ValueError("h_expand needs a fraction in t; apply specialize_slN first")
        value = Scalar(LaurentPoly.constant(value.num.leading_coefficient(), T_RING),
                       LaurentPoly.constant(1, T_RING))
    num = _exp_series(value.num, N, order)
    depth = max(order, len(value.den))
    den = _exp_series(value.den, N, depth)
    if not den[0]:
        vanishing = next((k for k, c in enumerate(den) if c), depth + 1)
        raise PoleError(vanishing)
    quotient = []
    for n in range(order + 1):
        acc = num[n]
        for j in range(1, n + 1):
            acc -= den[j] * quotient[n - j]
        quotient.append(acc / den[0])
    logger.debug(f"h-expansion of {value} at N={N}: {[format_rational(c) for c in quotient]}")
    return quotient


class FormalSum:
    """Immutable finite sum of hashable basis keys with nonzero Scalar coefficients."""

    unit_key = ()
    reverse_order = True
    show_unit_key = False

    def __init__(self, terms=None):
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = Scalar.coerce(coeff)
            if coeff:
                clean[self.normalize_key(key)] = coeff
        self._terms = clean

    @classmethod
    def normalize_key(cls, key):
        return key

    @classmethod
    def _trusted(cls, terms):
        element = cls.__new__(cls)
        element._terms = terms
        return element

    def _spawn(self, terms):
        return type(self)._trusted(terms)

    @classmethod
    def constant(cls, value=1):
        return cls({cls.unit_key: value})

    @classmethod
    def zero(cls):
        return cls()

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key):
        return self._terms.get(self.normalize_key(key), ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, key):
        return key in self._terms

    def _compatible(self, other):
        return isinstance(other, type(self)) or isinstance(self, type(other))

    def __add__(self, other):
        if not isinstance(other, FormalSum):
            if other == 0:
                return self
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            total = terms[key] + coeff if key in terms else coeff
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return self._spawn(terms)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return self._spawn({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = Scalar.coerce(factor)
        if not factor:
            return self._spawn({})
        return self._spawn({key: coeff * factor for key, coeff in self._terms.items()})

    def map_coefficients(self, func):
        terms = {}
        for key, coeff in self._terms.items():
            image = func(coeff)
            if image:
                terms[key] = image
        return self._spawn(terms)

    def key_product(self, left, right):
        """Product of two basis keys as a mapping key -> integer multiplicity."""
        raise NotImplementedError(f"{type(self).__name__} has no product")

    def __mul__(self, other):
        if isinstance(other, (Scalar, LaurentPoly) + _RATIONAL_TYPES):
            return self.scale(other)
        if not isinstance(other, FormalSum):
            return NotImplemented
        terms = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                product = a * b
                for key, mult in self.key_product(left, right).items():
                    value = product * mult if mult != 1 else product
                    terms[key] = terms[key] + value if key in terms else value
        return self._spawn({key: c for key, c in terms.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (Scalar, LaurentPoly) + _RATIONAL_TYPES):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scale(Scalar.coerce(1) / Scalar.coerce(other))

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("Negative powers of formal sums are not defined")
        result = self.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, _RATIONAL_TYPES + (Scalar, LaurentPoly)):
            other = self.constant(other) if other else self._spawn({})
        if not isinstance(other, FormalSum):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(coeff == other._terms[key] for key, coeff in self._terms.items())

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def sort_key(self, key):
        return key

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda item: self.sort_key(item[0]),
                      reverse=self.reverse_order)

    def format_key(self, key):
        return str(key)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for key, coeff in self.sorted_items():
            sign = ""
            if coeff.is_negative_leading():
                sign, coeff = "-", -coeff
            if key == self.unit_key and not self.show_unit_key:
                body = str(coeff)
                if len(coeff.num) > 1 and coeff.den.is_one() and sign:
                    body = f"({body})"
            elif coeff == 1:
                body = self.format_key(key)
            else:
                text = str(coeff)
                if coeff.den.is_one() and len(coeff.num) > 1:
                    text = f"({text})"
                body = f"{text}*{self.format_key(key)}"
            pieces.append(sign + body)
        return _join_signed(pieces)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def key_to_json(self, key):
        return list(key)

    @classmethod
    def key_from_json(cls, record):
        return tuple(record)

    def to_json(self):
        return [[self.key_to_json(key), coeff.to_json()] for key, coeff in self.sorted_items()]

    @classmethod
    def from_json(cls, records):
        return cls({cls.key_from_json(key): Scalar.from_json(coeff) for key, coeff in records})
