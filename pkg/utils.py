"""Readers for the text literals used by the CLI, the API and pattern files."""
import logging
import re
from fractions import Fraction
from tokenize import TokenError

from sympy import Basic, Pow, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from annulus import AnnulusElement
from chords import ChordDiagram
from config import Config
from diagram_ring import CPoly, DiagramVector, d
from errors import ParseError
from hecke import BraidWord
from partitions import Partition
from scalars import DELTA, S, Scalar, V, X, Z

logger = logging.getLogger(__name__)

_INTEGER = re.compile(r'\s*(-?\d+)\s*')
_IDENTIFIER = re.compile(r'[A-Za-z_][A-Za-z_0-9]*')
_ALLOWED_CHARS = re.compile(r'[A-Za-z0-9_+\-*/^(),\s]*')
_DIAGRAM_LITERAL = re.compile(r'\(\s*\d+(?:\s*,\s*\d+)*\s*\)')

_SCALAR_SYMBOLS = {'x': X, 'v': V, 's': S, 'z': Z, 'delta': DELTA}
_GENERATORS = {
    'cpoly': re.compile(r'[cd]\d+$'),
    'annulus': re.compile(r'A\d+$'),
    'diagram': re.compile(r'Y_[\d_]+$'),
}
_CONTAINERS = {'cpoly': CPoly, 'annulus': AnnulusElement, 'diagram': DiagramVector}


def parse_partition(text):
    """Partition literal such as 4,2,1 or (4,2,1); an empty literal, () or 0 is the empty diagram."""
    body = text.strip()
    offset = text.find(body) if body else 0
    if body.startswith('(') and body.endswith(')'):
        body, offset = body[1:-1], offset + 1
    if not body.strip():
        return Partition()
    parts = []
    position = offset
    for chunk in body.split(','):
        match = _INTEGER.fullmatch(chunk)
        if not match:
            raise ParseError(f"Expected a part, got {chunk.strip()!r}", text, position)
        value = int(match.group(1))
        if value < 0:
            raise ParseError("Partition parts must be nonnegative", text, position + match.start(1))
        if parts and value > parts[-1]:
            raise ParseError("Partition parts must be weakly decreasing", text, position + match.start(1))
        parts.append(value)
        position += len(chunk) + 1
    if 0 in parts and any(parts):
        raise ParseError("Zero is only allowed as the empty diagram (0)", text, offset)
    if sum(parts) > Config.MAX_DEGREE:
        raise ParseError(f"Diagram has {sum(parts)} cells, above the configured cap of {Config.MAX_DEGREE}",
                         text, offset)
    return Partition(tuple(parts))


def parse_braid_word(text, strands=None):
    """Space- or comma-separated signed generators; "1 -2" is sigma_1 sigma_2^-1."""
    letters = []
    for match in re.finditer(r'[^\s,]+', text):
        token = match.group()
        if not re.fullmatch(r'-?\d+', token):
            raise ParseError(f"Expected a signed generator, got {token!r}", text, match.start())
        value = int(token)
        if value == 0:
            raise ParseError("Generator 0 does not exist", text, match.start())
        if strands is not None and abs(value) >= strands:
            raise ParseError(f"Generator {abs(value)} needs more than {strands} strands", text, match.start())
        letters.append(value)
    if strands is None:
        strands = max((abs(i) for i in letters), default=0) + 1
    if strands < 1:
        raise ParseError(f"A braid needs at least one strand, got {strands}", text, 0)
    if strands > Config.MAX_STRANDS:
        raise ParseError(f"{strands} strands exceed the configured cap of {Config.MAX_STRANDS}", text, 0)
    return BraidWord.from_ints(strands, letters)


def parse_matching(text):
    """Chord diagram literal "1-3,2-4" on the points 1..2n."""
    pairs = []
    for match in re.finditer(r'[^,]+', text):
        pair = re.fullmatch(r'\s*(\d+)\s*-\s*(\d+)\s*', match.group())
        if not pair:
            raise ParseError(f"Expected a chord a-b, got {match.group().strip()!r}", text, match.start())
        pairs.append((int(pair.group(1)), int(pair.group(2)), match.start()))
    if not pairs:
        raise ParseError("Empty matching", text, 0)
    seen = set()
    for a, b, position in pairs:
        for point in (a, b):
            if not 1 <= point <= 2 * len(pairs):
                raise ParseError(f"Point {point} is outside 1..{2 * len(pairs)}", text, position)
            if point in seen:
                raise ParseError(f"Point {point} is used twice", text, position)
            seen.add(point)
    return ChordDiagram.from_pairs((a, b) for a, b, _ in pairs)


def _diagram_placeholder(match):
    inner = match.group()[1:-1]
    return "Y_" + re.sub(r'\D', '_', inner)


def _generator(name, kind):
    if kind == 'cpoly':
        index = int(name[1:])
        if index > Config.MAX_DEGREE:
            raise ValueError(f"{name} is above the configured degree cap of {Config.MAX_DEGREE}")
        return CPoly.c(index) if name[0] == 'c' else d(index)
    if kind == 'annulus':
        return AnnulusElement.generator(int(name[1:]))
    parts = tuple(int(p) for p in name[2:].split('_') if p)
    if sum(parts) > Config.MAX_DEGREE:
        raise ValueError(f"Diagram has {sum(parts)} cells, above the configured cap of {Config.MAX_DEGREE}")
    return DiagramVector.diagram(Partition(parts))


def _promote(value, kind):
    if isinstance(value, Scalar):
        return _CONTAINERS[kind].constant(value)
    return value


class _Converter:
    """Rebuilds an unevaluated sympy expression tree over the engine's exact types.

    Nested powers multiply into one running exponent that may not pass Config.MAX_EXPONENT.
    """

    def __init__(self, text, kind):
        self.text = text
        self.kind = kind

    def fail(self, message, name=None):
        position = self.text.find(name) if name else 0
        raise ParseError(message, self.text, max(position, 0))

    def exponent(self, expr):
        if not expr.is_number or expr.has(Pow):
            self.fail(f"Exponent {expr} is not an integer literal")
        value = expr.doit()
        if not value.is_Integer:
            self.fail(f"Exponent {value} is not an integer")
        return int(value)

    def convert(self, expr, reach=1):
        if expr.is_Rational:
            return Scalar.coerce(Fraction(int(expr.p), int(expr.q)))
        if expr.is_Symbol:
            name = expr.name
            if name in _SCALAR_SYMBOLS:
                return _SCALAR_SYMBOLS[name]
            try:
                return _generator(name, self.kind)
            except ValueError as e:
                self.fail(str(e), name)
        if expr.is_Add:
            terms = [self.convert(arg, reach) for arg in expr.args]
            if any(not isinstance(t, Scalar) for t in terms):
                terms = [_promote(t, self.kind) for t in terms]
            total = terms[0]
            for term in terms[1:]:
                total = total + term
            return total
        if expr.is_Mul:
            factors = [self.convert(arg, reach) for arg in expr.args]
            scalars = [f for f in factors if isinstance(f, Scalar)]
            formal = [f for f in factors if not isinstance(f, Scalar)]
            product = Scalar.coerce(1)
            for f in scalars:
                product = product * f
            if not formal:
                return product
            result = formal[0]
            for f in formal[1:]:
                result = result * f
            return result.scale(product)
        if expr.is_Pow:
            exponent = self.exponent(expr.exp)
            reach *= max(abs(exponent), 1)
            if reach > Config.MAX_EXPONENT:
                self.fail(f"Power {reach} exceeds the configured cap of {Config.MAX_EXPONENT}")
            base = self.convert(expr.base, reach)
            if not isinstance(base, Scalar) and exponent < 0:
                self.fail("Negative powers are only allowed for scalars")
            try:
                return base ** exponent
            except ZeroDivisionError:
                self.fail("Division by zero")
        self.fail(f"Unsupported expression {expr}")


def parse_expression(text, kind='scalar'):
    """Read a scalar, c-polynomial, annulus element or diagram vector.

    Scalars use x, v, s, z = s - s^-1 and delta; c-polynomials add c1, c2, ...
    and d1, d2, ...; annulus elements add A1, A2, ...; diagram vectors use
    literals like (2,1) with (0) for the empty diagram.
    """
    if kind != 'scalar' and kind not in _GENERATORS:
        raise ValueError(f"Unknown expression kind {kind!r}")
    if not text.strip():
        raise ParseError("Empty expression", text, 0)
    if not _ALLOWED_CHARS.fullmatch(text):
        bad = next(i for i, ch in enumerate(text) if not _ALLOWED_CHARS.fullmatch(ch))
        raise ParseError(f"Unexpected character {text[bad]!r}", text, bad)

    source = _DIAGRAM_LITERAL.sub(_diagram_placeholder, text) if kind == 'diagram' else text
    symbols = {}
    for match in _IDENTIFIER.finditer(source):
        name = match.group()
        if name not in _SCALAR_SYMBOLS and not (kind in _GENERATORS and _GENERATORS[kind].match(name)):
            raise ParseError(f"Unknown name {name!r}", text, match.start())
        symbols[name] = Symbol(name)

    try:
        expr = parse_expr(source, local_dict=symbols, evaluate=False,
                          transformations=standard_transformations + (convert_xor,))
    except SyntaxError as e:
        position = min(max((e.offset or 1) - 1, 0), len(text))
        raise ParseError("Malformed expression", text, position)
    except TokenError:
        raise ParseError("Unbalanced parentheses", text, len(text))
    except (TypeError, ZeroDivisionError) as e:
        raise ParseError(f"Malformed expression: {str(e)}", text, 0)

    if not isinstance(expr, Basic):
        raise ParseError("Malformed expression", text, 0)
    value = _Converter(text, kind).convert(expr)
    if kind == 'scalar':
        if not isinstance(value, Scalar):
            raise ParseError("Expected a scalar", text, 0)
        return value
    return _promote(value, kind)
