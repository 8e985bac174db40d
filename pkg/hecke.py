"""Hecke algebras H_n in the positive permutation braid basis.

A basis label is a 0-based one-line tuple p: the strand starting at position j
ends at position p[j]. Braid words are read top to bottom, so appending a
letter multiplies on the right.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from config import Config
from errors import EnumerationLimitError, StrandMismatchError
from partitions import alpha, pi_permutation
from scalars import FormalSum, S, Scalar, X, Z

logger = logging.getLogger(__name__)

_XZ = X * Z
_X2 = X * X
_XINV2 = X ** -2
_XINV_Z = -(X ** -1) * Z


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError(f"A braid needs at least one strand, got {self.strand_count}")
        letters = tuple((int(i), int(sign)) for i, sign in self.letters)
        for i, sign in letters:
            if not 1 <= i < self.strand_count:
                raise ValueError(f"Generator {i} out of range for {self.strand_count} strands")
            if sign not in (1, -1):
                raise ValueError(f"Letter sign must be +1 or -1, got {sign}")
        object.__setattr__(self, 'letters', letters)

    @classmethod
    def from_ints(cls, strand_count, ints):
        """Signed integers: 2 is sigma_2, -2 its inverse."""
        return cls(strand_count, tuple((abs(i), 1 if i > 0 else -1) for i in ints))

    @property
    def writhe(self):
        return sum(sign for _, sign in self.letters)

    def inverse(self):
        return BraidWord(self.strand_count, tuple((i, -sign) for i, sign in reversed(self.letters)))

    def __add__(self, other):
        if self.strand_count != other.strand_count:
            raise StrandMismatchError(
                f"Cannot concatenate braids on {self.strand_count} and {other.strand_count} strands")
        return BraidWord(self.strand_count, self.letters + other.letters)

    def __mul__(self, power):
        return BraidWord(self.strand_count, self.letters * power)

    def permutation(self):
        p = list(range(self.strand_count))
        for i, _ in self.letters:
            a, b = p.index(i - 1), p.index(i)
            p[a], p[b] = i, i - 1
        return tuple(p)

    def __str__(self):
        return " ".join(str(i * sign) for i, sign in self.letters)


def identity(n):
    return tuple(range(n))


def permutation_length(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def swap_values(p, i):
    q = list(p)
    a, b = p.index(i), p.index(i + 1)
    q[a], q[b] = i + 1, i
    return tuple(q)


def swap_positions(p, i):
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def cyclic_shift(p, i):
    """s_i p s_i."""
    return swap_positions(swap_values(p, i), i)


class HeckeElement(FormalSum):
    """Linear combination of positive permutation braids omega_p in H_n."""

    def __init__(self, strand_count, terms=None):
        super().__init__(terms)
        self.strand_count = strand_count
        for key in self._terms:
            if len(key) != strand_count:
                raise StrandMismatchError(f"Basis label {key} does not have {strand_count} strands")

    @classmethod
    def _make(cls, strand_count, terms):
        element = cls._trusted(terms)
        element.strand_count = strand_count
        return element

    def _spawn(self, terms):
        return HeckeElement._make(self.strand_count, terms)

    @classmethod
    def basis(cls, p, coeff=1):
        return cls(len(p), {tuple(p): coeff})

    @classmethod
    def one(cls, n):
        return cls.basis(identity(n))

    def constant(self, value=1):
        return HeckeElement(self.strand_count, {identity(self.strand_count): value})

    def __add__(self, other):
        if isinstance(other, HeckeElement) and other.strand_count != self.strand_count:
            raise StrandMismatchError(
                f"Cannot add elements of H_{self.strand_count} and H_{other.strand_count}")
        return super().__add__(other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return super().__mul__(other)

    def __pow__(self, exponent):
        result = HeckeElement.one(self.strand_count)
        for _ in range(exponent):
            result = mul(result, self)
        return result

    def sort_key(self, key):
        return (permutation_length(key), key)

    def format_key(self, key):
        return "w[" + " ".join(str(i + 1) for i in key) + "]"

    def __eq__(self, other):
        if isinstance(other, HeckeElement) and other.strand_count != self.strand_count:
            return False
        return super().__eq__(other)

    __hash__ = FormalSum.__hash__

    def to_json(self):
        return {'strands': self.strand_count, 'terms': super().to_json()}


def _accumulate(terms, key, value):
    if key in terms:
        total = terms[key] + value
        if total:
            terms[key] = total
        else:
            del terms[key]
    elif value:
        terms[key] = value


def _right_sigma(terms, i):
    """(sum c_p omega_p) * sigma_i with i a 0-based position."""
    result = {}
    for p, coeff in terms.items():
        grown = swap_values(p, i)
        if p.index(i) < p.index(i + 1):
            _accumulate(result, grown, coeff)
        else:
            _accumulate(result, p, coeff * _XZ)
            _accumulate(result, grown, coeff * _X2)
    return result


def _right_letter(terms, i, sign):
    if sign > 0:
        return _right_sigma(terms, i)
    result = {}
    for p, coeff in _right_sigma(terms, i).items():
        _accumulate(result, p, coeff * _XINV2)
    for p, coeff in terms.items():
        _accumulate(result, p, coeff * _XINV_Z)
    return result


def _left_sigma(terms, i):
    result = {}
    for p, coeff in terms.items():
        grown = swap_positions(p, i)
        if p[i] < p[i + 1]:
            _accumulate(result, grown, coeff)
        else:
            _accumulate(result, p, coeff * _XZ)
            _accumulate(result, grown, coeff * _X2)
    return result


def from_word(word):
    """Image of a braid word in H_n."""
    terms = {identity(word.strand_count): Scalar.coerce(1)}
    for i, sign in word.letters:
        terms = _right_letter(terms, i - 1, sign)
    return HeckeElement._make(word.strand_count, terms)


def right_multiply(element, word):
    terms = dict(element.items())
    for i, sign in word.letters:
        terms = _right_letter(terms, i - 1, sign)
    return HeckeElement._make(element.strand_count, terms)


def left_multiply(word, element):
    """word * element, applying the letters of word from the last one up."""
    terms = dict(element.items())
    for i, sign in reversed(word.letters):
        grown = _left_sigma(terms, i - 1)
        if sign > 0:
            terms = grown
        else:
            result = {}
            for p, coeff in grown.items():
                _accumulate(result, p, coeff * _XINV2)
            for p, coeff in terms.items():
                _accumulate(result, p, coeff * _XINV_Z)
            terms = result
    return HeckeElement._make(element.strand_count, terms)


def ppb_word(p):
    """A reduced positive word for omega_p: strip the lowest right descent until trivial."""
    p = tuple(p)
    letters = []
    while p != identity(len(p)):
        i = next(i for i in range(len(p) - 1) if p.index(i) > p.index(i + 1))
        letters.append((i + 1, 1))
        p = swap_values(p, i)
    return BraidWord(max(len(p), 1), tuple(reversed(letters)))


def mul(left, right):
    """Bilinear product, reducing each omega_r of the right factor letter by letter."""
    if left.strand_count != right.strand_count:
        raise StrandMismatchError(
            f"Cannot multiply elements of H_{left.strand_count} and H_{right.strand_count}")
    n = left.strand_count
    memo = {identity(n): dict(left.items())}

    def times(r):
        if r in memo:
            return memo[r]
        i = next(i for i in range(n - 1) if r.index(i) > r.index(i + 1))
        memo[r] = _right_sigma(times(swap_values(r, i)), i)
        return memo[r]

    result = {}
    for r, coeff in sorted(right.items(), key=lambda item: permutation_length(item[0])):
        for p, value in times(r).items():
            _accumulate(result, p, value * coeff)
    return HeckeElement._make(n, result)


def tensor(left, right):
    """Juxtaposition: right's strands are placed after left's."""
    shift = left.strand_count
    terms = {}
    for p, a in left.items():
        for q, b in right.items():
            terms[p + tuple(v + shift for v in q)] = a * b
    return HeckeElement._make(left.strand_count + right.strand_count, terms)


def _check_enumeration(n):
    if n < 1:
        raise ValueError(f"Need at least one strand, got {n}")
    if n > Config.MAX_STRANDS:
        raise EnumerationLimitError(
            f"Summing over S_{n} exceeds the configured cap of {Config.MAX_STRANDS} strands")


def _length_weighted_sum(n, weight):
    _check_enumeration(n)
    powers = {}
    terms = {}
    for p in permutations(range(n)):
        length = permutation_length(p)
        if length not in powers:
            powers[length] = weight ** length
        terms[p] = powers[length]
    return HeckeElement._make(n, terms)


@lru_cache(maxsize=None)
def a_element(n):
    """a_n = sum over S_n of (x^-1 s)^l(p) omega_p."""
    return _length_weighted_sum(n, X ** -1 * S)


@lru_cache(maxsize=None)
def b_element(n):
    """b_n = sum over S_n of (-x^-1 s^-1)^l(p) omega_p."""
    return _length_weighted_sum(n, -(X ** -1) * S ** -1)


def _tensor_all(blocks):
    result = blocks[0]
    for block in blocks[1:]:
        result = tensor(result, block)
    return result


def permutation_braid(perm):
    """omega for a PartitionPermutation, as an element of H_n."""
    return from_word(ppb_word(perm.one_line()))


@lru_cache(maxsize=None)
def e_lambda(partition):
    """Quasi-idempotent E_lambda(a) w E_lambda^v(b) w^-1 with w the braid of pi_lambda."""
    if partition.size < 1:
        raise ValueError("e_lambda needs a nonempty diagram")
    rows = _tensor_all([a_element(p) for p in partition.parts])
    columns = _tensor_all([b_element(p) for p in partition.transpose.parts])
    word = ppb_word(pi_permutation(partition).one_line())
    omega = from_word(word)
    result = mul(mul(mul(rows, omega), columns), from_word(word.inverse()))
    if len(result) > Config.WARN_TERMS:
        logger.warning(f"e_lambda for {partition.display()} has {len(result)} terms")
    logger.debug(f"Built e_lambda for {partition.display()} with {len(result)} terms")
    return result


def cable_word(word, k):
    """Replace each strand by k parallel strands; each letter becomes a k^2-letter block crossing."""
    if k < 1:
        raise ValueError(f"Cable width must be >= 1, got {k}")
    letters = []
    for i, sign in word.letters:
        base = (i - 1) * k
        crossings = [(l, r) for l in range(1, k + 1) for r in range(1, k + 1)]
        crossings.sort(key=lambda lr: ((k - lr[0]) + (lr[1] - 1), base + lr[0] + lr[1] - 1))
        letters.extend((base + l + r - 1, sign) for l, r in crossings)
    return BraidWord(word.strand_count * k, tuple(letters))


def decorate(word, partition):
    """Cable word by |lambda| and place e_lambda / alpha_lambda on every cabled strand."""
    k = partition.size
    if k < 1:
        raise ValueError("Decoration needs a nonempty diagram")
    cabled = from_word(cable_word(word, k))
    idempotents = _tensor_all([e_lambda(partition)] * word.strand_count)
    normalizer = Scalar.coerce(alpha(partition)) ** word.strand_count
    return mul(cabled, idempotents).scale(Scalar.coerce(1) / normalizer)
