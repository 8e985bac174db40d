import logging
from functools import lru_cache

from config import Config
from errors import EnumerationLimitError
from partitions import Partition, lr_mult
from scalars import FormalSum, Scalar

logger = logging.getLogger(__name__)


class CPoly(FormalSum):
    """Polynomial in the column generators c_k; keys are ascending tuples of k's."""

    reverse_order = False

    @classmethod
    def normalize_key(cls, key):
        return tuple(sorted(key))

    @classmethod
    def c(cls, k):
        if k < 0:
            raise ValueError(f"c_k needs k >= 0, got {k}")
        return cls.constant(1) if k == 0 else cls({(k,): 1})

    def key_product(self, left, right):
        return {tuple(sorted(left + right)): 1}

    def sort_key(self, key):
        return (sum(key), key)

    def format_key(self, key):
        factors = []
        for k in sorted(set(key)):
            power = key.count(k)
            factors.append(f"c{k}" if power == 1 else f"c{k}^{power}")
        return "*".join(factors)

    def degree(self):
        return max((sum(key) for key in self.keys()), default=0)

    def homogeneous_part(self, degree):
        return self._spawn({key: c for key, c in self.items() if sum(key) == degree})


class DiagramVector(FormalSum):
    """Formal combination of Young diagrams; the product is Littlewood-Richardson."""

    unit_key = Partition()
    show_unit_key = True

    @classmethod
    def normalize_key(cls, key):
        return key if isinstance(key, Partition) else Partition(tuple(key))

    @classmethod
    def diagram(cls, partition):
        return cls({partition: 1})

    def key_product(self, left, right):
        return lr_mult(left, right)

    def sort_key(self, key):
        return (key.size, key.parts)

    def format_key(self, key):
        return key.display()

    def key_to_json(self, key):
        return list(key.parts)

    @classmethod
    def key_from_json(cls, record):
        return Partition(tuple(record))


@lru_cache(maxsize=None)
def _phi_monomial(key):
    result = DiagramVector.constant(1)
    for k in key:
        result = result * DiagramVector.diagram(Partition.column(k))
    return result


def phi(p):
    """c_k -> the column (1^k), multiplied out with lr_mult."""
    result = DiagramVector()
    for key, coeff in p.items():
        result = result + _phi_monomial(key).scale(coeff)
    return result


def column_monomial(partition):
    return tuple(sorted(partition.transpose.parts))


def phi_inverse(vector):
    """Unitriangular back-substitution on column monomials, greatest diagram first."""
    residual = vector
    result = CPoly()
    while residual:
        top = max(residual.keys(), key=lambda lam: (lam.size, lam.parts))
        coeff = residual.coefficient(top)
        key = column_monomial(top)
        result = result + CPoly({key: coeff})
        residual = residual - _phi_monomial(key).scale(coeff)
    return result


@lru_cache(maxsize=None)
def d(l):
    """d_l, the preimage of the row (l), from the alternating recurrence."""
    if l < 0:
        raise ValueError(f"d_l needs l >= 0, got {l}")
    if l == 0:
        return CPoly.constant(1)
    result = CPoly()
    for k in range(1, l + 1):
        term = CPoly.c(k) * d(l - k)
        result = result + (term if k % 2 == 1 else -term)
    return result


def hook_pieri(k, l):
    """mu_{k+1,l} + mu_{k,l+1}, the shape expansion of c_k d_l for k, l >= 1."""
    return DiagramVector({Partition.hook(k + 1, l): 1}) + DiagramVector({Partition.hook(k, l + 1): 1})


@lru_cache(maxsize=None)
def psi(m):
    """psi_m(c_1) as a polynomial in the c_k and as a sum of hooks."""
    if m < 1:
        raise ValueError(f"psi needs m >= 1, got {m}")
    if m > Config.MAX_DEGREE:
        raise EnumerationLimitError(f"psi_{m} exceeds the configured degree cap of {Config.MAX_DEGREE}")
    poly = CPoly()
    diagrams = DiagramVector()
    for k in range(1, m + 1):
        sign = 1 if k % 2 == 1 else -1
        poly = poly + (CPoly.c(k) * d(m - k)).scale(Scalar.coerce(sign * k))
        diagrams = diagrams + DiagramVector({Partition.hook(k, m - k + 1): sign})
    return poly, diagrams
