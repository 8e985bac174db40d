import logging
from collections import deque
from functools import lru_cache

from diagram_ring import CPoly, phi_inverse
from hecke import cyclic_shift, e_lambda, permutation_length, swap_values
from partitions import Partition, PartitionPermutation, alpha
from scalars import DELTA, FormalSum, Scalar, V, X, Z

logger = logging.getLogger(__name__)


class AnnulusElement(FormalSum):
    """Polynomial in the generators A_m of C+; keys are descending tuples of m's."""

    @classmethod
    def normalize_key(cls, key):
        return tuple(sorted(key, reverse=True))

    @classmethod
    def generator(cls, m):
        if m < 0:
            raise ValueError(f"A_m needs m >= 0, got {m}")
        return cls.constant(1) if m == 0 else cls({(m,): 1})

    def key_product(self, left, right):
        return {tuple(sorted(left + right, reverse=True)): 1}

    def format_key(self, key):
        factors = []
        for m in sorted(set(key), reverse=True):
            power = key.count(m)
            factors.append(f"A{m}" if power == 1 else f"A{m}^{power}")
        return "*".join(factors)

    def degrees(self):
        return {sum(key) for key in self.keys()}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        return max(self.degrees(), default=0)

    def homogeneous_part(self, degree):
        return self._spawn({key: c for key, c in self.items() if sum(key) == degree})

    def mirror_coefficients(self):
        """Apply x, v, s -> x^-1, v^-1, s^-1 to every coefficient."""
        return self.map_coefficients(lambda c: c.mirror())


def cycle_type(p):
    return tuple(sorted((len(c) for c in PartitionPermutation(tuple(i + 1 for i in p)).cycles()),
                        reverse=True))


def _shortening_shift(p):
    """Search the equal-length cyclic shifts of p for (u, i) with l(s_i u s_i) = l(u) - 2."""
    length = permutation_length(p)
    seen = {p}
    queue = deque([p])
    while queue:
        u = queue.popleft()
        for i in range(len(u) - 1):
            q = cyclic_shift(u, i)
            q_length = permutation_length(q)
            if q_length < length:
                return u, i
            if q_length == length and q not in seen:
                seen.add(q)
                queue.append(q)
    return None


@lru_cache(maxsize=None)
def closure_of_basis(p):
    """Closure of a single omega_p.

    Minimal-length elements of a conjugacy class close to the product of
    A_{|c|} over their cycles. Longer ones are cyclically shifted until
    s u s is shorter than u; then omega_u = sigma omega_{sus} sigma and
    cl(omega_u) = xz cl(omega_{sus s}) + x^2 cl(omega_{sus}).
    """
    cycles = cycle_type(p)
    if permutation_length(p) == len(p) - len(cycles):
        return AnnulusElement({cycles: 1})
    found = _shortening_shift(p)
    if found is None:
        raise ArithmeticError(f"No length-reducing cyclic shift for {p}")
    u, i = found
    shorter = cyclic_shift(u, i)
    return (closure_of_basis(swap_values(shorter, i)).scale(X * Z)
            + closure_of_basis(shorter).scale(X * X))


def closure(element):
    """Closure of a Hecke element in C+, a trace on H_n."""
    total = AnnulusElement()
    for p, coeff in element.items():
        total = total + closure_of_basis(p).scale(coeff)
    return total


@lru_cache(maxsize=None)
def e_hat(partition):
    """Closure of the quasi-idempotent e_lambda."""
    if partition.size == 0:
        return AnnulusElement.constant(1)
    return closure(e_lambda(partition))


@lru_cache(maxsize=None)
def Q(partition):
    """Closure of the idempotent e_lambda / alpha_lambda."""
    if partition.size == 0:
        return AnnulusElement.constant(1)
    result = e_hat(partition).scale(Scalar.coerce(1) / Scalar.coerce(alpha(partition)))
    logger.debug(f"Q{partition.display()} = {result}")
    return result


def q_hook(k, l):
    return Q(Partition.hook(k, l))


@lru_cache(maxsize=None)
def _theta_monomial(key):
    result = AnnulusElement.constant(1)
    for k in key:
        result = result * Q(Partition.column(k))
    return result


def theta(p):
    """The algebra map c_k -> Q_(1^k)."""
    result = AnnulusElement()
    for key, coeff in p.items():
        result = result + _theta_monomial(key).scale(coeff)
    return result


def theta_diagrams(vector):
    return theta(phi_inverse(vector))


def theta_inverse(element):
    """Write an annulus element as a polynomial in the Q_(1^k), fewest factors first.

    theta(c_k1 ... c_kr) is a nonzero multiple of A_k1...A_kr plus monomials with
    more factors, so the solve is triangular in the number of factors.
    """
    residual = element
    result = CPoly()
    while residual:
        key = min(residual.keys(), key=lambda m: (len(m), tuple(-i for i in m)))
        image = _theta_monomial(key)
        lead = image.coefficient(key)
        factor = residual.coefficient(key) / lead
        result = result + CPoly({key: factor})
        residual = residual - image.scale(factor)
    return result


def a_in_Q_basis(n):
    """A_n as a polynomial in the Q_(1^k); c_k in the answer stands for Q_(1^k)."""
    if n < 1:
        raise ValueError(f"a_in_Q_basis needs n >= 1, got {n}")
    return theta_inverse(AnnulusElement.generator(n))


def epsilon_generator(k):
    return (X * V ** -1) ** (k - 1) * DELTA


def epsilon_plane(element):
    """Planar evaluation: the ring map with A_k -> (x v^-1)^(k-1) delta."""
    total = Scalar.coerce(0)
    for key, coeff in element.items():
        value = coeff
        for k in key:
            value = value * epsilon_generator(k)
        total = total + value
    return total
