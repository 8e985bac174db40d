"""Adams operators in the annulus: P_m, the power-series identities, torus knots
and the cable-pattern solver."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from annulus import AnnulusElement, Q, closure, epsilon_plane, theta, theta_diagrams
from diagram_ring import CPoly, DiagramVector, d, psi
from config import Config
from errors import EnumerationLimitError, PatternError
from hecke import BraidWord, decorate, from_word
from models import Report
from partitions import Partition, framing_root_hook
from scalars import S, Scalar, V, X, ZERO, Z, h_expand, quantum_int, specialize_slN

logger = logging.getLogger(__name__)

_RINGS = {'cpoly': CPoly, 'annulus': AnnulusElement}


@dataclass
class GradedSeries:
    """Truncated power series sum_i coefficients[i] X^(i + degree_offset)."""
    ring: str
    coefficients: list
    degree_offset: int = 0

    def __post_init__(self):
        if self.ring not in _RINGS:
            raise ValueError(f"Unknown series ring {self.ring!r}")

    @classmethod
    def from_function(cls, ring, order, func, degree_offset=0):
        return cls(ring, [func(i + degree_offset) for i in range(order)], degree_offset)

    @property
    def order(self):
        return len(self.coefficients)

    def __getitem__(self, power):
        return self.coefficients[power - self.degree_offset]

    def _zero(self):
        return _RINGS[self.ring]()

    def __add__(self, other):
        n = min(self.order, other.order)
        return GradedSeries(self.ring, [a + b for a, b in zip(self.coefficients[:n], other.coefficients[:n])],
                            self.degree_offset)

    def __neg__(self):
        return GradedSeries(self.ring, [-c for c in self.coefficients], self.degree_offset)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return GradedSeries(self.ring, [c.scale(factor) for c in self.coefficients], self.degree_offset)

    def __mul__(self, other):
        """Truncated product; offsets add."""
        n = min(self.order, other.order)
        coefficients = []
        for k in range(n):
            total = self._zero()
            for i in range(k + 1):
                total = total + self.coefficients[i] * other.coefficients[k - i]
            coefficients.append(total)
        return GradedSeries(self.ring, coefficients, self.degree_offset + other.degree_offset)

    def derivative(self):
        if self.degree_offset:
            raise ValueError("Derivative is only taken of series starting at X^0")
        return GradedSeries(self.ring, [c.scale(i) for i, c in enumerate(self.coefficients) if i])

    def rescale(self, factor):
        """f(X) -> f(factor * X)."""
        factor = Scalar.coerce(factor)
        return GradedSeries(self.ring, [c.scale(factor ** (i + self.degree_offset))
                                        for i, c in enumerate(self.coefficients)],
                            self.degree_offset)

    def map(self, func, ring=None):
        return GradedSeries(ring or self.ring, [func(c) for c in self.coefficients], self.degree_offset)

    def truncate(self, order):
        return GradedSeries(self.ring, self.coefficients[:order], self.degree_offset)

    def first_difference(self, other):
        """Exponent of the first coefficient where the two series differ, or None."""
        for i, (a, b) in enumerate(zip(self.coefficients, other.coefficients)):
            if a != b:
                return i + self.degree_offset
        return None


def c_series(order):
    """C(X) = sum (-1)^k c_k X^k."""
    return GradedSeries.from_function('cpoly', order, lambda k: CPoly.c(k).scale((-1) ** k))


def d_series(order):
    return GradedSeries.from_function('cpoly', order, d)


def c_prime_q(order):
    """Quantum derivative sum_{k>=1} (-1)^k [k] c_k X^(k-1)."""
    return GradedSeries.from_function(
        'cpoly', order, lambda i: CPoly.c(i + 1).scale(Scalar.coerce(quantum_int(i + 1)) * (-1) ** (i + 1)))


def d_prime_q(order):
    return GradedSeries.from_function(
        'cpoly', order, lambda i: d(i + 1).scale(quantum_int(i + 1)))


def psi_series(order):
    """Psi(X) = sum_{m>=1} psi_m(c_1) X^(m-1)."""
    return GradedSeries.from_function('cpoly', order, lambda i: psi(i + 1)[0])


def a_braid(i, j):
    """sigma_1 ... sigma_i sigma_{i+1}^-1 ... sigma_{i+j}^-1 on i+j+1 strands."""
    if i < 0 or j < 0 or i + j < 1:
        raise ValueError(f"a_braid needs i, j >= 0 and i + j >= 1, got ({i}, {j})")
    letters = tuple((k, 1) for k in range(1, i + 1)) + tuple((k, -1) for k in range(i + 1, i + j + 1))
    return BraidWord(i + j + 1, letters)


@lru_cache(maxsize=None)
def a_closure(i, j):
    """A_{i,j}; A_{0,0} is the single string A_1."""
    if i == 0 and j == 0:
        return AnnulusElement.generator(1)
    return closure(from_word(a_braid(i, j)))


def a_bar(m):
    """Closure of the m-string negative cycle braid."""
    return a_closure(0, m - 1)


def phi_plus(order):
    return GradedSeries.from_function('annulus', order, lambda i: AnnulusElement.generator(i + 1))


def phi_minus(order):
    return GradedSeries.from_function('annulus', order, lambda i: a_bar(i + 1))


def q_c_series(order):
    """sum (-1)^k Q_(1^k) X^k."""
    return GradedSeries.from_function('annulus', order, lambda k: Q(Partition.column(k)).scale((-1) ** k))


def q_d_series(order):
    return GradedSeries.from_function('annulus', order, lambda l: Q(Partition.row(l)))


@lru_cache(maxsize=None)
def P(m):
    """sum_{i=0}^{m-1} x^(m-1-2i) A_{i, m-1-i}."""
    if m < 1:
        raise ValueError(f"P needs m >= 1, got {m}")
    if m > Config.MAX_STRANDS:
        raise EnumerationLimitError(f"P_{m} needs {m} strands, above the configured cap of {Config.MAX_STRANDS}")
    result = AnnulusElement()
    for i in range(m):
        result = result + a_closure(i, m - 1 - i).scale(X ** (m - 1 - 2 * i))
    return result


def adams_image(m):
    """[m] theta(psi_m(c_1))."""
    return theta(psi(m)[0]).scale(quantum_int(m))


def crossing_switch_recursion(m):
    """Right-hand side of the crossing-switch recursion for P_m."""
    result = a_bar(m).scale(X ** (m - 1) * m)
    for k in range(1, m):
        result = result + (P(k) * a_bar(m - k)).scale(Z * X ** (m - 1 - k))
    return result


def _theta_ckd(k, l):
    return theta(CPoly.c(k) * d(l))


def expansion_positive(m):
    """A_m = x^(m-1) sum_{k=1}^m (-1)^(k-1) s^(m-k) [k] theta(c_k d_{m-k})."""
    result = AnnulusElement()
    for k in range(1, m + 1):
        coeff = X ** (m - 1) * S ** (m - k) * quantum_int(k) * (-1) ** (k - 1)
        result = result + _theta_ckd(k, m - k).scale(coeff)
    return result


def expansion_negative(m):
    """Abar_m = x^-(m-1) sum_{k=0}^{m-1} (-1)^k s^k [m-k] theta(c_k d_{m-k})."""
    result = AnnulusElement()
    for k in range(0, m):
        coeff = X ** -(m - 1) * S ** k * quantum_int(m - k) * (-1) ** k
        result = result + _theta_ckd(k, m - k).scale(coeff)
    return result


def expansion_mirrored(m):
    """expansion_positive with x, v, s inverted in the prefactors only."""
    result = AnnulusElement()
    for k in range(1, m + 1):
        coeff = (X ** (m - 1) * S ** (m - k) * quantum_int(k) * (-1) ** (k - 1)).mirror()
        result = result + _theta_ckd(k, m - k).scale(coeff)
    return result


def _theta_series(series):
    return series.map(theta, 'annulus')


def _series_check(report, tag, left, right):
    diff = left.first_difference(right)
    report.add(tag, diff is None, detail='' if diff is None else f"first differing coefficient at X^{diff}",
               degree=left.order)


def series_identities(order):
    """Coefficient-by-coefficient checks of the generating-series identities up to A_order."""
    if order < 1:
        raise ValueError(f"series_identities needs order >= 1, got {order}")
    report = Report()
    for m in range(1, order + 1):
        for tag, left, build in (('expansion-positive', AnnulusElement.generator(m), expansion_positive),
                                 ('expansion-negative', a_bar(m), expansion_negative),
                                 ('mirror', a_bar(m), expansion_mirrored)):
            try:
                report.add(tag, left == build(m), m=m)
            except Exception as e:
                logger.error(f"Error checking {tag} at m={m}: {str(e)}")
                report.add(tag, False, detail=str(e), m=m)

    try:
        plus = -_theta_series(c_prime_q(order).rescale(X) * d_series(order).rescale(X * S))
        _series_check(report, 'factorization-plus', phi_plus(order), plus)
        minus_d = _theta_series(c_series(order).rescale(X ** -1 * S) * d_prime_q(order).rescale(X ** -1))
        _series_check(report, 'factorization-minus-d', phi_minus(order), minus_d)
        minus_c = -_theta_series(c_prime_q(order).rescale(X ** -1) * d_series(order).rescale(X ** -1 * S ** -1))
        _series_check(report, 'factorization-minus-c', phi_minus(order), minus_c)
    except Exception as e:
        logger.error(f"Error checking the series factorizations: {str(e)}")
        report.add('factorization', False, detail=str(e), degree=order)

    try:
        full = order + 1
        psi_x = psi_series(order)
        c_x, d_x = c_series(full), d_series(full)
        _series_check(report, 'log-derivative-c', psi_x, -(c_x.derivative() * d_x))
        _series_check(report, 'log-derivative-d', psi_x, d_x.derivative() * c_x)
    except Exception as e:
        logger.error(f"Error checking the logarithmic derivatives: {str(e)}")
        report.add('log-derivative', False, detail=str(e), degree=order)

    for m in range(1, order + 1):
        try:
            report.add('crossing-switch-recursion', P(m) == crossing_switch_recursion(m), m=m)
        except Exception as e:
            logger.error(f"Error checking the P_m recursion at m={m}: {str(e)}")
            report.add('crossing-switch-recursion', False, detail=str(e), m=m)
    return report


def torus_braid(m, p):
    """(sigma_1 ... sigma_{m-1})^p on m strands; negative p uses inverse letters."""
    if m < 1:
        raise ValueError(f"torus_braid needs m >= 1, got {m}")
    if m > Config.MAX_STRANDS:
        raise EnumerationLimitError(f"T({m}, {p}) needs {m} strands, above the configured cap of {Config.MAX_STRANDS}")
    if abs(p) > Config.MAX_EXPONENT:
        raise EnumerationLimitError(f"T({m}, {p}) exceeds the configured exponent cap of {Config.MAX_EXPONENT}")
    cycle = BraidWord(m, tuple((i, 1) for i in range(1, m)))
    if p < 0:
        cycle, p = cycle.inverse(), -p
    return cycle * p


def _check_coprime(m, p):
    if gcd(m, p) != 1:
        raise ValueError(f"(m, p) = ({m}, {p}) is not a coprime pair")


def rosso_jones(m, p):
    """sum_{k=1}^m (-1)^(k-1) (x^m v^-1 s^(m-2k+1))^p Q(mu_{k, m-k+1})."""
    if m < 1 or p < 1:
        raise ValueError(f"rosso_jones needs m, p >= 1, got ({m}, {p})")
    if p > Config.MAX_EXPONENT:
        raise EnumerationLimitError(f"T({m}, {p}) exceeds the configured exponent cap of {Config.MAX_EXPONENT}")
    _check_coprime(m, p)
    result = AnnulusElement()
    for k in range(1, m + 1):
        coeff = Scalar.coerce(framing_root_hook(k, m - k + 1) ** p) * (-1) ** (k - 1)
        result = result + Q(Partition.hook(k, m - k + 1)).scale(coeff)
    return result


def torus_closure(m, p):
    return closure(from_word(torus_braid(m, p)))


def torus_invariant(m, p, N=None, normalize=False, h_order=None):
    """Planar value of the (m, p) torus closure.

    Returns a Scalar over Q(x, v, s); a Scalar over Q(t) when N is given; the list
    of h-expansion coefficients when h_order is given as well.
    """
    if m < 1:
        raise ValueError(f"torus_invariant needs m >= 1, got {m}")
    _check_coprime(m, p)
    value = epsilon_plane(torus_closure(m, p))
    if normalize:
        value = value * (X * V ** -1) ** (-p * (m - 1))
    if N is None:
        if h_order is not None:
            raise ValueError("An h-expansion needs the sl(N) rank")
        return value
    specialized = specialize_slN(value, N)
    if h_order is None:
        return specialized
    return h_expand(specialized, N, h_order)


@dataclass
class PatternSystem:
    target: AnnulusElement
    patterns: list

    def __post_init__(self):
        if not self.patterns:
            raise PatternError("A pattern system needs at least one pattern")
        degrees = set()
        for element in [self.target] + list(self.patterns):
            if element and not element.is_homogeneous():
                raise PatternError(f"{element} is not homogeneous")
            degrees |= element.degrees()
        if len(degrees) > 1:
            raise PatternError(f"Target and patterns have different degrees: {sorted(degrees)}")

    def keys(self):
        keys = set(self.target.keys())
        for pattern in self.patterns:
            keys |= set(pattern.keys())
        return sorted(keys, reverse=True)

    def equations(self):
        return [([pattern.coefficient(key) for pattern in self.patterns], self.target.coefficient(key))
                for key in self.keys()]


@dataclass(frozen=True)
class Solution:
    coefficients: tuple
    free: tuple = ()


@dataclass(frozen=True)
class Inconsistent:
    """Two equation sets of full rank whose solutions disagree on one unknown."""
    unknown: object
    first_equations: tuple
    first_values: tuple
    second_equations: tuple
    second_values: tuple = ()


def _reduce(row, basis):
    row = list(row)
    for pivot, reduced in basis:
        if row[pivot]:
            factor = row[pivot] / reduced[pivot]
            row = [a - factor * b for a, b in zip(row, reduced)]
    return row


def _independent(rows):
    """Greedy row basis in the given order, with a pivot column for each kept row."""
    basis = []
    kept = []
    for index, row in enumerate(rows):
        reduced = _reduce(row, basis)
        pivot = next((j for j, value in enumerate(reduced) if value), None)
        if pivot is not None:
            basis.append((pivot, reduced))
            kept.append(index)
    return kept, [pivot for pivot, _ in basis]


def _solve_square(matrix, rhs):
    """Gaussian elimination on an invertible square system over the scalars."""
    n = len(matrix)
    rows = [list(row) + [value] for row, value in zip(matrix, rhs)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if rows[r][col])
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [value / lead for value in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [row[n] for row in rows]


def solve_pattern(system):
    """Solve target = sum u_j pattern_j over the A-monomial coefficients."""
    keys = system.keys()
    equations = system.equations()
    rows = [row for row, _ in equations]
    kept, pivots = _independent(rows)
    unknowns = len(system.patterns)

    def solve(indices):
        matrix = [[rows[i][j] for j in pivots] for i in indices]
        values = _solve_square(matrix, [equations[i][1] for i in indices])
        full = [ZERO] * unknowns
        for j, value in zip(pivots, values):
            full[j] = value
        return full

    solution = solve(kept) if kept else [ZERO] * unknowns
    bad = next((i for i, (row, value) in enumerate(equations)
                if sum((a * u for a, u in zip(row, solution)), ZERO) != value), None)
    if bad is None:
        free = tuple(j for j in range(unknowns) if j not in pivots)
        logger.info(f"Pattern system solved with {len(kept)} independent equations")
        return Solution(tuple(solution), free)

    first = tuple(keys[i] for i in kept)
    restricted = [rows[bad][j] for j in pivots]
    if not any(restricted):
        logger.info(f"Pattern system inconsistent: equation {keys[bad]} reads 0 = {equations[bad][1]}")
        return Inconsistent(None, first, tuple(solution), (keys[bad],), ())
    for dropped in kept:
        swapped = sorted([i for i in kept if i != dropped] + [bad])
        if len(_independent([[rows[i][j] for j in pivots] for i in swapped])[0]) < len(pivots):
            continue
        other = solve(swapped)
        unknown = next(j for j in range(unknowns) if other[j] != solution[j])
        logger.info(f"Pattern system inconsistent: unknown {unknown} differs between "
                    f"{first} and {tuple(keys[i] for i in swapped)}")
        return Inconsistent(unknown, first, tuple(solution), tuple(keys[i] for i in swapped), tuple(other))
    raise PatternError("Could not build an inconsistency certificate")


def counterexample_target():
    """theta of (4) - (2,1,1) + (2,2)."""
    vector = DiagramVector({Partition((4,)): 1, Partition((2, 1, 1)): -1, Partition((2, 2)): 1})
    return theta_diagrams(vector)


def decorated_pattern(word, decoration):
    return closure(decorate(word, decoration))


def psi2_c2_system(decoration=Partition((1, 1)), reverse=False):
    """Target against the one-crossing 2-string patterns, decorated by (1,1) unless told otherwise."""
    patterns = [decorated_pattern(BraidWord(2, ((1, 1),)), decoration),
                decorated_pattern(BraidWord(2, ((1, -1),)), decoration)]
    if reverse:
        patterns.reverse()
    return PatternSystem(counterexample_target(), patterns)
