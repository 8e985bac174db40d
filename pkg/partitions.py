import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from scalars import LaurentPoly, quantum_factorial, quantum_int

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """A Young diagram given by its weakly decreasing row lengths."""
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if int(p) != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"Partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Partition parts must be weakly decreasing: {self.parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def hook(cls, k, l):
        """mu_{k,l}: first column of k cells, first row of l cells."""
        if k < 1 or l < 1:
            raise ValueError(f"Hook needs k, l >= 1, got ({k}, {l})")
        return cls((l,) + (1,) * (k - 1))

    @classmethod
    def column(cls, k):
        return cls((1,) * k)

    @classmethod
    def row(cls, l):
        return cls((l,) if l else ())

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    @cached_property
    def transpose(self):
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self):
        """Cells (row, column), 1-based, in row-major order."""
        return [(i, j) for i, length in enumerate(self.parts, start=1) for j in range(1, length + 1)]

    def hook_length(self, i, j):
        return self.parts[i - 1] + self.transpose.parts[j - 1] - i - j + 1

    def content(self, i, j):
        return j - i

    def is_hook(self):
        return len(self.parts) <= 1 or all(p == 1 for p in self.parts[1:])

    def numbering(self):
        """T(lambda): cell -> its 1-based row-major index."""
        return {cell: index for index, cell in enumerate(self.cells(), start=1)}

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def display(self):
        return f"({str(self) or '0'})"


@dataclass(frozen=True)
class PartitionPermutation:
    """A permutation of {1..n} given by its images."""
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, 'images', images)

    def __call__(self, i):
        return self.images[i - 1]

    def inverse(self):
        inverse = [0] * len(self.images)
        for i, image in enumerate(self.images, start=1):
            inverse[image - 1] = i
        return PartitionPermutation(tuple(inverse))

    def one_line(self):
        """0-based one-line tuple: position j goes to position p[j]."""
        return tuple(image - 1 for image in self.images)

    def cycles(self):
        seen = set()
        cycles = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            cycles.append(tuple(cycle))
        return cycles

    def __str__(self):
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in moved)


def partitions_of(n, max_part=None):
    """All partitions of n, largest first in lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [Partition()]
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            result.append(Partition((first,) + rest.parts))
    return result


def pi_permutation(partition):
    """pi_lambda: cell i of T(lambda) lands on cell pi(i) of T(lambda^v) under transposition."""
    source = partition.numbering()
    target = partition.transpose.numbering()
    images = [0] * partition.size
    for (i, j), index in source.items():
        images[index - 1] = target[(j, i)]
    return PartitionPermutation(tuple(images))


def _horizontal_strips(shape, count):
    """Shapes obtained from shape by adding count cells, no two in one column."""
    rows = list(shape) + [0]
    results = []

    def extend(row, remaining, current):
        if row == len(rows):
            if remaining == 0:
                results.append(tuple(p for p in current if p))
            return
        limit = remaining if row == 0 else min(remaining, rows[row - 1] - rows[row])
        for added in range(limit, -1, -1):
            extend(row + 1, remaining - added, current + [rows[row] + added])

    extend(0, count, [])
    return results


def _strict(cells, labels):
    """Every cell's north-east quadrant holds at least as many i's as j's for i < j."""
    labelled = [(cell, label) for cell, label in cells.items() if label]
    for (r, c) in cells:
        counts = [0] * (labels + 1)
        for (r2, c2), label in labelled:
            if r2 <= r and c2 >= c:
                counts[label] += 1
        if any(counts[i] < counts[i + 1] for i in range(1, labels)):
            return False
    return True


@lru_cache(maxsize=None)
def _lr_table(shape, mu):
    states = [({cell: 0 for cell in shape.cells()}, shape.parts)]
    for label, count in enumerate(mu.parts, start=1):
        next_states = []
        for filling, parts in states:
            for grown in _horizontal_strips(parts, count):
                cells = dict(filling)
                for i, length in enumerate(grown, start=1):
                    old = parts[i - 1] if i <= len(parts) else 0
                    for j in range(old + 1, length + 1):
                        cells[(i, j)] = label
                if _strict(cells, label):
                    next_states.append((cells, grown))
        states = next_states
    tally = {}
    for _, parts in states:
        nu = Partition(parts)
        tally[nu] = tally.get(nu, 0) + 1
    return tuple(sorted(tally.items(), reverse=True))


def lr_mult(lam, mu):
    """Strict mu-expansions of lam, tallied by shape."""
    return dict(_lr_table(lam, mu))


def alpha(partition):
    """Product over cells of s^content * [hook length]."""
    result = LaurentPoly.constant(1)
    for i, j in partition.cells():
        result = result * quantum_int(partition.hook_length(i, j)) \
            * LaurentPoly.monomial((0, 0, partition.content(i, j)))
    return result


def alpha_hook(k, l):
    """Closed form of alpha(mu_{k,l})."""
    power = (l * (l - 1) - k * (k - 1)) // 2
    return LaurentPoly.monomial((0, 0, power)) * quantum_int(k + l - 1) \
        * quantum_factorial(k - 1) * quantum_factorial(l - 1)


def framing_exponent(partition):
    return sum(p * p for p in partition.parts) - sum(p * p for p in partition.transpose.parts)


def framing_factor(partition):
    n = partition.size
    return LaurentPoly.monomial((n * n, -n, framing_exponent(partition)))


def framing_root_hook(k, l):
    """m-th root of the framing factor of mu_{k,l}, m = k + l - 1."""
    if k < 1 or l < 1:
        raise ValueError(f"framing_root_hook needs k, l >= 1, got ({k}, {l})")
    m = k + l - 1
    return LaurentPoly.monomial((m, -1, m - 2 * k + 1))
