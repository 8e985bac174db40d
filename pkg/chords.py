import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product

from config import Config
from errors import EnumerationLimitError

logger = logging.getLogger(__name__)


def rotate_partners(partners, r):
    size = len(partners)
    rotated = [0] * size
    for i, j in enumerate(partners):
        rotated[(i + r) % size] = (j + r) % size
    return tuple(rotated)


def canonical_partners(partners):
    """Lexicographically least partner array over all rotations."""
    partners = tuple(partners)
    if not partners:
        return partners
    return min(rotate_partners(partners, r) for r in range(len(partners)))


@dataclass(frozen=True, order=True)
class ChordDiagram:
    """Perfect matching on 2n cyclically ordered points, kept in canonical form.

    partners[i] is the point matched with point i (0-based).
    """
    partners: tuple = ()

    def __post_init__(self):
        partners = tuple(int(j) for j in self.partners)
        size = len(partners)
        if size % 2:
            raise ValueError(f"A chord diagram needs an even number of points, got {size}")
        for i, j in enumerate(partners):
            if not 0 <= j < size or j == i or partners[j] != i:
                raise ValueError(f"Point {i + 1} is not matched exactly once")
        object.__setattr__(self, 'partners', canonical_partners(partners))

    @classmethod
    def from_pairs(cls, pairs):
        """Pairs of 1-based points, e.g. [(1, 3), (2, 4)]."""
        pairs = list(pairs)
        size = 2 * len(pairs)
        partners = [None] * size
        for a, b in pairs:
            for point in (a, b):
                if not 1 <= point <= size:
                    raise ValueError(f"Point {point} is outside 1..{size}")
                if partners[point - 1] is not None:
                    raise ValueError(f"Point {point} is used twice")
            partners[a - 1], partners[b - 1] = b - 1, a - 1
        return cls(tuple(partners))

    @property
    def n(self):
        return len(self.partners) // 2

    def pairs(self):
        return [(i + 1, j + 1) for i, j in enumerate(self.partners) if i < j]

    def rotate(self, r):
        """Same diagram with every point moved r places; equal to self once canonical."""
        return ChordDiagram(rotate_partners(self.partners, r))

    def __str__(self):
        if not self.partners:
            return "()"
        return ",".join(f"{a}-{b}" for a, b in self.pairs())


def lift(partners, sheets):
    """Matching induced on the cover when endpoint i sits on sheet sheets[i]."""
    order = sorted(range(len(partners)), key=lambda i: (sheets[i], i))
    position = {point: index for index, point in enumerate(order)}
    lifted = [0] * len(order)
    for point, index in position.items():
        lifted[index] = position[partners[point]]
    return ChordDiagram(tuple(lifted))


def psi_matching(partners, m):
    """Tally of canonical lifts over all m^(2n) sheet assignments of a raw partner array."""
    if m < 1:
        raise ValueError(f"psi_chords needs m >= 1, got {m}")
    partners = tuple(partners)
    if m ** len(partners) > Config.MAX_CHORD_LIFTS:
        raise EnumerationLimitError(f"{m}^{len(partners)} sheet assignments exceed the configured cap of "
                                    f"{Config.MAX_CHORD_LIFTS}")
    tally = Counter()
    for sheets in product(range(m), repeat=len(partners)):
        tally[lift(partners, sheets)] += 1
    return tally


def psi_chords(diagram, m):
    tally = psi_matching(diagram.partners, m)
    logger.debug(f"psi_{m} of {diagram}: {len(tally)} distinct lifts")
    return tally


def all_matchings(n):
    """Every perfect matching of 2n points as a raw partner array."""
    def pair_up(points):
        if not points:
            yield {}
            return
        first = points[0]
        for k in range(1, len(points)):
            rest = points[1:k] + points[k + 1:]
            for matching in pair_up(rest):
                matching = dict(matching)
                matching[first], matching[points[k]] = points[k], first
                yield matching

    for matching in pair_up(list(range(2 * n))):
        yield tuple(matching[i] for i in range(2 * n))


def format_tally(tally):
    return " + ".join(f"{count}*({diagram})" for diagram, count in
                      sorted(tally.items(), key=lambda item: (-item[1], item[0])))
