import random

import pytest

from config import Config
from diagram_ring import CPoly, DiagramVector, d, hook_pieri, phi, phi_inverse, psi
from errors import EnumerationLimitError
from partitions import Partition, partitions_of
from scalars import S, X


def vector(*pairs):
    return DiagramVector({Partition(parts): coeff for parts, coeff in pairs})


def test_phi_of_generators():
    assert phi(CPoly.c(1) * CPoly.c(1)) == vector(((2,), 1), ((1, 1), 1))
    assert phi(CPoly.c(2)) == vector(((1, 1), 1))
    assert phi(CPoly.constant(1)) == DiagramVector.constant(1)


def test_d_maps_to_rows():
    assert d(2) == CPoly.c(1) ** 2 - CPoly.c(2)
    for l in range(1, 6):
        assert phi(d(l)) == vector(((l,), 1))


def test_c_times_d_is_zero_in_positive_degree():
    for m in range(1, 7):
        total = CPoly()
        for k in range(m + 1):
            total = total + (CPoly.c(k) * d(m - k)).scale((-1) ** k)
        assert total == 0


def test_hook_pieri():
    for k in range(1, 4):
        for l in range(1, 4):
            assert phi(CPoly.c(k) * d(l)) == hook_pieri(k, l)


def test_phi_inverse():
    for parts in [(2, 1), (3, 1), (2, 2), (2, 1, 1)]:
        lam = DiagramVector.diagram(Partition(parts))
        assert phi(phi_inverse(lam)) == lam


def test_psi_two():
    poly, diagrams = psi(2)
    assert poly == CPoly.c(1) ** 2 - CPoly.c(2).scale(2)
    assert diagrams == vector(((2,), 1), ((1, 1), -1))
    assert phi(poly) == diagrams


def test_psi_agrees_with_hooks():
    for m in range(1, 6):
        poly, diagrams = psi(m)
        assert phi(poly) == diagrams


def test_text_forms():
    assert str(d(2)) == "c1^2 - c2"
    assert str(vector(((2,), 1), ((1, 1), -1))) == "(2) - (1,1)"
    assert str(DiagramVector.constant(1)) == "(0)"


def test_diagram_json():
    v = vector(((2,), 1), ((1, 1), -1))
    assert DiagramVector.from_json(v.to_json()) == v
    assert v.to_json()[0][0] == [2]


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        d(-1)
    with pytest.raises(ValueError):
        psi(0)


def test_phi_undoes_phi_inverse_up_to_six_cells():
    for size in range(7):
        for lam in partitions_of(size):
            vector = DiagramVector.diagram(lam)
            assert phi(phi_inverse(vector)) == vector


@pytest.mark.parametrize('seed', range(3))
def test_phi_inverse_on_random_combinations(seed):
    rng = random.Random(seed)
    shapes = [lam for size in range(1, 6) for lam in partitions_of(size)]
    vector = DiagramVector()
    for lam in rng.sample(shapes, 4):
        vector = vector + DiagramVector.diagram(lam).scale(rng.choice([1, -2, X, S ** -1]))
    assert phi(phi_inverse(vector)) == vector


def test_psi_degree_cap(monkeypatch):
    monkeypatch.setattr(Config, 'MAX_DEGREE', 4)
    assert psi(4)[0]
    with pytest.raises(EnumerationLimitError):
        psi(5)
