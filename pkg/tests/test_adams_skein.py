import pytest

from adams_skein import (GradedSeries, Inconsistent, P, PatternSystem, Solution, a_bar, a_braid, a_closure,
                         adams_image, c_series, crossing_switch_recursion, d_series, psi2_c2_system,
                         rosso_jones, series_identities, solve_pattern, torus_braid, torus_closure,
                         torus_invariant)
from annulus import AnnulusElement, closure
from config import Config
from diagram_ring import CPoly
from errors import EnumerationLimitError, PatternError
from hecke import BraidWord, from_word
from partitions import Partition
from scalars import DELTA, S, V, X, Z

A1 = AnnulusElement.generator(1)
A2 = AnnulusElement.generator(2)


def test_a_braid():
    assert str(a_braid(1, 1)) == "1 -2"
    assert str(a_braid(0, 2)) == "-1 -2"
    assert a_braid(2, 0).strand_count == 3
    with pytest.raises(ValueError):
        a_braid(0, 0)
    with pytest.raises(ValueError):
        a_braid(-1, 2)


def test_a_closure():
    assert a_closure(0, 0) == A1
    assert a_closure(1, 0) == A2
    assert a_bar(2) == closure(from_word(BraidWord.from_ints(2, [-1])))
    assert a_bar(1) == A1


def test_p_small():
    assert P(1) == A1
    assert P(2) == A2.scale(2 * X ** -1) - (A1 * A1).scale(Z)
    assert str(P(2)) == "2*x^-1*A2 - (s - s^-1)*A1^2"
    with pytest.raises(ValueError):
        P(0)


@pytest.mark.parametrize('m', [1, 2, 3])
def test_p_is_the_adams_image(m):
    assert P(m) == adams_image(m)


@pytest.mark.slow
@pytest.mark.parametrize('m', [4, 5, 6])
def test_p_is_the_adams_image_large(m):
    assert P(m) == adams_image(m)


@pytest.mark.parametrize('m', [1, 2, 3, 4])
def test_crossing_switch_recursion(m):
    assert P(m) == crossing_switch_recursion(m)


def test_series_identities():
    report = series_identities(3)
    assert report.passed, report.lines()
    tags = {result.tag for result in report.results}
    assert {'expansion-positive', 'factorization-plus', 'log-derivative-d', 'crossing-switch-recursion'} <= tags
    with pytest.raises(ValueError):
        series_identities(0)


def test_graded_series_product():
    product = c_series(6) * d_series(6)
    assert product[0] == 1
    assert all(not c for c in product.coefficients[1:])


def test_graded_series_operations():
    series = GradedSeries.from_function('cpoly', 3, CPoly.c)
    assert series.rescale(X)[2] == CPoly.c(2).scale(X ** 2)
    assert series.derivative()[0] == CPoly.c(1)
    assert series.derivative()[1] == CPoly.c(2).scale(2)
    assert series.truncate(2).order == 2
    assert series.first_difference(series) is None
    assert series.first_difference(series + series) == 0
    with pytest.raises(ValueError):
        GradedSeries('nope', [])


def test_torus_braid():
    assert str(torus_braid(3, 2)) == "1 2 1 2"
    assert str(torus_braid(2, -2)) == "-1 -1"
    assert torus_closure(3, 1) == AnnulusElement.generator(3)


@pytest.mark.parametrize('m, p', [(2, 1), (2, 3), (3, 2)])
def test_rosso_jones(m, p):
    assert torus_closure(m, p) == rosso_jones(m, p).scale((X * V ** -1) ** -p)


def test_rosso_jones_rejects_bad_pairs():
    with pytest.raises(ValueError):
        rosso_jones(2, 2)
    with pytest.raises(ValueError):
        rosso_jones(2, 0)


def test_torus_invariant():
    assert torus_invariant(1, 5) == DELTA
    assert torus_invariant(2, 3, normalize=True) == DELTA * (2 * V ** 2 - V ** 4 + V ** 2 * Z ** 2)
    assert torus_invariant(2, 3, N=2, normalize=True, h_order=0) == [2]
    with pytest.raises(ValueError):
        torus_invariant(2, 4)
    with pytest.raises(ValueError):
        torus_invariant(2, 3, h_order=1)


def test_solve_pattern_for_p2():
    patterns = [closure(from_word(BraidWord.from_ints(2, [1]))), closure(from_word(BraidWord.from_ints(2, [-1])))]
    result = solve_pattern(PatternSystem(P(2), patterns))
    assert isinstance(result, Solution)
    assert list(result.coefficients) == [X ** -1, X]
    assert result.free == ()


def test_solve_pattern_zero_row():
    result = solve_pattern(PatternSystem(A2, [A1 * A1]))
    assert isinstance(result, Inconsistent)
    assert result.unknown is None
    assert result.second_equations == ((2,),)


def test_solve_pattern_free_unknown():
    result = solve_pattern(PatternSystem(A2.scale(S), [A2, A2.scale(X)]))
    assert isinstance(result, Solution)
    assert result.coefficients[0] == S
    assert result.free == (1,)


def test_pattern_system_validation():
    with pytest.raises(PatternError):
        PatternSystem(A2, [])
    with pytest.raises(PatternError):
        PatternSystem(A2, [A2 + A1])
    with pytest.raises(PatternError):
        PatternSystem(A2, [A1])


@pytest.mark.parametrize('decoration', [Partition((1, 1)), Partition((2,))])
@pytest.mark.parametrize('reverse', [False, True])
def test_decorated_patterns_are_inconsistent(decoration, reverse):
    result = solve_pattern(psi2_c2_system(decoration, reverse=reverse))
    assert isinstance(result, Inconsistent)
    assert result.unknown in (0, 1)
    assert len(result.first_equations) == 2
    assert len(result.second_equations) == 2
    assert result.first_values[result.unknown] != result.second_values[result.unknown]


def test_strand_and_exponent_caps(monkeypatch):
    monkeypatch.setattr(Config, 'MAX_STRANDS', 3)
    monkeypatch.setattr(Config, 'MAX_EXPONENT', 5)
    assert P(3)
    with pytest.raises(EnumerationLimitError):
        P(4)
    with pytest.raises(EnumerationLimitError):
        torus_braid(4, 1)
    with pytest.raises(EnumerationLimitError):
        torus_braid(2, 7)
    with pytest.raises(EnumerationLimitError):
        rosso_jones(2, 7)
    assert torus_braid(2, -5).writhe == -5
