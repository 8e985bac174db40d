import pytest

from annulus import AnnulusElement
from chords import ChordDiagram
from config import Config
from diagram_ring import CPoly, DiagramVector, d
from errors import ParseError
from partitions import Partition
from scalars import DELTA, S, Scalar, X, Z
from utils import parse_braid_word, parse_expression, parse_matching, parse_partition


def test_parse_partition():
    assert parse_partition("4,2,1") == Partition((4, 2, 1))
    assert parse_partition(" (3, 1) ") == Partition((3, 1))
    assert parse_partition("0") == Partition()
    assert parse_partition("(0)") == Partition()
    assert parse_partition("") == Partition()
    assert parse_partition("()") == Partition()


@pytest.mark.parametrize("text, position", [("2,3", 2), ("4,x", 2), ("1,0", 0), ("3,-1", 2)])
def test_parse_partition_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_partition(text)
    assert info.value.position == position


def test_parse_error_annotation():
    with pytest.raises(ParseError) as info:
        parse_partition("2,3")
    assert info.value.annotated().splitlines()[-1] == "    ^"
    assert "position 2" in str(info.value)


def test_parse_braid_word():
    word = parse_braid_word("1 -2 1")
    assert word.strand_count == 3
    assert word.letters == ((1, 1), (2, -1), (1, 1))
    assert parse_braid_word("1,2", strands=4).strand_count == 4
    assert parse_braid_word("", strands=1).letters == ()


def test_parse_braid_word_errors():
    with pytest.raises(ParseError) as info:
        parse_braid_word("1 3", strands=3)
    assert info.value.position == 2
    with pytest.raises(ParseError):
        parse_braid_word("1 0")
    with pytest.raises(ParseError):
        parse_braid_word("1 a")


def test_parse_matching():
    assert parse_matching("1-3,2-4") == ChordDiagram.from_pairs([(1, 3), (2, 4)])
    with pytest.raises(ParseError) as info:
        parse_matching("1-3,1-4")
    assert "used twice" in str(info.value)
    assert info.value.position == 4
    with pytest.raises(ParseError):
        parse_matching("1-5,2-3")
    with pytest.raises(ParseError):
        parse_matching("1+2")


def test_parse_scalar():
    assert parse_expression("x^-1*s + 2") == X ** -1 * S + 2
    assert parse_expression("z") == Z
    assert parse_expression("delta*(x - 1)/(s + 1)") == DELTA * (X - 1) / (S + 1)
    assert parse_expression("3/4") == Scalar.coerce(3) / 4


def test_parse_cpoly():
    assert parse_expression("c1^2 - 2*c2", 'cpoly') == CPoly.c(1) ** 2 - CPoly.c(2).scale(2)
    assert parse_expression("s*d2", 'cpoly') == d(2).scale(S)
    assert parse_expression("1", 'cpoly') == CPoly.constant(1)


def test_parse_annulus():
    A1, A2 = AnnulusElement.generator(1), AnnulusElement.generator(2)
    assert parse_expression("2*x^-1*A2 - z*A1^2", 'annulus') == A2.scale(2 * X ** -1) - (A1 * A1).scale(Z)


def test_parse_diagrams():
    value = parse_expression("(4) - (2,1,1) + (2,2)", 'diagram')
    expected = DiagramVector({Partition((4,)): 1, Partition((2, 1, 1)): -1, Partition((2, 2)): 1})
    assert value == expected
    assert parse_expression("x*(1)", 'diagram') == DiagramVector.diagram(Partition((1,))).scale(X)


@pytest.mark.parametrize('text, kind', [
    ("__import__('os')", 'scalar'),
    ("x $ 2", 'scalar'),
    ("A1 + x", 'scalar'),
    ("c1", 'annulus'),
    ("x^(1/2)", 'scalar'),
    ("A1^-1", 'annulus'),
    ("(x + 1", 'scalar'),
    ("x +* 2", 'scalar'),
    ("   ", 'scalar'),
])
def test_parse_expression_rejects(text, kind):
    with pytest.raises(ParseError):
        parse_expression(text, kind)


def test_unknown_name_position():
    with pytest.raises(ParseError) as info:
        parse_expression("x + y")
    assert info.value.position == 4


def test_unknown_kind():
    with pytest.raises(ValueError):
        parse_expression("x", 'matrix')


@pytest.mark.parametrize('text, kind', [
    ("c1*9^9^9^9", 'cpoly'),
    ("x^100000", 'scalar'),
    ("((x + 1)^20)^20", 'scalar'),
    ("x^(2^3)", 'scalar'),
    ("1/0", 'scalar'),
    ("c99", 'cpoly'),
    ("(30,30)", 'diagram'),
])
def test_parse_expression_caps(text, kind):
    with pytest.raises(ParseError):
        parse_expression(text, kind)


def test_parse_expression_within_caps():
    assert parse_expression("x^-2/2") == X ** -2 / 2
    assert parse_expression("(x^2)^3") == X ** 6
    assert parse_expression("9^3*s") == S * 729
    assert parse_expression("s - 1/(s + 1)") == S - Scalar.coerce(1) / (S + 1)


def test_partition_cell_cap():
    with pytest.raises(ParseError):
        parse_partition("20,10")


def test_braid_word_strand_cap(monkeypatch):
    monkeypatch.setattr(Config, 'MAX_STRANDS', 3)
    assert parse_braid_word("1 2").strand_count == 3
    with pytest.raises(ParseError):
        parse_braid_word("1 2 3")
