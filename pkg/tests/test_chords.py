import pytest

from chords import (ChordDiagram, all_matchings, canonical_partners, format_tally, lift, psi_chords,
                    psi_matching, rotate_partners)
from config import Config
from errors import EnumerationLimitError

CROSSING = ChordDiagram.from_pairs([(1, 3), (2, 4)])
PARALLEL = ChordDiagram.from_pairs([(1, 2), (3, 4)])


def test_crossing_pair_doubled():
    tally = psi_chords(CROSSING, 2)
    assert dict(tally) == {CROSSING: 8, PARALLEL: 8}
    assert format_tally(tally) == "8*(1-2,3-4) + 8*(1-3,2-4)"


def test_single_chord():
    chord = ChordDiagram.from_pairs([(1, 2)])
    for m in range(1, 5):
        assert dict(psi_chords(chord, m)) == {chord: m ** 2}


@pytest.mark.parametrize('n', [1, 2, 3])
def test_lift_counts_sum_to_all_sheet_choices(n):
    for partners in all_matchings(n):
        assert sum(psi_matching(partners, 2).values()) == 2 ** (2 * n)


def test_all_matchings_count():
    assert len(list(all_matchings(1))) == 1
    assert len(list(all_matchings(2))) == 3
    assert len(list(all_matchings(3))) == 15


def test_canonical_form():
    assert ChordDiagram((3, 2, 1, 0)) == ChordDiagram((1, 0, 3, 2))
    assert canonical_partners((1, 0, 3, 2)) == (1, 0, 3, 2)
    assert canonical_partners(()) == ()
    assert rotate_partners((1, 0, 3, 2), 1) == (3, 2, 1, 0)
    assert CROSSING.rotate(3) == CROSSING


def test_lift_on_one_sheet_is_identity():
    assert lift(CROSSING.partners, (0, 0, 0, 0)) == CROSSING
    assert lift(CROSSING.partners, (0, 1, 0, 1)) == PARALLEL


def test_text_form():
    assert str(CROSSING) == "1-3,2-4"
    assert str(ChordDiagram()) == "()"
    assert CROSSING.pairs() == [(1, 3), (2, 4)]
    assert CROSSING.n == 2


def test_invalid_matchings():
    with pytest.raises(ValueError):
        ChordDiagram((1, 0, 2))
    with pytest.raises(ValueError):
        ChordDiagram((1, 2, 0, 3))
    with pytest.raises(ValueError):
        ChordDiagram.from_pairs([(1, 3), (1, 4)])
    with pytest.raises(ValueError):
        ChordDiagram.from_pairs([(1, 5), (2, 3)])
    with pytest.raises(ValueError):
        psi_chords(CROSSING, 0)


def test_lift_budget(monkeypatch):
    monkeypatch.setattr(Config, 'MAX_CHORD_LIFTS', 16)
    assert sum(psi_chords(CROSSING, 2).values()) == 16
    with pytest.raises(EnumerationLimitError):
        psi_chords(CROSSING, 3)
