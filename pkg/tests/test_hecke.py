import pytest
from itertools import permutations

from config import Config
from errors import EnumerationLimitError, StrandMismatchError
from hecke import (BraidWord, HeckeElement, _length_weighted_sum, a_element, b_element, cable_word, cyclic_shift,
                   decorate, e_lambda, from_word, left_multiply, mul, ppb_word, right_multiply, tensor)
from partitions import Partition, alpha
from scalars import S, Scalar, X, Z


def word(n, *letters):
    return BraidWord.from_ints(n, letters)


def test_quadratic_relation():
    sigma = HeckeElement.basis((1, 0))
    assert from_word(word(2, 1)) == sigma
    assert from_word(word(2, 1, 1)) == sigma.scale(X * Z) + HeckeElement.one(2).scale(X * X)


def test_inverse_letter():
    sigma = from_word(word(2, 1))
    sigma_inv = from_word(word(2, -1))
    assert sigma_inv == sigma.scale(X ** -2) - HeckeElement.one(2).scale(X ** -1 * Z)
    assert from_word(word(2, 1, -1)) == HeckeElement.one(2)
    assert sigma.scale(X ** -1) - sigma_inv.scale(X) == HeckeElement.one(2).scale(Z)


def test_ppb_roundtrip():
    for p in permutations(range(3)):
        assert from_word(ppb_word(p)) == HeckeElement.basis(p)


def test_braid_relations():
    assert from_word(word(3, 1, 2, 1)) == from_word(word(3, 2, 1, 2))
    assert from_word(word(4, 1, 3)) == from_word(word(4, 3, 1))
    w = word(3, 1, -2, 1, 2)
    assert from_word(w + w.inverse()) == HeckeElement.one(3)


def test_multiplication_is_concatenation():
    u, w = word(3, 1, -2), word(3, 2, 2, -1)
    assert mul(from_word(u), from_word(w)) == from_word(u + w)
    assert right_multiply(from_word(u), w) == from_word(u + w)
    assert left_multiply(u, from_word(w)) == from_word(u + w)


def test_symmetrizers():
    a2 = a_element(2)
    assert a2 == HeckeElement.one(2) + HeckeElement.basis((1, 0)).scale(X ** -1 * S)
    assert right_multiply(a_element(3), word(3, 2)) == a_element(3).scale(X * S)
    assert left_multiply(word(3, 1), b_element(3)) == b_element(3).scale(-X * S ** -1)


def test_e_lambda():
    assert e_lambda(Partition((1,))) == HeckeElement.one(1)
    assert e_lambda(Partition((2,))) == a_element(2)
    assert e_lambda(Partition((1, 1))) == b_element(2)
    e = e_lambda(Partition((2, 1)))
    assert mul(e, e) == e.scale(alpha(Partition((2, 1))))
    assert not mul(e_lambda(Partition((3,))), e)


def test_tensor():
    sigma = from_word(word(2, 1))
    assert tensor(sigma, HeckeElement.one(1)) == from_word(word(3, 1))
    assert tensor(HeckeElement.one(1), sigma) == from_word(word(3, 2))


def test_cable_word():
    assert str(cable_word(word(2, 1), 2)) == "2 1 3 2"
    assert cable_word(word(2, -1), 2).writhe == -4
    assert cable_word(word(3, 1, 2), 1) == word(3, 1, 2)
    with pytest.raises(ValueError):
        cable_word(word(2, 1), 0)


def test_decorate_single_strand():
    decorated = decorate(BraidWord(1), Partition((2,)))
    assert decorated == a_element(2).scale(Scalar.coerce(1) / Scalar.coerce(alpha(Partition((2,)))))
    assert mul(decorated, decorated) == decorated


def test_braid_word_validation():
    with pytest.raises(ValueError):
        BraidWord(2, ((2, 1),))
    with pytest.raises(ValueError):
        BraidWord(0)
    with pytest.raises(ValueError):
        BraidWord(3, ((1, 2),))


def test_braid_word_properties():
    w = word(3, 1, -2, 1)
    assert w.writhe == 1
    assert str(w) == "1 -2 1"
    assert str(w.inverse()) == "-1 2 -1"
    assert w.permutation() == word(3, 1, 2, 1).permutation()
    assert word(2, 1).permutation() == (1, 0)


def test_strand_mismatch():
    with pytest.raises(StrandMismatchError):
        word(2, 1) + word(3, 1)
    with pytest.raises(StrandMismatchError):
        mul(HeckeElement.one(2), HeckeElement.one(3))
    with pytest.raises(StrandMismatchError):
        HeckeElement.one(2) + HeckeElement.one(3)
    assert HeckeElement.one(2) != HeckeElement.one(3)


def test_enumeration_cap(monkeypatch):
    monkeypatch.setattr(Config, 'MAX_STRANDS', 3)
    with pytest.raises(EnumerationLimitError):
        _length_weighted_sum(4, X)
    assert len(_length_weighted_sum(3, X)) == 6


def test_cyclic_shift():
    assert cyclic_shift((2, 1, 0), 0) == (0, 2, 1)
    assert cyclic_shift((1, 0, 2), 0) == (1, 0, 2)
    assert cyclic_shift((1, 2, 0), 1) == (2, 0, 1)
