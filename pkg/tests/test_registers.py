# -*- encoding: utf-8 -*-

import itertools

import numpy as np
import pytest

from qubicle.components.base import BitVector, QubitSet
from qubicle.core.registers import (
    binvec2dec,
    build_binary_vector,
    dec2binvec,
    index_table,
    swap_bits
)
from qubicle.exceptions import LabelError, LengthMismatch, OutOfRange, ParseError

from conftest import all_subsets

def test_dec2binvec_msb_first():
    assert dec2binvec(0, 4).bits == (0, 0, 0, 0)
    assert dec2binvec(3, 4).bits == (0, 0, 1, 1)
    assert dec2binvec(2 ** 5 - 1, 5).bits == (1, ) * 5


@pytest.mark.parametrize("d, n", [(16, 4), (-1, 3), (0, 0)])
def test_dec2binvec_out_of_range(d, n):
    with pytest.raises(OutOfRange):
        dec2binvec(d, n)


def test_binvec2dec_and_roundtrip():
    assert binvec2dec((0, 0, 0, 0)) == 0
    assert binvec2dec(BitVector(bits = (0, 1, 0, 1))) == 5
    assert [binvec2dec(dec2binvec(d, 4)) for d in range(16)] == list(range(16))


@pytest.mark.parametrize("n", range(1, 13))
def test_dec2binvec_roundtrip(n):
    assert all(binvec2dec(dec2binvec(d, n)) == d for d in range(2 ** n))


def test_bit_vector_rejects_non_binary():
    with pytest.raises(OutOfRange):
        BitVector(bits = (0, 2, 1))


def test_swap_bits_register_listing():
    # swapping qubits 2 and 3 of |0011> gives |0101>
    swapped = swap_bits(dec2binvec(3, 4), 2, 3)

    assert swapped.bits == (0, 1, 0, 1)
    assert binvec2dec(swapped) == 5

    with pytest.raises(LabelError):
        swap_bits(dec2binvec(3, 4), 0, 5)


def test_build_binary_vector_examples():
    q = QubitSet(labels = (2, ), n = 3)
    assert build_binary_vector((1, 0), (1, ), q) == 6

    full = QubitSet(labels = (1, 2, 3), n = 3)
    assert build_binary_vector((), (1, 0, 1), full) == 5

    empty = QubitSet(labels = (), n = 3)
    assert build_binary_vector((0, 1, 1), (), empty) == 3


def test_build_binary_vector_length_mismatch():
    q = QubitSet(labels = (2, ), n = 3)

    with pytest.raises(LengthMismatch):
        build_binary_vector((1, 0, 1), (1, ), q)

    with pytest.raises(LengthMismatch):
        build_binary_vector((1, ), (1, 0), q)


@pytest.mark.parametrize("n", range(1, 7))
def test_build_binary_vector_is_bijection(n):
    for labels in all_subsets(n):
        q = QubitSet(labels = labels, n = n)

        indices = [
            build_binary_vector(base, insert, q)
            for base in itertools.product((0, 1), repeat = n - len(labels))
            for insert in itertools.product((0, 1), repeat = len(labels))
        ]
        assert sorted(indices) == list(range(2 ** n))


def test_index_table_matches_scalar_construction():
    q = QubitSet(labels = (1, 3), n = 4)
    table = index_table(q)

    assert table.shape == (4, 4)
    assert not table.flags.writeable

    for a, k in itertools.product(range(4), range(4)):
        expected = build_binary_vector(dec2binvec(a, 2), dec2binvec(k, 2), q)
        assert table[a, k] == expected

    assert np.array_equal(np.sort(table.ravel()), np.arange(16))


def test_qubit_set_validation_and_complement():
    q = QubitSet.from_labels([3, 1], n = 4)

    assert q.labels == (1, 3)
    assert q.complement().labels == (2, 4)
    assert 3 in q and 2 not in q

    with pytest.raises(LabelError):
        QubitSet(labels = (0, 1), n = 2)

    with pytest.raises(LabelError):
        QubitSet(labels = (2, 1), n = 2)

    with pytest.raises(LabelError):
        QubitSet.from_labels([1, 1], n = 2)


def test_qubit_set_parse():
    assert QubitSet.split_labels(" 3,1  2 ") == (3, 1, 2)
    assert QubitSet.split_labels("") == ()
    assert QubitSet.parse("1, 2 3", n = 3).labels == (1, 2, 3)

    with pytest.raises(ParseError):
        QubitSet.parse("1,a", n = 3)

    with pytest.raises(LabelError):
        QubitSet.parse("1,4", n = 3)
