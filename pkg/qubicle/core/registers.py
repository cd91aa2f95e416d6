# -*- encoding: utf-8 -*-

"""
Register Notation - Basis Indices, Bit Vectors & Index Construction

A basis state of a register of ``N`` qubits is written in the register
notation ``|b_1> x |b_2> x ... x |b_N>`` where ``b_i`` is the value of
qubit ``i``. The module converts between a basis index and a bit
vector (qubit ``1`` is the most significant bit) and constructs the
indices ``W`` used by the partial operations.

The index ``W(alpha, k)`` of a register is obtained by placing the
bits ``k`` at the positions of a qubit set ``Q`` and filling the
remaining positions with the bits of ``alpha`` in their order:

.. math::

    W_i = k_j      if i is the j-th element of Q
    W_i = alpha_l  otherwise, l is the next unused position of alpha

The same insertion scheme is used to swap the transposed indices of a
partial transpose, thus no separate kernel is required.
"""

import itertools

from functools import lru_cache
from typing import Sequence

import numpy as np

from qubicle.components.base import BitVector, QubitSet
from qubicle.exceptions import LabelError, LengthMismatch, OutOfRange

def dec2binvec(d : int, n : int) -> BitVector:
    """
    Convert a Basis Index into a Bit Vector of Length ``n``, MSB First

    .. code-block:: python

        from qubicle.core.registers import dec2binvec

        print(dec2binvec(3, 4).bits)
        >> (0, 0, 1, 1)
    """

    if n < 1:
        raise OutOfRange(f"Bit vector length must be positive, got {n}.")

    if d < 0 or d >= 2 ** n:
        raise OutOfRange(f"Index {d} is not within [0, 2^{n}).")

    return BitVector(bits = tuple((d >> (n - 1 - i)) & 1 for i in range(n)))


def binvec2dec(b : BitVector | Sequence[int]) -> int:
    """
    Convert a Bit Vector (MSB First) into a Basis Index
    """

    bits = b.bits if isinstance(b, BitVector) else b

    value = 0
    for bit in bits:
        value = (value << 1) | int(bit)

    return value


def swap_bits(b : BitVector, i : int, j : int) -> BitVector:
    """
    Exchange the Bits at the 1-Based Positions ``i`` and ``j``

    The sequence permutes two qubits of a basis state, for example
    swapping the qubits two and three of ``|0011>`` gives ``|0101>``:

    .. code-block:: python

        from qubicle.core.registers import binvec2dec, dec2binvec, swap_bits

        print(binvec2dec(swap_bits(dec2binvec(3, 4), 2, 3)))
        >> 5
    """

    n = len(b)
    if not (1 <= i <= n and 1 <= j <= n):
        raise LabelError(f"Positions ({i}, {j}) are not within [1, {n}].")

    bits = list(b.bits)
    bits[i - 1], bits[j - 1] = bits[j - 1], bits[i - 1]

    return BitVector(bits = tuple(bits))


def build_binary_vector(
        base : BitVector | Sequence[int],
        insert : BitVector | Sequence[int],
        q : QubitSet
    ) -> int:
    """
    Construct the Basis Index ``W`` by Inserting Bits at Qubits ``Q``

    :type  base: BitVector
    :param base: Bits of the qubits not in ``q``, in ascending order
        of the qubit labels. Length ``N - |q|``.

    :type  insert: BitVector
    :param insert: Bits placed at the qubits of ``q``, the ``j``-th
        bit is placed at the ``j``-th label. Length ``|q|``.

    :type  q: QubitSet
    :param q: The set of qubits which receive the inserted bits, the
        register size ``N`` is ``q.n``.

    The function returns an integer index (and not a bit vector) as
    every caller immediately converts the vector, and the function is
    called in the inner loop of the partial operations. Raises
    :class:`LengthMismatch` if the lengths are inconsistent.

    .. code-block:: python

        from qubicle.components.base import QubitSet
        from qubicle.core.registers import build_binary_vector

        # W = (1, 1, 0), insert bit at qubit 2
        q = QubitSet(labels = (2, ), n = 3)
        print(build_binary_vector((1, 0), (1, ), q))
        >> 6
    """

    base = base.bits if isinstance(base, BitVector) else base
    insert = insert.bits if isinstance(insert, BitVector) else insert

    if len(insert) != len(q.labels) or len(base) + len(insert) != q.n:
        raise LengthMismatch(
            f"Base ({len(base)}) + insert ({len(insert)}) bits must be N = {q.n}, "
            f"with {len(q.labels)} inserted bit(s)."
        )

    value, b, k = 0, 0, 0
    for position in range(1, q.n + 1):
        if k < len(insert) and q.labels[k] == position:
            bit, k = insert[k], k + 1
        else:
            bit, b = base[b], b + 1

        value = (value << 1) | int(bit)

    return value


@lru_cache(maxsize = 128)
def index_table(q : QubitSet) -> np.ndarray:
    """
    Table of All Indices ``W(alpha, k)`` for a Qubit Set

    The element ``[a, k]`` of the ``2^(N - n) x 2^n`` table is the
    index :func:`build_binary_vector` returns for the base bits of the
    index ``a`` and the inserted bits of the index ``k``. For a fixed
    ``q`` the map is a bijection onto ``{0, ..., 2^N - 1}``. The table
    is cached per qubit set and is read-only.
    """

    n, m = len(q), q.n - len(q)
    table = np.empty((2 ** m, 2 ** n), dtype = np.intp)

    # product() enumerates the bits in MSB first counting order
    for a, base in enumerate(itertools.product((0, 1), repeat = m)):
        for k, insert in enumerate(itertools.product((0, 1), repeat = n)):
            table[a, k] = build_binary_vector(base, insert, q)

    table.setflags(write = False)
    return table
