# -*- encoding: utf-8 -*-

"""
Base Class Defination of Quantum Register Components

The abstract base class are pydantic models which are defined to cater
the typical attributes and invariants of a component - like a set of
qubit labels, a bit vector, a state or an operator on a register of
``N`` qubits.

The register convention of the module is fixed once, globally: qubit
``1`` is the leftmost tensor factor *and* the most significant bit of
a basis index. Qubit labels are 1-based everywhere.
"""

import re

from abc import ABC, abstractmethod
from typing import Iterable, Tuple

import numpy as np

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from qubicle.exceptions import BadDimension, LabelError, OutOfRange, ParseError
from qubicle.utils.numerics import check_finite

class BaseComponent(BaseModel, ABC):
    """
    Abstract Base Validator Class for any Register Component

    A component is an immutable (``frozen``) pydantic model which is
    always defined on a register of a known number of qubits. The
    invariants of a component are asserted by a model validator, and
    any violation raises the named error from :mod:`qubicle.exceptions`
    directly, thus a constructed component is always valid.

    Code Example(s)
    ---------------

    .. code-block:: python

        import qubicle.components as components

        class Register(components.base.BaseComponent):
            size : int

            @property
            def nqubits(self) -> int:
                return self.size

    The matrix valued components are derived from
    :class:`MatrixComponent` which converts the input into a read-only
    ``numpy.complex128`` array.
    """

    model_config = ConfigDict(arbitrary_types_allowed = True, frozen = True)


    @property
    @abstractmethod
    def nqubits(self) -> int:
        """
        Number of Qubits the Component is Defined On
        """

        pass


def log2dim(dim : int) -> int:
    """
    Return ``n`` for a Dimension ``2^n``, else Raise BadDimension
    """

    if dim < 1 or dim & (dim - 1):
        raise BadDimension(f"Dimension {dim} is not a power of two.")

    return dim.bit_length() - 1


def readonly(array : np.ndarray) -> np.ndarray:
    array = np.array(array, copy = True)
    array.setflags(write = False)
    return array


class MatrixComponent(BaseComponent):
    """
    Abstract Class Defination of a Square Matrix on ``N`` Qubits

    :ivar matrix: A ``2^N x 2^N`` complex matrix, the input is copied
        and the stored array is read-only. Raises :class:`BadDimension`
        if the matrix is not square or the dimension is not a power of
        two, and :class:`NonFinite` for a ``nan`` or ``inf`` entry.
    """

    matrix : np.ndarray = Field(..., description = "Complex Square Matrix")


    @field_validator("matrix", mode = "before")
    @classmethod
    def validate_matrix(cls, value : object) -> np.ndarray:
        value = np.asarray(value, dtype = np.complex128)

        if value.ndim != 2 or value.shape[0] != value.shape[1]:
            raise BadDimension(f"Expected a square matrix, got shape {value.shape}.")

        log2dim(value.shape[0])
        return readonly(check_finite(value))


    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


    @property
    def nqubits(self) -> int:
        return log2dim(self.dim)


class BitVector(BaseComponent):
    """
    An Ordered Sequence of Bits Addressing a Register

    The ``i``-th bit is the value of qubit ``i`` (1-based) and the
    first bit is the most significant bit of the basis index, check
    :func:`qubicle.core.registers.binvec2dec` for the conversion.

    :ivar bits: Tuple of integers, each ``0`` or ``1``.
    """

    bits : Tuple[int, ...] = Field((), description = "Bits, MSB First")


    @model_validator(mode = "after")
    def validate_bits(self) -> object:
        invalid = [b for b in self.bits if b not in (0, 1)]
        if invalid:
            raise OutOfRange(f"Bit vector contains non-binary value(s) {invalid}.")

        return self


    @property
    def nqubits(self) -> int:
        return len(self.bits)


    def __len__(self) -> int:
        return len(self.bits)


    def __getitem__(self, idx : int) -> int:
        return self.bits[idx]


class QubitSet(BaseComponent):
    """
    An Ordered Set of 1-Based Qubit Labels ``Q = {q_1, ..., q_n}``

    The set selects a subsystem of a ``N`` qubit register for the
    partial operations. The labels are distinct, sorted in ascending
    order and each within ``[1, N]``, else :class:`LabelError` is
    raised. An empty set is a valid set.

    :ivar labels: Strictly increasing tuple of labels.

    :ivar n: Total number of qubits of the register, ``N``.

    Example Usage(s)
    ----------------

    .. code-block:: python

        from qubicle.components.base import QubitSet

        q = QubitSet.from_labels([3, 1], n = 4) # sorted on creation
        print(q.labels, len(q), 2 in q)
        >> (1, 3) 2 False

        # the complement, i.e., the labels not in the set
        print(q.complement().labels)
        >> (2, 4)
    """

    labels : Tuple[int, ...] = Field((), description = "Qubit Labels")
    n : int = Field(..., description = "Total Number of Qubits")


    @model_validator(mode = "after")
    def validate_labels(self) -> object:
        labels, n = self.labels, self.n

        if n < 1:
            raise LabelError(f"Register must have at least one qubit, got N = {n}.")

        if any(q < 1 or q > n for q in labels):
            raise LabelError(f"Labels {labels} are not within [1, {n}].")

        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise LabelError(f"Labels {labels} are not distinct and ascending.")

        return self


    @classmethod
    def from_labels(cls, labels : Iterable[int], n : int) -> "QubitSet":
        """
        Create a Set from Labels in Any Order, Rejecting Duplicates
        """

        labels = [int(q) for q in labels]
        if len(set(labels)) != len(labels):
            raise LabelError(f"Duplicate qubit label(s) in {labels}.")

        return cls(labels = tuple(sorted(labels)), n = n)


    @staticmethod
    def split_labels(text : str) -> Tuple[int, ...]:
        """
        Split a Comma/Space Separated List of Labels, e.g. ``"1,2,3"``

        Only the integer syntax is checked, raises :class:`ParseError`
        otherwise. The range is validated by the set (or the caller).
        """

        tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]

        try:
            return tuple(int(t) for t in tokens)
        except ValueError:
            raise ParseError(f"Invalid qubit list `{text}`, expected integers.")


    @classmethod
    def parse(cls, text : str, n : int) -> "QubitSet":
        """
        Parse a Comma/Space Separated List of Labels, e.g. ``"1,2,3"``
        """

        return cls.from_labels(cls.split_labels(text), n = n)


    @property
    def nqubits(self) -> int:
        return self.n


    def complement(self) -> "QubitSet":
        return QubitSet(
            labels = tuple(q for q in range(1, self.n + 1) if q not in self.labels),
            n = self.n
        )


    def __len__(self) -> int:
        return len(self.labels)


    def __contains__(self, label : int) -> bool:
        return label in self.labels
