# -*- encoding: utf-8 -*-

"""
Construction of Pure & Mixed States

Base kets and their linear combinations are transformed into density
operators using :func:`state`, and mixtures are obtained using
:func:`mix_states`. The depolarizing mixture of a state with the
maximally mixed state is :func:`noisy_state`:

.. math::

    rho_p = (1 - p) rho_0 + p I_d / d

All constructors return a validated :class:`DensityMatrix`, and
:func:`validate_density` is the only constructor which admits an
externally supplied matrix.
"""

from typing import Iterable, Sequence

import numpy as np

from qubicle.components.states import DensityMatrix, StateVector, check_density
from qubicle.components.base import log2dim, readonly
from qubicle.exceptions import DimensionMismatch, OutOfRange, ParseError, WeightError
from qubicle.utils.numerics import as_matrix, kron

WEIGHT_TOL = 1e-10

def ket(index : int, n_qubits : int) -> StateVector:
    """
    Standard Basis Vector ``|index>`` of a Register of ``n_qubits``

    .. code-block:: python

        from qubicle.core.states import ket

        print(ket(1, 1).amplitudes.real)
        >> [0. 1.]
    """

    if n_qubits < 1:
        raise OutOfRange(f"Number of qubits must be positive, got {n_qubits}.")

    if index < 0 or index >= 2 ** n_qubits:
        raise OutOfRange(f"Basis index {index} is not within [0, 2^{n_qubits}).")

    amplitudes = np.zeros(2 ** n_qubits, dtype = np.complex128)
    amplitudes[index] = 1.0

    return StateVector(amplitudes = amplitudes)


def state(psi : StateVector | Sequence[complex]) -> DensityMatrix:
    """
    Density Operator ``|psi><psi|`` of a Pure State

    The outer product conjugates the bra side, thus
    ``state([1, 1j] / sqrt(2))`` is ``[[1, -1j], [1j, 1]] / 2``. A raw
    amplitude sequence is accepted and raises :class:`NotNormalized`
    if the norm deviates by more than ``1e-8``.
    """

    if not isinstance(psi, StateVector):
        psi = StateVector(amplitudes = psi)

    amplitudes = psi.amplitudes
    return DensityMatrix(matrix = np.outer(amplitudes, amplitudes.conj()))


def mix_states(
        weights : Sequence[float],
        states : Sequence[DensityMatrix]
    ) -> DensityMatrix:
    """
    Convex Mixture ``sum_i w_i rho_i`` of Density Matrices

    :type  weights: list
    :param weights: Non-negative weights which must sum to one within
        ``1e-10``, else :class:`WeightError` is raised. The weights are
        never renormalized - an unnormalized input is a caller bug.

    :type  states: list
    :param states: Density matrices of the same dimension, else
        :class:`DimensionMismatch` is raised.
    """

    weights = np.asarray(weights, dtype = np.float64)

    if weights.ndim != 1 or len(weights) != len(states) or not len(states):
        raise WeightError(
            f"Expected one weight per state, got {weights.size} weight(s) "
            f"for {len(states)} state(s)."
        )

    if np.any(weights < 0.0):
        raise WeightError(f"Weights {weights.tolist()} contain a negative value.")

    if abs(weights.sum() - 1.0) > WEIGHT_TOL:
        raise WeightError(f"Weights sum to {weights.sum():.12g}, expected 1.")

    dims = {rho.dim for rho in states}
    if len(dims) != 1:
        raise DimensionMismatch(f"States have different dimensions {sorted(dims)}.")

    matrix = sum(w * rho.matrix for w, rho in zip(weights, states))
    return DensityMatrix(matrix = matrix)


def maximally_mixed(n_qubits : int) -> DensityMatrix:
    d = 2 ** n_qubits
    return DensityMatrix(matrix = np.eye(d, dtype = np.complex128) / d)


def noisy_state(rho0 : DensityMatrix, p : float) -> DensityMatrix:
    """
    Depolarizing Mixture ``(1 - p) rho_0 + p I_d / d``

    :type  p: float
    :param p: Noise strength within ``[0, 1]`` else raises
        :class:`OutOfRange`. ``p = 0`` returns ``rho_0`` and ``p = 1``
        the maximally mixed state. Every eigenvalue of the mixture is
        at least ``p / d``.
    """

    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"Mixing parameter p = {p} is not within [0, 1].")

    d = rho0.dim
    matrix = (1.0 - p) * rho0.matrix + p * np.eye(d, dtype = np.complex128) / d

    return DensityMatrix(matrix = matrix)


def purity(rho : DensityMatrix) -> float:
    return rho.purity


def validate_density(rho : np.ndarray, tol : float = 1e-10) -> DensityMatrix:
    """
    Validate an Externally Supplied Matrix as a Density Matrix

    The matrix must be square with a power of two dimension (else
    :class:`BadDimension`), Hermitian (:class:`NonHermitian`), of unit
    trace (:class:`TraceNotOne`) and positive semi-definite
    (:class:`NotPSD`), all within ``tol``, with finite entries only
    (:class:`NonFinite`). The typed density is created without
    re-validation at the default tolerance.

    .. code-block:: python

        from qubicle.core.states import validate_density

        validate_density([[0.5, 0.6], [0.6, 0.5]])
        >> NotPSD: Density has a negative eigenvalue -1.000e-01.
    """

    matrix = as_matrix(rho, square = True)
    log2dim(matrix.shape[0])

    check_density(matrix, tol = tol)
    return DensityMatrix.model_construct(matrix = readonly(matrix))


def bell() -> DensityMatrix:
    """
    Bell State ``|Phi+> = (|00> + |11>) / sqrt(2)``
    """

    return state(np.array([1, 0, 0, 1]) / np.sqrt(2))


def ghz(n_qubits : int = 3) -> DensityMatrix:
    """
    GHZ State ``(|0..0> + |1..1>) / sqrt(2)`` of ``n_qubits >= 2``
    """

    if n_qubits < 2:
        raise OutOfRange(f"GHZ state requires at least 2 qubits, got {n_qubits}.")

    psi = np.zeros(2 ** n_qubits, dtype = np.complex128)
    psi[0] = psi[-1] = 1 / np.sqrt(2)

    return state(psi)


# single qubit kets for the product state notation
SINGLE_QUBIT_KETS = {
    "0" : np.array([1, 0]),
    "1" : np.array([0, 1]),
    "+" : np.array([1, 1]) / np.sqrt(2),
    "-" : np.array([1, -1]) / np.sqrt(2)
}

def product(labels : Iterable[str]) -> DensityMatrix:
    """
    Product of Single Qubit Pure States, e.g. ``product("0+")``

    Each label is one of ``0``, ``1``, ``+`` or ``-``, the first label
    is qubit 1. Raises :class:`ParseError` on an unknown label.
    """

    labels = list(labels)
    if not labels:
        raise ParseError("Product state requires at least one qubit label.")

    unknown = [label for label in labels if label not in SINGLE_QUBIT_KETS]
    if unknown:
        raise ParseError(f"Unknown single qubit state(s) {unknown}, allowed: 0, 1, +, -.")

    psi = np.array([1.0], dtype = np.complex128)
    for label in labels:
        psi = kron(psi, SINGLE_QUBIT_KETS[label]).ravel()

    return state(psi)
