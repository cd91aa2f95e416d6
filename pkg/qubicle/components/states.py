# -*- encoding: utf-8 -*-

"""
Defination of the Quantum State Components

A quantum register is either described by a pure state (a unit norm
:class:`StateVector`) or by a possibly mixed state, a
:class:`DensityMatrix`. The outcome of a projective measurement is a
probability distribution, :class:`ProbDist`. All the invariants are
asserted on creation and a violation raises a named error.
"""

import numpy as np

from pydantic import Field, field_validator, model_validator

from qubicle.components.base import BaseComponent, MatrixComponent, log2dim, readonly
from qubicle.exceptions import NotNormalized, NotPSD, OutOfRange, TraceNotOne, NonHermitian
from qubicle.utils.numerics import check_finite, hermitian_error

DENSITY_TOL = 1e-10 # hermiticity, trace and positivity of a density
NORM_TOL = 1e-8 # accepted deviation of a state vector norm
PROB_NEG_TOL = 1e-12 # numerical zero window of a probability
PROB_SUM_TOL = 1e-10

def check_density(matrix : np.ndarray, tol : float = DENSITY_TOL) -> np.ndarray:
    """
    Assert the Invariants of a Density Matrix, Raise Named Errors

    The function checks that the (square, power of two) ``matrix`` is
    Hermitian, has a unit trace and all the eigenvalues are ``>= -tol``
    in the order, raising :class:`NonHermitian`, :class:`TraceNotOne`
    and :class:`NotPSD` respectively, after rejecting non-finite
    entries with :class:`NonFinite`. Returns the input on success.
    """

    check_finite(matrix, what = "Density")
    error = hermitian_error(matrix)
    if error > tol:
        raise NonHermitian(f"Density is not Hermitian: max |rho - rho^H| = {error:.3e}.")

    trace = np.trace(matrix)
    if abs(trace - 1.0) > tol:
        raise TraceNotOne(f"Density trace is {trace.real:.12g}, expected 1.")

    # hermiticity is asserted, the lower triangle is used by eigvalsh
    minimum = np.linalg.eigvalsh(matrix)[0]
    if minimum < -tol:
        raise NotPSD(f"Density has a negative eigenvalue {minimum:.3e}.")

    return matrix


class StateVector(BaseComponent):
    """
    A Pure State ``|psi>`` of a Register of ``N`` Qubits

    :ivar amplitudes: Complex vector of length ``2^N`` with unit norm,
        a deviation of the norm above ``1e-8`` raises
        :class:`NotNormalized`. The stored array is read-only.
    """

    amplitudes : np.ndarray = Field(..., description = "Amplitudes, Length 2^N")


    @field_validator("amplitudes", mode = "before")
    @classmethod
    def validate_amplitudes(cls, value : object) -> np.ndarray:
        value = np.asarray(value, dtype = np.complex128).ravel()
        log2dim(value.size)
        check_finite(value, what = "State vector")

        norm = np.linalg.norm(value)
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalized(f"State vector norm is {norm:.12g}, expected 1.")

        return readonly(value)


    @property
    def dim(self) -> int:
        return self.amplitudes.size


    @property
    def nqubits(self) -> int:
        return log2dim(self.dim)


class DensityMatrix(MatrixComponent):
    """
    A (Possibly Mixed) State ``rho`` of a Register of ``N`` Qubits

    A density matrix is a ``2^N x 2^N`` Hermitian, positive
    semi-definite matrix with a unit trace. The invariants are checked
    within ``1e-10`` on creation (check :func:`check_density`), thus
    the PSD property of a constructed density is unconditional. An
    externally supplied matrix with a different tolerance is admitted
    by :func:`qubicle.core.states.validate_density` only.

    .. code-block:: python

        import numpy as np
        from qubicle.components.states import DensityMatrix

        rho = DensityMatrix(matrix = np.eye(2) / 2)
        print(rho.nqubits, rho.purity)
        >> 1 0.5

        DensityMatrix(matrix = np.eye(2)) # ❌ trace is 2
        >> TraceNotOne ...
    """

    @model_validator(mode = "after")
    def validate_density(self) -> object:
        check_density(self.matrix)
        return self


    @property
    def purity(self) -> float:
        """
        Purity ``tr(rho^2)`` of the State, in ``[1/d, 1]``
        """

        return float(np.sum(np.abs(self.matrix) ** 2))


class ProbDist(BaseComponent):
    """
    Outcome Distribution of a Measurement on ``m`` Qubits

    :ivar probs: Real vector of length ``2^m``. Entries within
        ``[-1e-12, 1e-12]`` are numerical zeros and set to exactly zero
        on creation, and the vector must sum to one within ``1e-10``.
        A more negative entry raises :class:`OutOfRange`, and a sum
        outside the window raises :class:`NotNormalized`.

    The outcome ``i`` is the basis index of the measured qubits, most
    significant qubit first.
    """

    probs : np.ndarray = Field(..., description = "Probabilities, Length 2^m")


    @field_validator("probs", mode = "before")
    @classmethod
    def validate_probs(cls, value : object) -> np.ndarray:
        value = np.asarray(value, dtype = np.float64).ravel()
        log2dim(value.size)
        check_finite(value, what = "Distribution")

        if np.any(value < -PROB_NEG_TOL):
            raise OutOfRange(f"Negative probability {value.min():.3e} in distribution.")

        total = value.sum()
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise NotNormalized(f"Probabilities sum to {total:.12g}, expected 1.")

        value = np.where(np.abs(value) <= PROB_NEG_TOL, 0.0, value)
        return readonly(value)


    @property
    def nqubits(self) -> int:
        return log2dim(self.probs.size)


    def __len__(self) -> int:
        return self.probs.size
