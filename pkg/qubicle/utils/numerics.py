# -*- encoding: utf-8 -*-

"""
Dense Complex Matrix Kernels

The kernels are consumed by every other module of the package - the
Kronecker product, the Hermitian eigendecomposition, the square root
of a positive semi-definite matrix and the trace norm. All functions
are pure and accept any array like input which is converted to a
``numpy.complex128`` array.

The tolerances are one order looser per composed operation, as the
error compounds through the eigendecomposition:

    * **HERMITIAN_TOL** (``1e-10``) - maximum absolute entry of
      ``h - h^\\dagger`` for a matrix to be accepted as Hermitian.

    * **ZERO_TOL** (``1e-10``) - window ``[-ZERO_TOL, ZERO_TOL]`` of
      eigenvalues treated as numerical zeros by :func:`mat_sqrt_psd`.

    * **SQRT_TOL** (``1e-8``) - promised accuracy of ``S @ S == h``.
"""

import logging

import numpy as np
import scipy.linalg as la

from pydantic import BaseModel, ConfigDict

from qubicle.exceptions import BadDimension, NonFinite, NonHermitian, NotPSD

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-10
ZERO_TOL = 1e-10
SQRT_TOL = 1e-8

class Spectrum(BaseModel):
    """
    Eigenvalues & Eigenvectors of a Hermitian Matrix

    :ivar eigenvalues: Real eigenvalues, sorted in ascending order.

    :ivar eigenvectors: Unitary matrix, the ``i``-th column is the
        eigenvector of the ``i``-th eigenvalue. The phase and the
        order within a degenerate subspace is not constrained, only
        the reconstruction ``V diag(w) V^\\dagger == h`` is.
    """

    model_config = ConfigDict(arbitrary_types_allowed = True, frozen = True)

    eigenvalues : np.ndarray
    eigenvectors : np.ndarray


    def reconstruct(self) -> np.ndarray:
        v, w = self.eigenvectors, self.eigenvalues
        return (v * w) @ v.conj().T


def check_finite(a : np.ndarray, what : str = "Matrix") -> np.ndarray:
    """
    Raise :class:`NonFinite` if any Entry is ``nan`` or ``inf``
    """

    if not np.all(np.isfinite(a)):
        raise NonFinite(f"{what} has non-finite (nan or inf) entries.")

    return a


def as_matrix(a : np.ndarray, square : bool = False) -> np.ndarray:
    """
    Convert an Array Like Object into a 2D Complex Matrix

    Entries must be finite, else :class:`NonFinite` is raised.

    :type  square: bool
    :param square: Raise :class:`BadDimension` if the matrix is not a
        square matrix, defaults to False.
    """

    a = np.asarray(a, dtype = np.complex128)

    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise BadDimension(f"Expected a 2D matrix, got shape {a.shape}.")

    if square and a.shape[0] != a.shape[1]:
        raise BadDimension(f"Expected a square matrix, got {a.shape}.")

    return check_finite(a)


def kron(a : np.ndarray, b : np.ndarray) -> np.ndarray:
    """
    Kronecker (Tensor) Product of Two Matrices

    The element ``(i * rb + k, j * cb + l)`` of the output is the
    product ``a[i, j] * b[k, l]`` - the left factor is the most
    significant block index, which is the register notation
    ``|1> x |0> x ... x |0>`` of the module. Vectors are treated as
    column matrices.

    .. code-block:: python

        from qubicle.utils.numerics import kron

        X, Z = [[0, 1], [1, 0]], [[1, 0], [0, -1]]
        print(kron(X, Z).real)
        >> [[ 0.  0.  1.  0.]
            [ 0. -0.  0. -1.]
            [ 1.  0.  0.  0.]
            [ 0. -1.  0. -0.]]
    """

    a, b = np.asarray(a, dtype = np.complex128), np.asarray(b, dtype = np.complex128)
    a = a.reshape(-1, 1) if a.ndim == 1 else a
    b = b.reshape(-1, 1) if b.ndim == 1 else b

    return np.kron(as_matrix(a), as_matrix(b))


def hermitian_error(h : np.ndarray) -> float:
    """
    Maximum Absolute Entry of ``h - h^\\dagger``
    """

    return float(np.max(np.abs(h - h.conj().T)))


def herm_eig(h : np.ndarray, tol : float = HERMITIAN_TOL) -> Spectrum:
    """
    Eigendecomposition of a Hermitian Matrix

    Uses :func:`scipy.linalg.eigh` on the lower triangle, the result
    is always real eigenvalues (ascending) and a unitary eigenvector
    matrix. A non-Hermitian matrix is rejected instead of being
    silently symmetrized.

    :type  h: np.ndarray
    :param h: Square complex matrix, Hermitian within ``tol``.

    :type  tol: float
    :param tol: Maximum absolute entry of ``h - h^\\dagger``, raises
        :class:`NonHermitian` if exceeded.
    """

    h = as_matrix(h, square = True)

    error = hermitian_error(h)
    if error > tol:
        raise NonHermitian(
            f"Matrix is not Hermitian: max |h - h^H| = {error:.3e} > {tol:.0e}."
        )

    eigenvalues, eigenvectors = la.eigh(h)
    return Spectrum(eigenvalues = eigenvalues, eigenvectors = eigenvectors)


def mat_sqrt_psd(h : np.ndarray, tol : float = ZERO_TOL) -> np.ndarray:
    """
    Square Root of a Positive Semi-Definite Hermitian Matrix

    The square root ``S`` is computed from the spectrum as
    ``V diag(sqrt(w)) V^\\dagger`` and is Hermitian PSD with
    ``S @ S == h`` within ``1e-8``. Density matrices arriving from
    long gate chains carry roundoff, thus eigenvalues within
    ``[-tol, tol]`` are set to exactly zero before the square root.
    The positive half of the window is required because the square
    root amplifies a roundoff eigenvalue of ``1e-16`` into ``1e-8``.
    A genuine eigenvalue inside the window is lost too, e.g. the root
    of ``diag(5e-11)`` is exactly zero and not ``7.07e-6``, which is
    still within the ``S @ S == h`` accuracy.

    :type  tol: float
    :param tol: Numerical zero window, raises :class:`NotPSD` for an
        eigenvalue below ``-tol``.

    .. code-block:: python

        from qubicle.utils.numerics import mat_sqrt_psd

        print(mat_sqrt_psd([[4, 0], [0, 9]]).real)
        >> [[2. 0.]
            [0. 3.]]
    """

    spectrum = herm_eig(h)
    w = spectrum.eigenvalues

    if w[0] < -tol:
        raise NotPSD(
            f"Matrix is not positive semi-definite: eigenvalue {w[0]:.3e} < {-tol:.0e}."
        )

    zeros = np.abs(w) <= tol
    if np.any(zeros & (w != 0.0)):
        logger.debug("Clamped %d roundoff eigenvalue(s) to zero.", int(np.sum(zeros)))

    w = np.where(zeros, 0.0, w)
    return Spectrum(
        eigenvalues = np.sqrt(w), eigenvectors = spectrum.eigenvectors
    ).reconstruct()


def trace_norm(a : np.ndarray) -> float:
    """
    Trace Norm of a Hermitian Matrix, Sum of Absolute Eigenvalues
    """

    return float(np.sum(np.abs(herm_eig(a).eigenvalues)))
