# -*- encoding: utf-8 -*-

"""
Generator Function(s) to Create Random States & Operators

The random objects are used for the property based analysis of the
partial operations and the measures. All the functions accept a
:class:`numpy.random.Generator` object for reproducibility, or an
integer seed which is passed to :func:`numpy.random.default_rng`.
"""

from typing import Generator, Optional

import numpy as np

from qubicle.components.gates import Unitary
from qubicle.components.states import DensityMatrix, ProbDist, StateVector

def _rng(rng : Optional[np.random.Generator | int]) -> np.random.Generator:
    return rng if isinstance(rng, np.random.Generator) \
        else np.random.default_rng(rng)


def ginibre(
        rows : int,
        cols : int,
        rng : Optional[np.random.Generator | int] = None
    ) -> np.ndarray:
    """
    Complex Matrix with i.i.d. Standard Normal Real & Imaginary Parts
    """

    rng = _rng(rng)
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_pure(
        n : int,
        rng : Optional[np.random.Generator | int] = None
    ) -> StateVector:
    """
    Haar Random Pure State of ``n`` Qubits
    """

    psi = ginibre(2 ** n, 1, rng = rng).ravel()
    return StateVector(amplitudes = psi / np.linalg.norm(psi))


def random_density(
        n : int,
        rank : Optional[int] = None,
        rng : Optional[np.random.Generator | int] = None
    ) -> DensityMatrix:
    """
    Random Density Matrix of ``n`` Qubits from the Ginibre Ensemble

    The density is constructed as ``G G^\\dagger / tr(G G^\\dagger)``
    where ``G`` is a ``2^n x rank`` Ginibre matrix, thus the density
    is of the given rank (full rank, if not defined).

    :type  n: int
    :param n: Number of qubits, the dimension is ``2^n``.

    :type  rank: int
    :param rank: Rank of the density, ``rank = 1`` is a pure state.
        Defaults to the full rank ``2^n`` value.

    Example Usage(s)
    ----------------

    .. code-block:: python

        import qubicle as qb

        rho = qb.utils.generator.random_density(2, rng = 42)
        print(rho.nqubits, round(rho.matrix.trace().real, 12))
        >> 2 1.0
    """

    g = ginibre(2 ** n, rank or 2 ** n, rng = rng)
    rho = g @ g.conj().T

    # exact hermiticity, the product is only hermitian within roundoff
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(matrix = rho / np.trace(rho).real)


def random_unitary(
        n : int,
        rng : Optional[np.random.Generator | int] = None
    ) -> Unitary:
    """
    Haar Random Unitary of ``n`` Qubits using the QR Decomposition

    The phases of the diagonal of ``R`` are absorbed into ``Q`` such
    that the distribution is uniform (Haar) over the unitary group.
    """

    q, r = np.linalg.qr(ginibre(2 ** n, 2 ** n, rng = rng))
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return Unitary(matrix = q * phases, name = "HAAR")


def random_distribution(
        m : int,
        rng : Optional[np.random.Generator | int] = None
    ) -> ProbDist:
    """
    Uniformly (Dirichlet) Random Distribution over ``2^m`` Outcomes
    """

    probs = _rng(rng).dirichlet(np.ones(2 ** m))
    return ProbDist(probs = probs / probs.sum())


def random_densities(
        count : int,
        n : int,
        seed : int = 0,
        **kwargs
    ) -> Generator:
    """
    Create an Iterable of Multiple Random Densities with a Seed

    The function creates an iterable that generates ``count`` random
    densities of ``n`` qubits from a single seeded generator, thus the
    sequence is reproducible. Keyword arguments are passed to
    :func:`random_density` (e.g. ``rank``).

    .. code-block:: python

        import qubicle as qb

        densities = list(qb.utils.generator.random_densities(100, 4))
    """

    rng = np.random.default_rng(seed)

    # generator: use `next()` or `list(...)`
    for _ in range(count):
        yield random_density(n, rng = rng, **kwargs)
