# -*- encoding: utf-8 -*-

"""
Entanglement & Comparison Measures of Quantum States

Entanglement is quantified by the negativity, the magnitude of the
negative part of the spectrum of the partial transpose, and a state
is tested for a positive partial transpose (PPT). The comparison of
two states uses the fidelity between density matrices, and three
measures between the outcome distributions of a computational basis
measurement:

    * **Fidelity** (Bhattacharyya coefficient),
      ``F(p1, p2) = sum_x sqrt(p1(x)) sqrt(p2(x))``.

    * **Chi-Square** w.r.t. the mean ``p = (p1 + p2) / 2``,
      ``chi2(p1, p2) = sum_x (p1(x) - p(x))^2 / p(x)``.

    * **Trace Distance** (total variation),
      ``T(p1, p2) = sum_x |p1(x) - p2(x)| / 2``.
"""

import logging

import numpy as np

from qubicle.components.base import QubitSet
from qubicle.components.states import DensityMatrix, ProbDist, PROB_NEG_TOL, PROB_SUM_TOL
from qubicle.core.partial import ptranspose
from qubicle.exceptions import DimensionMismatch, LabelError, LengthMismatch, NotNormalized
from qubicle.utils.numerics import herm_eig, mat_sqrt_psd, trace_norm

logger = logging.getLogger(__name__)

PPT_TOL = 1e-10
NEGATIVITY_TOL = 1e-10
FIDELITY_OVERSHOOT = 1e-9

def _check_bipartition(rho : DensityMatrix, q : QubitSet) -> None:
    if q.n != rho.nqubits:
        raise LabelError(
            f"Qubit set is defined on {q.n} qubit(s), the state has {rho.nqubits}."
        )

    if not 0 < len(q) < q.n:
        raise LabelError(
            f"Qubit set {q.labels} is not a proper non-empty subset of {q.n} qubit(s)."
        )


def spectrum_pt(rho : DensityMatrix, q : QubitSet) -> np.ndarray:
    """
    Ascending Eigenvalues of the Partial Transpose w.r.t. ``q``
    """

    _check_bipartition(rho, q)
    return herm_eig(ptranspose(rho, q)).eigenvalues


def negativity(rho : DensityMatrix, q : QubitSet) -> float:
    """
    Negativity of a State w.r.t. the Bipartition ``q | complement``

    The negativity is the sum of the magnitudes of the negative
    eigenvalues of the partial transpose. The value is cross-checked
    against the trace norm formula ``(||rho^{T_q}||_1 - 1) / 2`` and a
    disagreement above ``1e-10`` is logged as a warning. The eigenvalue
    sum is returned.

    :type  q: QubitSet
    :param q: A proper non-empty subset of the qubits, else raises
        :class:`LabelError`.

    .. code-block:: python

        from qubicle.components.base import QubitSet
        from qubicle.core import analysis, states

        q = QubitSet(labels = (1, ), n = 2)
        print(analysis.negativity(states.bell(), q))
        >> 0.5
    """

    _check_bipartition(rho, q)

    pt = ptranspose(rho, q)
    eigenvalues = herm_eig(pt).eigenvalues

    value = float(np.sum(np.maximum(0.0, -eigenvalues)))
    crosscheck = (trace_norm(pt) - 1.0) / 2.0

    if abs(value - crosscheck) > NEGATIVITY_TOL:
        logger.warning(
            "Negativity formulas disagree: eigenvalue sum %.12g, trace norm %.12g.",
            value, crosscheck
        )

    return value


def is_ppt(rho : DensityMatrix, q : QubitSet, tol : float = PPT_TOL) -> bool:
    """
    True if the Partial Transpose has no Eigenvalue Below ``-tol``

    A PPT state is necessarily separable for two qubits (and qubit and
    qutrit) systems, while a non-PPT state is always entangled.
    """

    return bool(spectrum_pt(rho, q)[0] >= -tol)


def fidelity(rho1 : DensityMatrix, rho2 : DensityMatrix) -> float:
    """
    Fidelity between Density Matrices, ``tr sqrt(sqrt(rho1) rho2 sqrt(rho1))``

    The formula is computed literally using two PSD square roots. The
    result is clamped to ``[0, 1]`` against the roundoff overshoot, an
    overshoot above ``1e-9`` is logged as a warning. Raises
    :class:`DimensionMismatch` for states of different dimensions.

    Note, this is the *root* fidelity, ``F(|0><0|, I/2) = sqrt(1/2)``.
    """

    if rho1.dim != rho2.dim:
        raise DimensionMismatch(
            f"Can not compare states of dimensions {rho1.dim} and {rho2.dim}."
        )

    root = mat_sqrt_psd(rho1.matrix)
    inner = root @ rho2.matrix @ root

    # the product is hermitian, upto the roundoff of the products
    inner = (inner + inner.conj().T) / 2
    value = float(np.trace(mat_sqrt_psd(inner)).real)

    overshoot = max(value - 1.0, -value)
    if overshoot > FIDELITY_OVERSHOOT:
        logger.warning("Fidelity %.12g is outside [0, 1] beyond roundoff.", value)

    return float(np.clip(value, 0.0, 1.0))


def trace_distance(rho1 : DensityMatrix, rho2 : DensityMatrix) -> float:
    """
    Trace Distance between Density Matrices, ``||rho1 - rho2||_1 / 2``
    """

    if rho1.dim != rho2.dim:
        raise DimensionMismatch(
            f"Can not compare states of dimensions {rho1.dim} and {rho2.dim}."
        )

    return 0.5 * trace_norm(rho1.matrix - rho2.matrix)


def measure_computational(rho : DensityMatrix) -> ProbDist:
    """
    Outcome Distribution of a Measurement in the Computational Basis

    The outcomes are the ``2^N`` basis states, i.e., the shared
    eigenbasis of ``Z x Z x ... x Z``, and the probability of the
    outcome ``i`` is the diagonal element ``<i|rho|i>``. A roundoff
    negative (within ``-1e-12``) is clamped to zero and the
    distribution is renormalized if the sum drifted by at most
    ``1e-10``.

    .. code-block:: python

        from qubicle.core import analysis, states

        dist = analysis.measure_computational(states.maximally_mixed(3))
        print(dist.probs)
        >> [0.125 0.125 0.125 0.125 0.125 0.125 0.125 0.125]
    """

    probs = np.real(np.diagonal(rho.matrix)).copy()
    probs[np.abs(probs) <= PROB_NEG_TOL] = 0.0

    total = probs.sum()
    if abs(total - 1.0) > PROB_SUM_TOL:
        raise NotNormalized(f"Measured probabilities sum to {total:.12g}, expected 1.")

    if total != 1.0:
        logger.debug("Renormalized the measured distribution, sum = %.17g.", total)
        probs = probs / total

    return ProbDist(probs = probs)


def _check_lengths(p1 : ProbDist, p2 : ProbDist) -> None:
    if len(p1) != len(p2):
        raise LengthMismatch(
            f"Can not compare distributions of lengths {len(p1)} and {len(p2)}."
        )


def fidelity_prob(p1 : ProbDist, p2 : ProbDist) -> float:
    """
    Fidelity (Bhattacharyya Coefficient) between Distributions, in ``[0, 1]``
    """

    _check_lengths(p1, p2)

    value = float(np.sum(np.sqrt(p1.probs) * np.sqrt(p2.probs)))
    return min(max(value, 0.0), 1.0)


def chi_square(p1 : ProbDist, p2 : ProbDist) -> float:
    """
    Chi-Square Measure of ``p1`` w.r.t. the Mean ``p = (p1 + p2) / 2``

    The outcomes with ``p(x) = 0`` (thus ``p1(x) = p2(x) = 0``)
    contribute zero, the limit of the term.

    .. code-block:: python

        from qubicle.components.states import ProbDist
        from qubicle.core.analysis import chi_square

        print(chi_square(ProbDist(probs = [1, 0]), ProbDist(probs = [0, 1])))
        >> 1.0
    """

    _check_lengths(p1, p2)

    mean = (p1.probs + p2.probs) / 2
    support = mean > 0.0

    terms = (p1.probs[support] - mean[support]) ** 2 / mean[support]
    return float(np.sum(terms))


def trace_distance_prob(p1 : ProbDist, p2 : ProbDist) -> float:
    _check_lengths(p1, p2)

    value = 0.5 * float(np.sum(np.abs(p1.probs - p2.probs)))
    return min(value, 1.0)
