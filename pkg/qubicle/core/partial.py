# -*- encoding: utf-8 -*-

"""
Partial Operations - Partial Transpose & Partial Trace

Both operations are performed on an arbitrary set of qubits
``Q = {q_1, ..., q_n}`` of a ``N`` qubit register, using the register
index construction of :mod:`qubicle.core.registers`.

Partial Transpose
-----------------

.. math::

    <alpha| rho^{T_Q} |beta> = <V(alpha, beta)| rho |V(beta, alpha)>

where ``V_i(alpha, beta) = beta_i`` for ``i`` in ``Q`` and ``alpha_i``
otherwise, i.e., the bits of the transposed qubits are exchanged
between the row and the column index.

Partial Trace
-------------

.. math::

    <alpha| tr_Q(rho) |beta> = sum_k <W(alpha, k)| rho |W(beta, k)>

where ``alpha, beta`` are indices of the ``N - n`` remaining qubits
and ``k`` runs over all the ``2^n`` assignments of the qubits in
``Q``. Note, ``Q`` names the qubits which are *removed* (traced out),
which is the summation structure of the formula. The other reading -
``Q`` names the qubits which are *kept* - is :func:`ptrace_keep`.
"""

import numpy as np

from qubicle.components.base import QubitSet
from qubicle.components.states import DensityMatrix
from qubicle.core.registers import index_table
from qubicle.exceptions import LabelError

def _check_labels(rho : DensityMatrix, q : QubitSet) -> None:
    if q.n != rho.nqubits:
        raise LabelError(
            f"Qubit set is defined on {q.n} qubit(s), the state has {rho.nqubits}."
        )


def ptranspose(rho : DensityMatrix, q : QubitSet) -> np.ndarray:
    """
    Partial Transpose of a Density w.r.t. the Qubits ``q``

    The result is a Hermitian matrix of unit trace which is *not*
    necessarily positive semi-definite - a negative eigenvalue is the
    signature of entanglement - thus a plain ``numpy`` matrix is
    returned and not a :class:`DensityMatrix`.

    The row index ``V(alpha, beta)`` only depends on the bits of
    ``alpha`` outside ``q`` and the bits of ``beta`` on ``q``, which
    is the element ``[a_out, b_in]`` of the table of indices ``W``.

    .. code-block:: python

        from qubicle.components.base import QubitSet
        from qubicle.core import partial, states

        bell = states.bell()
        pt = partial.ptranspose(bell, QubitSet(labels = (1, ), n = 2))
        print((2 * pt).real)
        >> [[1. 0. 0. 0.]
            [0. 0. 1. 0.]
            [0. 1. 0. 0.]
            [0. 0. 0. 1.]]
    """

    _check_labels(rho, q)

    table = index_table(q) # [bits outside q, bits on q] -> index

    # inverse of the bijection, index -> (bits outside q, bits on q)
    outside = np.empty(rho.dim, dtype = np.intp)
    inside = np.empty(rho.dim, dtype = np.intp)
    outside[table], inside[table] = np.indices(table.shape)

    # V(alpha, beta) and V(beta, alpha) for all (alpha, beta) pairs
    rows = table[outside[:, None], inside[None, :]]
    cols = table[outside[None, :], inside[:, None]]

    return rho.matrix[rows, cols]


def ptrace(rho : DensityMatrix, q : QubitSet) -> DensityMatrix:
    """
    Partial Trace of a Density, Tracing Out (Removing) the Qubits ``q``

    :type  q: QubitSet
    :param q: The qubits which are traced out, ``|q| < N``. The result
        is the density of the remaining ``N - |q|`` qubits in the
        ascending order of their labels. Tracing out all the qubits is
        :func:`total_trace` which returns a scalar, thus a full set
        raises :class:`LabelError` here.

    The outer loop runs over the pairs ``(alpha, beta)`` of the
    reduced space and the inner sum over ``k``, the indices ``W`` are
    looked up from the (cached) table of
    :func:`qubicle.core.registers.build_binary_vector` results.

    .. code-block:: python

        from qubicle.components.base import QubitSet
        from qubicle.core import partial, states

        # tracing out one qubit of a bell state, is maximally mixed
        reduced = partial.ptrace(states.bell(), QubitSet(labels = (2, ), n = 2))
        print(reduced.matrix.real)
        >> [[0.5 0. ]
            [0.  0.5]]
    """

    _check_labels(rho, q)

    if len(q) == q.n:
        raise LabelError(
            f"Tracing out all {q.n} qubit(s) leaves no register, use total_trace()."
        )

    table = index_table(q) # [alpha, k] -> W(alpha, k)
    reduced = rho.matrix[table[:, None, :], table[None, :, :]].sum(axis = -1)

    return DensityMatrix(matrix = reduced)


def ptrace_keep(rho : DensityMatrix, keep : QubitSet) -> DensityMatrix:
    """
    Reduced Density of the Qubits ``keep``, Tracing Out the Complement
    """

    _check_labels(rho, keep)

    if not len(keep):
        raise LabelError("At least one qubit must be kept, use total_trace().")

    return ptrace(rho, keep.complement())


def total_trace(rho : DensityMatrix) -> float:
    return float(np.trace(rho.matrix).real)
