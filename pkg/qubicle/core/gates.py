# -*- encoding: utf-8 -*-

"""
Gate Constructors, Embedding, Fourier Transform & State Evolution

A computation is performed using :func:`evolve` which conjugates a
density by a unitary gate, ``U rho U^\\dagger``. A gate on ``k`` qubits
is embedded into the register of ``n`` qubits by :func:`lift` and a
circuit (an ordered list of gates) is either folded into a single
unitary (:func:`fold`) or applied step by step (:func:`run`).

The gate application is always a dense ``2^N x 2^N`` conjugation,
for the registers of the module (``N <= 7``) this is fast and keeps
the correctness of the evolution auditable.
"""

import cmath
import logging
import re

from typing import Optional, Sequence

import numpy as np

from qubicle.components.base import QubitSet
from qubicle.components.gates import CircuitSpec, Unitary
from qubicle.components.states import DensityMatrix
from qubicle.core.registers import index_table
from qubicle.exceptions import DimensionMismatch, LabelError, NonFinite, UnknownGate

logger = logging.getLogger(__name__)

SQRT2 = np.sqrt(2)

# ? textbook matrices, qubit 1 (MSB) is the control of CNOT
STANDARD_GATES = {
    "I" : np.eye(2),
    "X" : np.array([[0, 1], [1, 0]]),
    "Y" : np.array([[0, -1j], [1j, 0]]),
    "Z" : np.array([[1, 0], [0, -1]]),
    "H" : np.array([[1, 1], [1, -1]]) / SQRT2,
    "S" : np.array([[1, 0], [0, 1j]]),
    "T" : np.array([[1, 0], [0, cmath.exp(1j * np.pi / 4)]]),
    "CNOT" : np.array([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0]
    ]),
    "SWAP" : np.array([
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1]
    ])
}

def std_gate(name : str, theta : Optional[float] = None) -> Unitary:
    """
    Return a Standard Gate by Name

    :type  name: str
    :param name: One of ``I, X, Y, Z, H, S, T, CNOT, SWAP`` or
        ``PHASE`` (case insensitive). The phase gate is
        ``diag(1, exp(i theta))`` and the angle is either passed as
        ``theta`` or in the name, like ``"phase(0.25)"``. An unknown
        name raises :class:`UnknownGate` and a ``nan`` or ``inf`` angle
        raises :class:`NonFinite`.

    .. code-block:: python

        from qubicle.core.gates import std_gate

        cnot = std_gate("CNOT") # |10> -> |11>, control is qubit 1
        phase = std_gate("phase(3.141592653589793)") # same as Z
    """

    key = name.strip().upper()

    matched = re.fullmatch(r"PHASE\s*\(\s*([^)]+)\s*\)", key)
    if matched:
        try:
            key, theta = "PHASE", float(matched.group(1))
        except ValueError:
            raise UnknownGate(f"Invalid phase angle in gate `{name}`.")

    if key == "PHASE":
        if theta is None:
            raise UnknownGate("Phase gate requires an angle `theta`.")

        if not cmath.isfinite(theta):
            raise NonFinite(f"Phase angle {theta} is not finite.")

        return Unitary(
            matrix = np.diag([1.0, cmath.exp(1j * theta)]), name = f"PHASE({theta})"
        )

    if key not in STANDARD_GATES:
        raise UnknownGate(
            f"Gate `{name}` is not defined, available: "
            f"{', '.join(list(STANDARD_GATES) + ['PHASE'])}."
        )

    return Unitary(matrix = STANDARD_GATES[key], name = key)


def lift(u : Unitary, targets : Sequence[int], n : int) -> Unitary:
    """
    Embed a ``k`` Qubit Gate into a Register of ``n`` Qubits

    The gate acts on the listed qubits in the listed order - the
    ``j``-th target is the ``j``-th most significant qubit of ``u`` -
    and as identity elsewhere. The order may be non-monotone, like
    ``lift(CNOT, (3, 1), 3)`` which is a CNOT controlled by qubit 3
    with the target qubit 1.

    The embedding is constructed by the index bookkeeping of
    :func:`qubicle.core.registers.build_binary_vector`: for every base
    assignment of the untouched qubits, the block of ``u`` is placed
    at the rows/columns of the indices where the target bits vary.
    Raises :class:`LabelError` for invalid targets.

    .. code-block:: python

        from qubicle.core.gates import lift, std_gate

        x1 = lift(std_gate("X"), (1, ), 2) # X x I
        x2 = lift(std_gate("X"), (2, ), 2) # I x X
    """

    targets = tuple(int(t) for t in targets)
    if len(targets) != u.nqubits:
        raise LabelError(
            f"Gate `{u.name}` acts on {u.nqubits} qubit(s), got targets {targets}."
        )

    q = QubitSet.from_labels(targets, n = n)

    # column j of the table is the inserted bits in ascending label
    # order, permute such that it is the local index of the gate
    k = len(targets)
    position = [targets.index(label) for label in q.labels]
    local = np.array([
        sum(((j >> (k - 1 - position[i])) & 1) << (k - 1 - i) for i in range(k))
        for j in range(2 ** k)
    ], dtype = np.intp)
    table = index_table(q)[:, local]

    matrix = np.zeros((2 ** n, 2 ** n), dtype = np.complex128)
    for rows in table:
        matrix[np.ix_(rows, rows)] = u.matrix

    return Unitary(matrix = matrix, name = f"{u.name}{list(targets)}")


def controlled(u : Unitary, n_controls : int = 1) -> Unitary:
    """
    Controlled Gate ``diag(I, ..., I, u)``, the Controls are Leading

    The gate acts on ``n_controls + k`` qubits and applies ``u`` to
    the last ``k`` qubits if and only if all the control qubits (the
    most significant ones) are ``1``. Any other placement of controls
    is achieved with :func:`lift` and an ordered target list.
    """

    if n_controls < 1:
        raise LabelError(f"Number of controls must be positive, got {n_controls}.")

    d = (2 ** n_controls) * u.dim
    matrix = np.eye(d, dtype = np.complex128)
    matrix[-u.dim:, -u.dim:] = u.matrix

    return Unitary(matrix = matrix, name = f"C{n_controls}-{u.name}")


def qft(n : int) -> Unitary:
    """
    Quantum Fourier Transform of ``n`` Qubits

    The matrix has the entries ``w^(jk) / sqrt(2^n)`` with
    ``w = exp(2 pi i / 2^n)``, i.e., the terminal bit reversal is
    included and the transform is exactly the DFT matrix in the
    computational basis ordering. ``qft(1)`` is the Hadamard gate.
    """

    if n < 1:
        raise LabelError(f"QFT requires at least one qubit, got {n}.")

    d = 2 ** n
    j, k = np.meshgrid(np.arange(d), np.arange(d), indexing = "ij")

    # reduce the exponent modulo d, keeps the phases exact for large jk
    matrix = np.exp(2j * np.pi * ((j * k) % d) / d) / np.sqrt(d)
    return Unitary(matrix = matrix, name = f"QFT({n})")


def swap_qubits(i : int, j : int, n : int) -> Unitary:
    return lift(std_gate("SWAP"), (i, j), n)


def evolve(gate : Unitary, rho : DensityMatrix) -> DensityMatrix:
    """
    Evolve a Density by a Unitary Gate, ``U rho U^\\dagger``

    The gate must be defined on the same register as the state, else
    :class:`DimensionMismatch` is raised. Use :func:`lift` to embed a
    smaller gate.

    .. code-block:: python

        from qubicle.core import gates, states

        rho = gates.evolve(gates.std_gate("H"), states.state(states.ket(0, 1)))
        print(rho.matrix.real)
        >> [[0.5 0.5]
            [0.5 0.5]]
    """

    if gate.dim != rho.dim:
        raise DimensionMismatch(
            f"Gate `{gate.name}` of dimension {gate.dim} can not evolve a "
            f"state of dimension {rho.dim}."
        )

    u = gate.matrix
    return DensityMatrix(matrix = u @ rho.matrix @ u.conj().T)


def fold(circuit : CircuitSpec) -> Unitary:
    """
    Fold a Circuit into a Single Unitary, First Step Rightmost
    """

    matrix = np.eye(2 ** circuit.n_qubits, dtype = np.complex128)
    for gate, targets in circuit.steps:
        matrix = lift(gate, targets, circuit.n_qubits).matrix @ matrix

    return Unitary(matrix = matrix, name = f"CIRCUIT[{len(circuit)}]")


def run(circuit : CircuitSpec, rho : DensityMatrix) -> DensityMatrix:
    """
    Apply the Steps of a Circuit to a Density, Left to Right

    Each step is lifted into the register and applied by
    :func:`evolve`. For repeated evolution of many states by the same
    circuit, fold the circuit once with :func:`fold` instead.
    """

    if circuit.n_qubits != rho.nqubits:
        raise DimensionMismatch(
            f"Circuit on {circuit.n_qubits} qubit(s) can not run on a state "
            f"of {rho.nqubits} qubit(s)."
        )

    for gate, targets in circuit.steps:
        logger.debug("Applying `%s` on qubit(s) %s.", gate.name, targets)
        rho = evolve(lift(gate, targets, circuit.n_qubits), rho)

    return rho
