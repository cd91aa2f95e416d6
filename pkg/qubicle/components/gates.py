# -*- encoding: utf-8 -*-

"""
Defination of Operators & Circuits on a Quantum Register

A gate is a :class:`Unitary` matrix on ``k`` qubits, and a circuit is
an ordered list of gates each attached to an ordered list of target
qubit labels - no intermediate representation or optimizer is used.
"""

from typing import Tuple

import numpy as np

from pydantic import Field, model_validator

from qubicle.components.base import BaseComponent, MatrixComponent
from qubicle.exceptions import LabelError, NotUnitary

UNITARY_TOL = 1e-10

class Unitary(MatrixComponent):
    """
    A Unitary Operator ``U`` on ``k`` Qubits, ``U U^\\dagger = I``

    The unitarity is checked within ``1e-10`` (maximum absolute entry)
    on creation and raises :class:`NotUnitary` if violated.

    :ivar name: An optional name of the gate, used only for logging
        and representation, e.g. ``"H"`` or ``"QFT(3)^dagger"``.
    """

    name : str = Field("U", description = "Name of the Gate")


    @model_validator(mode = "after")
    def validate_unitary(self) -> object:
        u = self.matrix
        error = float(np.max(np.abs(u @ u.conj().T - np.eye(self.dim))))

        if error > UNITARY_TOL:
            raise NotUnitary(
                f"Gate `{self.name}` is not unitary: max |U U^H - I| = {error:.3e}."
            )

        return self


    @property
    def dagger(self) -> "Unitary":
        return Unitary(matrix = self.matrix.conj().T, name = f"{self.name}^dagger")


class CircuitSpec(BaseComponent):
    """
    An Ordered Sequence of Gates on a Register of ``N`` Qubits

    Each step is a pair ``(gate, targets)`` where ``targets`` is an
    ordered tuple of distinct 1-based labels, the ``j``-th target is
    the ``j``-th (most significant first) qubit of the gate. The order
    of the targets may be non-monotone, check
    :func:`qubicle.core.gates.lift` for more information.

    :ivar n_qubits: Number of qubits of the register.

    :ivar steps: Tuple of ``(Unitary, Tuple[int, ...])`` pairs, applied
        from left to right (first step first).

    .. code-block:: python

        from qubicle.core import gates
        from qubicle.components.gates import CircuitSpec

        # a bell state preparation on qubits 1 and 2 of 3 qubits
        circuit = CircuitSpec(n_qubits = 3, steps = (
            (gates.std_gate("H"), (1, )),
            (gates.std_gate("CNOT"), (1, 2))
        ))
    """

    n_qubits : int = Field(..., description = "Number of Qubits")
    steps : Tuple[Tuple[Unitary, Tuple[int, ...]], ...] = Field(
        (), description = "Ordered (Gate, Targets) Pairs"
    )


    @model_validator(mode = "after")
    def validate_steps(self) -> object:
        n = self.n_qubits

        if n < 1:
            raise LabelError(f"Circuit must have at least one qubit, got {n}.")

        for idx, (gate, targets) in enumerate(self.steps):
            if any(t < 1 or t > n for t in targets):
                raise LabelError(f"Step {idx}: targets {targets} not within [1, {n}].")

            if len(set(targets)) != len(targets):
                raise LabelError(f"Step {idx}: duplicate targets {targets}.")

            if gate.nqubits != len(targets):
                raise LabelError(
                    f"Step {idx}: gate `{gate.name}` acts on {gate.nqubits} "
                    f"qubit(s), but {len(targets)} target(s) are given."
                )

        return self


    @property
    def nqubits(self) -> int:
        return self.n_qubits


    def __len__(self) -> int:
        return len(self.steps)
