# -*- encoding: utf-8 -*-

"""
Defination of the Noise Sweep Experiment Configuration & Results

The noise sweep prepares ``rho_p = (1 - p) |0..0><0..0| + p I/d`` for
each ``p`` of a grid, evolves it through a circuit, and compares the
reduced state of the measured qubits against the ``p = 0`` reference.
The configuration (:class:`SweepConfig`) is validated on creation and
each point of the grid results in a :class:`SweepRecord`.
"""

import math
import warnings

from typing import List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from qubicle.exceptions import ConfigError

SHOR_NQUBITS = 7

class SweepConfig(BaseModel):
    """
    Configuration of a Noise Sweep over the Mixing Parameter ``p``

    :ivar circuit: Name of the circuit, either ``"shor"`` (the quantum
        part of Shor's order finding for ``N = 15``) or ``"trivial"``
        (no gates, identity).

    :ivar a: Base of the modular exponentiation, only used by the
        ``shor`` circuit, must be coprime to 15. Defaults to 7.

    :ivar p_start, p_end, p_step: The inclusive grid of the mixing
        parameter, ``0 <= p_start <= p_end <= 1`` and ``p_step > 0``.
        The grid has ``floor((p_end - p_start) / p_step) + 1`` points.

    :ivar measured_qubits: Labels of the qubits which are kept (the
        complement is traced out) before the comparison, defaults to
        the counting register ``(1, 2, 3)``.

    :ivar out_path: Path of the output CSV file.

    :ivar workers: Number of threads evaluating the grid, the records
        are always ordered by ascending ``p``.

    Any violation raises :class:`ConfigError` with the field name.

    .. code-block:: python

        from qubicle.components.sweep import SweepConfig

        config = SweepConfig(circuit = "trivial", p_step = 0.1)
        print(config.grid()[:3])
        >> [0.0, 0.1, 0.2]
    """

    model_config = ConfigDict(frozen = True, extra = "forbid")

    circuit : Literal["shor", "trivial"] = Field("shor", description = "Circuit Name")
    a : int = Field(7, description = "Base of Modular Exponentiation")

    # ? inclusive grid of the mixing parameter
    p_start : float = 0.0
    p_end : float = 1.0
    p_step : float = 0.01

    measured_qubits : Tuple[int, ...] = Field(
        (1, 2, 3), description = "Kept (Measured) Qubit Labels"
    )

    out_path : str = Field("sweep.csv", description = "Output CSV Path")
    workers : int = Field(1, description = "Number of Worker Threads")


    @model_validator(mode = "after")
    def validate_config(self) -> object:
        """
        Assert the Grid, the Qubit Labels & Workers are Justifiable

        Raises :class:`ConfigError` naming the first violated field,
        and warns if the step does not divide the range evenly (the
        last point is then below ``p_end``).
        """

        for field in ["p_start", "p_end", "p_step"]:
            value = getattr(self, field)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{value} is not within [0, 1].", field = field)

        if self.p_step <= 0.0:
            raise ConfigError("step must be positive.", field = "p_step")

        if self.p_start > self.p_end:
            raise ConfigError(
                f"p_start (= {self.p_start}) > p_end (= {self.p_end}).", field = "p_start"
            )

        if self.circuit == "shor" and (not 1 < self.a < 15 or math.gcd(self.a, 15) != 1):
            raise ConfigError(f"base {self.a} must be within (1, 15) and coprime to 15.", field = "a")

        labels = self.measured_qubits
        if not labels:
            raise ConfigError("at least one qubit must be measured.", field = "measured_qubits")

        if len(set(labels)) != len(labels) or not all(1 <= q <= SHOR_NQUBITS for q in labels):
            raise ConfigError(
                f"labels {labels} must be distinct and within [1, {SHOR_NQUBITS}].",
                field = "measured_qubits"
            )

        if self.workers < 1:
            raise ConfigError("at least one worker is required.", field = "workers")

        span = round((self.p_end - self.p_start) / self.p_step, 9)
        if span != math.floor(span):
            warnings.warn(
                f"Step {self.p_step} does not divide [{self.p_start}, {self.p_end}], "
                f"the last grid point is below p_end."
            )

        return self


    @property
    def npoints(self) -> int:
        span = round((self.p_end - self.p_start) / self.p_step, 9)
        return math.floor(span) + 1


    def grid(self) -> List[float]:
        """
        Inclusive Grid, Values Rounded to 12 Decimal Places
        """

        return [
            round(self.p_start + idx * self.p_step, 12)
            for idx in range(self.npoints)
        ]


class SweepRecord(BaseModel):
    """
    Comparison Measures at a Point ``p`` of the Sweep

    :ivar fidelity_density: Fidelity between the reduced density
        matrices, ``tr sqrt(sqrt(rho_0) rho_p sqrt(rho_0))``.

    :ivar fidelity_prob: Bhattacharyya coefficient between the
        measured distributions.

    :ivar chi_square: The chi-square measure between the measured
        distributions w.r.t. their mean.

    :ivar trace_distance: Total variation distance between the
        measured distributions.
    """

    model_config = ConfigDict(frozen = True)

    p : float
    fidelity_density : float
    fidelity_prob : float
    chi_square : float
    trace_distance : float


    @model_validator(mode = "after")
    def validate_ranges(self) -> object:
        for field in ["fidelity_density", "fidelity_prob", "trace_distance"]:
            value = getattr(self, field)
            assert 0.0 <= value <= 1.0, f"{field} (= {value}) is not within [0, 1]"

        assert self.chi_square >= 0.0, f"chi_square (= {self.chi_square}) < 0"
        return self


    @classmethod
    def header(cls) -> List[str]:
        return list(cls.model_fields.keys())


    def values(self) -> List[float]:
        return [getattr(self, field) for field in self.header()]
