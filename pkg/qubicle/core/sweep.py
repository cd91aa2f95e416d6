# -*- encoding: utf-8 -*-

"""
Noise Sweep over the Depolarizing Mixing Parameter

The experiment of the module compares a noisy run of a circuit with
its ideal (noiseless) run. For every ``p`` of the grid the initial
state ``rho_p = (1 - p) |0..0><0..0| + p I / 128`` is evolved through
the circuit, the complement of the measured qubits is traced out and
the reduced state is compared against the same reduction at ``p = 0``
using the density fidelity and the three distribution measures of a
computational basis measurement.

The grid points are independent of each other and are optionally
evaluated on a pool of threads (``numpy`` releases the GIL in the
dense linear algebra), the records are always returned in the
ascending order of ``p``.
"""

import csv
import logging
import time

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List

from qubicle.components.base import QubitSet
from qubicle.components.gates import CircuitSpec, Unitary
from qubicle.components.states import DensityMatrix
from qubicle.components.sweep import SweepConfig, SweepRecord
from qubicle.core import analysis, gates, shor
from qubicle.core.partial import ptrace
from qubicle.core.states import ket, noisy_state, state
from qubicle.exceptions import IoError

logger = logging.getLogger(__name__)

def build_circuit(config : SweepConfig) -> CircuitSpec:
    if config.circuit == "shor":
        return shor.shor_circuit(config.a)

    return shor.trivial_circuit()


def reduced_state(
        unitary : Unitary, p : float, traced : QubitSet
    ) -> DensityMatrix:
    """
    Reduced Density of the Noisy Initial State Evolved by ``unitary``
    """

    rho = noisy_state(state(ket(0, unitary.nqubits)), p)
    return ptrace(gates.evolve(unitary, rho), traced)


def run_sweep(config : SweepConfig) -> List[SweepRecord]:
    """
    Run the Noise Sweep of a Configuration, one Record per Grid Point

    The circuit is folded once into a single unitary, and the
    reference (the ``p = 0`` reduced state and its distribution) is
    computed once and shared by all the grid points.

    .. code-block:: python

        from qubicle.components.sweep import SweepConfig
        from qubicle.core.sweep import run_sweep

        records = run_sweep(SweepConfig(circuit = "trivial"))
        print(len(records), records[-1].trace_distance)
        >> 101 0.875
    """

    start = time.perf_counter()

    circuit = build_circuit(config)
    unitary = gates.fold(circuit)

    traced = QubitSet.from_labels(config.measured_qubits, n = circuit.n_qubits).complement()
    grid = config.grid()

    logger.info(
        "Sweeping circuit `%s` (%d steps) over %d point(s) of p, measuring qubit(s) %s.",
        config.circuit, len(circuit), len(grid), config.measured_qubits
    )

    reference = reduced_state(unitary, 0.0, traced)
    reference_dist = analysis.measure_computational(reference)

    def evaluate(p : float) -> SweepRecord:
        reduced = reduced_state(unitary, p, traced)
        dist = analysis.measure_computational(reduced)

        record = SweepRecord(
            p = p,
            fidelity_density = analysis.fidelity(reference, reduced),
            fidelity_prob = analysis.fidelity_prob(reference_dist, dist),
            chi_square = analysis.chi_square(reference_dist, dist),
            trace_distance = analysis.trace_distance_prob(reference_dist, dist)
        )

        logger.debug("p = %.4f: %s", p, record.values())
        return record

    if config.workers > 1:
        # executor.map preserves the order of the grid
        with ThreadPoolExecutor(max_workers = config.workers) as executor:
            records = list(executor.map(evaluate, grid))
    else:
        records = [evaluate(p) for p in grid]

    logger.info("Sweep finished in %.2f second(s).", time.perf_counter() - start)
    return records


def format_value(value : float) -> str:
    # 12 significant digits, -0 is printed as 0
    return f"{value + 0.0:.12g}"


def write_csv(records : Iterable[SweepRecord], path : str) -> None:
    """
    Write the Sweep Records as a CSV File

    The file is UTF-8 with ``\\n`` line endings, the header is
    ``p,fidelity_density,fidelity_prob,chi_square,trace_distance`` and
    each value is printed with 12 significant digits, thus a record
    ``(0, 1, 1, 0, 0)`` is the row ``0,1,1,0,0``. Raises
    :class:`IoError` if the file can not be written.
    """

    try:
        with open(path, "w", encoding = "utf-8", newline = "") as file:
            writer = csv.writer(file, lineterminator = "\n")
            writer.writerow(SweepRecord.header())

            for record in records:
                writer.writerow([format_value(value) for value in record.values()])
    except OSError as err:
        raise IoError(f"Unable to write `{path}`: {err}")

    return None
