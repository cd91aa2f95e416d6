# -*- encoding: utf-8 -*-

"""
Read & Write the Plain Text Formats of the Module

Density Matrix File Format
--------------------------

A density matrix is exchanged as a plain text (UTF-8) file, the first
line is ``dim <d>`` followed by ``d`` rows of ``d`` whitespace
separated complex entries in the Python notation ``re+imj``. Blank
lines and lines starting with ``#`` are ignored.

.. code-block:: text

    dim 2
    0.5+0j 0+0j
    0+0j 0.5+0j

The reader only parses the matrix, the physical invariants are
validated by :func:`qubicle.core.states.validate_density` function.

Sweep Configuration File
------------------------

A sweep is configured using a YAML file with a ``sweep`` mapping, any
key of :class:`qubicle.components.sweep.SweepConfig` is accepted.
Check ``assets/templates/sweep.yaml`` for the recommended structure.
"""

import os

from typing import Any, Dict

import numpy as np
import yaml

from qubicle.exceptions import ConfigError, IoError, ParseError

def read_density(path : str) -> np.ndarray:
    """
    Read a Square Complex Matrix from the Density File Format

    :type  path: str
    :param path: Path of the file, raises :class:`IoError` if the file
        can not be read and :class:`ParseError` for a malformed file.
    """

    try:
        with open(path, "r", encoding = "utf-8") as file:
            lines = [line.strip() for line in file]
    except OSError as err:
        raise IoError(f"Unable to read `{path}`: {err}")

    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise ParseError(f"`{path}` is empty.")

    header = lines[0].split()
    if len(header) != 2 or header[0] != "dim" or not header[1].isdigit():
        raise ParseError(f"`{path}`: first line must be `dim <d>`, got `{lines[0]}`.")

    dim, rows = int(header[1]), lines[1:]
    if dim < 1 or len(rows) != dim:
        raise ParseError(f"`{path}`: expected {dim} row(s), got {len(rows)}.")

    matrix = np.empty((dim, dim), dtype = np.complex128)
    for idx, row in enumerate(rows):
        entries = row.split()
        if len(entries) != dim:
            raise ParseError(
                f"`{path}`: row {idx + 1} has {len(entries)} entries, expected {dim}."
            )

        try:
            matrix[idx] = [complex(entry) for entry in entries]
        except ValueError:
            raise ParseError(f"`{path}`: row {idx + 1} has a malformed complex entry.")

    return matrix


def write_density(matrix : np.ndarray, path : str) -> None:
    matrix = np.asarray(matrix, dtype = np.complex128)

    try:
        with open(path, "w", encoding = "utf-8", newline = "\n") as file:
            file.write(f"dim {matrix.shape[0]}\n")
            for row in matrix:
                file.write(" ".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row) + "\n")
    except OSError as err:
        raise IoError(f"Unable to write `{path}`: {err}")

    return None


def load_config(path : str) -> Dict[str, Any]:
    """
    Load the ``sweep`` Mapping of a YAML Configuration File

    Returns a dictionary of the configuration fields which is passed
    to :class:`SweepConfig`. A missing ``sweep`` key or a non-mapping
    value raises :class:`ConfigError`.
    """

    if not os.path.isfile(path):
        raise IoError(f"Configuration file `{path}` does not exist.")

    try:
        with open(path, "r", encoding = "utf-8") as file:
            document = yaml.safe_load(file) or {}
    except yaml.YAMLError as err:
        raise ParseError(f"`{path}` is not a valid YAML file: {err}")

    sweep = document.get("sweep") if isinstance(document, dict) else None
    if not isinstance(sweep, dict):
        raise ConfigError(f"`{path}` has no `sweep` mapping.", field = "sweep")

    # yaml sequences are lists, the model expects a tuple of labels
    if isinstance(sweep.get("measured_qubits"), list):
        sweep["measured_qubits"] = tuple(sweep["measured_qubits"])

    return {k : v for k, v in sweep.items() if v is not None}
