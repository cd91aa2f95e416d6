# -*- encoding: utf-8 -*-

"""
Command Line Interface of the Qubicle Module

Two sub-commands are exposed, the ``sweep`` runs the noise sweep of a
circuit and writes the comparison measures as a CSV file, and the
``analyze`` reports the negativity, the PPT verdict and the spectrum
of the partial transpose of a named (or file) state:

.. code-block:: shell

    qubicle sweep --circuit shor --a 7 --p-step 0.01 --out sweep.csv
    qubicle analyze --state bell --transpose-qubits 1

A sweep configuration is resolved from the defaults of
:class:`qubicle.components.sweep.SweepConfig`, then an optional YAML
file (``--config``) and finally the explicit flags. The exit code is
``0`` on success, ``1`` for a usage, configuration, parse or input
error and ``2`` when a numerical validation of a state or an operator
fails.
"""

import argparse
import logging
import sys

from typing import Any, Dict, List, Optional

import pydantic

import qubicle as qb

from qubicle.components.base import QubitSet
from qubicle.components.states import DensityMatrix
from qubicle.components.sweep import SweepConfig
from qubicle.core import analysis, states
from qubicle.core.sweep import run_sweep, write_csv
from qubicle.exceptions import ConfigError, ParseError, QubicleError, ValidationFailure
from qubicle.utils.io import load_config, read_density

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_ERROR, EXIT_VALIDATION = 0, 1, 2

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

class ArgumentParser(argparse.ArgumentParser):
    """
    Argument Parser Exiting with ``EXIT_ERROR`` on a Usage Error

    The default exit code of :mod:`argparse` (``2``) is reserved for
    a failed numerical validation, the sub-parsers inherit the class.
    """

    def error(self, message : str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def load_state(state_spec : str) -> DensityMatrix:
    """
    Resolve a Named State of the ``analyze`` Command

    :type  state_spec: str
    :param state_spec: One of the following, else raises
        :class:`ParseError`:

        * ``bell`` - the Bell state ``(|00> + |11>) / sqrt(2)``,
        * ``ghz`` or ``ghz:<n>`` - the GHZ state of ``n`` (3) qubits,
        * ``product:<labels>`` - product of single qubit states, each
          label is ``0``, ``1``, ``+`` or ``-``, e.g. ``product:0,+``,
        * ``file:<path>`` - a density matrix file, validated by
          :func:`qubicle.core.states.validate_density`.
    """

    name, _, argument = state_spec.strip().partition(":")
    name = name.lower()

    if name == "bell" and not argument:
        return states.bell()

    if name == "ghz":
        if not argument:
            return states.ghz()

        if not argument.isdigit():
            raise ParseError(f"Invalid GHZ size `{argument}`, expected an integer.")

        return states.ghz(int(argument))

    if name == "product":
        return states.product(c for c in argument if c not in ", ")

    if name == "file" and argument:
        return states.validate_density(read_density(argument))

    raise ParseError(
        f"Unknown state `{state_spec}`, expected bell, ghz[:n], "
        "product:<labels> or file:<path>."
    )


def cmd_analyze(state_spec : str, q : QubitSet | str) -> Dict[str, Any]:
    """
    Entanglement Report of a Named State w.r.t. a Bipartition

    The report is a dictionary of the negativity, the PPT verdict and
    the ascending spectrum of the partial transpose, the qubits ``q``
    are either a :class:`QubitSet` or a list of labels as text.

    .. code-block:: python

        from qubicle.cli import cmd_analyze

        report = cmd_analyze("bell", "1")
        print(report["negativity"], report["ppt"])
        >> 0.5 False
    """

    rho = load_state(state_spec)

    if not isinstance(q, QubitSet):
        q = QubitSet.parse(q, n = rho.nqubits)

    return {
        "state" : state_spec,
        "nqubits" : rho.nqubits,
        "transpose_qubits" : list(q.labels),
        "negativity" : analysis.negativity(rho, q),
        "ppt" : analysis.is_ppt(rho, q),
        "spectrum" : analysis.spectrum_pt(rho, q).tolist()
    }


def format_report(report : Dict[str, Any]) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, float):
            value = f"{value + 0.0:.12g}"
        elif key == "spectrum":
            value = " ".join(f"{v + 0.0:.12g}" for v in value)

        lines.append(f"{key}: {value}")

    return "\n".join(lines)


def resolve_config(args : argparse.Namespace) -> SweepConfig:
    """
    Resolve the Sweep Configuration from the Defaults, YAML & Flags

    A :class:`pydantic.ValidationError` (a wrong type or an unknown
    key) is raised as a :class:`ConfigError` naming the field.
    """

    fields = load_config(args.config) if args.config else {}

    flags = {
        "circuit" : args.circuit,
        "a" : args.a,
        "p_start" : args.p_start,
        "p_end" : args.p_end,
        "p_step" : args.p_step,
        "measured_qubits" : QubitSet.split_labels(args.measured_qubits) if args.measured_qubits else None,
        "out_path" : args.out,
        "workers" : args.workers
    }
    fields.update({key : value for key, value in flags.items() if value is not None})

    try:
        return SweepConfig(**fields)
    except pydantic.ValidationError as err:
        error = err.errors()[0]
        field = ".".join(str(loc) for loc in error["loc"]) or None
        raise ConfigError(error["msg"], field = field)


def cmd_sweep(args : argparse.Namespace) -> int:
    config = resolve_config(args)
    logger.info("Resolved configuration: %s", config.model_dump())

    records = run_sweep(config)
    write_csv(records, config.out_path)

    print(f"wrote {len(records)} record(s) to {config.out_path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog = "qubicle",
        description = "Density matrix simulation of noisy circuits and entanglement analysis."
    )

    parser.add_argument("--version", action = "version", version = f"%(prog)s {qb.__version__}")
    parser.add_argument(
        "-v", "--verbose", action = "count", default = 0,
        help = "Increase the logging verbosity, -v for INFO and -vv for DEBUG."
    )

    subparsers = parser.add_subparsers(dest = "command", required = True)

    # ? flags default to None, such that the config file is not overwritten
    sweep = subparsers.add_parser("sweep", help = "Run the noise sweep and write a CSV file.")
    sweep.add_argument("--config", default = None, help = "YAML configuration file with a `sweep` mapping.")
    sweep.add_argument("--circuit", choices = ["shor", "trivial"], default = None, help = "Circuit name. Default: shor")
    sweep.add_argument("--a", type = int, default = None, help = "Base of Shor's circuit. Default: 7")
    sweep.add_argument("--p-start", type = float, default = None, help = "First mixing parameter. Default: 0")
    sweep.add_argument("--p-end", type = float, default = None, help = "Last mixing parameter (inclusive). Default: 1")
    sweep.add_argument("--p-step", type = float, default = None, help = "Step of the grid. Default: 0.01")
    sweep.add_argument("--measured-qubits", default = None, help = "Kept qubit labels, e.g. 1,2,3. Default: 1,2,3")
    sweep.add_argument("--out", default = None, help = "Output CSV path. Default: sweep.csv")
    sweep.add_argument("--workers", type = int, default = None, help = "Number of worker threads. Default: 1")

    analyze = subparsers.add_parser("analyze", help = "Negativity and PPT test of a state.")
    analyze.add_argument(
        "--state", required = True,
        help = "bell, ghz[:n], product:<labels> (e.g. product:0,+) or file:<path>."
    )
    analyze.add_argument(
        "--transpose-qubits", required = True,
        help = "Labels of the partially transposed qubits, e.g. 1 or 1,2."
    )

    return parser


def configure_logging(verbosity : int) -> None:
    level = {0 : logging.WARNING, 1 : logging.INFO}.get(verbosity, logging.DEBUG)

    logging.basicConfig(level = level, format = LOG_FORMAT, stream = sys.stderr, force = True)
    logging.captureWarnings(True)


def main(argv : Optional[List[str]] = None) -> int:
    """
    Entry Point of the ``qubicle`` Console Script, Returns the Exit Code
    """

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as err:
        # --help and --version exit with 0, a usage error with EXIT_ERROR
        return err.code if isinstance(err.code, int) else EXIT_ERROR

    configure_logging(args.verbose)

    try:
        if args.command == "sweep":
            return cmd_sweep(args)

        print(format_report(cmd_analyze(args.state, args.transpose_qubits)))
        return EXIT_OK
    except ValidationFailure as err:
        print(f"qubicle: validation failed: {type(err).__name__}: {err}", file = sys.stderr)
        return EXIT_VALIDATION
    except QubicleError as err:
        print(f"qubicle: error: {type(err).__name__}: {err}", file = sys.stderr)
        return EXIT_ERROR
