# -*- encoding: utf-8 -*-

"""
A mixed state (density operator) quantum circuit simulator with the
register indexed partial trace and partial transpose operations,
entanglement negativity, depolarizing noise and a set of state
comparison measures.

The module encapsulates a quantum register as a density matrix, and
on the defined state any circuit can be evolved, reduced to a subset
of qubits and compared against a reference. A command line harness
(``qubicle sweep``) reproduces a noise sweep over the quantum part of
Shor's order finding circuit and writes the measures as CSV.
"""

import os

# ? package follows https://peps.python.org/pep-0440/
# ? https://python-semver.readthedocs.io/en/latest/advanced/convert-pypi-to-semver.html
__version__ = open(os.path.join(os.path.dirname(os.path.abspath(__file__)), "VERSION"), "r").read().strip()

# init-time options registrations
from qubicle import exceptions # noqa: F401, F403
from qubicle import utils # noqa: F401, F403
from qubicle import components # noqa: F401, F403

# core components of qubicle module
from qubicle import core # noqa: F401, F403
