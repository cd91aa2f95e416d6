# -*- encoding: utf-8 -*-

"""
Core Algorithms of the Density Matrix Simulator

The register index bookkeeping, the state and gate constructors, the
partial operations and the analysis measures are defined under this
submodule, each of which operates on the typed components of
:mod:`qubicle.components`. The experiment (the noise sweep over
Shor's circuit) is built from these blocks under ``sweep.py``.
"""

from qubicle.core import registers # noqa: F401, F403
from qubicle.core import states # noqa: F401, F403
from qubicle.core import gates # noqa: F401, F403
from qubicle.core import partial # noqa: F401, F403
from qubicle.core import analysis # noqa: F401, F403
from qubicle.core import shor # noqa: F401, F403
from qubicle.core import sweep # noqa: F401, F403
