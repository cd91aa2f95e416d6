# -*- encoding: utf-8 -*-

"""
Defination of Register Components - Qubit Sets, States, Gates, etc.

The components with their invariants are defined under this
submodule. All the components are derived from the base class defined
under ``base.py`` which is an abstract pydantic validator class, thus
a constructed component (e.g. a density matrix) always satisfies the
invariants (hermiticity, unit trace, positivity) of its type.
"""

from qubicle.components import base # noqa: F401, F403
from qubicle.components import states # noqa: F401, F403
from qubicle.components import gates # noqa: F401, F403
from qubicle.components import sweep # noqa: F401, F403
