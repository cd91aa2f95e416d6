# -*- encoding: utf-8 -*-

"""
Utility Functions for Qubicle Module

The dense matrix kernels (``numerics``) are the leaf of the package
and are consumed by the components and the core modules. The
``generator`` creates random states and operators for analysis and
tests, while ``io`` reads and writes the plain text formats.
"""

from qubicle.utils import numerics # noqa: F401, F403
from qubicle.utils import generator # noqa: F401, F403
from qubicle.utils import io # noqa: F401, F403
