# -*- encoding: utf-8 -*-

"""
The Quantum Part of Shor's Algorithm (Order Finding) for ``N = 15``

The circuit acts on a register of 7 qubits, the qubits ``1 - 3`` are
the counting register and the qubits ``4 - 7`` are the work register
holding a residue modulo 15. The work register is prepared in ``|1>``
by an ``X`` gate on qubit 7, thus the initial state of the circuit is
always ``|0000000>``. The counting register is put into a uniform
superposition, controls the modular multiplications by the powers of
``a`` and is finally transformed by the inverse QFT:

.. code-block:: text

    q1 : --H------------------*---- .
    q2 : --H--------*---------|---- .  QFT^dagger
    q3 : --H--*-----|---------|---- .
    q4-7 : X--[a^1]--[a^2]--[a^4]-- .

The measured counting register peaks at the multiples of ``8 / r``
where ``r`` is the multiplicative order of ``a`` modulo 15. The
classical post-processing (continued fractions) is not part of the
module.
"""

import logging
import math

import numpy as np

from qubicle.components.base import QubitSet
from qubicle.components.gates import CircuitSpec, Unitary
from qubicle.components.states import ProbDist
from qubicle.core import gates
from qubicle.core.analysis import measure_computational
from qubicle.core.partial import ptrace
from qubicle.core.states import ket, noisy_state, state
from qubicle.exceptions import NotCoprime, OutOfRange, UnsupportedModulus

logger = logging.getLogger(__name__)

MODULUS = 15
N_COUNTING = 3
N_WORK = 4
N_QUBITS = N_COUNTING + N_WORK

def mod_mult_gate(a : int, modulus : int = MODULUS) -> Unitary:
    """
    Modular Multiplication ``|x> -> |a x mod 15>`` on 4 Qubits

    The basis state ``|15>`` is not a residue and is kept as a fixed
    point, thus the gate is a ``16 x 16`` permutation matrix. Raises
    :class:`UnsupportedModulus` for any modulus but 15 and
    :class:`NotCoprime` if ``gcd(a, 15) != 1``.

    .. code-block:: python

        from qubicle.core.shor import mod_mult_gate

        u = mod_mult_gate(7)
        print(u.matrix[:, 1].real.argmax()) # 7 * 1 mod 15
        >> 7
    """

    if modulus != MODULUS:
        raise UnsupportedModulus(
            f"Modulus {modulus} is not supported, the work register only holds N = {MODULUS}."
        )

    if a < 1:
        raise OutOfRange(f"Multiplier a = {a} must be positive.")

    if math.gcd(a, modulus) != 1:
        raise NotCoprime(f"a = {a} is not coprime to {modulus}, gcd = {math.gcd(a, modulus)}.")

    d = 2 ** N_WORK
    matrix = np.zeros((d, d), dtype = np.complex128)

    for x in range(modulus):
        matrix[(a * x) % modulus, x] = 1.0

    matrix[modulus:, modulus:] = np.eye(d - modulus)
    return Unitary(matrix = matrix, name = f"MUL({a % modulus})")


def shor_circuit(a : int = 7) -> CircuitSpec:
    """
    Order Finding Circuit of ``a`` Modulo 15 on 7 Qubits

    :type  a: int
    :param a: Base of the modular exponentiation within ``(1, 15)``
        and coprime to 15, i.e., one of ``2, 4, 7, 8, 11, 13, 14``.
        The default ``a = 7`` has the order ``r = 4``. Raises
        :class:`NotCoprime` if ``gcd(a, 15) != 1``.

    The counting qubit ``j`` (qubit 1 is the most significant) controls
    the multiplication by ``a^(2^(3 - j)) mod 15``, the controlled
    gates are built by :func:`qubicle.core.gates.controlled` with the
    control as the leading qubit.

    .. code-block:: python

        from qubicle.core import gates, shor

        circuit = shor.shor_circuit(7)
        u = gates.fold(circuit) # 128 x 128 unitary
    """

    if math.gcd(a, MODULUS) != 1:
        raise NotCoprime(f"a = {a} is not coprime to {MODULUS}, gcd = {math.gcd(a, MODULUS)}.")

    if not 1 < a < MODULUS:
        raise OutOfRange(f"Base a = {a} is not within (1, {MODULUS}).")

    counting = tuple(range(1, N_COUNTING + 1))
    work = tuple(range(N_COUNTING + 1, N_QUBITS + 1))

    steps = [(gates.std_gate("X"), (N_QUBITS, ))]
    steps += [(gates.std_gate("H"), (j, )) for j in counting]

    for j in counting:
        power = pow(a, 2 ** (N_COUNTING - j), MODULUS)
        steps.append((gates.controlled(mod_mult_gate(power), 1), (j, ) + work))

    steps.append((gates.qft(N_COUNTING).dagger, counting))

    logger.debug("Constructed the order finding circuit of a = %d with %d steps.", a, len(steps))
    return CircuitSpec(n_qubits = N_QUBITS, steps = tuple(steps))


def trivial_circuit() -> CircuitSpec:
    return CircuitSpec(n_qubits = N_QUBITS, steps = ())


def counting_distribution(a : int = 7, p : float = 0.0) -> ProbDist:
    """
    Measured Counting Register Distribution of a Noisy Order Finding

    The circuit is applied to the depolarized initial state
    ``(1 - p) |0..0><0..0| + p I / 128``, the work register is traced
    out and the counting register is measured in the computational
    basis.

    .. code-block:: python

        from qubicle.core.shor import counting_distribution

        print(counting_distribution(7).probs.round(6))
        >> [0.25 0.   0.25 0.   0.25 0.   0.25 0.  ]
    """

    rho = noisy_state(state(ket(0, N_QUBITS)), p)
    rho = gates.evolve(gates.fold(shor_circuit(a)), rho)

    work = QubitSet(labels = tuple(range(N_COUNTING + 1, N_QUBITS + 1)), n = N_QUBITS)
    return measure_computational(ptrace(rho, work))


def state_vector_distribution(a : int = 7) -> ProbDist:
    """
    Noiseless Counting Distribution using a Pure State Vector

    An independent simulation of :func:`shor_circuit` which never
    touches the density matrix path: after the controlled
    multiplications the state is ``sum_x |x> |a^x mod 15> / sqrt(8)``,
    and the inverse QFT of the counting register is the (unitary
    normalized) discrete Fourier transform ``numpy.fft.fft`` along the
    counting axis.
    """

    if math.gcd(a, MODULUS) != 1:
        raise NotCoprime(f"a = {a} is not coprime to {MODULUS}, gcd = {math.gcd(a, MODULUS)}.")

    ncount, nwork = 2 ** N_COUNTING, 2 ** N_WORK

    psi = np.zeros((ncount, nwork), dtype = np.complex128)
    for x in range(ncount):
        psi[x, pow(a, x, MODULUS)] = 1 / np.sqrt(ncount)

    psi = np.fft.fft(psi, axis = 0, norm = "ortho")
    probs = np.sum(np.abs(psi) ** 2, axis = 1)

    return ProbDist(probs = probs / probs.sum())
