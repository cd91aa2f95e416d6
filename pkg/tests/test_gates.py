# -*- encoding: utf-8 -*-

import numpy as np
import pytest

from numpy.testing import assert_allclose

from qubicle.components.gates import CircuitSpec, Unitary
from qubicle.core import gates, states
from qubicle.exceptions import DimensionMismatch, LabelError, NonFinite, NotUnitary, UnknownGate
from qubicle.utils import generator

X = np.array([[0, 1], [1, 0]])

def test_std_gate_definitions():
    assert_allclose(gates.std_gate("X").matrix, X)
    assert_allclose(gates.std_gate("h").matrix, np.array([[1, 1], [1, -1]]) / np.sqrt(2))

    # control is the most significant qubit, |10> -> |11>
    cnot = gates.std_gate("CNOT").matrix
    assert_allclose(cnot @ np.eye(4)[2], np.eye(4)[3])


def test_std_gate_phase():
    assert_allclose(gates.std_gate("phase(3.141592653589793)").matrix, np.diag([1, -1]), atol = 1e-15)
    assert_allclose(gates.std_gate("PHASE", theta = np.pi / 2).matrix, gates.std_gate("S").matrix, atol = 1e-15)

    with pytest.raises(UnknownGate):
        gates.std_gate("PHASE")


def test_std_gate_unknown():
    with pytest.raises(UnknownGate):
        gates.std_gate("TOFFOLI")


def test_unitary_rejects_non_unitary():
    with pytest.raises(NotUnitary):
        Unitary(matrix = [[1, 1], [0, 1]])


def test_unitary_rejects_non_finite():
    with pytest.raises(NonFinite):
        Unitary(matrix = [[1, 0], [0, np.nan]])

    with pytest.raises(NonFinite):
        gates.std_gate("phase(nan)")

    with pytest.raises(NonFinite):
        gates.std_gate("PHASE", theta = np.inf)


def test_lift_single_qubit():
    x = gates.std_gate("X")

    assert_allclose(gates.lift(x, (1, ), 2).matrix, np.kron(X, np.eye(2)))
    assert_allclose(gates.lift(x, (2, ), 2).matrix, np.kron(np.eye(2), X))


def test_lift_non_monotone_targets():
    # control on qubit 3, target on qubit 1: |001> -> |101>
    u = gates.lift(gates.std_gate("CNOT"), (3, 1), 3).matrix
    assert_allclose(u @ np.eye(8)[0b001], np.eye(8)[0b101])
    assert_allclose(u @ np.eye(8)[0b100], np.eye(8)[0b100])


def test_lift_agrees_with_kron_on_adjacent_qubits(rng):
    u = generator.random_unitary(2, rng = rng)
    lifted = gates.lift(u, (2, 3), 4).matrix

    assert_allclose(lifted, np.kron(np.kron(np.eye(2), u.matrix), np.eye(2)), atol = 1e-12)


def test_lift_composes_into_tensor_product(rng):
    a, b = generator.random_unitary(1, rng = rng), generator.random_unitary(1, rng = rng)
    ab = Unitary(matrix = np.kron(a.matrix, b.matrix))

    for n in [2, 3, 4]:
        product = gates.lift(a, (1, ), n).matrix @ gates.lift(b, (2, ), n).matrix
        assert_allclose(product, gates.lift(ab, (1, 2), n).matrix, atol = 1e-12)

    # non-adjacent and reversed targets
    product = gates.lift(a, (3, ), 3).matrix @ gates.lift(b, (1, ), 3).matrix
    assert_allclose(product, gates.lift(ab, (3, 1), 3).matrix, atol = 1e-12)


def test_lift_invalid_targets():
    x = gates.std_gate("X")

    with pytest.raises(LabelError):
        gates.lift(x, (1, 2), 2)

    with pytest.raises(LabelError):
        gates.lift(gates.std_gate("CNOT"), (1, 1), 2)

    with pytest.raises(LabelError):
        gates.lift(x, (3, ), 2)


def test_controlled_gates():
    assert_allclose(gates.controlled(gates.std_gate("X")).matrix, gates.std_gate("CNOT").matrix)
    assert_allclose(gates.controlled(gates.std_gate("I")).matrix, np.eye(4))
    assert_allclose(gates.controlled(gates.std_gate("Z")).matrix, np.diag([1, 1, 1, -1]))

    toffoli = gates.controlled(gates.std_gate("X"), 2).matrix
    assert_allclose(toffoli @ np.eye(8)[6], np.eye(8)[7])


def test_qft_examples():
    assert_allclose(gates.qft(1).matrix, gates.std_gate("H").matrix, atol = 1e-15)
    assert_allclose(gates.qft(3).matrix[:, 0], np.full(8, 8 ** -0.5), atol = 1e-15)

    expected = np.array([
        [1, 1, 1, 1],
        [1, 1j, -1, -1j],
        [1, -1, 1, -1],
        [1, -1j, -1, 1j]
    ]) / 2
    assert_allclose(gates.qft(2).matrix, expected, atol = 1e-15)


@pytest.mark.parametrize("n", range(1, 8))
def test_qft_is_dft_and_unitary(n):
    u, d = gates.qft(n), 2 ** n

    assert_allclose(u.matrix @ u.dagger.matrix, np.eye(d), atol = 1e-10)
    assert_allclose(u.dagger.matrix, np.fft.fft(np.eye(d), norm = "ortho"), atol = 1e-12)


def test_swap_qubits():
    u = gates.swap_qubits(1, 3, 3).matrix
    assert_allclose(u @ np.eye(8)[0b100], np.eye(8)[0b001])


def test_evolve_examples():
    zero = states.state(states.ket(0, 1))

    assert_allclose(gates.evolve(gates.std_gate("I"), zero).matrix, zero.matrix)
    assert_allclose(gates.evolve(gates.std_gate("X"), zero).matrix, np.diag([0, 1]))
    assert_allclose(gates.evolve(gates.std_gate("H"), zero).matrix, np.ones((2, 2)) / 2, atol = 1e-15)

    with pytest.raises(DimensionMismatch):
        gates.evolve(gates.std_gate("CNOT"), zero)


def test_evolve_preserves_trace_and_spectrum(rng):
    for _ in range(10):
        rho = generator.random_density(3, rng = rng)
        u = generator.random_unitary(3, rng = rng)

        evolved = gates.evolve(u, rho)
        assert np.trace(evolved.matrix).real == pytest.approx(1.0, abs = 1e-12)
        assert_allclose(
            np.linalg.eigvalsh(evolved.matrix), np.linalg.eigvalsh(rho.matrix), atol = 1e-12
        )


def test_evolve_keeps_maximally_mixed(rng):
    for n in range(1, 5):
        rho = states.maximally_mixed(n)
        evolved = gates.evolve(generator.random_unitary(n, rng = rng), rho)

        assert_allclose(evolved.matrix, rho.matrix, atol = 1e-10)


def test_circuit_fold_and_run_agree(bell):
    circuit = CircuitSpec(n_qubits = 2, steps = (
        (gates.std_gate("H"), (1, )),
        (gates.std_gate("CNOT"), (1, 2))
    ))

    rho = states.state(states.ket(0, 2))

    assert_allclose(gates.evolve(gates.fold(circuit), rho).matrix, bell.matrix, atol = 1e-12)
    assert_allclose(gates.run(circuit, rho).matrix, bell.matrix, atol = 1e-12)


def test_circuit_spec_validation():
    with pytest.raises(LabelError):
        CircuitSpec(n_qubits = 2, steps = ((gates.std_gate("X"), (3, )), ))

    with pytest.raises(LabelError):
        CircuitSpec(n_qubits = 2, steps = ((gates.std_gate("CNOT"), (1, )), ))

    with pytest.raises(LabelError):
        CircuitSpec(n_qubits = 2, steps = ((gates.std_gate("CNOT"), (2, 2)), ))
