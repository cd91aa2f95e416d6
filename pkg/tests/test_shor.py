# -*- encoding: utf-8 -*-

import numpy as np
import pytest

from numpy.testing import assert_allclose

from qubicle.components.base import QubitSet
from qubicle.core import analysis, gates, partial, shor, states
from qubicle.exceptions import NotCoprime, OutOfRange, UnsupportedModulus

COPRIME = [2, 4, 7, 8, 11, 13, 14]

def multiplicative_order(a : int, modulus : int = 15) -> int:
    return next(r for r in range(1, modulus) if pow(a, r, modulus) == 1)


def test_mod_mult_gate_examples():
    assert_allclose(shor.mod_mult_gate(1).matrix, np.eye(16))

    u = shor.mod_mult_gate(7).matrix
    assert_allclose(u @ np.eye(16)[0b0001], np.eye(16)[0b0111])
    assert_allclose(u @ np.eye(16)[0b1111], np.eye(16)[0b1111])


@pytest.mark.parametrize("a", COPRIME)
def test_mod_mult_gate_is_permutation_with_inverse(a):
    u = shor.mod_mult_gate(a).matrix

    assert np.all(np.sum(u, axis = 0) == 1) and np.all(np.sum(u, axis = 1) == 1)

    inverse = shor.mod_mult_gate(pow(a, -1, 15)).matrix
    assert_allclose(u @ inverse, np.eye(16), atol = 1e-12)

    power = np.linalg.matrix_power(u, multiplicative_order(a))
    assert_allclose(power[:15, :15], np.eye(15), atol = 1e-12)


def test_mod_mult_gate_errors():
    with pytest.raises(NotCoprime):
        shor.mod_mult_gate(5)

    with pytest.raises(UnsupportedModulus):
        shor.mod_mult_gate(2, modulus = 21)


def test_shor_circuit_layout():
    circuit = shor.shor_circuit(7)

    assert circuit.n_qubits == 7
    assert [targets for _, targets in circuit.steps] == [
        (7, ), (1, ), (2, ), (3, ),
        (1, 4, 5, 6, 7), (2, 4, 5, 6, 7), (3, 4, 5, 6, 7),
        (1, 2, 3)
    ]


def test_shor_circuit_errors():
    with pytest.raises(NotCoprime):
        shor.shor_circuit(6)

    with pytest.raises(OutOfRange):
        shor.shor_circuit(1)


def test_folded_shor_circuit_is_unitary():
    u = gates.fold(shor.shor_circuit(7)).matrix
    assert np.max(np.abs(u @ u.conj().T - np.eye(128))) <= 1e-10


@pytest.mark.parametrize("a, peaks", [(7, [0, 2, 4, 6]), (11, [0, 4])])
def test_state_vector_oracle_peaks(a, peaks):
    expected = np.zeros(8)
    expected[peaks] = 1 / len(peaks)

    assert_allclose(shor.state_vector_distribution(a).probs, expected, atol = 1e-12)


@pytest.mark.parametrize("a", [7, 11])
def test_counting_distribution_matches_oracle(a):
    oracle = shor.state_vector_distribution(a).probs
    probs = shor.counting_distribution(a).probs

    assert np.max(np.abs(probs - oracle)) <= 1e-10


@pytest.mark.parametrize("a", COPRIME)
def test_counting_distribution_peaks_at_multiples(a):
    r = multiplicative_order(a)
    probs = shor.counting_distribution(a).probs

    support = np.flatnonzero(probs > 1e-10)
    assert all(x % (8 // r) == 0 for x in support)
    assert_allclose(probs, shor.state_vector_distribution(a).probs, atol = 1e-10)


def test_maximally_mixed_is_invariant():
    rho = gates.evolve(gates.fold(shor.shor_circuit(7)), states.maximally_mixed(7))

    assert_allclose(rho.matrix, np.eye(128) / 128, atol = 1e-12)
    assert_allclose(shor.counting_distribution(7, p = 1.0).probs, np.full(8, 1 / 8), atol = 1e-10)


def test_trivial_circuit():
    circuit = shor.trivial_circuit()
    rho = states.noisy_state(states.state(states.ket(0, 7)), 0.4)

    assert len(circuit) == 0
    assert_allclose(gates.run(circuit, rho).matrix, rho.matrix)

    reduced = partial.ptrace(rho, QubitSet(labels = (4, 5, 6, 7), n = 7))
    expected = 0.6 * np.diag(np.eye(8)[0]) + 0.4 * np.eye(8) / 8
    assert_allclose(reduced.matrix, expected, atol = 1e-12)

    reference = states.state(states.ket(0, 3))
    assert analysis.fidelity(reference, reduced) == pytest.approx(np.sqrt(1 - 7 * 0.4 / 8), abs = 1e-9)
