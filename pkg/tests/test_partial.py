# -*- encoding: utf-8 -*-

import numpy as np
import pytest

from numpy.testing import assert_allclose

from qubicle.components.base import QubitSet
from qubicle.components.states import DensityMatrix
from qubicle.core import gates, partial, states
from qubicle.exceptions import LabelError
from qubicle.utils import generator

from conftest import all_subsets, ptrace_oracle, ptranspose_oracle

@pytest.fixture(scope = "module")
def densities():
    return list(generator.random_densities(100, 4, seed = 1234))


def test_ptranspose_examples(bell, ghz):
    empty = QubitSet(labels = (), n = 3)
    full = QubitSet(labels = (1, 2, 3), n = 3)

    assert_allclose(partial.ptranspose(ghz, empty), ghz.matrix)
    assert_allclose(partial.ptranspose(ghz, full), ghz.matrix.T)

    expected = np.array([
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1]
    ]) / 2
    assert_allclose(partial.ptranspose(bell, QubitSet(labels = (1, ), n = 2)), expected, atol = 1e-15)


def test_ptranspose_matches_oracle(densities):
    for rho in densities:
        for labels in all_subsets(4):
            pt = partial.ptranspose(rho, QubitSet(labels = labels, n = 4))
            assert np.max(np.abs(pt - ptranspose_oracle(rho.matrix, labels, 4))) <= 1e-12


def test_ptranspose_properties(densities):
    rho = densities[0]

    for labels in all_subsets(4):
        q = QubitSet(labels = labels, n = 4)
        pt = partial.ptranspose(rho, q)

        # hermitian, unit trace and an involution
        assert_allclose(pt, pt.conj().T, atol = 1e-12)
        assert np.trace(pt).real == pytest.approx(1.0, abs = 1e-12)

        twice = partial.ptranspose(DensityMatrix.model_construct(matrix = pt), q)
        assert_allclose(twice, rho.matrix, atol = 1e-12)


def test_ptranspose_composes_over_disjoint_sets(densities):
    rho = densities[1]

    for first in all_subsets(4):
        for second in all_subsets(4):
            if set(first) & set(second):
                continue

            once = partial.ptranspose(rho, QubitSet(labels = first, n = 4))
            twice = partial.ptranspose(
                DensityMatrix.model_construct(matrix = once), QubitSet(labels = second, n = 4)
            )
            union = QubitSet.from_labels(first + second, n = 4)

            assert np.max(np.abs(twice - partial.ptranspose(rho, union))) <= 1e-12


def test_ptrace_examples(bell):
    rho = states.state(states.ket(0b01, 2))

    assert_allclose(partial.ptrace(rho, QubitSet(labels = (2, ), n = 2)).matrix, np.diag([1, 0]))
    assert_allclose(partial.ptrace(bell, QubitSet(labels = (2, ), n = 2)).matrix, np.eye(2) / 2, atol = 1e-15)


def test_ptrace_of_product_state(rng):
    rho_a = generator.random_density(2, rng = rng)
    rho_b = generator.random_density(1, rng = rng)

    rho = DensityMatrix(matrix = np.kron(rho_a.matrix, rho_b.matrix))

    reduced = partial.ptrace(rho, QubitSet(labels = (3, ), n = 3))
    assert np.max(np.abs(reduced.matrix - rho_a.matrix)) <= 1e-12

    reduced = partial.ptrace_keep(rho, QubitSet(labels = (3, ), n = 3))
    assert np.max(np.abs(reduced.matrix - rho_b.matrix)) <= 1e-12


def test_ptrace_matches_oracle(densities):
    for rho in densities:
        for labels in all_subsets(4)[:-1]:
            reduced = partial.ptrace(rho, QubitSet(labels = labels, n = 4))

            assert reduced.nqubits == 4 - len(labels)
            assert np.max(np.abs(reduced.matrix - ptrace_oracle(rho.matrix, labels, 4))) <= 1e-12


def test_ptrace_output_is_valid_density(densities):
    for labels in all_subsets(4)[:-1]:
        reduced = partial.ptrace(densities[-1], QubitSet(labels = labels, n = 4))
        assert states.validate_density(reduced.matrix).dim == 2 ** (4 - len(labels))


def test_ptrace_composes():
    rho = generator.random_density(4, rng = 5)

    once = partial.ptrace(rho, QubitSet(labels = (2, 4), n = 4))
    twice = partial.ptrace(
        partial.ptrace(rho, QubitSet(labels = (4, ), n = 4)), QubitSet(labels = (2, ), n = 3)
    )
    assert_allclose(once.matrix, twice.matrix, atol = 1e-12)


def test_ptrace_commutes_with_gates_on_kept_qubits(rng):
    # U acts on the kept qubits (1, 3) which are (1, 2) of the reduced register
    traced = QubitSet(labels = (2, ), n = 3)

    for _ in range(10):
        rho = generator.random_density(3, rng = rng)
        u = generator.random_unitary(2, rng = rng)

        lhs = partial.ptrace(gates.evolve(gates.lift(u, (1, 3), 3), rho), traced)
        rhs = gates.evolve(u, partial.ptrace(rho, traced))

        assert_allclose(lhs.matrix, rhs.matrix, atol = 1e-10)


def test_ptrace_label_errors(ghz):
    with pytest.raises(LabelError):
        partial.ptrace(ghz, QubitSet(labels = (1, 2, 3), n = 3))

    with pytest.raises(LabelError):
        partial.ptrace(ghz, QubitSet(labels = (1, ), n = 4))

    with pytest.raises(LabelError):
        partial.ptrace_keep(ghz, QubitSet(labels = (), n = 3))


def test_total_trace(ghz):
    assert partial.total_trace(ghz) == pytest.approx(1.0)
