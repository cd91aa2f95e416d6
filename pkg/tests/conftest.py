# -*- encoding: utf-8 -*-

"""
Shared Fixtures & Brute Force Oracles of the Test Suite

The oracles compute the partial operations by reshaping a density into
a ``2 x 2 x ... x 2`` tensor and permuting/contracting the axes, which
is independent of the register index construction of the module.
"""

from typing import Iterable, List, Tuple

import numpy as np
import pytest

from qubicle.core import states

def all_subsets(n : int) -> List[Tuple[int, ...]]:
    return [
        tuple(label for label in range(1, n + 1) if mask >> (label - 1) & 1)
        for mask in range(2 ** n)
    ]


def ptranspose_oracle(matrix : np.ndarray, labels : Iterable[int], n : int) -> np.ndarray:
    axes = list(range(2 * n))
    for label in labels:
        axes[label - 1], axes[n + label - 1] = axes[n + label - 1], axes[label - 1]

    return matrix.reshape([2] * 2 * n).transpose(axes).reshape(2 ** n, 2 ** n)


def ptrace_oracle(matrix : np.ndarray, removed : Iterable[int], n : int) -> np.ndarray:
    removed = set(removed)
    keep = [i for i in range(n) if i + 1 not in removed]
    gone = [i for i in range(n) if i + 1 in removed]

    tensor = matrix.reshape([2] * 2 * n)
    tensor = tensor.transpose(keep + gone + [n + i for i in keep] + [n + i for i in gone])

    dk, dg = 2 ** len(keep), 2 ** len(gone)
    return np.einsum("aibi->ab", tensor.reshape(dk, dg, dk, dg))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20251016)


@pytest.fixture
def bell():
    return states.bell()


@pytest.fixture
def ghz():
    return states.ghz(3)
