"""Negativity and logarithmic negativity from the partial transpose."""

from dataclasses import dataclass

import numpy as np

from .linalg import DimensionMismatch, partial_transpose, trace_norm
from .model import DensityMatrix


@dataclass(frozen=True)
class Bipartition:
    """One side of a bipartite split, as a set of 1-based qubit indices;
    the other side is the complement."""

    side_a: frozenset

    def __post_init__(self):
        object.__setattr__(self, "side_a", frozenset(self.side_a))
        if not self.side_a:
            raise ValueError("side_a must be non-empty")


def _resolve(rho, split):
    mat = rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    side_a = split.side_a if isinstance(split, Bipartition) else frozenset(split)
    n = mat.shape[0].bit_length() - 1
    if 2**n != mat.shape[0]:
        raise DimensionMismatch(f"dimension {mat.shape[0]} is not a power of two")
    if not side_a or not side_a < set(range(1, n + 1)):
        raise DimensionMismatch(
            f"side {set(side_a)} is not a proper non-empty subset of qubits 1..{n}"
        )
    return mat, side_a


def negativity(rho, split) -> float:
    """N = (||rho^{T_A}||_1 - 1) / 2; zero iff the partial transpose
    stays positive (e.g. any separable state)."""
    mat, side_a = _resolve(rho, split)
    n = (trace_norm(partial_transpose(mat, side_a)) - 1.0) / 2.0
    assert n >= -1e-12
    return max(0.0, n)


def log_negativity(rho, split) -> float:
    """LN = log2 ||rho^{T_A}||_1 = log2(2N + 1); the singlet gives exactly 1."""
    mat, side_a = _resolve(rho, split)
    ln = float(np.log2(trace_norm(partial_transpose(mat, side_a))))
    return max(0.0, ln)
