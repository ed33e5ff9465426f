"""The magic square game and its evaluation on four-qubit states.

Players fill a 3x3 binary grid: Alice gets a row number m and answers
with a row of even parity, Bob gets a column number n and answers with a
column of odd parity; they win iff the two answers agree where row and
column cross.  No classical strategy wins more than 8 of the 9 (m, n)
cells, but sharing two Bell pairs wins all of them.

Quantum play is evaluated in the measurement picture: each player
applies a fixed two-qubit unitary chosen by their question (A_m on
qubits 1,2; B_n on qubits 3,4), then both read their qubits in the
computational basis.  Alice's bits (a1, a2) are her row's first two
entries and a1^a2 completes the even parity; Bob's bits (b1, b2) are his
column's first two entries and 1^b1^b2 completes the odd parity.  The
cell value P_mn is the probability that the parity-completed answers
agree at the crossing, and the game value P_w is the average over the
nine question pairs.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import DimensionMismatch, dagger, kron
from .model import DensityMatrix

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class StrategySet:
    """The six local unitaries, indexed by question: a[m-1] for Alice's
    row m, b[n-1] for Bob's column n."""

    a: tuple
    b: tuple


@dataclass(frozen=True)
class CellResult:
    """Per-cell winning probabilities P_mn (probs[m-1, n-1]) and their
    average P_w."""

    probs: np.ndarray
    average: float

    def __post_init__(self):
        assert abs(self.average - self.probs.mean()) <= 1e-14


@dataclass(frozen=True)
class ClassicalStrategy:
    """A deterministic classical strategy pair.

    rows[m-1] holds Alice's freely chosen entries at columns 1, 2 of row
    m (column 3 is forced by even parity); cols[n-1] holds Bob's entries
    at rows 1, 2 of column n (row 3 forced by odd parity).
    """

    rows: tuple
    cols: tuple

    def row_entries(self, m: int) -> tuple:
        e1, e2 = self.rows[m - 1]
        return (e1, e2, e1 ^ e2)

    def col_entries(self, n: int) -> tuple:
        f1, f2 = self.cols[n - 1]
        return (f1, f2, 1 ^ f1 ^ f2)

    def win_count(self) -> int:
        return sum(
            self.row_entries(m)[n - 1] == self.col_entries(n)[m - 1]
            for m in (1, 2, 3)
            for n in (1, 2, 3)
        )


def ideal_state() -> DensityMatrix:
    """The four-qubit resource that wins every cell: two singlets with
    qubits 2 and 3 relabeled, (|0011> + |1100> - |0110> - |1001>)/2."""
    psi = np.zeros(16, dtype=complex)
    psi[0b0011] = 0.5
    psi[0b1100] = 0.5
    psi[0b0110] = -0.5
    psi[0b1001] = -0.5
    return DensityMatrix(np.outer(psi, psi.conj()), 4)


def strategy_operators() -> StrategySet:
    """The six fixed question unitaries (4x4 each)."""
    a1 = np.array(
        [[1j, 0, 0, 1], [0, -1j, 1, 0], [0, 1j, 1, 0], [1, 0, 0, 1j]]
    ) / _SQRT2
    a2 = np.array(
        [[1j, 1, 1, 1j], [-1j, 1, -1, 1j], [1j, 1, -1, -1j], [-1j, 1, 1, -1j]]
    ) / 2
    a3 = np.array(
        [[-1, -1, -1, 1], [1, 1, -1, 1], [1, -1, 1, 1], [1, -1, -1, -1]],
        dtype=complex,
    ) / 2
    b1 = np.array(
        [[1j, -1j, 1, 1], [-1j, -1j, 1, -1], [1, 1, -1j, 1j], [-1j, 1j, 1, 1]]
    ) / 2
    b2 = np.array(
        [[-1, 1j, 1, 1j], [1, 1j, 1, -1j], [1, -1j, 1, 1j], [-1, -1j, 1, -1j]]
    ) / 2
    b3 = np.array(
        [[1, 0, 0, 1], [-1, 0, 0, 1], [0, 1, 1, 0], [0, 1, -1, 0]], dtype=complex
    ) / _SQRT2
    return StrategySet(a=(a1, a2, a3), b=(b1, b2, b3))


def _check_cell(m: int, n: int):
    if m not in (1, 2, 3) or n not in (1, 2, 3):
        raise ValueError(f"cell indices must be in 1..3, got ({m}, {n})")


def _success_mask(m: int, n: int) -> np.ndarray:
    """Boolean mask over the 16 basis states |a1 a2 b1 b2> (qubit 1 the
    most significant bit) marking outcomes where the answers agree."""
    mask = np.zeros(16, dtype=bool)
    for idx in range(16):
        a1, a2 = (idx >> 3) & 1, (idx >> 2) & 1
        b1, b2 = (idx >> 1) & 1, idx & 1
        alice = (a1, a2, a1 ^ a2)
        bob = (b1, b2, 1 ^ b1 ^ b2)
        mask[idx] = alice[n - 1] == bob[m - 1]
    return mask


def success_projector(m: int, n: int) -> np.ndarray:
    """Diagonal 16x16 projector onto the winning outcomes of cell (m, n).

    One agreement constraint on four free bits: always rank 8.
    """
    _check_cell(m, n)
    return np.diag(_success_mask(m, n).astype(complex))


# question unitaries and masks for the nine cells, built once
_OPS = strategy_operators()
_CELL_UNITARY = {
    (m, n): kron(_OPS.a[m - 1], _OPS.b[n - 1]) for m in (1, 2, 3) for n in (1, 2, 3)
}
_CELL_MASK = {(m, n): _success_mask(m, n) for m in (1, 2, 3) for n in (1, 2, 3)}


def _state_matrix(rho) -> np.ndarray:
    mat = rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if mat.shape != (16, 16):
        raise DimensionMismatch(f"need a 16x16 four-qubit state, got {mat.shape}")
    return mat


def cell_win_probability(rho, m: int, n: int) -> float:
    """P_mn = tr((A_m (x) B_n) rho (A_m (x) B_n)^dag Pi_mn), clamped to [0, 1]."""
    _check_cell(m, n)
    mat = _state_matrix(rho)
    u = _CELL_UNITARY[(m, n)]
    final = u @ mat @ dagger(u)
    val = final.diagonal()[_CELL_MASK[(m, n)]].sum()
    assert abs(val.imag) <= 1e-12
    return min(1.0, max(0.0, float(val.real)))


def win_probability(rho) -> CellResult:
    """All nine cell probabilities and their average P_w."""
    probs = np.array(
        [[cell_win_probability(rho, m, n) for n in (1, 2, 3)] for m in (1, 2, 3)]
    )
    return CellResult(probs=probs, average=float(probs.mean()))


def classical_optimum():
    """Best deterministic classical strategy by exhaustive enumeration.

    Sweeps all 4^3 x 4^3 = 4096 strategy pairs (each player freely picks
    two bits per question; parity forces the third) and returns the
    maximal fraction of winning cells as an exact Fraction together with
    a witness strategy attaining it.  Probabilistic strategies are convex
    mixtures of deterministic ones, so the deterministic maximum is the
    classical value of the game.
    """
    pairs = tuple(itertools.product((0, 1), repeat=2))
    best, witness = -1, None
    for rows in itertools.product(pairs, repeat=3):
        row_entries = [(e1, e2, e1 ^ e2) for e1, e2 in rows]
        for cols in itertools.product(pairs, repeat=3):
            col_entries = [(f1, f2, 1 ^ f1 ^ f2) for f1, f2 in cols]
            wins = sum(
                row_entries[m][n] == col_entries[n][m]
                for m in range(3)
                for n in range(3)
            )
            if wins > best:
                best, witness = wins, ClassicalStrategy(rows=rows, cols=cols)
    return Fraction(best, 9), witness
