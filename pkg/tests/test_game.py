"""Game tests: ideal resource, question unitaries, success projectors,
cell/game values, and the exhaustive classical bound."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msgame.game import (
    cell_win_probability,
    classical_optimum,
    ideal_state,
    strategy_operators,
    success_projector,
    win_probability,
)
from msgame.linalg import DimensionMismatch, dagger, kron, permute_qubits
from msgame.model import ModelParams, build_hamiltonian, effective_state, thermal_state

CELLS = [(m, n) for m in (1, 2, 3) for n in (1, 2, 3)]


# ------------------------------------------------------- ideal state ---


def test_ideal_state_amplitudes():
    mat = ideal_state().mat
    # (|0011> + |1100> - |0110> - |1001>)/2, qubit 1 most significant
    assert mat[0b0011, 0b0011] == pytest.approx(0.25, abs=1e-15)
    assert mat[0b1100, 0b1100] == pytest.approx(0.25, abs=1e-15)
    assert mat[0b0011, 0b1100] == pytest.approx(0.25, abs=1e-15)
    assert mat[0b0011, 0b0110] == pytest.approx(-0.25, abs=1e-15)
    assert mat[0b0011, 0b1001] == pytest.approx(-0.25, abs=1e-15)
    assert mat.trace() == pytest.approx(1.0, abs=1e-15)
    assert np.trace(mat @ mat).real == pytest.approx(1.0, abs=1e-14)


def test_ideal_state_is_two_relabeled_singlets():
    singlet = np.zeros(4, dtype=complex)
    singlet[1], singlet[2] = 1 / np.sqrt(2), -1 / np.sqrt(2)
    proj = np.outer(singlet, singlet.conj())
    assert np.abs(permute_qubits(kron(proj, proj), (1, 3, 2, 4)) - ideal_state().mat).max() <= 1e-15


# -------------------------------------------------- question unitaries ---


def test_strategy_operators_unitary():
    ops = strategy_operators()
    for u in (*ops.a, *ops.b):
        assert np.abs(u @ dagger(u) - np.eye(4)).max() <= 1e-12
        assert np.abs(dagger(u) @ u - np.eye(4)).max() <= 1e-12


def test_strategy_operator_entries():
    ops = strategy_operators()
    assert ops.a[0][0, 0] == pytest.approx(1j / np.sqrt(2), abs=1e-15)
    assert ops.b[1][0, 0] == pytest.approx(-0.5, abs=1e-15)


# ---------------------------------------------------------- projectors ---


def test_success_projector_structure():
    for m, n in CELLS:
        proj = success_projector(m, n)
        assert np.abs(proj - np.diag(proj.diagonal())).max() == 0.0
        assert np.abs(proj @ proj - proj).max() == 0.0
        assert proj.trace() == pytest.approx(8.0, abs=0)


def test_success_projector_corner_cell_parity():
    # at (m, n) = (3, 3) both parity-completed entries meet:
    # success iff a1 ^ a2 = 1 ^ b1 ^ b2, i.e. a1^a2^b1^b2 = 1
    diag = success_projector(3, 3).diagonal().real
    for idx in range(16):
        bits = [(idx >> k) & 1 for k in (3, 2, 1, 0)]
        expected = 1.0 if (bits[0] ^ bits[1] ^ bits[2] ^ bits[3]) == 1 else 0.0
        assert diag[idx] == expected


def test_success_projector_row_sums():
    for m in (1, 2, 3):
        total = sum(success_projector(m, n).trace().real for n in (1, 2, 3))
        assert total == 24.0


def test_success_projector_rejects_bad_cell():
    with pytest.raises(ValueError):
        success_projector(0, 1)
    with pytest.raises(ValueError):
        success_projector(1, 4)


# --------------------------------------------------------- cell values ---


def test_unit_value_on_ideal_state():
    res = win_probability(ideal_state())
    assert np.abs(res.probs - 1.0).max() <= 1e-12
    assert res.average == pytest.approx(1.0, abs=1e-12)


def test_maximally_mixed_gives_half():
    mixed = np.eye(16) / 16
    for m, n in CELLS:
        assert cell_win_probability(mixed, m, n) == pytest.approx(0.5, abs=1e-12)


def test_low_T_pipeline_cell():
    assert cell_win_probability(effective_state(ModelParams(T=0.01)), 1, 1) >= 0.999


def test_cell_accepts_density_matrix_and_array():
    rho = effective_state(ModelParams(T=0.5))
    assert cell_win_probability(rho, 2, 3) == cell_win_probability(rho.mat, 2, 3)
    with pytest.raises(DimensionMismatch):
        cell_win_probability(np.eye(4) / 4, 1, 1)


@given(st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=25, deadline=None)
def test_win_probability_affine_in_state(lam):
    r1 = effective_state(ModelParams(T=0.2)).mat
    r2 = effective_state(ModelParams(B=1.5, D=0.5, T=0.6)).mat
    mixed = lam * r1 + (1 - lam) * r2
    direct = win_probability(mixed).average
    convex = lam * win_probability(r1).average + (1 - lam) * win_probability(r2).average
    assert abs(direct - convex) <= 1e-12


@given(
    st.floats(min_value=0.0, max_value=2.0),
    st.floats(min_value=0.1, max_value=2.0),
)
@settings(max_examples=20, deadline=None)
def test_win_probability_even_in_D_and_b(x, T):
    plus_d = win_probability(effective_state(ModelParams(D=x, T=T))).average
    minus_d = win_probability(effective_state(ModelParams(D=-x, T=T))).average
    assert abs(plus_d - minus_d) <= 1e-10
    plus_b = win_probability(effective_state(ModelParams(b=x, T=T))).average
    minus_b = win_probability(effective_state(ModelParams(b=-x, T=T))).average
    assert abs(plus_b - minus_b) <= 1e-10


def test_win_probability_monotone_in_temperature():
    pws = [
        win_probability(effective_state(ModelParams(T=t))).average
        for t in (0.01, 0.1, 0.25, 0.5, 0.75, 1.0)
    ]
    assert all(a >= b for a, b in zip(pws, pws[1:]))


def test_cell_result_consistency():
    res = win_probability(effective_state(ModelParams(B=0.8, T=0.3)))
    assert res.average == pytest.approx(res.probs.mean(), abs=1e-14)
    assert res.probs.min() >= 0.0 and res.probs.max() <= 1.0


# ----------------------------------------------------- classical bound ---


def test_classical_optimum_value_and_witness():
    value, witness = classical_optimum()
    assert value == Fraction(8, 9)
    # witness respects the parities by construction; re-verify explicitly
    for m in (1, 2, 3):
        assert sum(witness.row_entries(m)) % 2 == 0
    for n in (1, 2, 3):
        assert sum(witness.col_entries(n)) % 2 == 1
    # and achieves exactly 8 winning cells, independently recounted
    wins = sum(
        witness.row_entries(m)[n - 1] == witness.col_entries(n)[m - 1]
        for m in (1, 2, 3)
        for n in (1, 2, 3)
    )
    assert wins == 8
    assert witness.win_count() == 8


def test_no_classical_strategy_wins_everything():
    # the full-parity obstruction: the 9 entries would need an even total
    # by rows and an odd total by columns
    value, _ = classical_optimum()
    assert value < 1
