"""Acceptance gate: one test per release criterion, each printing a
single PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s``).

Two checks are expected to fail, both through the same measured fact:
at T = 1 the two-qubit logarithmic negativity *rises* with the staggered
field b over the stated grid (0.0961 at b=0 up to 0.2466 at b=2) instead
of falling.  The b-direction monotonicity asserted by criterion 8 holds
at T = 0.1 and T = 0.5 but reverses at high temperature, where raising b
purifies the thermal mixture faster than it disentangles the ground
state.  Criterion 9 asserts criterion 8 jointly with criterion 4 and
inherits the failure.  Both tests state the offending numbers in their
FAIL line; the checks are kept exact rather than weakened.
"""

import itertools

import numpy as np

from msgame import (
    Bipartition,
    ModelParams,
    build_hamiltonian,
    classical_optimum,
    closed_form_state,
    effective_state,
    ideal_state,
    log_negativity,
    pw_formula_b_zero,
    pw_formula_db_zero,
    strategy_operators,
    thermal_state,
    win_probability,
)
from msgame.cli import critical_scan
from msgame.linalg import dagger

CLASSICAL_VALUE = 8.0 / 9.0


def report(num, ok: bool, detail: str):
    print(f"ACCEPTANCE {num:>2} [{'PASS' if ok else 'FAIL'}] {detail}")
    assert ok, detail


def pw(**kw) -> float:
    return win_probability(effective_state(ModelParams(**kw))).average


def chain_logneg(**kw) -> float:
    p = ModelParams(**kw)
    rho = thermal_state(build_hamiltonian(p), p.T)
    return log_negativity(rho, Bipartition(frozenset({1})))


def test_criterion_1_unit_quantum_value():
    cells = win_probability(ideal_state())
    worst = float(np.max(np.abs(cells.probs - 1.0)))
    report(1, worst <= 1e-12, f"ideal-state cell deviation from 1: {worst:.3e}")


def test_criterion_2_classical_bound():
    value, witness = classical_optimum()
    ok = (
        value.numerator == 8
        and value.denominator == 9
        and witness.win_count() == 8
    )
    report(2, ok, f"exhaustive classical optimum: {value} ({witness.win_count()}/9 cells)")


def test_criterion_3_closed_form_matches_pipeline():
    worst = 0.0
    grid = [0.0, 0.5, 1.0]
    for jz, B, b, D in itertools.product(grid, repeat=4):
        for T in (0.1, 0.5, 1.0):
            p = ModelParams(jz=jz, B=B, b=b, D=D, T=T)
            direct = thermal_state(build_hamiltonian(p), p.T).mat
            analytic = closed_form_state(p).mat
            worst = max(worst, float(np.max(np.abs(direct - analytic))))
    report(3, worst <= 1e-10, f"max entrywise gap over 243 points: {worst:.3e}")


def _criterion4_worst() -> float:
    worst = 0.0
    for x in (0.25, 0.5, 0.75, 1.0, 2.0):
        for T in (0.05, 0.25, 1.0):
            for B in (0.0, 0.5):
                for jz in (0.0, 1.0):
                    gap = abs(
                        pw(jz=jz, B=B, D=x, T=T) - pw(jz=jz, B=B, b=x, T=T)
                    )
                    worst = max(worst, gap)
    return worst


def test_criterion_4_D_b_equivalence():
    worst = _criterion4_worst()
    report(4, worst <= 1e-10, f"max |P_w(D=x) − P_w(b=x)| over 60 points: {worst:.3e}")


def test_criterion_5_analytic_formulas():
    worst_db = 0.0
    for B in np.linspace(0.0, 3.0, 31):
        for T in (0.1, 0.5, 1.0):
            gap = abs(pw_formula_db_zero(float(B), T) - pw(B=float(B), T=T))
            worst_db = max(worst_db, gap)
    worst_b0 = 0.0
    for nu in np.linspace(1.0, np.sqrt(10.0), 31):
        D = float(np.sqrt(nu**2 - 1.0))
        for T in (0.1, 0.5, 1.0):
            gap = abs(pw_formula_b_zero(float(nu), T) - pw(D=D, T=T))
            worst_b0 = max(worst_b0, gap)
    ok = worst_db <= 5e-3 and worst_b0 <= 5e-3
    report(5, ok, f"formula vs pipeline: D=b=0 {worst_db:.3e}, B=0 {worst_b0:.3e}")


def test_criterion_6_critical_fields():
    found = []
    for jz, target in ((0.0, 1.0), (0.5, 1.5), (1.0, 2.0)):
        res = critical_scan(jz, 0.01, 0.0, 3.0, 301)
        found.append((jz, res.critical_B, target))
    ok = all(abs(cb - target) <= 0.05 for _, cb, target in found)
    detail = ", ".join(f"jz={jz:g}: B*={cb:.3f} (target {t:g})" for jz, cb, t in found)
    report(6, ok, detail)


def test_criterion_7_maximally_mixed_value():
    hot = pw(T=1e9)
    direct = win_probability(np.eye(16, dtype=complex) / 16.0).average
    ok = abs(hot - 0.5) <= 1e-9 and abs(direct - 0.5) <= 1e-9
    report(7, ok, f"P_w(T=1e9) = {hot:.12f}, P_w(I/16) = {direct:.12f}")


def _criterion8_violations():
    values = (0.0, 0.5, 1.0, 1.5, 2.0)
    temps = (0.1, 0.5, 1.0)
    problems = []
    for T in temps:
        lnD = [chain_logneg(D=v, T=T) for v in values]
        lnb = [chain_logneg(b=v, T=T) for v in values]
        for prev, cur, v in zip(lnD, lnD[1:], values[1:]):
            if cur < prev - 1e-12:
                problems.append(f"LN(D) drops at T={T:g}, D={v:g}: {prev:.6f}→{cur:.6f}")
        for prev, cur, v in zip(lnb, lnb[1:], values[1:]):
            if cur > prev + 1e-12:
                problems.append(f"LN(b) rises at T={T:g}, b={v:g}: {prev:.6f}→{cur:.6f}")
    spread = {
        D: max(chain_logneg(D=D, T=T) for T in temps)
        - min(chain_logneg(D=D, T=T) for T in temps)
        for D in (0.0, 2.0)
    }
    if not spread[2.0] < spread[0.0]:
        problems.append(f"spread at D=2 ({spread[2.0]:.3f}) not below D=0 ({spread[0.0]:.3f})")
    return problems


def test_criterion_8_entanglement_trends():
    problems = _criterion8_violations()
    detail = "; ".join(problems) if problems else "monotone in D and b, spread shrinks"
    report(8, not problems, detail)


def test_criterion_9_opposite_effect_same_value():
    worst4 = _criterion4_worst()
    problems8 = _criterion8_violations()
    ok = worst4 <= 1e-10 and not problems8
    detail = f"game-value gap {worst4:.3e}; " + (
        "; ".join(problems8) if problems8 else "entanglement trends hold"
    )
    report(9, ok, detail)


def test_criterion_10_low_temperature_limit():
    chain = [pw(T=T) for T in (0.01, 0.1, 0.5, 1.0)]
    ok = chain[0] >= 0.999 and all(a >= b for a, b in zip(chain, chain[1:]))
    report(10, ok, "P_w at T=0.01,0.1,0.5,1: " + ", ".join(f"{v:.6f}" for v in chain))


def test_criterion_11_strategy_unitarity():
    ops = strategy_operators()
    worst = 0.0
    for u in ops.a + ops.b:
        worst = max(worst, float(np.max(np.abs(u @ dagger(u) - np.eye(4)))))
    report(11, worst <= 1e-12, f"max ‖UU† − I‖ over six operators: {worst:.3e}")


def test_figure_level_anchors():
    near = pw(D=0.75, T=0.01)
    far = pw(D=1.5, T=0.01)
    ok = near >= CLASSICAL_VALUE - 0.02 and far < CLASSICAL_VALUE
    report(
        "F",
        ok,
        f"P_w(D=0.75, T=0.01) = {near:.6f} (≥ {CLASSICAL_VALUE - 0.02:.6f}), "
        f"P_w(D=1.5, T=0.01) = {far:.6f} (< 8/9)",
    )
