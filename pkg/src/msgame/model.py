"""Two-spin XXZ chain with DM interaction and magnetic fields, and its
thermal states.

The chain Hamiltonian (k = 1, J_x = J_y = 1 fixed) is

    H = 1/2 [ sx.sx + sy.sy + Jz sz.sz + D (sx.sy - sy.sx)
              + (B + b) sz.1 + (B - b) 1.sz ]

with Jz >= 0 the z-coupling, B/b the homogeneous/inhomogeneous z-field
strengths and D the z-component DM interaction.  Besides the generic
Gibbs-state route e^{-H/T}/Z, the nonzero entries of the 4x4 thermal
state have a closed form in terms of gamma = exp(Jz/2T) and
nu = sqrt(1 + b^2 + D^2); both routes are implemented independently so
each validates the other.

The four-qubit game resource is built from two identical chains: take
rho (x) rho and relabel qubits 2 and 3, handing qubits (1, 2) to one
player and (3, 4) to the other.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import DimensionMismatch, dagger, herm_eig, kron, permute_qubits

I2 = np.eye(2, dtype=complex)
sx = np.array([[0, 1], [1, 0]], dtype=complex)
sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
sz = np.array([[1, 0], [0, -1]], dtype=complex)

# qubit relabeling that turns chain ordering (chain1: 1,2 / chain2: 3,4)
# into game ordering (Alice: 1,2 / Bob: 3,4): swap qubits 2 and 3
CHAIN_TO_GAME_PERM = (1, 3, 2, 4)


class NonPositiveTemperature(ValueError):
    """Thermal states require a strictly positive temperature."""


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of one chain instance.

    jz >= 0; T > 0 strictly (callers wanting the T -> 0 limit should use
    a small positive value such as 1e-3).
    """

    jz: float = 0.0
    B: float = 0.0
    b: float = 0.0
    D: float = 0.0
    T: float = 1.0

    def __post_init__(self):
        if not self.T > 0:
            raise NonPositiveTemperature(f"T = {self.T} must be > 0")
        if self.jz < 0:
            raise ValueError(f"jz = {self.jz} must be >= 0 (antiferromagnetic)")


@dataclass(frozen=True)
class DensityMatrix:
    """A validated quantum state: Hermitian, unit trace, PSD."""

    mat: np.ndarray
    qubits: int

    def __post_init__(self):
        object.__setattr__(self, "mat", np.asarray(self.mat, dtype=complex))
        dim = 2**self.qubits
        if self.mat.shape != (dim, dim):
            raise DimensionMismatch(
                f"{self.qubits}-qubit state needs shape {(dim, dim)}, got {self.mat.shape}"
            )
        herm_dev = np.abs(self.mat - dagger(self.mat)).max()
        if herm_dev > 1e-10:
            raise ValueError(f"not Hermitian: max deviation {herm_dev:.3e}")
        tr_dev = abs(self.mat.trace() - 1.0)
        if tr_dev > 1e-10:
            raise ValueError(f"trace deviates from 1 by {tr_dev:.3e}")
        min_eig = np.linalg.eigvalsh(self.mat).min()
        if min_eig < -1e-10:
            raise ValueError(f"negative eigenvalue {min_eig:.3e}")

    @property
    def dim(self) -> int:
        return 2**self.qubits


@dataclass(frozen=True)
class ClosedFormElements:
    """Unnormalized nonzero entries of the 4x4 thermal chain state.

    The entries are numerators; dividing by ``partition`` gives the
    density matrix.  rho23 = conj(rho32); the diagonal entries are real
    and nonnegative; their sum equals ``partition``.
    """

    gamma: float
    nu: float
    rho11: complex
    rho22: complex
    rho23: complex
    rho32: complex
    rho33: complex
    rho44: complex
    partition: float

    def __post_init__(self):
        if abs(self.rho23 - np.conj(self.rho32)) > 1e-12 * abs(self.partition):
            raise ValueError("rho23 != conj(rho32)")
        for name in ("rho11", "rho22", "rho33", "rho44"):
            v = getattr(self, name)
            # real and nonnegative; exact zeros are underflowed Boltzmann
            # factors, not sign errors
            if abs(v.imag) > 1e-12 * abs(self.partition) or v.real < 0:
                raise ValueError(f"{name} = {v} is not real and nonnegative")
        tr = (self.rho11 + self.rho22 + self.rho33 + self.rho44).real
        if abs(tr / self.partition - 1.0) > 1e-12:
            raise ValueError(f"diagonal sum {tr} != partition {self.partition}")


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """4x4 chain Hamiltonian; Hermitian by construction.

    Only the central block (spanned by |01>, |10>) is nondiagonal:
    [[b, 1+iD], [1-iD, -b]] shifted by -jz/2, with eigenvalues
    -jz/2 +- nu.  The outer levels |00>, |11> sit at jz/2 +- B.
    """
    return 0.5 * (
        kron(sx, sx)
        + kron(sy, sy)
        + p.jz * kron(sz, sz)
        + p.D * (kron(sx, sy) - kron(sy, sx))
        + (p.B + p.b) * kron(sz, I2)
        + (p.B - p.b) * kron(I2, sz)
    )


def thermal_state(h: np.ndarray, temperature: float) -> DensityMatrix:
    """Gibbs state e^{-h/T} / tr(e^{-h/T}).

    Computed from the eigendecomposition with the ground energy
    subtracted before exponentiating, so arbitrarily low temperatures
    cannot overflow; the shift cancels in the normalization.
    """
    if not temperature > 0:
        raise NonPositiveTemperature(f"T = {temperature} must be > 0")
    w, v = herm_eig(h)
    weights = np.exp(-(w - w[0]) / temperature)
    rho = (v * weights) @ dagger(v)
    rho /= rho.trace().real
    n = rho.shape[0].bit_length() - 1
    return DensityMatrix(rho, n)


def closed_form_elements(p: ModelParams) -> ClosedFormElements:
    """Analytic entries of the thermal chain state.

    gamma = exp(jz/2T), nu = sqrt(1 + b^2 + D^2); the central block
    mixes |01>, |10> through sinh(nu/T) with phase 1 + iD, the outer
    entries are pure field/coupling Boltzmann factors, and

        Z = 2 [ gamma^{-1} cosh(B/T) + gamma cosh(nu/T) ].

    The cosh/sinh combinations are evaluated in exponential form
    (cosh x - sinh x = e^{-x} and so on), which is the same algebra but
    avoids the catastrophic cancellation the subtracted form suffers
    once B/T or nu/T grows past ~18.  Entries still overflow for
    extreme arguments; ``thermal_state`` is the fully safe route.
    """
    gamma = np.exp(p.jz / (2 * p.T))
    nu = np.sqrt(1.0 + p.b**2 + p.D**2)
    ep_b, em_b = np.exp(p.B / p.T), np.exp(-p.B / p.T)
    ep_n, em_n = np.exp(nu / p.T), np.exp(-nu / p.T)
    sh_n = (ep_n - em_n) / 2
    return ClosedFormElements(
        gamma=gamma,
        nu=nu,
        rho11=em_b / gamma,
        rho22=gamma * ((1 - p.b / nu) * ep_n + (1 + p.b / nu) * em_n) / 2,
        rho23=-gamma * (1 + 1j * p.D) / nu * sh_n,
        rho32=-gamma * (1 - 1j * p.D) / nu * sh_n,
        rho33=gamma * ((1 + p.b / nu) * ep_n + (1 - p.b / nu) * em_n) / 2,
        rho44=ep_b / gamma,
        partition=(ep_b + em_b) / gamma + gamma * (ep_n + em_n),
    )


def closed_form_state(p: ModelParams) -> DensityMatrix:
    """Thermal chain state assembled from the analytic entries."""
    e = closed_form_elements(p)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = e.rho11
    rho[1, 1] = e.rho22
    rho[1, 2] = e.rho23
    rho[2, 1] = e.rho32
    rho[2, 2] = e.rho33
    rho[3, 3] = e.rho44
    return DensityMatrix(rho / e.partition, 2)


def effective_state(p: ModelParams) -> DensityMatrix:
    """Four-qubit game resource: two identical thermal chains, qubits 2
    and 3 relabeled so each player holds one spin of each chain."""
    rho = thermal_state(build_hamiltonian(p), p.T)
    reff = permute_qubits(kron(rho.mat, rho.mat), CHAIN_TO_GAME_PERM)
    return DensityMatrix(reff, 4)
