"""Closed-form game-value expressions on two parameter slices.

Both formulas give P_w of the thermal game resource for the jz = 0
chain in closed form and serve as independent cross-checks of the full
simulation pipeline: one on the D = b = 0 slice (free B, T), one on the
B = 0 slice where P_w depends on (b, D) only through
nu = sqrt(1 + b^2 + D^2) (free nu, T).

The default coefficients are four-decimal truncations of simple
rationals (0.0694 ~ 5/72, 0.0555 ~ 1/18, ...), which caps agreement
with the simulation at about 1e-3; pass ``rational_coefficients=True``
to use the exact rationals instead, which agree with the simulation at
machine precision.

Both expressions are ratios of sums of cosh/sinh terms whose arguments
scale like field/T, so a naive evaluation overflows float64 at low
temperature (cosh(800) at B = 2, T = 0.01).  They are therefore
evaluated with every hyperbolic factor pre-scaled by a common
exponential that cancels between numerator and denominator; the
rescaled form is algebraically identical and finite wherever the ratio
itself is.
"""

import enum
from fractions import Fraction

import numpy as np

from .model import NonPositiveTemperature


def _sc(z: float, w: float) -> float:
    """cosh(z) * exp(-w), stable for w >= |z|."""
    return 0.5 * (np.exp(z - w) + np.exp(-z - w))


def _ss(z: float, w: float) -> float:
    """sinh(z) * exp(-w), stable for w >= |z|."""
    return 0.5 * (np.exp(z - w) - np.exp(-z - w))


class FormulaDomain(enum.Enum):
    """Parameter slice on which each closed form is valid."""

    D_B_ZERO = "jz = 0, D = b = 0; free B and T"
    B_ZERO = "jz = 0, B = 0; free nu = sqrt(1 + b^2 + D^2) >= 1 and T"


_F = Fraction

# coefficients of the D=b=0 expression, in order of appearance
_DB_ZERO_DECIMAL = (
    0.0694,  # cosh(4B/T)
    0.5, 0.0555,  # cosh(3B/T) bracket
    0.0555, 0.7777, 0.9444,  # cosh(2B/T) bracket
    0.1111, 0.0555, 2.8888, 0.6111,  # cosh(B/T) bracket
    0.0277, 1.0555, 0.0972, 1.05556,  # field-free tail
)
_DB_ZERO_RATIONAL = (
    _F(5, 72),
    _F(1, 2), _F(1, 18),
    _F(1, 18), _F(7, 9), _F(17, 18),
    _F(1, 9), _F(1, 18), _F(26, 9), _F(11, 18),
    _F(1, 36), _F(19, 18), _F(7, 72), _F(19, 18),
)

# coefficients of the B=0 expression, in order of appearance
_B_ZERO_DECIMAL = (
    0.0833, 0.0277,
    0.0694, 0.0278,
    0.9305, 0.0278,
    0.3611, 0.0555,
    0.6388, 0.055,
)
_B_ZERO_RATIONAL = (
    _F(1, 12), _F(1, 36),
    _F(5, 72), _F(1, 36),
    _F(67, 72), _F(1, 36),
    _F(13, 36), _F(1, 18),
    _F(23, 36), _F(1, 18),
)


def _check_T(T: float):
    if not T > 0:
        raise NonPositiveTemperature(f"T = {T} must be > 0")


def pw_formula_db_zero(B: float, T: float, rational_coefficients: bool = False) -> float:
    """P_w on the D = b = 0 slice (domain ``FormulaDomain.D_B_ZERO``).

    Numerator and denominator both grow like exp(4 max(1, |B|)/T); each
    term below carries that total scale factor split across its
    hyperbolic factors, so the ratio is computed without overflow.
    """
    _check_T(T)
    c = _DB_ZERO_RATIONAL if rational_coefficients else _DB_ZERO_DECIMAL
    c = [float(v) for v in c]
    x = 1.0 / T
    g = B / T
    u = max(1.0, abs(B)) / T
    num = (
        c[0] * _sc(4 * g, 4 * u)
        + _sc(3 * g, 3 * u) * (c[1] * _sc(x, u) - c[2] * _ss(x, u))
        + _sc(2 * g, 2 * u)
        * (-c[3] * _ss(2 * x, 2 * u) + c[4] * _sc(2 * x, 2 * u) + c[5] * np.exp(-2 * u))
        + _sc(g, u)
        * (
            -c[6] * _ss(x, 3 * u)
            + c[7] * _ss(3 * x, 3 * u)
            + c[8] * _sc(x, 3 * u)
            + c[9] * _sc(3 * x, 3 * u)
        )
        + c[10] * _ss(4 * x, 4 * u)
        + c[11] * _sc(2 * x, 4 * u)
        + c[12] * _sc(4 * x, 4 * u)
        + c[13] * np.exp(-4 * u)
    )
    denom = (_sc(x, u) + _sc(g, u)) ** 4
    return float(num / denom)


def pw_formula_b_zero(
    nu: float,
    T: float,
    rational_coefficients: bool = False,
    nu_exponent: float = 3.0,
) -> float:
    """P_w on the B = 0 slice (domain ``FormulaDomain.B_ZERO``).

    ``nu_exponent`` is the exponent of the nu prefactor in the
    denominator.  The default 3 is fixed by cross-validation against the
    simulation (agreement ~1e-3 with decimal coefficients, machine
    precision with rational ones); the nearby alternative normalization
    3/2 is exposed so the ``validate`` command can report how badly it
    disagrees.

    The sech^2(nu/2T) / (cosh(nu/T)+1)^2 prefactor decays like
    exp(-3 nu/T) while the bracket grows like exp(3 nu/T); the bracket
    is evaluated pre-scaled by exp(-3 nu/T) and the prefactor rewritten
    in decaying exponentials, so the product never overflows.
    """
    _check_T(T)
    if not nu >= 1:
        raise ValueError(f"nu = {nu} must be >= 1 (nu = sqrt(1 + b^2 + D^2))")
    k = _B_ZERO_RATIONAL if rational_coefficients else _B_ZERO_DECIMAL
    k = [float(v) for v in k]
    y = nu / T
    bracket_scaled = (
        -k[0] * nu**2 * _ss(y, 3 * y)
        + k[1] * nu**2 * _ss(3 * y, 3 * y)
        + (k[2] * nu**2 + k[3]) * nu * _sc(3 * y, 3 * y)
        + (k[4] * nu**2 - k[5]) * nu * _sc(y, 3 * y)
        + (k[6] * nu**2 + k[7]) * nu * _sc(2 * y, 3 * y)
        + (k[8] * nu**2 - k[9]) * nu * np.exp(-3 * y)
    )
    # sech^2(y/2) = 4 e^{-y} / (1 + e^{-y})^2 and
    # (cosh y + 1)^2 = e^{2y} ((1 + e^{-2y})/2 + e^{-y})^2
    ey = np.exp(-y)
    denom = nu**nu_exponent * (1 + ey) ** 2 * ((1 + ey**2) / 2 + ey) ** 2
    return float(4.0 * bracket_scaled / denom)
