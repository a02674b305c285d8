"""Bell-state evolution under spinor loops, entanglement measures, and the
renormalization flow of the monopole strength.

The antisymmetric reference state is (|1>|0> - |0>|1>)/sqrt(2); its alpha term
lives on |10> and its beta term on |01>.  One closed spinor loop multiplies
those terms by e^{i gamma_up} and e^{i gamma_down}; dropping the common factor
leaves the residual relative phase 2 gamma_up (mod 2*pi) on the alpha term.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._angles import check_theta, mod_two_pi
from .berry import berry_phase_analytic
from .circuits import Orientation
from .errors import DomainError
from .states import NORM_TOLERANCE, PureState

_SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class BellCoefficients:
    """Weights of the antisymmetric combination alpha |10> - beta |01>."""

    alpha: complex
    beta: complex

    def __post_init__(self) -> None:
        values = (self.alpha, self.beta)
        if not all(math.isfinite(v.real) and math.isfinite(v.imag) for v in values):
            raise DomainError("coefficients must be finite")
        norm = math.sqrt(abs(self.alpha) ** 2 + abs(self.beta) ** 2)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise DomainError(f"coefficient norm {norm!r} not within {NORM_TOLERANCE} of 1")
        object.__setattr__(self, "alpha", self.alpha / norm)
        object.__setattr__(self, "beta", self.beta / norm)

    @classmethod
    def equal_weight(cls) -> "BellCoefficients":
        return cls(complex(_SQRT_HALF), complex(_SQRT_HALF))


@dataclass(frozen=True)
class BipartiteCoefficients:
    """General two-spin amplitudes in the (down-down, down-up, up-down, up-up) order."""

    a_dd: complex
    a_du: complex
    a_ud: complex
    a_uu: complex

    def __post_init__(self) -> None:
        values = (self.a_dd, self.a_du, self.a_ud, self.a_uu)
        if not all(math.isfinite(v.real) and math.isfinite(v.imag) for v in values):
            raise DomainError("coefficients must be finite")
        norm = math.sqrt(sum(abs(v) ** 2 for v in values))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise DomainError(f"coefficient norm {norm!r} not within {NORM_TOLERANCE} of 1")
        for name, value in zip(("a_dd", "a_du", "a_ud", "a_uu"), values):
            object.__setattr__(self, name, value / norm)

    @classmethod
    def from_state(cls, state: PureState) -> "BipartiteCoefficients":
        if state.num_qubits != 2:
            raise DomainError("bipartite coefficients need a two-qubit state")
        a = state.amplitudes
        return cls(complex(a[0]), complex(a[1]), complex(a[2]), complex(a[3]))


@dataclass(frozen=True)
class RgFlowParams:
    """Flow inputs: decay rate a >= 0, integration constant c, length scale."""

    a: float
    c: float
    separation: float

    def __post_init__(self) -> None:
        for name in ("a", "c", "separation"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.a < 0.0:
            raise DomainError("decay rate a must be nonnegative")
        if self.separation <= 0.0:
            raise DomainError("separation must be positive")


def bell_singlet_qubits() -> PureState:
    """The antisymmetric reference state (|1>|0> - |0>|1>)/sqrt(2)."""
    return PureState([0.0, -_SQRT_HALF, _SQRT_HALF, 0.0])


def evolve_bell(coeffs: BellCoefficients, theta: float) -> tuple[PureState, float]:
    """Apply one closed spinor loop at polar angle theta to the Bell weights.

    The alpha (|10>) term picks up e^{i gamma_up}, the beta (|01>) term
    e^{i gamma_down}; the common phase e^{i gamma_down} is dropped.  Returns
    the evolved state and the residual relative phase 2 gamma_up mod 2*pi
    (equal to gamma_up - gamma_down mod 2*pi, since the two phases sum to 2*pi).
    """
    check_theta(theta)
    gamma_up = berry_phase_analytic(Orientation.UP, theta).value
    gamma_down = berry_phase_analytic(Orientation.DOWN, theta).value
    residual = cmath.exp(1j * (gamma_up - gamma_down))
    state = PureState([0.0, -coeffs.beta, residual * coeffs.alpha, 0.0])
    return state, mod_two_pi(2.0 * gamma_up)


def swap_expectation(state: PureState) -> float:
    """<s|SWAP|s> in [-1, 1]: +1 flags a symmetric state, -1 an antisymmetric one."""
    if state.num_qubits != 2:
        raise DomainError("swap expectation needs a two-qubit state")
    a = state.amplitudes
    return float(abs(a[0]) ** 2 + abs(a[3]) ** 2 + 2.0 * (np.conj(a[1]) * a[2]).real)


def concurrence_general(coeffs: BipartiteCoefficients) -> complex:
    """Concurrence 2 (a_dd a_uu - a_du a_ud) of a general two-spin pure state."""
    return 2.0 * (coeffs.a_dd * coeffs.a_uu - coeffs.a_du * coeffs.a_ud)


def concurrence_from_theta(theta: float) -> float:
    """Asserted loop-angle form of the concurrence magnitude, (1 - cos theta)/2.

    This is the anisotropy measure of the UP spinor; it is kept separate from
    concurrence_general so the two routes can be compared rather than conflated.
    """
    check_theta(theta)
    return 0.5 * (1.0 - math.cos(theta))


def entanglement_entropy(concurrence_norm: float) -> float:
    """Entropy of formation in bits as a function of the concurrence magnitude.

    Evaluates the binary entropy at (1 + sqrt(1 - C^2))/2; 0 at C = 0
    (product state) and 1 bit at C = 1 (maximal entanglement).
    """
    if not math.isfinite(concurrence_norm) or not 0.0 <= concurrence_norm <= 1.0:
        raise DomainError("concurrence magnitude out of [0, 1]")
    x = 0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - concurrence_norm**2)))
    if x <= 0.0 or x >= 1.0:
        return 0.0  # binary entropy vanishes at both endpoints by continuity
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


def monopole_strength_rg(params: RgFlowParams) -> float:
    """Monopole strength mu(L) = -a ln(L) + c, clamped at zero from below.

    The linear-in-ln(L) flow crosses zero at large separation; the physical
    strength is reported as max(0, .) since mu only tends to zero there.
    """
    return max(0.0, -params.a * math.log(params.separation) + params.c)
