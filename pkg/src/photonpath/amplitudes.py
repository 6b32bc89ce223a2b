"""Complex amplitudes on the two output ports of an optical element.

Amplitudes are dimensionless; with a unit input, the squared modulus on
a port is directly the detection probability for that port.
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum

TWO_PI = 2.0 * math.pi


class Port(Enum):
    I = "I"
    II = "II"

    @property
    def other(self) -> "Port":
        return Port.II if self is Port.I else Port.I


def _require_finite(z: complex, name: str) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {z!r}")


@dataclass(frozen=True)
class TwoModeState:
    """Amplitudes on ports I and II."""

    amp_i: complex
    amp_ii: complex

    def __post_init__(self):
        _require_finite(self.amp_i, "amp_i")
        _require_finite(self.amp_ii, "amp_ii")

    def amp(self, port: Port) -> complex:
        return self.amp_i if port is Port.I else self.amp_ii


ZERO_STATE = TwoModeState(0j, 0j)


def basis_state(port: Port) -> TwoModeState:
    """Unit amplitude on one port, nothing on the other."""
    if port is Port.I:
        return TwoModeState(1 + 0j, 0j)
    return TwoModeState(0j, 1 + 0j)


def superpose(a: TwoModeState, b: TwoModeState) -> TwoModeState:
    """Componentwise sum of two states."""
    return TwoModeState(a.amp_i + b.amp_i, a.amp_ii + b.amp_ii)


def port_intensities(s: TwoModeState) -> tuple[float, float]:
    """(|amp_I|^2, |amp_II|^2); the Born probabilities when total is 1."""
    return abs(s.amp_i) ** 2, abs(s.amp_ii) ** 2


def total_intensity(s: TwoModeState) -> float:
    p_i, p_ii = port_intensities(s)
    return p_i + p_ii


def phasor(angle: float) -> complex:
    """Unit phasor e^{i*angle}."""
    return cmath.exp(1j * angle)


def phase_difference(chi1: float, chi2: float) -> float:
    """chi1 - chi2 reduced to the canonical interval [0, 2*pi)."""
    delta = (chi1 - chi2) % TWO_PI
    # float modulo can land exactly on the divisor for tiny negatives
    if delta >= TWO_PI:
        delta = 0.0
    return delta
