"""Optical and analyzer elements.

Beam splitter transfer, the apparatus reaction wave emitted when a
photon commits to one output, the reconstruction identity tying photon
plus reaction back to the full two-port division, phase shifters, Jones
waveplates, Stern-Gerlach splitting ratios, and the angular momentum a
polarization change deposits in the optics.

Phase convention: a reflected amplitude acquires ``reflection_phase``
(default pi/2), which makes the two-port transfer matrix

    [ sqrt(T)          e^{i*phi} sqrt(R) ]
    [ e^{i*phi} sqrt(R)         sqrt(T)  ]

unitary for a lossless splitter. Detector labeling downstream absorbs
this convention; see experiments.

The apparatus response is kept in a separate real-amplitude convention:
an ideal lossless division of a unit input is written (sqrt(p_I),
sqrt(p_II)) with both amplitudes real and non-negative, and the
response is the exact conservation complement of the committed path
within that division. The component co-propagating with the photon
therefore carries a negative coefficient (a fluctuation of opposite
phase to the photon).
"""

import math
from dataclasses import dataclass

import numpy as np

from .amplitudes import Port, TwoModeState, basis_state, phasor, superpose

HALF_PI = math.pi / 2.0
INV_SQRT2 = 1.0 / math.sqrt(2.0)


class PathResponseMismatchError(ValueError):
    """A response was combined with a path it was not emitted for."""


@dataclass(frozen=True)
class BeamSplitterSpec:
    """Lossless two-port splitter; reflectance is derived as 1 - T."""

    transmittance: float
    reflection_phase: float = HALF_PI

    def __post_init__(self):
        if not 0.0 <= self.transmittance <= 1.0:
            raise ValueError(f"transmittance must be in [0, 1], got {self.transmittance}")
        if not math.isfinite(self.reflection_phase):
            raise ValueError("reflection_phase must be finite")

    @property
    def reflectance(self) -> float:
        return 1.0 - self.transmittance


@dataclass(frozen=True)
class ApparatusResponse:
    """Reaction wave on both ports, equal but opposite to the photon's commit."""

    resp_i: complex
    resp_ii: complex

    def amp(self, port: Port) -> complex:
        return self.resp_i if port is Port.I else self.resp_ii

    def as_state(self) -> TwoModeState:
        return TwoModeState(self.resp_i, self.resp_ii)


def bs_transfer(input_port_amp: complex, spec: BeamSplitterSpec) -> TwoModeState:
    """Divide one input amplitude: transmitted on port I, reflected on port II.

    Output moduli are sqrt(T)*|in| and sqrt(R)*|in|; the reflected
    amplitude carries the reflection phase.
    """
    t_amp = math.sqrt(spec.transmittance) * input_port_amp
    r_amp = math.sqrt(spec.reflectance) * phasor(spec.reflection_phase) * input_port_amp
    return TwoModeState(t_amp, r_amp)


def bs_combine(inputs: TwoModeState, spec: BeamSplitterSpec) -> TwoModeState:
    """Full two-input transfer; recombines both arms at a second splitter.

    Each input transmits straight through to its own output port and
    reflects (with the reflection phase) into the other.
    """
    t = math.sqrt(spec.transmittance)
    r = math.sqrt(spec.reflectance) * phasor(spec.reflection_phase)
    return TwoModeState(
        t * inputs.amp_i + r * inputs.amp_ii,
        r * inputs.amp_i + t * inputs.amp_ii,
    )


def apparatus_response(taken_path: Port, p_i: float = 0.5) -> ApparatusResponse:
    """Reaction wave emitted as a photon commits to ``taken_path``.

    The ideal division of a unit input sends real amplitudes
    (sqrt(p_I), sqrt(p_II)) into the two ports. Conservation requires
    the apparatus to supply exactly what the committed photon does not:

        response = ideal division - committed path state

    so the committed state plus the response reproduces the full
    division. For the default 50:50 case the co-propagating component
    is 1/sqrt(2) - 1 and the counter-propagating one is 1/sqrt(2).
    """
    if not 0.0 <= p_i <= 1.0:
        raise ValueError(f"p_i must be in [0, 1], got {p_i}")
    a_i = math.sqrt(p_i)
    a_ii = math.sqrt(1.0 - p_i)
    if taken_path is Port.I:
        return ApparatusResponse(a_i - 1.0, a_ii + 0j)
    return ApparatusResponse(a_i + 0j, a_ii - 1.0)


_RECONSTRUCT_TOL = 1e-9


def reconstruct(taken_path: Port, response: ApparatusResponse) -> TwoModeState:
    """Committed path state plus response; must equal the ideal division.

    Raises PathResponseMismatchError when the sum is not a lossless
    division state (real non-negative amplitudes of unit total
    intensity), which is what pairing a response with the wrong path
    produces.
    """
    combined = superpose(basis_state(taken_path), response.as_state())
    for amp in (combined.amp_i, combined.amp_ii):
        if abs(amp.imag) > _RECONSTRUCT_TOL or amp.real < -_RECONSTRUCT_TOL:
            raise PathResponseMismatchError(
                f"response does not complement path {taken_path.value}: {combined}"
            )
    total = abs(combined.amp_i) ** 2 + abs(combined.amp_ii) ** 2
    if abs(total - 1.0) > _RECONSTRUCT_TOL:
        raise PathResponseMismatchError(
            f"reconstructed intensity {total} is not 1; response does not "
            f"complement path {taken_path.value}"
        )
    return combined


def phase_shift(s: TwoModeState, port: Port, delta: float) -> TwoModeState:
    """Multiply one port's amplitude by e^{i*delta}; intensities unchanged."""
    factor = phasor(delta)
    if port is Port.I:
        return TwoModeState(s.amp_i * factor, s.amp_ii)
    return TwoModeState(s.amp_i, s.amp_ii * factor)


@dataclass(frozen=True)
class WaveplateSpec:
    """Retarder: optical-path phase difference between fast and slow axes."""

    retardation: float
    fast_axis: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.retardation) or not math.isfinite(self.fast_axis):
            raise ValueError("retardation and fast_axis must be finite")


def waveplate_matrix(spec: WaveplateSpec) -> np.ndarray:
    """Jones matrix: retard the slow axis by ``retardation`` in the fast-axis frame."""
    c = math.cos(spec.fast_axis)
    s = math.sin(spec.fast_axis)
    rot_in = np.array([[c, s], [-s, c]], dtype=complex)
    retard = np.array([[1.0, 0.0], [0.0, phasor(spec.retardation)]], dtype=complex)
    return rot_in.T @ retard @ rot_in


def waveplate_apply(pol, spec: WaveplateSpec) -> np.ndarray:
    """Apply the waveplate to a polarization 2-vector (H, V); norm preserved."""
    vec = np.asarray(pol, dtype=complex)
    if vec.shape != (2,):
        raise ValueError(f"polarization must be a 2-vector, got shape {vec.shape}")
    return waveplate_matrix(spec) @ vec


def stern_gerlach_probs(phi: float) -> tuple[float, float]:
    """Up/down splitting ratios for a spin tilted phi to the field axis.

    (cos^2(phi/2), sin^2(phi/2)); the division that conserves the field
    component of angular momentum in the large-number limit, since
    cos(phi) = cos^2(phi/2) - sin^2(phi/2).
    """
    c = math.cos(phi / 2.0)
    s = math.sin(phi / 2.0)
    return c * c, s * s


def beth_transfer(spin_in: float, spin_out: float) -> float:
    """Angular momentum (hbar units) deposited in the optic by one photon.

    A photon whose spin component drops from ``spin_in`` to ``spin_out``
    leaves the difference behind; a half-wave plate flipping circular
    polarization takes +2 per photon.
    """
    return spin_in - spin_out
