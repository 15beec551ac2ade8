"""
Brute-force reference: translational packets sampled on a position grid

The evolution operator is applied branch by branch on the grid (momentum shifts
by multiplication, position shifts spectrally) and the internal state is
obtained by tracing over field and translations with trapezoidal quadrature.
Nothing here uses the closed-form overlaps of :mod:`cavitybell.wavepackets`.
"""
import logging
import math
import warnings
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import trapezoid

from cavitybell.constants import (
    BASIS_INDEX, BRANCH_SIGNS, GRID_MARGIN_SIGMAS, MIN_RECOMMENDED_GRID_POINTS, NEGLIGIBLE_BRANCH_NORM,
    ORACLE_TRACE_TOLERANCE,
)
from cavitybell.exceptions import ContractError, GridTruncationError
from cavitybell.models import InitialState
from cavitybell.quantum import TwoQubitDensityMatrix
from cavitybell.settings import get_settings_value
from cavitybell.types import EXCITED, GROUND
from cavitybell.wavepackets import (
    Atom, GaussianPacket, PhaseSpaceDisplacement, PhysicalParams, branch_displacement, kerr_phase, packet_for_atom,
)

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

# Coordinates of the single-excitation sector of one atom and the field
SECTOR = ((EXCITED, 0), (GROUND, 1))
DARK = (GROUND, 0)


class GridResolutionWarning(UserWarning):
    """
    Emitted when the position grid is too coarse for the packets it carries
    """


@dataclass(frozen=True, eq=False)
class GridPacket:
    """
    Complex amplitudes on ``numpy.linspace(x_min, x_max, n)``
    """
    samples: np.ndarray
    x_min: float
    x_max: float

    @property
    def n(self) -> int:
        return len(self.samples)

    @property
    def positions(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n)

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n - 1)

    def wavenumbers(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.spacing)

    def same_grid(self, other: 'GridPacket') -> bool:
        return self.n == other.n and self.x_min == other.x_min and self.x_max == other.x_max

    def with_samples(self, samples: np.ndarray) -> 'GridPacket':
        return GridPacket(samples, self.x_min, self.x_max)

    def norm(self) -> float:
        return math.sqrt(trapezoid(np.abs(self.samples) ** 2, self.positions))

    def mean_position(self) -> float:
        density = np.abs(self.samples) ** 2
        return trapezoid(self.positions * density, self.positions) / trapezoid(density, self.positions)

    def position_width(self) -> float:
        density = np.abs(self.samples) ** 2
        total = trapezoid(density, self.positions)
        mean = trapezoid(self.positions * density, self.positions) / total
        return math.sqrt(max(trapezoid((self.positions - mean) ** 2 * density, self.positions) / total, 0.0))

    def mean_momentum(self, hbar: float) -> float:
        derivative = np.fft.ifft(1j * self.wavenumbers() * np.fft.fft(self.samples))
        numerator = trapezoid(np.conj(self.samples) * derivative, self.positions)
        return float((-1j * hbar * numerator).real / self.norm() ** 2)


@dataclass(frozen=True, eq=False)
class Branch:
    """
    One term of the full state: internal label, photon number, amplitude and normalized packets
    """
    first: str
    second: str
    photons: int
    amplitude: complex
    packet1: GridPacket
    packet2: GridPacket

    @property
    def label(self) -> Tuple[str, str]:
        return self.first, self.second


@dataclass(frozen=True, eq=False)
class BranchState:
    branches: Tuple[Branch, ...] = field(default_factory=tuple)

    def norm(self) -> float:
        return math.sqrt(sum(
            abs(b.amplitude) ** 2 * b.packet1.norm() ** 2 * b.packet2.norm() ** 2 for b in self.branches))

    def __len__(self) -> int:
        return len(self.branches)


def default_grid(
    packet: GaussianPacket,
    displacements: Iterable[PhaseSpaceDisplacement],
    half_width_sigmas: Optional[float] = None,
) -> Tuple[float, float]:
    """
    Bounds covering +/- ``half_width_sigmas`` widths around every displaced packet centre
    """
    if half_width_sigmas is None:
        half_width_sigmas = get_settings_value('grid_half_width_sigmas')
    centers = [packet.x0] + [packet.x0 + d.dx for d in displacements]
    margin = half_width_sigmas * packet.sigma_x
    return min(centers) - margin, max(centers) + margin


def sample_packet(packet: GaussianPacket, x_min: float, x_max: float, n: int) -> GridPacket:
    x = np.linspace(x_min, x_max, n)
    envelope = (2.0 * np.pi * packet.sigma_x ** 2) ** -0.25 * np.exp(-(x - packet.x0) ** 2 / (4.0 * packet.sigma_x ** 2))
    return GridPacket(envelope * np.exp(1j * packet.p0 * x / packet.hbar), x_min, x_max)


def quadrature_overlap(a: GridPacket, b: GridPacket) -> complex:
    """
    Trapezoidal <a|b>
    """
    if not a.same_grid(b):
        raise ContractError("Packets live on different grids: ({}, {}, {}) and ({}, {}, {})".format(
            a.x_min, a.x_max, a.n, b.x_min, b.x_max, b.n))
    return complex(trapezoid(np.conj(a.samples) * b.samples, a.positions))


def apply_branch_unitary(packet: GridPacket, params: PhysicalParams, atom: Atom, sign: int) -> GridPacket:
    """
    Applies exp(i K) exp(-i sign eps k tau (x + p S / 2m)) to ``packet``.

    The exponent is split as exp(-i A x) exp(-i B p) exp(i hbar A B / 2); the
    momentum factor is a translation by hbar B done in Fourier space.
    """
    if sign not in BRANCH_SIGNS:
        raise ValueError("Branch sign must be +1 or -1, got {}".format(sign))
    start, end = params.window(atom)
    duration = end - start
    if duration == 0:
        return packet
    momentum_rate = sign * params.epsilon * params.k * duration
    shift = params.hbar * momentum_rate * (start + end) / (2.0 * params.m)

    width = packet.position_width()
    center = packet.mean_position() + shift
    if center - GRID_MARGIN_SIGMAS * width < packet.x_min or center + GRID_MARGIN_SIGMAS * width > packet.x_max:
        raise GridTruncationError(
            "Atom {} branch {:+d} centre {:.6e} m is within {} widths of the grid edge [{:.6e}, {:.6e}]".format(
                int(atom), sign, center, GRID_MARGIN_SIGMAS, packet.x_min, packet.x_max))
    nyquist = np.pi * params.hbar / packet.spacing
    momentum = abs(packet.mean_momentum(params.hbar) - params.hbar * momentum_rate)
    if momentum + GRID_MARGIN_SIGMAS * params.hbar / (2.0 * width) > nyquist:
        warnings.warn(
            "Grid spacing {:.3e} m does not resolve momentum {:.3e} kg m/s".format(packet.spacing, momentum),
            GridResolutionWarning,
            stacklevel=2,
        )

    shifted = np.fft.ifft(np.fft.fft(packet.samples) * np.exp(-1j * packet.wavenumbers() * shift))
    phase = kerr_phase(params, duration) + momentum_rate * shift / 2.0
    return packet.with_samples(np.exp(1j * phase) * np.exp(-1j * momentum_rate * packet.positions) * shifted)


def _atom_grid(params: PhysicalParams, atom: Atom, grid_points: int) -> GridPacket:
    packet = packet_for_atom(params, atom)
    x_min, x_max = default_grid(packet, (branch_displacement(params, atom, sign) for sign in BRANCH_SIGNS))
    return sample_packet(packet, x_min, x_max, grid_points)


def _interact(branches: Sequence[Branch], params: PhysicalParams, atom: Atom) -> List[Branch]:
    evolved: List[Branch] = []
    for branch in branches:
        state = (branch.first if atom == Atom.FIRST else branch.second, branch.photons)
        if state == DARK:
            evolved.append(branch)
            continue
        if state not in SECTOR:
            raise ContractError("State {} is outside the single-excitation sector".format(state))
        packet = branch.packet1 if atom == Atom.FIRST else branch.packet2
        coordinates = [1.0 if state == s else 0.0 for s in SECTOR]
        images = {sign: apply_branch_unitary(packet, params, atom, sign) for sign in BRANCH_SIGNS}
        # eigenvectors (|e,0> + sign |g,1>) / sqrt(2)
        weights = {sign: (coordinates[0] + sign * coordinates[1]) / math.sqrt(2.0) for sign in BRANCH_SIGNS}
        for index, (internal, photons) in enumerate(SECTOR):
            samples = sum(
                weights[sign] * (1.0 if index == 0 else sign) / math.sqrt(2.0) * images[sign].samples
                for sign in BRANCH_SIGNS)
            combined = packet.with_samples(samples)
            norm = combined.norm()
            if norm < NEGLIGIBLE_BRANCH_NORM:
                continue
            combined = combined.with_samples(combined.samples / norm)
            if atom == Atom.FIRST:
                evolved.append(Branch(internal, branch.second, photons, branch.amplitude * norm,
                                      combined, branch.packet2))
            else:
                evolved.append(Branch(branch.first, internal, photons, branch.amplitude * norm,
                                      branch.packet1, combined))
    return evolved


def build_full_state(
    params: PhysicalParams,
    initial: InitialState,
    grid_points: Optional[int] = None,
) -> BranchState:
    """
    Full atoms + field + translation state after both interactions.

    Each atom's internal and field state is expanded on the eigenvectors of the
    interaction operator, the matching branch unitary is applied to its packet and
    the result is recombined; |g, 0> is dark.
    """
    n = grid_points if grid_points is not None else get_settings_value('grid_points')
    if n < MIN_RECOMMENDED_GRID_POINTS:
        warnings.warn(
            "Oracle grid of {} points is below the recommended {}".format(n, MIN_RECOMMENDED_GRID_POINTS),
            GridResolutionWarning,
            stacklevel=2,
        )
    packet1, packet2 = _atom_grid(params, Atom.FIRST, n), _atom_grid(params, Atom.SECOND, n)
    if InitialState(initial) == InitialState.GG1:
        start = Branch(GROUND, GROUND, 1, 1.0 + 0j, packet1, packet2)
    else:
        start = Branch(EXCITED, GROUND, 0, 1.0 + 0j, packet1, packet2)

    branches = _interact([start], params, Atom.FIRST)
    branches = _interact(branches, params, Atom.SECOND)
    state = BranchState(tuple(branches))
    log.debug("Full state for %s has %s branches, norm %s", InitialState(initial).value, len(state), state.norm())
    return state


def reduce_to_internal(state: BranchState) -> TwoQubitDensityMatrix:
    """
    Traces out field and translations: rho[i, j] += a_i conj(a_j) <p1_j|p1_i> <p2_j|p2_i>
    """
    matrix = np.zeros((4, 4), dtype=complex)
    branches = state.branches
    overlaps: Dict[Tuple[int, int], complex] = {}
    for i, left in enumerate(branches):
        for j in range(i, len(branches)):
            right = branches[j]
            if left.photons != right.photons:
                continue
            value = left.amplitude * np.conj(right.amplitude) \
                * quadrature_overlap(right.packet1, left.packet1) * quadrature_overlap(right.packet2, left.packet2)
            overlaps[(i, j)] = value
    for (i, j), value in overlaps.items():
        row, column = BASIS_INDEX[branches[i].label], BASIS_INDEX[branches[j].label]
        matrix[row, column] += value
        if i != j:
            matrix[column, row] += np.conj(value)
    return TwoQubitDensityMatrix(matrix, trace_tolerance=ORACLE_TRACE_TOLERANCE)
