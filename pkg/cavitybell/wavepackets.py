"""
Gaussian translational states and the phase-space action of the atom-field interaction

Near a node the coupling is linear in the atomic position, so on each eigenspace
of the interaction operator (eigenvalue ``sign`` = +1 or -1) the evolution
operator of one atom is, up to a scalar Kerr-like phase, a Weyl displacement::

    exp(i K) exp(-i sign eps k tau (x + p S / 2m))

where ``tau`` is the interaction duration and ``S`` the sum of the entry and
exit times. Displacements here are written in the interaction picture; the
lab-frame branch trajectories are available through :func:`lab_frame_center`
and :func:`lab_frame_momentum`.
"""
import enum
import logging
import math
import warnings
from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

from scipy.constants import hbar as HBAR

from cavitybell.constants import (
    MINUS, PLUS, SCHEDULE_T1, SCHEDULE_T2, SCHEDULE_T3,
)
from cavitybell.exceptions import InvalidParametersError
from cavitybell.settings import get_settings_value

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

# Packets are assumed to stay within a quarter wavelength of the node
NODAL_SIGMAS = 3.0


class NodalRegionWarning(UserWarning):
    """
    Emitted when a packet extends beyond the region where the coupling is linear in position
    """


class Atom(enum.IntEnum):
    FIRST = 1
    SECOND = 2


@dataclass(frozen=True)
class PhysicalParams:
    """
    Masses, mode, coupling, packet geometry and interaction schedule of one scenario.

    Times are absolute: atom 1 interacts during (0, t1), atom 2 during (t2, t3).
    """
    m: float
    wavelength: float
    epsilon: float
    x1: float
    x2: float
    sigma_x1: float
    sigma_x2: float
    t1: float
    t2: float
    t3: float
    p1: float = 0.0
    p2: float = 0.0
    hbar: float = field(default=HBAR)

    def __post_init__(self) -> None:
        for name in ('m', 'wavelength', 'epsilon', 'sigma_x1', 'sigma_x2', 'hbar'):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParametersError("{} must be positive and finite, got {}".format(name, value))
        for name in ('x1', 'x2', 'p1', 'p2', 't1', 't2', 't3'):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParametersError("{} must be finite".format(name))
        if not 0 <= self.t1 <= self.t2 <= self.t3:
            raise InvalidParametersError(
                "Schedule must satisfy 0 <= t1 <= t2 <= t3, got t1={}, t2={}, t3={}".format(self.t1, self.t2, self.t3))
        quarter = self.wavelength / 4.0
        for atom, center, width in ((1, self.x1, self.sigma_x1), (2, self.x2, self.sigma_x2)):
            if abs(center) + NODAL_SIGMAS * width > quarter:
                warnings.warn(
                    "Packet of atom {} (|x| + 3 sigma = {:.3e} m) leaves the nodal region lambda/4 = {:.3e} m".format(
                        atom, abs(center) + NODAL_SIGMAS * width, quarter),
                    NodalRegionWarning,
                    stacklevel=3,
                )

    @property
    def k(self) -> float:
        return 2.0 * math.pi / self.wavelength

    @property
    def eps_jc(self) -> float:
        """
        Effective Jaynes-Cummings coupling x1 eps k
        """
        return self.x1 * self.epsilon * self.k

    @property
    def rabi_period(self) -> float:
        if self.eps_jc == 0:
            raise InvalidParametersError("Rabi period is undefined for a packet centred on the node")
        return 2.0 * math.pi / abs(self.eps_jc)

    @property
    def kick(self) -> float:
        """
        Momentum transferred per unit interaction time, hbar eps k
        """
        return self.hbar * self.epsilon * self.k

    def with_schedule(self, interaction_time: float) -> 'PhysicalParams':
        """
        Returns a copy using the schedule t1 = T, t2 = 2T, t3 = 3T
        """
        return replace(
            self,
            t1=SCHEDULE_T1 * interaction_time,
            t2=SCHEDULE_T2 * interaction_time,
            t3=SCHEDULE_T3 * interaction_time,
        )

    @classmethod
    def figure1(
        cls,
        interaction_time: float = 0.0,
        epsilon: Optional[float] = None,
        mass: Optional[float] = None,
        wavelength: Optional[float] = None,
    ) -> 'PhysicalParams':
        """
        Both packets centred at x = lambda/10 with width lambda/10, zero mean momentum.

        Unset values come from :mod:`cavitybell.settings`.
        """
        wavelength = wavelength if wavelength is not None else get_settings_value('wavelength_m')
        center = get_settings_value('packet_center_fraction') * wavelength
        width = get_settings_value('packet_width_fraction') * wavelength
        return cls(
            m=mass if mass is not None else get_settings_value('mass_kg'),
            wavelength=wavelength,
            epsilon=epsilon if epsilon is not None else get_settings_value('epsilon_per_s'),
            x1=center,
            x2=center,
            sigma_x1=width,
            sigma_x2=width,
            t1=0.0,
            t2=0.0,
            t3=0.0,
        ).with_schedule(interaction_time)

    def window(self, atom: Atom) -> Tuple[float, float]:
        if atom == Atom.FIRST:
            return 0.0, self.t1
        return self.t2, self.t3


@dataclass(frozen=True)
class GaussianPacket:
    """
    Minimum-uncertainty Gaussian translational state
    """
    x0: float
    p0: float
    sigma_x: float
    hbar: float = HBAR

    @property
    def sigma_p(self) -> float:
        return self.hbar / (2.0 * self.sigma_x)


@dataclass(frozen=True)
class PhaseSpaceDisplacement:
    """
    Weyl displacement by (dx, dp) followed by the scalar phase ``phase``:
    psi(x) -> exp(i phase) exp(i dp (x - dx/2) / hbar) psi(x - dx)
    """
    dx: float
    dp: float
    phase: float

    @classmethod
    def identity(cls) -> 'PhaseSpaceDisplacement':
        return cls(0.0, 0.0, 0.0)


def packet_for_atom(params: PhysicalParams, atom: Atom) -> GaussianPacket:
    if atom == Atom.FIRST:
        return GaussianPacket(params.x1, params.p1, params.sigma_x1, params.hbar)
    return GaussianPacket(params.x2, params.p2, params.sigma_x2, params.hbar)


def _check_sign(sign: int) -> None:
    if sign not in (PLUS, MINUS):
        raise ValueError("Branch sign must be +1 or -1, got {}".format(sign))


def kerr_phase(params: PhysicalParams, duration: float) -> float:
    """
    Scalar phase hbar eps^2 k^2 tau^3 / 12 m picked up by both branches
    """
    return params.hbar * (params.epsilon * params.k) ** 2 * duration ** 3 / (12.0 * params.m)


def branch_displacement(params: PhysicalParams, atom: Atom, sign: int) -> PhaseSpaceDisplacement:
    _check_sign(sign)
    start, end = params.window(atom)
    duration = end - start
    return PhaseSpaceDisplacement(
        dx=sign * params.kick / params.m * duration * (start + end) / 2.0,
        dp=-sign * params.kick * duration,
        phase=kerr_phase(params, duration),
    )


def branch_displacement_atom1(params: PhysicalParams, sign: int) -> PhaseSpaceDisplacement:
    """
    Action of exp(-/+ i eps k (x1 + p1 t1 / 2m) t1) and its Kerr phase on atom 1
    """
    return branch_displacement(params, Atom.FIRST, sign)


def branch_displacement_atom2(params: PhysicalParams, sign: int) -> PhaseSpaceDisplacement:
    """
    Action of exp(-/+ i eps k (x2 + p2 (t3 + t2) / 2m)(t3 - t2)) and its Kerr phase on atom 2
    """
    return branch_displacement(params, Atom.SECOND, sign)


def phase_space_distance_sq(
    da: PhaseSpaceDisplacement,
    db: PhaseSpaceDisplacement,
    packet: GaussianPacket,
) -> float:
    return ((da.dx - db.dx) / packet.sigma_x) ** 2 + ((da.dp - db.dp) / packet.sigma_p) ** 2


def branch_overlap_polar(
    da: PhaseSpaceDisplacement,
    db: PhaseSpaceDisplacement,
    packet: GaussianPacket,
) -> Tuple[float, float]:
    """
    Returns (log |<a|b>|, arg <a|b>) for the packet displaced by ``da`` and by ``db``.

    The phase collects the difference of scalar phases, the Weyl composition phase
    of D(-a) D(b) and the expectation of the relative displacement in the packet.
    """
    log_magnitude = -phase_space_distance_sq(da, db, packet) / 8.0
    composition = (da.dx * db.dp - da.dp * db.dx) / (2.0 * packet.hbar)
    center = ((db.dp - da.dp) * packet.x0 - packet.p0 * (db.dx - da.dx)) / packet.hbar
    return log_magnitude, (db.phase - da.phase) + composition + center


def branch_overlap(
    da: PhaseSpaceDisplacement,
    db: PhaseSpaceDisplacement,
    packet: GaussianPacket,
) -> complex:
    """
    Closed-form <D_a packet | D_b packet>
    """
    log_magnitude, phase = branch_overlap_polar(da, db, packet)
    return math.exp(log_magnitude) * complex(math.cos(phase), math.sin(phase))


def _lab_frame_impulse(params: PhysicalParams, atom: Atom, time: float) -> Tuple[float, float]:
    start, end = params.window(atom)
    duration = end - start
    elapsed = min(max(time - start, 0.0), duration)
    if time <= end:
        swept = elapsed ** 2 / 2.0
    else:
        swept = duration ** 2 / 2.0 + duration * (time - end)
    return elapsed, swept


def lab_frame_momentum(params: PhysicalParams, atom: Atom, sign: int, time: float) -> float:
    """
    Mean momentum of branch ``sign`` at absolute time ``time`` in the Schroedinger picture
    """
    _check_sign(sign)
    elapsed, _ = _lab_frame_impulse(params, atom, time)
    return packet_for_atom(params, atom).p0 - sign * params.kick * elapsed


def lab_frame_center(params: PhysicalParams, atom: Atom, sign: int, time: float) -> float:
    """
    Mean position of branch ``sign`` at absolute time ``time`` in the Schroedinger picture.

    For atom 1 at the end of its interaction this is x1 -/+ a t1^2 / 2 with a = hbar k eps / m.
    """
    _check_sign(sign)
    packet = packet_for_atom(params, atom)
    _, swept = _lab_frame_impulse(params, atom, time)
    return packet.x0 + packet.p0 * time / params.m - sign * params.kick / params.m * swept
