"""
Reduced two-atom density matrices for the optical Stern-Gerlach and Jaynes-Cummings models
"""
import enum
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from cavitybell.constants import EG, GE, GG, DEGENERATE_Q_DENOMINATOR, INITIAL_EG0, INITIAL_GG1, MINUS, PLUS
from cavitybell.quantum import TwoQubitDensityMatrix
from cavitybell.wavepackets import (
    Atom, PhaseSpaceDisplacement, PhysicalParams, branch_displacement, branch_overlap_polar, packet_for_atom,
)

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class InitialState(enum.Enum):
    """
    GG1 is |g g> with one photon, EG0 is |e g> with the cavity empty
    """
    GG1 = INITIAL_GG1
    EG0 = INITIAL_EG0


@dataclass(frozen=True)
class OverlapSet:
    """
    The overlaps that carry the translational degrees of freedom into the reduced state:
    cR1 + i cI1 = <phi1+|phi1->, cR2 + i cI2 = <phi2+|phi2->, c_plus/c_minus = <phi2+-|phi2(0)>.

    When the polar fields are present (log-magnitude and argument of the first two
    overlaps), the gaps 1 -/+ cR are evaluated from them without cancellation.
    """
    cR1: float
    cI1: float
    cR2: float
    cI2: float
    c_plus: complex
    c_minus: complex
    log_damping1: Optional[float] = None
    phase1: Optional[float] = None
    log_damping2: Optional[float] = None
    phase2: Optional[float] = None

    @classmethod
    def from_polar(
        cls,
        first: Tuple[float, float],
        second: Tuple[float, float],
        c_plus: complex,
        c_minus: complex,
    ) -> 'OverlapSet':
        (log1, phase1), (log2, phase2) = first, second
        return cls(
            cR1=math.exp(log1) * math.cos(phase1),
            cI1=math.exp(log1) * math.sin(phase1),
            cR2=math.exp(log2) * math.cos(phase2),
            cI2=math.exp(log2) * math.sin(phase2),
            c_plus=c_plus,
            c_minus=c_minus,
            log_damping1=log1,
            phase1=phase1,
            log_damping2=log2,
            phase2=phase2,
        )

    @property
    def damping1(self) -> float:
        return math.exp(self.log_damping1) if self.log_damping1 is not None else math.hypot(self.cR1, self.cI1)

    @property
    def damping2(self) -> float:
        return math.exp(self.log_damping2) if self.log_damping2 is not None else math.hypot(self.cR2, self.cI2)

    def gaps(self) -> Tuple[float, float, float, float]:
        """
        Returns (1 - cR1, 1 + cR1, 1 - cR2, 1 + cR2)
        """
        return _gaps(self.cR1, self.log_damping1, self.phase1) + _gaps(self.cR2, self.log_damping2, self.phase2)


def _gaps(real_part: float, log_magnitude: Optional[float], phase: Optional[float]) -> Tuple[float, float]:
    if log_magnitude is None or phase is None:
        return 1.0 - real_part, 1.0 + real_part
    # 1 -/+ e^-s cos(phi) = (1 - e^-s) + 2 e^-s sin^2(phi/2) or cos^2(phi/2)
    loss = -math.expm1(log_magnitude)
    magnitude = math.exp(log_magnitude)
    return (
        loss + 2.0 * magnitude * math.sin(phase / 2.0) ** 2,
        loss + 2.0 * magnitude * math.cos(phase / 2.0) ** 2,
    )


@dataclass(frozen=True)
class SgCoefficients:
    P1: float
    P2: float
    c1: float
    c2: float
    q: complex
    degenerate: bool = False


def _branch_pair(params: PhysicalParams, atom: Atom) -> Tuple[PhaseSpaceDisplacement, PhaseSpaceDisplacement]:
    return branch_displacement(params, atom, PLUS), branch_displacement(params, atom, MINUS)


def compute_overlap_set(params: PhysicalParams) -> OverlapSet:
    first_plus, first_minus = _branch_pair(params, Atom.FIRST)
    second_plus, second_minus = _branch_pair(params, Atom.SECOND)
    first, second = packet_for_atom(params, Atom.FIRST), packet_for_atom(params, Atom.SECOND)
    still = PhaseSpaceDisplacement.identity()
    return OverlapSet.from_polar(
        branch_overlap_polar(first_plus, first_minus, first),
        branch_overlap_polar(second_plus, second_minus, second),
        _from_polar(branch_overlap_polar(second_plus, still, second)),
        _from_polar(branch_overlap_polar(second_minus, still, second)),
    )


def jc_limit_overlap_set(params: PhysicalParams, keep_kerr_phase: bool = True) -> OverlapSet:
    """
    The overlap set with every damping factor set to one.

    :param keep_kerr_phase: keep the Kerr-like phase in c_plus and c_minus. The resulting
        state then equals the Jaynes-Cummings one up to the local phase exp(-i K) on the
        eg/ge coherence. Without it the two agree elementwise.
    """
    first_plus, first_minus = _branch_pair(params, Atom.FIRST)
    second_plus, second_minus = _branch_pair(params, Atom.SECOND)
    if not keep_kerr_phase:
        first_plus, first_minus, second_plus, second_minus = (
            PhaseSpaceDisplacement(d.dx, d.dp, 0.0) for d in (first_plus, first_minus, second_plus, second_minus))
    first, second = packet_for_atom(params, Atom.FIRST), packet_for_atom(params, Atom.SECOND)
    still = PhaseSpaceDisplacement.identity()

    def undamped(da: PhaseSpaceDisplacement, db: PhaseSpaceDisplacement, packet) -> Tuple[float, float]:
        return 0.0, branch_overlap_polar(da, db, packet)[1]

    return OverlapSet.from_polar(
        undamped(first_plus, first_minus, first),
        undamped(second_plus, second_minus, second),
        _from_polar(undamped(second_plus, still, second)),
        _from_polar(undamped(second_minus, still, second)),
    )


def _from_polar(polar: Tuple[float, float]) -> complex:
    log_magnitude, phase = polar
    return math.exp(log_magnitude) * complex(math.cos(phase), math.sin(phase))


def sg_coefficients(overlaps: OverlapSet) -> SgCoefficients:
    """
    P1, P2, c1, c2 and q of the Stern-Gerlach state prepared from |g g 1>.

    q is set to zero (and flagged degenerate) when its denominator underflows; it
    only appears multiplied by c1 c2 P2, which vanishes there as well.
    """
    loss1, gain1, loss2, gain2 = overlaps.gaps()
    P1 = gain1 * gain2 / 4.0
    weight_ge = gain1 * loss2 / 4.0
    weight_eg = loss1 / 2.0
    P2 = weight_ge + weight_eg
    if P2 > 0.0:
        c1, c2 = math.sqrt(weight_ge / P2), math.sqrt(weight_eg / P2)
    else:
        c1 = c2 = math.sqrt(0.5)

    denominator = 2.0 * loss1 * gain1 * loss2
    if denominator <= DEGENERATE_Q_DENOMINATOR:
        log.debug("q denominator %s underflows, q set to 0", denominator)
        return SgCoefficients(P1, P2, c1, c2, 0j, degenerate=True)
    q = 1j * (overlaps.c_minus - overlaps.c_plus) * overlaps.cI1 / math.sqrt(denominator)
    return SgCoefficients(P1, P2, c1, c2, complex(q))


def _x_state(gg: float, eg: float, ge: float, coherence: complex) -> TwoQubitDensityMatrix:
    matrix = np.zeros((4, 4), dtype=complex)
    matrix[GG, GG] = gg
    matrix[EG, EG] = eg
    matrix[GE, GE] = ge
    matrix[EG, GE] = coherence
    matrix[GE, EG] = np.conj(coherence)
    return TwoQubitDensityMatrix(matrix)


def rho_from_coefficients(co: SgCoefficients) -> TwoQubitDensityMatrix:
    """
    P1 |gg><gg| + P2 (c2^2 |eg><eg| + c1^2 |ge><ge| + c1 c2 (q |eg><ge| + h.c.))
    """
    return _x_state(co.P1, co.P2 * co.c2 ** 2, co.P2 * co.c1 ** 2, co.P2 * co.c1 * co.c2 * co.q)


def rho_from_overlaps(overlaps: OverlapSet, initial: InitialState) -> TwoQubitDensityMatrix:
    if initial == InitialState.GG1:
        return rho_from_coefficients(sg_coefficients(overlaps))
    loss1, gain1, loss2, gain2 = overlaps.gaps()
    return _x_state(
        gg=loss1 * gain2 / 4.0,
        eg=gain1 / 2.0,
        ge=loss1 * loss2 / 4.0,
        coherence=1j * overlaps.cI1 * (overlaps.c_plus - overlaps.c_minus) / 4.0,
    )


def build_rho_sg(
    params: PhysicalParams,
    initial: InitialState,
    overlaps: Optional[OverlapSet] = None,
) -> TwoQubitDensityMatrix:
    """
    Reduced internal state after both atoms have crossed the cavity.

    :param overlaps: use these overlaps instead of the ones computed from ``params``
    """
    if overlaps is None:
        overlaps = compute_overlap_set(params)
    return rho_from_overlaps(overlaps, InitialState(initial))


def build_rho_jc(eps_jc: float, T: float, initial: InitialState) -> TwoQubitDensityMatrix:
    """
    Jaynes-Cummings reduced state with both atoms interacting for a time T
    """
    if T < 0:
        raise ValueError("Interaction time must be non-negative, got {}".format(T))
    angle = eps_jc * T
    s, c = math.sin(angle), math.cos(angle)
    if InitialState(initial) == InitialState.GG1:
        return _x_state(gg=c ** 4, eg=s ** 2, ge=s ** 2 * c ** 2, coherence=s ** 2 * c)
    return _x_state(gg=s ** 2 * c ** 2, eg=c ** 2, ge=s ** 4, coherence=-s ** 2 * c)
