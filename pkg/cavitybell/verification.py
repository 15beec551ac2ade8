"""
Cross-checks of the closed-form model against the grid oracle
"""
import logging
import warnings
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

import numpy as np

from cavitybell.constants import (
    BELL_BOUND, BRANCH_SIGNS, CLOSED_FORM_PPT_TOLERANCE, CONVERGENCE_FLOOR, JC_LIMIT_TOLERANCE, MIN_RECOMMENDED_GRID_POINTS,
    ORACLE_RHO_TOLERANCE, OVERLAP_RELATIVE_TOLERANCE,
)
from cavitybell.entanglement import closed_form_ppt_eigenvalues, degenerate_m, horodecki_m, ppt_report
from cavitybell.exceptions import VerificationError
from cavitybell.models import (
    InitialState, build_rho_jc, build_rho_sg, compute_overlap_set, jc_limit_overlap_set, sg_coefficients,
)
from cavitybell.oracle import (
    GridResolutionWarning, apply_branch_unitary, build_full_state, default_grid, quadrature_overlap,
    reduce_to_internal, sample_packet,
)
from cavitybell.signals import send_safely, verification_check_completed
from cavitybell.wavepackets import (
    Atom, PhaseSpaceDisplacement, PhysicalParams, branch_displacement, branch_overlap, packet_for_atom,
)

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

# T values (Rabi periods) where closed-form overlaps are compared with quadrature
OVERLAP_SAMPLE_RABI = (0.02, 0.05, 0.1, 0.2, 0.3)
# Overlaps smaller than this carry no relative information at double precision
OVERLAP_MAGNITUDE_FLOOR = 1e-6
RHO_SAMPLE_COUNT = 10
CONVERGENCE_SAMPLE_RABI = 0.1


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one verification check: largest residual against its tolerance
    """
    name: str
    passed: bool
    expected: float
    actual: float
    residual: float
    tolerance: float

    def describe(self) -> str:
        return "{:<28} {} expected={:.6e} actual={:.6e} residual={:.3e} tolerance={:.1e}".format(
            self.name, 'PASS' if self.passed else 'FAIL', self.expected, self.actual, self.residual, self.tolerance)


@dataclass
class VerificationReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    @property
    def max_residual(self) -> float:
        return max((check.residual for check in self.checks), default=0.0)

    def raise_for_failures(self) -> None:
        if not self.passed:
            raise VerificationError(self.failures)

    def lines(self) -> List[str]:
        return [check.describe() for check in self.checks]


def _worst(pairs: Iterable[Tuple[float, float, float]]) -> Tuple[float, float, float]:
    """
    Picks the (expected, actual, residual) triple with the largest residual
    """
    return max(pairs, key=lambda triple: triple[2], default=(0.0, 0.0, 0.0))


def _check(name: str, triples: Iterable[Tuple[float, float, float]], tolerance: float) -> CheckResult:
    expected, actual, residual = _worst(triples)
    return CheckResult(name, bool(residual <= tolerance), expected, actual, residual, tolerance)


def _relative(expected: complex, actual: complex) -> Tuple[float, float, float]:
    return abs(expected), abs(actual), abs(actual - expected) / abs(expected)


def _max_difference(a: np.ndarray, b: np.ndarray) -> Tuple[float, float, float]:
    index = np.unravel_index(int(np.argmax(np.abs(a - b))), a.shape)
    return abs(complex(a[index])), abs(complex(b[index])), float(np.abs(a - b)[index])


def overlap_triples(params: PhysicalParams, grid_points: int) -> List[Tuple[float, float, float]]:
    """
    Closed-form overlaps of both atoms against quadrature of grid-evolved packets
    """
    triples = []
    for atom in (Atom.FIRST, Atom.SECOND):
        packet = packet_for_atom(params, atom)
        displacements = {sign: branch_displacement(params, atom, sign) for sign in BRANCH_SIGNS}
        x_min, x_max = default_grid(packet, displacements.values())
        sampled = sample_packet(packet, x_min, x_max, grid_points)
        evolved = {sign: apply_branch_unitary(sampled, params, atom, sign) for sign in BRANCH_SIGNS}
        pairs = [(displacements[1], displacements[-1], evolved[1], evolved[-1])]
        if atom == Atom.SECOND:
            pairs += [(displacements[s], PhaseSpaceDisplacement.identity(), evolved[s], sampled) for s in BRANCH_SIGNS]
        for da, db, a, b in pairs:
            expected = branch_overlap(da, db, packet)
            if abs(expected) < OVERLAP_MAGNITUDE_FLOOR:
                log.debug("Skipping overlap of magnitude %s", abs(expected))
                continue
            triples.append(_relative(expected, quadrature_overlap(a, b)))
    return triples


def displacement_triples(params: PhysicalParams, grid_points: int) -> List[Tuple[float, float, float]]:
    """
    Shift of the grid packet's mean position and momentum against (dx, dp), in units of the packet widths
    """
    triples = []
    for atom in (Atom.FIRST, Atom.SECOND):
        packet = packet_for_atom(params, atom)
        displacements = {sign: branch_displacement(params, atom, sign) for sign in BRANCH_SIGNS}
        x_min, x_max = default_grid(packet, displacements.values())
        sampled = sample_packet(packet, x_min, x_max, grid_points)
        for sign, displacement in displacements.items():
            evolved = apply_branch_unitary(sampled, params, atom, sign)
            dx = evolved.mean_position() - sampled.mean_position()
            dp = evolved.mean_momentum(params.hbar) - sampled.mean_momentum(params.hbar)
            triples.append((displacement.dx, dx, abs(dx - displacement.dx) / packet.sigma_x))
            triples.append((displacement.dp, dp, abs(dp - displacement.dp) / packet.sigma_p))
    return triples


def rho_residual(params: PhysicalParams, initial: InitialState, grid_points: int) -> Tuple[float, float, float]:
    closed = build_rho_sg(params, initial).matrix
    traced = reduce_to_internal(build_full_state(params, initial, grid_points)).matrix
    return _max_difference(closed, traced)


def ppt_triples(params: PhysicalParams) -> List[Tuple[float, float, float]]:
    coefficients = sg_coefficients(compute_overlap_set(params))
    closed = np.sort(closed_form_ppt_eigenvalues(coefficients).eigenvalues)
    numeric = np.array(ppt_report(build_rho_sg(params, InitialState.GG1)).eigenvalues)
    return [(float(c), float(n), abs(float(c) - float(n))) for c, n in zip(closed, numeric)]


def jc_limit_triple(params: PhysicalParams, initial: InitialState) -> Tuple[float, float, float]:
    limit = build_rho_sg(params, initial, jc_limit_overlap_set(params, keep_kerr_phase=False)).matrix
    reference = build_rho_jc(params.eps_jc, params.t1, initial).matrix
    return _max_difference(reference, limit)


def dashed_line_residuals(params: PhysicalParams, jc: bool) -> Tuple[float, float, float]:
    """
    (M of the |e g 0> state, 2 nu2 of the |g g 1> state, their difference)
    """
    if jc:
        gg1 = build_rho_jc(params.eps_jc, params.t1, InitialState.GG1)
        eg0 = build_rho_jc(params.eps_jc, params.t1, InitialState.EG0)
    else:
        gg1 = build_rho_sg(params, InitialState.GG1)
        eg0 = build_rho_sg(params, InitialState.EG0)
    dashed = 2.0 * degenerate_m(gg1).nu2
    m_value = horodecki_m(eg0).m_value
    return m_value, dashed, m_value - dashed


def _sample_times(config, count: int) -> np.ndarray:
    grid = config.t_grid()
    if len(grid) <= count:
        return grid
    return grid[np.linspace(0, len(grid) - 1, count).round().astype(int)]


def verify(config, tolerance: Optional[float] = None) -> VerificationReport:
    """
    Runs every cross-check for the scenario in ``config`` and returns the report.

    :param tolerance: replaces every check tolerance (defaults to ``config.verify_tolerance``)
    """
    override = tolerance if tolerance is not None else config.verify_tolerance
    grid_points = config.grid_points
    base = config.base_params()
    rabi = base.rabi_period

    def tol(default: float) -> float:
        return override if override is not None else default

    if grid_points < MIN_RECOMMENDED_GRID_POINTS:
        log.warning("Verifying with a coarse grid of %s points (recommended >= %s)",
                    grid_points, MIN_RECOMMENDED_GRID_POINTS)

    report = VerificationReport()

    def record(check: CheckResult) -> None:
        report.checks.append(check)
        log.debug(check.describe())
        send_safely(verification_check_completed, verify, check=check)

    overlap_params = [base.with_schedule(t * rabi) for t in OVERLAP_SAMPLE_RABI]
    record(_check(
        'overlap_closed_form',
        (triple for p in overlap_params for triple in overlap_triples(p, grid_points)),
        tol(OVERLAP_RELATIVE_TOLERANCE)))
    record(_check(
        'displacement_moments',
        (triple for p in overlap_params for triple in displacement_triples(p, grid_points)),
        tol(OVERLAP_RELATIVE_TOLERANCE)))

    rho_params = [base.with_schedule(t * rabi) for t in _sample_times(config, RHO_SAMPLE_COUNT)]
    for initial in InitialState:
        record(_check(
            'rho_oracle_{}'.format(initial.value),
            (rho_residual(p, initial, grid_points) for p in rho_params),
            tol(ORACLE_RHO_TOLERANCE)))
    record(_check(
        'ppt_closed_form',
        (triple for p in rho_params for triple in ppt_triples(p)),
        tol(CLOSED_FORM_PPT_TOLERANCE)))
    if base.x1 == base.x2:
        for initial in InitialState:
            record(_check(
                'jc_limit_{}'.format(initial.value),
                (jc_limit_triple(p, initial) for p in rho_params),
                tol(JC_LIMIT_TOLERANCE)))
    else:
        log.info("Skipping the Jaynes-Cummings limit checks: x1 != x2")

    record(grid_convergence(base.with_schedule(CONVERGENCE_SAMPLE_RABI * rabi), grid_points))

    dashed_jc = [dashed_line_residuals(p, jc=True) for p in rho_params]
    record(_check(
        'eg0_dashed_line_jc',
        ((max(m, BELL_BOUND), max(d, BELL_BOUND), abs(max(m, BELL_BOUND) - max(d, BELL_BOUND)))
         for m, d, _ in dashed_jc),
        tol(CLOSED_FORM_PPT_TOLERANCE)))
    dashed_sg = _worst((m, d, abs(r)) for m, d, r in (dashed_line_residuals(p, jc=False) for p in rho_params))
    log.info("M of |e g 0> minus the dashed line of |g g 1>: largest gap %.3e (jc), %.3e (sg)",
             _worst((m, d, abs(r)) for m, d, r in dashed_jc)[2], dashed_sg[2])
    record(CheckResult('eg0_dashed_line_sg_residual', True, dashed_sg[0], dashed_sg[1], dashed_sg[2], float('inf')))
    return report


def grid_convergence(params: PhysicalParams, grid_points: int) -> CheckResult:
    """
    Oracle residual with n/2 and n points.

    Fails and warns when the finer grid is worse than the coarse one, unless both
    sit at the round-off floor.
    """
    coarse = rho_residual(params, InitialState.GG1, max(grid_points // 2, 16))[2]
    fine = rho_residual(params, InitialState.GG1, grid_points)[2]
    bound = max(coarse, CONVERGENCE_FLOOR)
    passed = fine <= bound
    if not passed:
        message = "Oracle residual grew from {:.3e} to {:.3e} when doubling the grid to {} points".format(
            coarse, fine, grid_points)
        log.warning(message)
        warnings.warn(message, GridResolutionWarning)
    return CheckResult('grid_convergence', passed, coarse, fine, fine, bound)
