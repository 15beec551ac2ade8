"""
Separability and Bell non-locality of two-qubit states
"""
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np

from cavitybell.constants import BELL_BOUND, DEGENERACY_TOLERANCE, PROBABILITY_TOLERANCE
from cavitybell.exceptions import DegeneracyError
from cavitybell.models import SgCoefficients
from cavitybell.quantum import (
    TwoQubitDensityMatrix, hermitian_eigenvalues, partial_transpose_second, pauli_correlation_matrix,
    symmetric3_eigenvalues,
)
from cavitybell.settings import get_settings_value

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class PptReport:
    eigenvalues: Tuple[float, float, float, float]
    separable: bool
    tolerance: float

    @property
    def minimum(self) -> float:
        return self.eigenvalues[0]


class ClosedFormPpt(NamedTuple):
    eigenvalues: Tuple[float, float, float, float]
    # P1 == 0, the values are the continuous extension +/- |q| c1 c2 P2
    vanishing_p1: bool


class HorodeckiM(NamedTuple):
    m_value: float
    nu: Tuple[float, float, float]


class DegenerateM(NamedTuple):
    m_value: float
    nu1: float
    nu2: float


@dataclass(frozen=True)
class EntanglementReport:
    """
    PPT spectrum (ascending), correlation spectrum nu (descending) and M(rho).

    Eigenvalues of the partial transpose in (-tolerance, 0) count as non-negative.
    """
    ppt_eigenvalues: Tuple[float, float, float, float]
    nu: Tuple[float, float, float]
    m_value: float
    separable: bool
    bell_violated: bool
    tolerance: float


def _tolerance(tol: Optional[float]) -> float:
    return get_settings_value('ppt_tolerance') if tol is None else tol


def ppt_report(rho: TwoQubitDensityMatrix, tol: Optional[float] = None) -> PptReport:
    tolerance = _tolerance(tol)
    values = hermitian_eigenvalues(partial_transpose_second(rho))
    return PptReport(tuple(float(v) for v in values), bool(values[0] >= -tolerance), tolerance)  # type: ignore


def closed_form_ppt_eigenvalues(co: SgCoefficients) -> ClosedFormPpt:
    """
    c1^2 P2, c2^2 P2 and (P1/2)(1 +/- sqrt(1 + (2 |q| c1 c2 P2 / P1)^2)), in no particular order
    """
    coherence = abs(co.q) * co.c1 * co.c2 * co.P2
    radius = math.hypot(co.P1, 2.0 * coherence)
    values = (co.c1 ** 2 * co.P2, co.c2 ** 2 * co.P2, (co.P1 + radius) / 2.0, (co.P1 - radius) / 2.0)
    return ClosedFormPpt(values, co.P1 < PROBABILITY_TOLERANCE)


def horodecki_m(rho: TwoQubitDensityMatrix) -> HorodeckiM:
    """
    M(rho) = max{nu1 + nu2, nu1 + nu3, nu2 + nu3} over the eigenvalues of T^T T
    """
    correlations = pauli_correlation_matrix(rho)
    ascending = np.clip(symmetric3_eigenvalues(correlations.T @ correlations), 0.0, None)
    nu = tuple(float(v) for v in ascending[::-1])
    m_value = max(nu[0] + nu[1], nu[0] + nu[2], nu[1] + nu[2])
    return HorodeckiM(m_value, nu)  # type: ignore


def degenerate_m(rho: TwoQubitDensityMatrix, tolerance: float = DEGENERACY_TOLERANCE) -> DegenerateM:
    """
    M(rho) = max{nu1 + nu2, 2 nu2} for a spectrum with the degenerate pair nu2 = nu3.

    nu1 is the non-degenerate eigenvalue, whichever its rank.
    """
    _, (high, middle, low) = horodecki_m(rho)
    if abs(middle - low) <= tolerance:
        nu1, nu2 = high, middle
    elif abs(high - middle) <= tolerance:
        nu1, nu2 = low, high
    else:
        raise DegeneracyError("No degenerate pair in nu = ({:.12g}, {:.12g}, {:.12g})".format(high, middle, low))
    return DegenerateM(max(nu1 + nu2, 2.0 * nu2), nu1, nu2)


def jc_separability_value(eps_jc: float, T: float) -> float:
    """
    sin^2(2 eps_jc T) sin^2(eps_jc T), zero exactly when the Jaynes-Cummings |g g 1> state is separable
    """
    angle = eps_jc * T
    return math.sin(2.0 * angle) ** 2 * math.sin(angle) ** 2


def jc_min_ppt_eigenvalue(eps_jc: float, T: float) -> float:
    """
    Smallest partial-transpose eigenvalue of the Jaynes-Cummings |g g 1> state.

    It vanishes on the same set as :func:`jc_separability_value` but goes like -delta^4
    around the zeros at multiples of pi, so the PPT tolerance band spans |delta| up to
    about tolerance^(1/4) there.
    """
    angle = eps_jc * T
    s, c = math.sin(angle), math.cos(angle)
    coherence_sq = s ** 4 * c ** 2
    if coherence_sq == 0.0:
        return 0.0
    return -2.0 * coherence_sq / (c ** 4 + math.sqrt(c ** 8 + 4.0 * coherence_sq))


def entanglement_report(rho: TwoQubitDensityMatrix, tol: Optional[float] = None) -> EntanglementReport:
    ppt = ppt_report(rho, tol)
    m_value, nu = horodecki_m(rho)
    report = EntanglementReport(
        ppt_eigenvalues=ppt.eigenvalues,
        nu=nu,
        m_value=m_value,
        separable=ppt.separable,
        bell_violated=m_value > BELL_BOUND,
        tolerance=ppt.tolerance,
    )
    log.debug("Entanglement report: min PPT eigenvalue %s, M %s", ppt.minimum, m_value)
    return report
