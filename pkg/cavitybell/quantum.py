"""
Small dense complex linear algebra for two-qubit problems
"""
import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from cavitybell.constants import (
    BASIS, BASIS_INDEX, EIGEN_RESIDUAL_TOLERANCE, HERMITIAN_TOLERANCE, INPUT_HERMITIAN_TOLERANCE,
    JACOBI_MAX_SWEEPS, JACOBI_OFF_DIAGONAL_TOLERANCE, PAULI_IMAGINARY_TOLERANCE, PSD_TOLERANCE,
    SYMMETRIC_TOLERANCE, TRACE_TOLERANCE,
)
from cavitybell.exceptions import (
    ContractError, DensityMatrixError, EigensolverError, InternalConsistencyError,
)
from cavitybell.types import ComplexMatrix, InternalLabel

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

SUPPORTED_DIMENSIONS = (2, 3, 4)

# |e> is the +1 eigenvector of sigma_z
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI_MATRICES = (SIGMA_X, SIGMA_Y, SIGMA_Z)

_Label = Union[int, InternalLabel]


def _as_square(m: ComplexMatrix, dimensions: Sequence[int] = SUPPORTED_DIMENSIONS) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractError("Expected a square matrix, got shape {}".format(a.shape))
    if a.shape[0] not in dimensions:
        raise ContractError("Matrix dimension {} is not one of {}".format(a.shape[0], tuple(dimensions)))
    return a


def _worst_entry(a: np.ndarray, b: np.ndarray) -> Tuple[int, int, float]:
    difference = np.abs(a - b)
    i, j = np.unravel_index(int(np.argmax(difference)), difference.shape)
    return int(i), int(j), float(difference[i, j])


def _require_hermitian(a: np.ndarray, tolerance: float) -> None:
    i, j, deviation = _worst_entry(a, a.conj().T)
    if deviation > tolerance * max(1.0, float(np.max(np.abs(a)))):
        raise ContractError(
            "Matrix is not Hermitian: entry ({}, {}) = {} but entry ({}, {}) = {}".format(
                i, j, a[i, j], j, i, a[j, i]))


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi_rotation(a: np.ndarray, p: int, q: int) -> Optional[np.ndarray]:
    apq = a[p, q]
    magnitude = abs(apq)
    if magnitude == 0.0:
        return None
    phase = apq / magnitude
    theta = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    # column q is first rephased so that a[p, q] becomes real, then rotated in the (p, q) plane
    rotation = np.eye(a.shape[0], dtype=complex)
    rotation[p, p] = c
    rotation[p, q] = s
    rotation[q, p] = -s * np.conj(phase)
    rotation[q, q] = c * np.conj(phase)
    return rotation


def jacobi_eigh(
    m: ComplexMatrix,
    tolerance: float = JACOBI_OFF_DIAGONAL_TOLERANCE,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Diagonalizes a Hermitian matrix with cyclic complex Jacobi rotations.

    Iterates until the off-diagonal Frobenius norm drops below ``tolerance * ||m||``.
    The reconstructed eigenpairs are checked against ``||m v - lambda v|| <= 1e-10 ||m||``.

    :param m: Hermitian matrix of dimension 2, 3 or 4
    :param tolerance: relative off-diagonal convergence threshold
    :param max_sweeps: hard cap on the number of full sweeps
    :return: the eigenvalues in ascending order and a unitary whose columns are the eigenvectors
    """
    original = np.array(_as_square(m), dtype=complex)
    n = original.shape[0]
    scale = float(np.linalg.norm(original))
    vectors = np.eye(n, dtype=complex)
    if scale == 0.0:
        return np.zeros(n), vectors

    a = original.copy()
    threshold = tolerance * scale
    sweeps = 0
    while _off_diagonal_norm(a) >= threshold:
        if sweeps == max_sweeps:
            raise EigensolverError(
                "Jacobi iteration did not converge in {} sweeps (off-diagonal norm {:.3e})".format(
                    max_sweeps, _off_diagonal_norm(a)))
        for p in range(n - 1):
            for q in range(p + 1, n):
                rotation = _jacobi_rotation(a, p, q)
                if rotation is None:
                    continue
                a = rotation.conj().T @ a @ rotation
                a[p, q] = a[q, p] = 0.0
                vectors = vectors @ rotation
        sweeps += 1
    log.debug("Jacobi converged after %s sweeps for dimension %s", sweeps, n)

    values = np.real(np.diag(a))
    order = np.argsort(values)
    values, vectors = values[order], vectors[:, order]

    residual = np.linalg.norm(original @ vectors - vectors * values, axis=0)
    if np.max(residual) > EIGEN_RESIDUAL_TOLERANCE * scale:
        raise EigensolverError("Eigenpair residual {:.3e} exceeds {:.1e} * ||m||".format(
            float(np.max(residual)), EIGEN_RESIDUAL_TOLERANCE))
    return values, vectors


def hermitian_eigenvalues(m: ComplexMatrix) -> np.ndarray:
    """
    Returns the real eigenvalues of a Hermitian matrix of dimension at most 4, in ascending order
    """
    a = _as_square(m)
    _require_hermitian(a, INPUT_HERMITIAN_TOLERANCE)
    values, _ = jacobi_eigh(a)
    return values


def symmetric3_eigenvalues(m: ComplexMatrix) -> np.ndarray:
    """
    Returns the eigenvalues of a real symmetric 3x3 matrix, in ascending order
    """
    a = _as_square(m, dimensions=(3,))
    if np.iscomplexobj(a):
        if np.max(np.abs(a.imag)) > SYMMETRIC_TOLERANCE:
            raise ContractError("Matrix has non-zero imaginary entries")
        a = a.real
    i, j, deviation = _worst_entry(a, a.T)
    if deviation > SYMMETRIC_TOLERANCE * max(1.0, float(np.max(np.abs(a)))):
        raise ContractError("Matrix is not symmetric: entry ({}, {}) = {} but entry ({}, {}) = {}".format(
            i, j, a[i, j], j, i, a[j, i]))
    values, _ = jacobi_eigh(a)
    return values


def partial_transpose_second(rho: Union['TwoQubitDensityMatrix', ComplexMatrix]) -> np.ndarray:
    """
    Transposes the indices of the second qubit: ((i, j), (k, l)) -> ((i, l), (k, j))
    """
    a = rho.matrix if isinstance(rho, TwoQubitDensityMatrix) else _as_square(rho, dimensions=(4,))
    return np.asarray(a).reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def pauli_correlation_matrix(rho: 'TwoQubitDensityMatrix') -> np.ndarray:
    """
    Returns the 3x3 correlation matrix t_nm = tr(rho sigma_n (x) sigma_m)
    """
    a = rho.matrix if isinstance(rho, TwoQubitDensityMatrix) else _as_square(rho, dimensions=(4,))
    correlations = np.empty((3, 3), dtype=complex)
    for n, sigma_n in enumerate(PAULI_MATRICES):
        for k, sigma_k in enumerate(PAULI_MATRICES):
            correlations[n, k] = np.trace(a @ np.kron(sigma_n, sigma_k))
    worst = float(np.max(np.abs(correlations.imag)))
    if worst > PAULI_IMAGINARY_TOLERANCE:
        raise InternalConsistencyError("Pauli correlation has imaginary part {:.3e}".format(worst))
    return correlations.real


def local_phase_rotated(rho: 'TwoQubitDensityMatrix', first: float, second: float = 0.0) -> 'TwoQubitDensityMatrix':
    """
    Applies exp(-i first sigma_z / 2) (x) exp(-i second sigma_z / 2) to rho.

    The eg/ge coherence picks up exp(-i (first - second)); populations are unchanged.
    """
    rotation = np.kron(
        np.diag(np.exp([-0.5j * first, 0.5j * first])),
        np.diag(np.exp([-0.5j * second, 0.5j * second])),
    )
    return TwoQubitDensityMatrix(rotation @ rho.matrix @ rotation.conj().T)


class TwoQubitDensityMatrix:
    """
    A 4x4 density matrix over the ordered basis |ee>, |eg>, |ge>, |gg>

    The matrix is validated on construction (Hermitian, unit trace, positive
    semidefinite) and is read-only afterwards.
    """

    def __init__(
        self,
        matrix: ComplexMatrix,
        trace_tolerance: float = TRACE_TOLERANCE,
        hermitian_tolerance: float = HERMITIAN_TOLERANCE,
        psd_tolerance: float = PSD_TOLERANCE,
    ) -> None:
        a = np.array(matrix, dtype=complex)
        if a.shape != (4, 4):
            raise DensityMatrixError("Expected a 4x4 matrix, got shape {}".format(a.shape))
        i, j, deviation = _worst_entry(a, a.conj().T)
        if deviation > hermitian_tolerance:
            raise DensityMatrixError("Not Hermitian at entry ({}, {}): deviation {:.3e}".format(i, j, deviation))
        trace = complex(np.trace(a))
        if abs(trace - 1.0) > trace_tolerance:
            raise DensityMatrixError("Trace is {} instead of 1".format(trace))
        minimum = float(jacobi_eigh(0.5 * (a + a.conj().T))[0][0])
        if minimum < -psd_tolerance:
            raise DensityMatrixError("Not positive semidefinite: eigenvalue {:.3e}".format(minimum))
        a.setflags(write=False)
        self._matrix = a

    @classmethod
    def from_state_vector(cls, amplitudes: Sequence[complex]) -> 'TwoQubitDensityMatrix':
        """
        Builds the projector onto a (normalized) two-qubit state given in the |ee>, |eg>, |ge>, |gg> basis
        """
        vector = np.asarray(amplitudes, dtype=complex)
        vector = vector / np.linalg.norm(vector)
        return cls(np.outer(vector, vector.conj()))

    @classmethod
    def product(cls, label: InternalLabel) -> 'TwoQubitDensityMatrix':
        vector = np.zeros(4, dtype=complex)
        vector[BASIS_INDEX[label]] = 1.0
        return cls.from_state_vector(vector)

    @classmethod
    def maximally_mixed(cls) -> 'TwoQubitDensityMatrix':
        return cls(np.eye(4) / 4.0)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def element(self, row: _Label, column: _Label) -> complex:
        return complex(self._matrix[self._index(row), self._index(column)])

    def population(self, label: _Label) -> float:
        return self.element(label, label).real

    def eigenvalues(self) -> np.ndarray:
        return hermitian_eigenvalues(self._matrix)

    @staticmethod
    def _index(label: _Label) -> int:
        return label if isinstance(label, int) else BASIS_INDEX[tuple(label)]  # type: ignore

    def __repr__(self) -> str:
        populations = ', '.join(
            '{}{}={:.6g}'.format(a, b, self._matrix[k, k].real) for k, (a, b) in enumerate(BASIS))
        return "TwoQubitDensityMatrix<{}>".format(populations)
