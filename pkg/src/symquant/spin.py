"""Angular-momentum matrices in the ladder construction, component
operators along a direction, and rotation unitaries generated by them.

Conventions: hbar = 1, the z generator is diagonal with entries
j, j-1, ..., -j (descending), and a rotation by angle phi about a unit
axis n is exp(-i * phi * n . J).
"""

from __future__ import annotations

import numpy as np

from .linalg import expm_antihermitian, max_abs
from .quantize import OperatorBundle, operator_from_matrix


class BadSpinError(ValueError):
    pass


def _check_spin(j: float) -> float:
    two_j = 2.0 * j
    if two_j < 0 or abs(two_j - round(two_j)) > 1e-12:
        raise BadSpinError(f"spin must be a nonnegative half-integer, got {j}")
    return round(two_j) / 2.0


def spin_generators(j: float):
    """(Jx, Jy, Jz) for spin j, with Jz = diag(j, j-1, ..., -j).

    Built from the ladder operators; the cyclic commutation relations hold
    to machine precision and are verified here to 1e-10.
    """
    j = _check_spin(j)
    d = int(round(2 * j)) + 1
    m = j - np.arange(d)
    Jz = np.diag(m).astype(np.complex128)
    Jp = np.zeros((d, d), dtype=np.complex128)
    for i in range(1, d):
        # raising from m[i] to m[i] + 1 = m[i-1]
        Jp[i - 1, i] = np.sqrt(j * (j + 1) - m[i] * (m[i] + 1))
    Jm = Jp.conj().T
    Jx = (Jp + Jm) / 2.0
    Jy = (Jp - Jm) / 2.0j
    comm = Jx @ Jy - Jy @ Jx - 1j * Jz
    if max_abs(comm) > 1e-10:
        raise AssertionError("commutation relations failed")
    return Jx, Jy, Jz


def component_matrix(j: float, direction) -> np.ndarray:
    """The Hermitian matrix of the component along a unit direction."""
    a = np.asarray(direction, dtype=float)
    if a.shape != (3,):
        raise ValueError("direction must be a 3-vector")
    if abs(np.linalg.norm(a) - 1.0) > 1e-12:
        raise ValueError("direction must have unit norm")
    Jx, Jy, Jz = spin_generators(j)
    return a[0] * Jx + a[1] * Jy + a[2] * Jz


def spin_component_operator(j: float, direction,
                            degeneracy_tol=1e-8) -> OperatorBundle:
    """Operator bundle of the component along a direction.

    Its eigenvalues are the ladder values j, j-1, ..., -j for every unit
    direction; they come out simple, so the operator is maximal.
    """
    A = component_matrix(j, direction)
    bundle = operator_from_matrix(A, degeneracy_tol=degeneracy_tol)
    expected = np.arange(-_check_spin(j), _check_spin(j) + 0.5)
    if bundle.eigenvalues.shape != expected.shape or (
        np.max(np.abs(bundle.eigenvalues - expected)) > 1e-9
    ):
        raise AssertionError("component spectrum deviates from the ladder values")
    return bundle


def spin_rotation(j: float, axis, angle: float) -> np.ndarray:
    """exp(-i * angle * axis . J) for a unit axis."""
    return expm_antihermitian(component_matrix(j, axis), angle)


def rotation_from_vector(j: float, phi_vec) -> np.ndarray:
    """Rotation unitary for a rotation vector (axis times angle)."""
    v = np.asarray(phi_vec, dtype=float)
    angle = float(np.linalg.norm(v))
    if angle < 1e-15:
        return np.eye(int(round(2 * _check_spin(j))) + 1, dtype=np.complex128)
    return spin_rotation(j, v / angle, angle)


def perpendicular_unit(a) -> np.ndarray:
    """A deterministic unit vector orthogonal to a unit 3-vector."""
    a = np.asarray(a, dtype=float)
    probe = np.array([1.0, 0.0, 0.0])
    if abs(a @ probe) > 0.9:
        probe = np.array([0.0, 1.0, 0.0])
    b = probe - (a @ probe) * a
    return b / np.linalg.norm(b)
