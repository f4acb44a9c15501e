"""Dense complex linear algebra: Hermitian spectra with degeneracy clustering,
unitary one-parameter phases, orthonormalization, and the predicates the rest
of the package leans on.

All tolerances are relative to a matrix norm with a floor of 1, so near-zero
matrices fall back to absolute comparisons. Everything is complex128.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_DEGENERACY_TOL = 1e-8
_GS_DROP_TOL = 1e-12


class NotSquareError(ValueError):
    pass


class NotHermitianError(ValueError):
    pass


class ConvergenceFailureError(RuntimeError):
    pass


class DimensionMismatchError(ValueError):
    pass


def as_cmatrix(a) -> np.ndarray:
    """Coerce to a finite 2-d complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatchError(f"expected a matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_cvector(a) -> np.ndarray:
    """Coerce to a finite 1-d complex128 array."""
    v = np.asarray(a, dtype=np.complex128).ravel()
    if v.size == 0:
        raise DimensionMismatchError("vector must be nonempty")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def _require_square(A: np.ndarray) -> None:
    if A.shape[0] != A.shape[1]:
        raise NotSquareError(f"matrix is {A.shape[0]}x{A.shape[1]}")


def max_abs(A) -> float:
    A = np.asarray(A)
    return float(np.max(np.abs(A))) if A.size else 0.0


def frobenius_dist(A, B) -> float:
    """Frobenius distance between two equally shaped matrices."""
    A, B = as_cmatrix(A), as_cmatrix(B)
    if A.shape != B.shape:
        raise DimensionMismatchError(f"shapes differ: {A.shape} vs {B.shape}")
    return float(np.linalg.norm(A - B))


def is_hermitian(A, tol: float = 1e-10) -> bool:
    A = as_cmatrix(A)
    if A.shape[0] != A.shape[1]:
        return False
    return max_abs(A - A.conj().T) <= tol * max(1.0, max_abs(A))


def _require_hermitian(A: np.ndarray, tol: float = 1e-10) -> None:
    _require_square(A)
    dev = max_abs(A - A.conj().T)
    if dev > tol * max(1.0, max_abs(A)):
        raise NotHermitianError(f"max |A - A^dag| = {dev:.3e}")


def is_unitary(U, tol: float = 1e-9) -> bool:
    """True iff ||U^dag U - I||_F <= tol * dim."""
    U = as_cmatrix(U)
    if U.shape[0] != U.shape[1]:
        return False
    d = U.shape[0]
    return float(np.linalg.norm(U.conj().T @ U - np.eye(d))) <= tol * d


@dataclass(frozen=True)
class SpectralData:
    """Clustered eigendecomposition of a Hermitian matrix.

    eigenvalues are ascending, one per cluster; projections[j] is the
    orthogonal projection onto the j-th eigenspace; vectors holds the
    orthonormal eigenbasis grouped cluster by cluster (columns).
    degeneracy_tol records the clustering tolerance, since multiplicity
    structure depends on it.
    """

    eigenvalues: np.ndarray
    projections: np.ndarray
    multiplicities: np.ndarray
    vectors: np.ndarray
    degeneracy_tol: float = DEFAULT_DEGENERACY_TOL

    @property
    def dim(self) -> int:
        return self.projections.shape[1]

    @property
    def n_clusters(self) -> int:
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        """Sum of eigenvalue-weighted projections."""
        return np.einsum("j,jkl->kl", self.eigenvalues, self.projections)

    def expectation(self, v) -> float:
        """Quadratic form <v|A|v> evaluated through the spectral sum."""
        v = as_cvector(v)
        return float(
            sum(
                u * (v.conj() @ P @ v).real
                for u, P in zip(self.eigenvalues, self.projections)
            )
        )

    def basis(self) -> np.ndarray:
        """Orthonormal eigenbasis as columns, cluster by cluster."""
        return self.vectors


def _fix_phases(V: np.ndarray) -> np.ndarray:
    # rotate each column so its largest-magnitude entry is real and positive
    out = V.copy()
    for c in range(out.shape[1]):
        i = int(np.argmax(np.abs(out[:, c])))
        z = out[i, c]
        if abs(z) > 0:
            out[:, c] *= np.conj(z) / abs(z)
    return out


def eig_hermitian(A, degeneracy_tol: float = DEFAULT_DEGENERACY_TOL) -> SpectralData:
    """Eigendecomposition of a Hermitian matrix with degeneracy merging.

    Eigenvalues closer than degeneracy_tol * max(1, ||A||_F) are clustered
    greedily in ascending order and share one projection.
    """
    A = as_cmatrix(A)
    _require_hermitian(A)
    try:
        w, V = np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailureError(str(exc)) from exc
    V = _fix_phases(V)

    scale = max(1.0, float(np.linalg.norm(A)))
    gap = degeneracy_tol * scale
    clusters: list[list[int]] = [[0]]
    for i in range(1, len(w)):
        if w[i] - w[clusters[-1][-1]] <= gap:
            clusters[-1].append(i)
        else:
            clusters.append([i])

    eigenvalues = np.array([float(np.mean(w[c])) for c in clusters])
    projections = np.stack(
        [V[:, c] @ V[:, c].conj().T for c in clusters]
    )
    multiplicities = np.array([len(c) for c in clusters], dtype=int)

    # merging replaces each raw eigenvalue by its cluster mean, which adds a
    # known, intentional reconstruction error on top of the solver's own
    merge_err = float(np.sqrt(sum(
        float(np.sum((w[c] - u) ** 2)) for u, c in zip(eigenvalues, clusters)
    )))
    recon_err = float(
        np.linalg.norm(A - np.einsum("j,jkl->kl", eigenvalues, projections))
    )
    if recon_err > 1e-9 * scale + merge_err:
        raise ConvergenceFailureError(
            f"spectral reconstruction error {recon_err:.3e} exceeds tolerance"
        )

    for arr in (eigenvalues, projections, multiplicities, V):
        arr.setflags(write=False)
    return SpectralData(eigenvalues, projections, multiplicities, V,
                        degeneracy_tol=float(degeneracy_tol))


def expm_antihermitian(H, t: float) -> np.ndarray:
    """exp(-i*t*H) for Hermitian H, via eigendecomposition of H.

    The result is unitary to eigensolver accuracy because the phases are
    applied to an exactly orthonormal eigenbasis.
    """
    H = as_cmatrix(H)
    _require_hermitian(H)
    try:
        w, V = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailureError(str(exc)) from exc
    phases = np.exp(-1j * t * w)
    return (V * phases) @ V.conj().T


def gram_schmidt(vectors) -> list[np.ndarray]:
    """Orthonormalize a list of vectors, dropping near-dependent ones.

    A vector whose residual after projection has norm < 1e-12 is dropped.
    """
    basis: list[np.ndarray] = []
    dim = None
    for raw in vectors:
        v = as_cvector(raw)
        if dim is None:
            dim = v.size
        elif v.size != dim:
            raise DimensionMismatchError("vectors have inconsistent dimensions")
        for b in basis:
            v = v - (b.conj() @ v) * b
        # second pass stabilizes nearly dependent inputs
        for b in basis:
            v = v - (b.conj() @ v) * b
        n = float(np.linalg.norm(v))
        if n >= _GS_DROP_TOL:
            basis.append(v / n)
    return basis
