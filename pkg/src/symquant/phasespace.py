"""Finite cyclic phase space: shift and clock unitaries, the Fourier
(momentum) basis, mutual unbiasedness, and position/momentum operators.

This is the n-point stand-in for translations of position and momentum on
the line; the genuinely continuous case (unbounded operators, continuous
spectra) is only analogized, never represented.
"""

from __future__ import annotations

import numpy as np

from .coherent import UnitaryRep
from .groups import FiniteGroup, cyclic_group
from .quantize import OperatorBundle, build_operator


class BadSizeError(ValueError):
    pass


def _check_size(n: int) -> int:
    n = int(n)
    if n < 2:
        raise BadSizeError("lattice size must be at least 2")
    return n


def fourier_matrix(n: int) -> np.ndarray:
    """Unitary DFT matrix; column p is the momentum state |p>."""
    n = _check_size(n)
    x = np.arange(n)
    return np.exp(2j * np.pi * np.outer(x, x) / n) / np.sqrt(n)


def shift_unitary(n: int, c: int = 1) -> np.ndarray:
    """Position shift by c: |x> -> |x + c mod n>."""
    n = _check_size(n)
    S = np.zeros((n, n), dtype=np.complex128)
    S[(np.arange(n) + c) % n, np.arange(n)] = 1.0
    return S


def clock_unitary(n: int, d: int = 1) -> np.ndarray:
    """Momentum shift by d, diagonal in position: |x> -> w^{dx} |x>."""
    n = _check_size(n)
    return np.diag(np.exp(2j * np.pi * d * np.arange(n) / n))


def shift_rep(n: int, group: FiniteGroup | None = None) -> UnitaryRep:
    """k -> shift by k, a faithful unitary representation of cyclic:n."""
    n = _check_size(n)
    g = group if group is not None else cyclic_group(n)
    mats = np.stack([shift_unitary(n, k) for k in range(n)])
    return UnitaryRep(group=g, dim=n, matrices=mats)


def clock_rep(n: int, group: FiniteGroup | None = None) -> UnitaryRep:
    """k -> clock^k, the Fourier-conjugate representation of cyclic:n."""
    n = _check_size(n)
    g = group if group is not None else cyclic_group(n)
    mats = np.stack([clock_unitary(n, k) for k in range(n)])
    return UnitaryRep(group=g, dim=n, matrices=mats)


def mub_deviation(n: int) -> float:
    """Largest deviation of |<x|p>|^2 from 1/n over the two bases."""
    F = fourier_matrix(n)
    return float(np.max(np.abs(np.abs(F) ** 2 - 1.0 / n)))


def position_operator(n: int) -> OperatorBundle:
    """Multiplication by the lattice coordinate, labels 0..n-1."""
    n = _check_size(n)
    basis = np.eye(n, dtype=np.complex128)
    return build_operator(basis, 1.0, np.arange(n, dtype=float))


def momentum_operator(n: int) -> OperatorBundle:
    """The coordinate operator of the Fourier basis, labels 0..n-1."""
    n = _check_size(n)
    F = fourier_matrix(n)
    return build_operator(F.T, 1.0, np.arange(n, dtype=float))


def commutator_norm(n: int) -> float:
    """Frobenius norm of [X, P]; strictly positive for every n >= 2."""
    X = position_operator(n).matrix
    P = momentum_operator(n).matrix
    return float(np.linalg.norm(X @ P - P @ X))
