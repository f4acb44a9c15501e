#!/usr/bin/env python3
"""Walkthrough: position and momentum on a finite cyclic lattice.

Shifts of position and of momentum both represent the cyclic group; the
momentum basis is the Fourier transform of the position basis, the two bases
are mutually unbiased, and the two coordinate operators refuse to commute.
The continuous line is only analogized here - nothing in this demo has a
continuous spectrum.
"""

import numpy as np

from symquant.phasespace import (
    clock_unitary,
    commutator_norm,
    fourier_matrix,
    momentum_operator,
    mub_deviation,
    position_operator,
    shift_unitary,
)

n = 4
print(f"== lattice of {n} points ==")
S = shift_unitary(n)
M = clock_unitary(n)
print("position shift S:\n", S.real.astype(int))
print("momentum shift (clock) M diagonal:", np.round(np.diag(M), 6))
w = np.exp(2j * np.pi / n)
print("Weyl braiding  M S = w S M :",
      bool(np.allclose(M @ S, w * (S @ M))))

print("\n== mutual unbiasedness ==")
F = fourier_matrix(n)
print("|<x|p>|^2 (all entries should be 1/n):\n", np.round(np.abs(F) ** 2, 12))
for m in range(2, 9):
    print(f"  n={m}: max deviation from 1/n = {mub_deviation(m):.3e}")

print("\n== coordinate operators ==")
X = position_operator(n)
P = momentum_operator(n)
print("position spectrum:", X.eigenvalues)
print("momentum spectrum:", P.eigenvalues)
print("commutator norm ||[X, P]||_F:", commutator_norm(n))
print("(positive for every lattice size - the two variables cannot be")
print(" diagonalized together, even though each alone is maximal)")
