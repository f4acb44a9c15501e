#!/usr/bin/env python3
"""Walkthrough: from a labelled resolution of the identity to operators,
measurement effects, and density operators.

A state family that resolves the identity, together with a real label per
state, defines a Hermitian operator. Mixing the projectors with a statistical
model gives measurement effects; weighting them with a probability profile
gives a density operator.
"""

import numpy as np

from symquant import (
    StatisticalModel,
    build_density,
    build_operator,
    build_povm,
    coarse_grain,
    function_operator,
    maximality_check,
    question_answer_match,
)

basis = np.eye(2, dtype=complex)

print("== operator from labelled basis states ==")
comp = build_operator(basis, 1.0, [0.5, -0.5])
print("matrix:\n", comp.matrix.real)
print("eigenvalues:", comp.eigenvalues, " maximal:", maximality_check(comp))

print("\n== functional calculus ==")
sq = function_operator(basis, 1.0, [0.5, -0.5], lambda u: u * u)
print("squared labels give", np.diag(sq.matrix.real), "- a degenerate operator")
print("maximal:", maximality_check(sq))

print("\n== measurement effects from a statistical model ==")
model = StatisticalModel(probabilities=[[0.3, 0.7], [0.7, 0.3]])
povm = build_povm(model, basis, 1.0)
for z in range(povm.outcome_count):
    print(f"effect {z}:\n", povm.effects[z].real)
print("completeness deviation:", povm.completeness_deviation())

print("\n== density operators ==")
rho = build_density([0.25, 0.75], basis, 1.0)
print("sigma:\n", rho.sigma.real, " trace:", rho.trace)

print("\n== coarse graining a three-level system ==")
basis3 = np.eye(3, dtype=complex)
grain, bundle = coarse_grain(basis3, [1.0, 0.0, -1.0], lambda u: u * u)
print("blocks (preimages of each coarse label):", grain.blocks)
print("coarse operator:", np.diag(bundle.matrix.real))
print("maximal after the non-injective relabelling:", maximality_check(bundle))

print("\n== which question does a state answer? ==")
z = np.eye(2, dtype=complex)
x = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2)
bases = {"z": z, "x": x}
for v, label in [
    (np.array([1.0, 0.0]), "z+"),
    (np.array([1.0, 1.0]) / np.sqrt(2), "x+"),
    (np.array([np.cos(np.pi / 8), np.sin(np.pi / 8)]), "tilted"),
]:
    print(f"  state {label:7s} matches {question_answer_match(v, bases)}")
