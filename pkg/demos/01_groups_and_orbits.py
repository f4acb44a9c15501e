#!/usr/bin/env python3
"""Walkthrough: building finite groups, acting on spaces, and measuring orbits.

Every group lives as an explicit Cayley table, so the group axioms and the
action axioms are checked exhaustively at construction time. We build a few
named groups, act on small spaces, and put invariant measures on the orbits.
"""

import numpy as np

from symquant import (
    GroupAction,
    counting_measure,
    haar_measure,
    invariant_measure,
    is_transitive,
    make_named_group,
    orbits,
    subgroup_generated,
)
from symquant.groups import cyclic_shift_action, dihedral_vertex_action

print("== named groups ==")
for spec in ("cyclic:4", "dihedral:4", "symmetric:3", "binary_tetrahedral",
             "cyclic:2xcyclic:2"):
    g = make_named_group(spec)
    print(f"{spec:22s} order {g.order:3d}  abelian={g.is_abelian}")

print("\n== the dihedral group permuting square vertices ==")
d4 = make_named_group("dihedral:4")
act = dihedral_vertex_action(d4)
print("element -> vertex permutation")
for k in range(d4.order):
    print(f"  {d4.element_names[k]:4s} -> {list(act.perm[k])}")
print("orbits:", orbits(act), " transitive:", is_transitive(act))

print("\n== orbits split when the action has fixed points ==")
c3 = make_named_group("cyclic:3")
fix_zero = GroupAction(group=c3, space_size=4,
                       perm=[[0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]])
print("orbits:", orbits(fix_zero))
m = invariant_measure(fix_zero, [1.0, 1.0])
print("weights with unit mass per orbit:", m.weights)
print("invariance check: weights[k.x] == weights[x] for every k:",
      all(np.array_equal(m.weights[fix_zero.perm[k]], m.weights)
          for k in range(3)))

print("\n== counting measures ==")
shift = cyclic_shift_action(make_named_group("cyclic:4"))
print("counting measure on one 4-point orbit:", counting_measure(shift).weights)
print("group counting (Haar) measure of dihedral:4:", haar_measure(d4))

print("\n== subgroups from generators ==")
c4 = make_named_group("cyclic:4")
print("subgroup of cyclic:4 generated by {2}:", subgroup_generated(c4, [2]))
s = d4.elements.index((0, 1))
print("subgroup of dihedral:4 generated by the reflection:",
      subgroup_generated(d4, [s]))
