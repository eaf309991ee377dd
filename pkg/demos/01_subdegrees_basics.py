"""Subdegrees from scratch: stabilizer orbits of a transitive group.

A transitive group G on n points has one stabilizer orbit structure up to
relabeling; the orbit lengths of G_omega are the subdegrees. This walk-through
computes them for a few hand-picked actions.
"""
from subdeg import (
    alternating,
    coset_action,
    dihedral,
    ksubsets_action,
    order,
    parse_cycles,
    PermGroup,
    subdegrees,
)

# A5 acting on 5 points: 2-transitive, so a single non-trivial suborbit.
A5 = alternating(5)
profile = subdegrees(A5)
print(f"A5 on 5 points: rank {profile.rank}, subdegrees {profile.subdegrees}")

# The Petersen graph action: A5 on the 10 cosets of a subgroup of order 6.
S3 = PermGroup(5, [parse_cycles("(1,2,3)", 5), parse_cycles("(1,2)(4,5)", 5)])
petersen, _ = coset_action(A5, S3)
profile = subdegrees(petersen)
print(f"A5 on 10 cosets: rank {profile.rank}, subdegrees {profile.subdegrees}")
# (1, 3, 6): each vertex has 3 neighbours and 6 non-neighbours.

# Johnson action on 2-subsets of 7 points.
J = ksubsets_action(7, 2)
profile = subdegrees(J)
print(f"S7 on 2-subsets: degree {J.degree}, subdegrees {profile.subdegrees}")

# Dihedral group on a 7-gon: stabilizer of a vertex is the reflection through
# it, pairing up the other vertices.
D7 = dihedral(7)
profile = subdegrees(D7)
print(f"D7 on 7 points: order {order(D7)}, subdegrees {profile.subdegrees}")

# The choice of base point never matters for a transitive group.
assert all(
    subdegrees(petersen, point=x).subdegrees == (1, 3, 6)
    for x in range(petersen.degree)
)
print("base point invariance checked on all 10 points")
