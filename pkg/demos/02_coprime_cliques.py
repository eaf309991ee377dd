"""Pairwise coprime subdegrees: why the bound is 2.

For a primitive group, collect the distinct non-trivial subdegrees and ask
how many of them can be pairwise coprime. The answer never exceeds 2, and
most families cannot even manage 2.
"""
from math import gcd

from subdeg import (
    agl,
    analyze,
    common_divisor_graph,
    ksubsets_action,
    max_coprime_set,
    neumann_check,
    partition_action,
    psl2,
    subdegrees,
    weiss_check,
)

for G in [psl2(11), agl(2, 3), ksubsets_action(9, 4), partition_action(9, 3)]:
    profile = subdegrees(G)
    clique = max_coprime_set(profile)
    print(
        f"{G.label}: subdegrees {profile.subdegrees} -> "
        f"max coprime set {clique.values} (size {clique.size})"
    )

# ksubsets(7,3) is the extreme case: 34 non-trivial points split into
# subdegrees 4, 12, 18 and every pair shares a factor.
profile = subdegrees(ksubsets_action(7, 3))
vals = profile.distinct_nontrivial
pairs = [(a, b, gcd(a, b)) for a in vals for b in vals if a < b]
print(f"\nksubsets(7,3) subdegrees {profile.subdegrees}")
for a, b, g in pairs:
    print(f"  gcd({a},{b}) = {g}")
assert max_coprime_set(profile).size == 1

# The common-divisor graph makes the structure visible: vertices are the
# distinct non-trivial subdegrees, edges mean a shared factor.
graph = common_divisor_graph(profile)
print(f"common divisor graph: vertices {graph.vertices}, edges {graph.edges}")

# Two companion facts, checked per group: the largest subdegree touches
# every other (Weiss), and k coprime subdegrees force rank >= 2^k (Neumann).
profile = subdegrees(psl2(13))
clique = max_coprime_set(profile)
print(f"\npsl2(13): weiss {weiss_check(profile)}, neumann {neumann_check(profile, clique)}")

# analyze() bundles the whole pipeline into one report.
report = analyze(psl2(13))
print(f"report: clique {report.max_coprime_clique}, theorem_ok {report.theorem_ok}")
