"""Shared brute-force oracles for the test suite.

These deliberately avoid the package's stabilizer-chain machinery: element
sets come from Cayley-graph closure over image tuples, stabilizers and
orbits from filtering those sets, block systems from naive partition
refinement. They are slow and only used on small groups.
"""
from __future__ import annotations

import numpy as np

from subdeg.perm import Permutation, compose, parse_cycles
from subdeg.groups import PermGroup


def make_group(degree, *cycle_strings, label=None):
    gens = [parse_cycles(s, degree) for s in cycle_strings]
    return PermGroup(degree, gens, label=label)


def closure_elements(degree: int, gens) -> list[Permutation]:
    """All products of the generators, by breadth-first closure."""
    ident = Permutation.identity(degree)
    seen = {ident}
    out = [ident]
    qi = 0
    while qi < len(out):
        x = out[qi]
        qi += 1
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def brute_stabilizer(elems, point: int) -> list[Permutation]:
    return [g for g in elems if g(point) == point]


def brute_orbits(elems, degree: int) -> list[tuple[int, ...]]:
    """Orbit partition of the point set under a set of permutations."""
    seen = [False] * degree
    orbits = []
    for start in range(degree):
        if seen[start]:
            continue
        orb = set()
        frontier = [start]
        while frontier:
            x = frontier.pop()
            if x in orb:
                continue
            orb.add(x)
            for g in elems:
                y = g(x)
                if y not in orb:
                    frontier.append(y)
        for x in orb:
            seen[x] = True
        orbits.append(tuple(sorted(orb)))
    return sorted(orbits, key=lambda o: o[0])


def brute_blocks(elems, degree: int, pair) -> list[tuple[int, ...]]:
    """Finest congruence containing the pair, by naive refinement over all
    group elements."""
    labels = list(range(degree))

    def relabel(a, b):
        keep, drop = min(a, b), max(a, b)
        for i in range(degree):
            if labels[i] == drop:
                labels[i] = keep

    relabel(labels[pair[0]], labels[pair[1]])
    changed = True
    while changed:
        changed = False
        for g in elems:
            for x in range(degree):
                for y in range(degree):
                    if labels[x] == labels[y] and labels[g(x)] != labels[g(y)]:
                        relabel(labels[g(x)], labels[g(y)])
                        changed = True
    classes = {}
    for x in range(degree):
        classes.setdefault(labels[x], []).append(x)
    return sorted((tuple(sorted(c)) for c in classes.values()), key=lambda c: c[0])


def embed(p: Permutation, degree: int, offset: int) -> Permutation:
    """The permutation acting as p on offset..offset+p.degree-1, fixing the rest."""
    images = np.arange(degree, dtype=np.int64)
    images[offset : offset + p.degree] = p.images + offset
    return Permutation(images)


def direct_sum(G: PermGroup, H: PermGroup, label=None) -> PermGroup:
    """G x H acting on the disjoint union of the two point sets."""
    n = G.degree + H.degree
    gens = [embed(g, n, 0) for g in G.generators]
    gens += [embed(h, n, G.degree) for h in H.generators]
    return PermGroup(n, gens, label=label)
