"""Permutation groups: deterministic Schreier-Sims, orbits, stabilizers,
coset actions, block systems, derived series, and small-group searches.

The stabilizer chain is built deterministically: no randomization, base
points chosen as the smallest moved point, orbits explored breadth-first
with generators in list order. Two runs over the same generators produce
identical chains.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .perm import Permutation, compose, inverse

__all__ = [
    "PermGroup",
    "Bsgs",
    "BlockSystem",
    "CapExceeded",
    "ELEMENTS_CAP",
    "COSET_CAP",
    "orbit",
    "schreier_sims",
    "order",
    "contains",
    "point_stabilizer",
    "coset_action",
    "minimal_block_system",
    "is_primitive",
    "derived_subgroup",
    "last_derived_term",
    "elements",
    "normalizer_small",
    "sylow_subgroup_small",
    "fixed_points",
    "commutator",
    "is_subgroup",
]

ELEMENTS_CAP = 200_000
COSET_CAP = 100_000


class CapExceeded(ValueError):
    """A configured size bound was exceeded; carries the value and the cap."""

    def __init__(self, what: str, value: int, cap: int):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} {value} exceeds cap {cap}")


class PermGroup:
    """Group generated by permutations of 0..degree-1.

    Identity generators are stripped and exact duplicates dropped; a
    generator of the wrong degree is an error.
    """

    def __init__(self, degree: int, generators, label: str | None = None):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        gens: list[Permutation] = []
        seen: set[Permutation] = set()
        for g in generators:
            if not isinstance(g, Permutation):
                raise TypeError("generators must be Permutation instances")
            if g.degree != degree:
                raise ValueError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.label = label
        self._bsgs: Bsgs | None = None

    @property
    def bsgs(self) -> "Bsgs":
        if self._bsgs is None:
            self._bsgs = schreier_sims(self)
        return self._bsgs

    def order(self) -> int:
        return self.bsgs.order

    def __contains__(self, p: Permutation) -> bool:
        return contains(self, p)

    def __repr__(self) -> str:
        name = self.label or "PermGroup"
        return f"<{name} degree={self.degree} gens={len(self.generators)}>"


class _Level:
    """One level of the stabilizer chain."""

    __slots__ = ("point", "gen_idxs", "orbit_list", "trans", "trans_inv", "schreier", "dirty")

    def __init__(self, point: int):
        self.point = point
        self.gen_idxs: list[int] = []
        self.orbit_list: list[int] = [point]
        self.trans: dict[int, Permutation] = {}
        self.trans_inv: dict[int, Permutation] = {}
        self.schreier: dict[int, tuple[int, int]] = {}
        self.dirty = True

    def rebuild(self, strong: list[Permutation], degree: int) -> None:
        ident = Permutation.identity(degree)
        self.orbit_list = [self.point]
        self.trans = {self.point: ident}
        self.trans_inv = {self.point: ident}
        self.schreier = {self.point: (-1, self.point)}
        qi = 0
        while qi < len(self.orbit_list):
            a = self.orbit_list[qi]
            qi += 1
            ua = self.trans[a]
            for gi in self.gen_idxs:
                g = strong[gi]
                b = g(a)
                if b not in self.trans:
                    ub = compose(ua, g)
                    self.trans[b] = ub
                    self.trans_inv[b] = inverse(ub)
                    self.schreier[b] = (gi, a)
                    self.orbit_list.append(b)
        self.dirty = False


class _Chain:
    """Mutable deterministic Schreier-Sims chain supporting incremental adds."""

    def __init__(self, degree: int, base_prefix=()):
        self.degree = degree
        self.strong: list[Permutation] = []
        self.levels: list[_Level] = []
        for pt in base_prefix:
            if not 0 <= pt < degree:
                raise ValueError(f"base point {pt} out of range")
            if all(lv.point != pt for lv in self.levels):
                self.levels.append(_Level(pt))

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            if lv.dirty:
                lv.rebuild(self.strong, self.degree)
            n *= len(lv.orbit_list)
        return n

    def _install(self, g: Permutation) -> int:
        """Register a non-identity strong generator; returns its deepest level."""
        i = None
        for l, lv in enumerate(self.levels):
            if g(lv.point) != lv.point:
                i = l
                break
        if i is None:
            self.levels.append(_Level(g.min_moved()))
            i = len(self.levels) - 1
        gi = len(self.strong)
        self.strong.append(g)
        for l in range(i + 1):
            self.levels[l].gen_idxs.append(gi)
            self.levels[l].dirty = True
        return i

    def _sift(self, p: Permutation, start: int = 0) -> Permutation | None:
        """Reduce p through levels from `start`; None means p sifted to identity."""
        for l in range(start, len(self.levels)):
            lv = self.levels[l]
            if lv.dirty:
                lv.rebuild(self.strong, self.degree)
            delta = p(lv.point)
            if delta == lv.point:
                continue
            u_inv = lv.trans_inv.get(delta)
            if u_inv is None:
                return p
            p = compose(p, u_inv)
        return None if p.is_identity() else p

    def contains(self, p: Permutation) -> bool:
        return self._sift(p) is None

    def _close(self, from_level: int) -> None:
        """Re-establish the chain invariant from `from_level` upwards."""
        i = min(from_level, len(self.levels) - 1)
        while i >= 0:
            lv = self.levels[i]
            if lv.dirty:
                lv.rebuild(self.strong, self.degree)
            restart = False
            for gi in list(lv.gen_idxs):
                g = self.strong[gi]
                for a in lv.orbit_list:
                    b = g(a)
                    if lv.schreier.get(b) == (gi, a):
                        continue  # tree edge, Schreier generator is trivial
                    sg = compose(compose(lv.trans[a], g), lv.trans_inv[b])
                    if sg.is_identity():
                        continue
                    residue = self._sift(sg, i + 1)
                    if residue is not None:
                        k = self._install(residue)
                        i = k
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def add_generator(self, g: Permutation) -> bool:
        """Add g if not already in the group; returns True when the group grew."""
        if g.degree != self.degree:
            raise ValueError("degree mismatch")
        if g.is_identity() or self.contains(g):
            return False
        k = self._install(g)
        self._close(k)
        return True

    def elements_iter(self):
        """All elements, deterministically: transversal products, deepest first."""
        for lv in self.levels:
            if lv.dirty:
                lv.rebuild(self.strong, self.degree)
        elts = [Permutation.identity(self.degree)]
        for lv in reversed(self.levels):
            if len(lv.orbit_list) == 1:
                continue
            nxt = []
            for pt in sorted(lv.orbit_list):
                u = lv.trans[pt]
                if pt == lv.point:
                    nxt.extend(elts)
                else:
                    for h in elts:
                        nxt.append(compose(h, u))
            elts = nxt
        return elts


@dataclass(frozen=True, eq=False)
class Bsgs:
    """Base and strong generating set with per-level Schreier vectors.

    transversals[i] maps each point of the i-th fundamental orbit to
    (index into strong_generators, predecessor point); the base point
    itself maps to (-1, base point).
    """

    degree: int
    base: tuple[int, ...]
    strong_generators: tuple[Permutation, ...]
    transversals: tuple[dict[int, tuple[int, int]], ...]
    order: int
    _chain: _Chain

    def sift(self, p: Permutation) -> Permutation | None:
        """Residue of p against the chain; None when p is a member."""
        return self._chain._sift(p)

    def fundamental_orbits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(lv.orbit_list) for lv in self._chain.levels)

    def transversal_element(self, level: int, point: int) -> Permutation:
        """Reconstruct the transversal element carrying base[level] to point."""
        return self._chain.levels[level].trans[point]


def schreier_sims(G: PermGroup, base_prefix=()) -> Bsgs:
    """Deterministic Schreier-Sims: same input, same chain, every run."""
    chain = _Chain(G.degree, base_prefix)
    deepest = -1
    for g in G.generators:
        deepest = max(deepest, chain._install(g))
    chain._close(len(chain.levels) - 1)
    n = 1
    for lv in chain.levels:
        if lv.dirty:
            lv.rebuild(chain.strong, chain.degree)
        n *= len(lv.orbit_list)
    return Bsgs(
        degree=G.degree,
        base=tuple(chain.base),
        strong_generators=tuple(chain.strong),
        transversals=tuple(lv.schreier for lv in chain.levels),
        order=n,
        _chain=chain,
    )


def orbit(G: PermGroup, point: int) -> tuple[tuple[int, ...], dict[int, tuple[int, int]]]:
    """Orbit of a point (breadth-first discovery order) and its Schreier
    vector mapping each orbit point to (generator index, predecessor)."""
    if not 0 <= point < G.degree:
        raise ValueError(f"point {point} out of range for degree {G.degree}")
    orb = [point]
    vec = {point: (-1, point)}
    qi = 0
    while qi < len(orb):
        a = orb[qi]
        qi += 1
        for gi, g in enumerate(G.generators):
            b = g(a)
            if b not in vec:
                vec[b] = (gi, a)
                orb.append(b)
    return tuple(orb), vec


def order(G: PermGroup) -> int:
    return G.bsgs.order


def contains(G: PermGroup, p: Permutation) -> bool:
    if p.degree != G.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {G.degree}")
    return G.bsgs.sift(p) is None


def is_subgroup(H: PermGroup, G: PermGroup) -> bool:
    """True when every generator of H lies in G (same degree required)."""
    if H.degree != G.degree:
        raise ValueError("degree mismatch")
    return all(contains(G, h) for h in H.generators)


def is_transitive(G: PermGroup) -> bool:
    return len(orbit(G, 0)[0]) == G.degree


def point_stabilizer(G: PermGroup, point: int) -> PermGroup:
    """Stabilizer of a point, via a chain recomputed with that point forced
    to be the first base point."""
    if not 0 <= point < G.degree:
        raise ValueError(f"point {point} out of range for degree {G.degree}")
    b = schreier_sims(G, base_prefix=(point,))
    chain = b._chain
    if len(chain.levels) <= 1:
        gens: list[Permutation] = []
    else:
        gens = [chain.strong[gi] for gi in chain.levels[1].gen_idxs]
    label = f"Stab({point})" if G.label is None else f"{G.label}.stab({point})"
    return PermGroup(G.degree, gens, label=label)


def fixed_points(H: PermGroup) -> tuple[int, ...]:
    """Points fixed by every generator."""
    fixed = np.ones(H.degree, dtype=bool)
    ident = np.arange(H.degree)
    for g in H.generators:
        fixed &= g.images == ident
    return tuple(int(x) for x in np.flatnonzero(fixed))


def _canonical_coset_rep(chain: _Chain, g: Permutation) -> Permutation:
    """Lexicographically least element of the right coset H*g, where H is the
    group of `chain`.

    Requires the chain base to list, in increasing order, every point H
    moves; then the greedy choice per level (minimize the image of the base
    point over its fundamental orbit) yields the lex-least image array."""
    cur = g
    for lv in chain.levels:
        if lv.dirty:
            lv.rebuild(chain.strong, chain.degree)
        if len(lv.orbit_list) > 1:
            img = cur.images
            best = min(lv.orbit_list, key=lambda d: img[d])
            if best != lv.point:
                cur = compose(lv.trans[best], cur)
    return cur


def coset_action(
    G: PermGroup, H: PermGroup, cap: int = COSET_CAP
) -> tuple[PermGroup, tuple[Permutation, ...]]:
    """Action of G on the right cosets of H, with the coset transversal.

    Coset i corresponds to H*transversal[i]; coset 0 is H itself. Errors
    when H is not a subgroup of G or the index exceeds the cap.
    """
    if H.degree != G.degree:
        raise ValueError("degree mismatch between group and subgroup")
    if not is_subgroup(H, G):
        raise ValueError("H is not a subgroup of G")
    index = order(G) // order(H)
    if index > cap:
        raise CapExceeded("coset index", index, cap)
    ident = np.arange(G.degree)
    moved = np.zeros(G.degree, dtype=bool)
    for h in H.generators:
        moved |= h.images != ident
    prefix = tuple(int(x) for x in np.flatnonzero(moved))
    chain = schreier_sims(H, base_prefix=prefix)._chain
    r0 = _canonical_coset_rep(chain, Permutation.identity(G.degree))
    reps = [r0]
    lookup = {r0: 0}
    images = [[] for _ in G.generators]
    qi = 0
    while qi < len(reps):
        r = reps[qi]
        qi += 1
        for gi, s in enumerate(G.generators):
            rep = _canonical_coset_rep(chain, compose(r, s))
            j = lookup.get(rep)
            if j is None:
                j = len(reps)
                lookup[rep] = j
                reps.append(rep)
            images[gi].append(j)
    assert len(reps) == index, "coset enumeration disagrees with the index"
    induced = [
        Permutation(np.array(img, dtype=np.int64)) for img in images
    ]
    label = f"{G.label or 'G'} on {index} cosets"
    K = PermGroup(index, induced, label=label)
    return K, tuple(reps)


@dataclass(frozen=True)
class BlockSystem:
    """Partition of the points preserved by the group. Blocks are sorted by
    smallest point; block_of[x] is the index of the block containing x."""

    degree: int
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @property
    def is_trivial(self) -> bool:
        return self.num_blocks == 1 or self.num_blocks == self.degree


def minimal_block_system(G: PermGroup, pair: tuple[int, int]) -> BlockSystem:
    """Finest G-congruence whose blocks contain the given pair of points
    (union-find refinement). G must be transitive."""
    a, b = pair
    n = G.degree
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError("seed pair out of range")
    if a == b:
        raise ValueError("seed pair must be two distinct points")
    if not is_transitive(G):
        raise ValueError("minimal_block_system needs a transitive group")
    parent = list(range(n))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[ry] = rx
        for g in G.generators:
            queue.append((g(x), g(y)))
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    blocks = tuple(
        sorted((tuple(v) for v in classes.values()), key=lambda blk: blk[0])
    )
    sizes = {len(blk) for blk in blocks}
    assert len(sizes) == 1, "blocks of a transitive congruence must share a size"
    block_of = [0] * n
    for i, blk in enumerate(blocks):
        for x in blk:
            block_of[x] = i
    return BlockSystem(degree=n, blocks=blocks, block_of=tuple(block_of))


def is_primitive(G: PermGroup) -> bool:
    """Transitive with no proper non-trivial block system. Degree-1 and
    intransitive groups report False; the transitive degree-2 group is
    primitive."""
    if G.degree == 1:
        return False
    if not is_transitive(G):
        return False
    for x in range(1, G.degree):
        if minimal_block_system(G, (0, x)).num_blocks != 1:
            return False
    return True


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """[a, b] = a^-1 b^-1 a b under left-to-right composition."""
    return compose(compose(compose(inverse(a), inverse(b)), a), b)


def _normal_closure(G: PermGroup, seeds: list[Permutation], label: str) -> PermGroup:
    """Smallest normal subgroup of G containing the seeds."""
    chain = _Chain(G.degree)
    added: list[Permutation] = []
    queue: list[Permutation] = []
    for s in seeds:
        if chain.add_generator(s):
            added.append(s)
            queue.append(s)
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for g in G.generators:
            c = compose(compose(inverse(g), x), g)
            if chain.add_generator(c):
                added.append(c)
                queue.append(c)
    return PermGroup(G.degree, added, label=label)


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Commutator subgroup: normal closure of the generator commutators."""
    seeds = []
    for i, a in enumerate(G.generators):
        for b in G.generators[i + 1 :]:
            c = commutator(a, b)
            if not c.is_identity():
                seeds.append(c)
    label = f"[{G.label},{G.label}]" if G.label else "derived"
    return _normal_closure(G, seeds, label)


def last_derived_term(G: PermGroup) -> PermGroup:
    """Stable term of the derived series (trivial iff G is soluble)."""
    current = G
    current_order = order(current)
    while True:
        nxt = derived_subgroup(current)
        nxt_order = order(nxt)
        if nxt_order == current_order:
            return nxt
        current = nxt
        current_order = nxt_order


def elements(G: PermGroup, cap: int = ELEMENTS_CAP) -> list[Permutation]:
    """All elements, deterministically enumerated from the stabilizer chain.
    Errors when |G| exceeds the cap (the error carries the actual order)."""
    n = order(G)
    if n > cap:
        raise CapExceeded("group order", n, cap)
    return G.bsgs._chain.elements_iter()


def normalizer_small(G: PermGroup, H: PermGroup, cap: int = ELEMENTS_CAP) -> PermGroup:
    """Normalizer of H in G by scanning all elements of G (cap-gated)."""
    if H.degree != G.degree:
        raise ValueError("degree mismatch")
    if not is_subgroup(H, G):
        raise ValueError("H is not a subgroup of G")
    hb = H.bsgs
    gens: list[Permutation] = []
    chain = _Chain(G.degree)
    for g in elements(G, cap):
        conj_ok = all(
            hb.sift(compose(compose(inverse(g), x), g)) is None for x in H.generators
        )
        if conj_ok and chain.add_generator(g):
            gens.append(g)
    label = f"N({H.label})" if H.label else "normalizer"
    return PermGroup(G.degree, gens or [Permutation.identity(G.degree)], label=label)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def sylow_subgroup_small(G: PermGroup, p: int, cap: int = ELEMENTS_CAP) -> PermGroup:
    """A Sylow p-subgroup, grown greedily: start from a p-element of maximal
    order, then repeatedly adjoin p-elements of the current normalizer until
    the full p-part of |G| is reached. Cap-gated by element enumeration."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = order(G)
    p_part = 1
    m = n
    while m % p == 0:
        p_part *= p
        m //= p
    label = f"Sylow_{p}({G.label})" if G.label else f"Sylow_{p}"
    if p_part == 1:
        return PermGroup(G.degree, [Permutation.identity(G.degree)], label=label)
    elems = elements(G, cap)
    best = None
    best_order = 0
    for g in elems:
        o = g.order()
        if o > best_order and o == p ** _p_valuation(o, p) and o % p == 0:
            best, best_order = g, o
    assert best is not None, "Cauchy guarantees a p-element"
    current = PermGroup(G.degree, [best], label=label)
    while order(current) < p_part:
        N = normalizer_small(G, current, cap)
        grown = False
        for g in elements(N, cap):
            o = g.order()
            if o % p != 0 or o != p ** _p_valuation(o, p):
                continue
            if contains(current, g):
                continue
            current = PermGroup(
                G.degree, list(current.generators) + [g], label=label
            )
            grown = True
            break
        assert grown, "normalizer of a non-Sylow p-subgroup must grow it"
    return current


def _p_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        v += 1
        n //= p
    return v
