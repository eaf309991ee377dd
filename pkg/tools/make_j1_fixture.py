"""Regenerate the bundled 266-point J1 fixture from first principles.

The smallest Janko group J1 (order 175560) has a classical construction as
a group of 7x7 matrices over GF(11): Y is the basic circulant permutation
matrix and Z is the standard order-5 companion matrix from the original
matrix realization of the group. Acting on projective 7-space gives a
faithful permutation representation on an orbit of size 1540. Inside it,
the word pair (Y Z Z, Z Y Y Z Y Y) generates a subgroup of order 660
isomorphic to PSL(2,11) (found by a screened search over short words);
the coset action on that subgroup is the classical primitive action of J1
on 266 points, with point stabilizer PSL(2,11).

Every property the package relies on is re-verified here before the file
is written: group order, stabilizer order, transitivity, primitivity, and
the subdegrees (1, 11, 12, 110, 132).

Usage: python3 tools/make_j1_fixture.py [OUT.json]
"""
from __future__ import annotations

import sys
import time
from pathlib import Path

import numpy as np

from subdeg.analysis import subdegrees
from subdeg.corpus import write_group
from subdeg.groups import (
    PermGroup,
    coset_action,
    fixed_points,
    is_primitive,
    order,
    point_stabilizer,
)
from subdeg.perm import Permutation, compose

P = 11
DIM = 7
SEED_VECTOR = (1, 0, 0, 2, 0, 2, 9)  # seed of a projective orbit of size 1540

Y = np.zeros((DIM, DIM), dtype=np.int64)
for i in range(DIM):
    Y[i][(i + 1) % DIM] = 1

Z = np.array(
    [
        [-3, 2, -1, -1, -3, -1, -3],
        [-2, 1, 1, 3, 1, 3, 3],
        [-1, -1, -3, -1, -3, -3, 2],
        [-1, -3, -1, -3, -3, 2, -1],
        [-3, -1, -3, -3, 2, -1, -1],
        [1, 3, 3, -2, 1, 1, 3],
        [3, 3, -2, 1, 1, 3, 1],
    ],
    dtype=np.int64,
) % P


def canonical(v: np.ndarray) -> tuple:
    """Projective normal form: scale so the first non-zero entry is 1."""
    v = v % P
    for x in v:
        if x:
            return tuple((v * pow(int(x), P - 2, P)) % P)
    raise ValueError("zero vector")


def projective_orbit(seed: tuple, mats) -> list[tuple]:
    pts = [seed]
    index = {seed: 0}
    qi = 0
    while qi < len(pts):
        v = np.array(pts[qi], dtype=np.int64)
        qi += 1
        for m in mats:
            w = canonical(v @ m)
            if w not in index:
                index[w] = len(pts)
                pts.append(w)
    return pts


def matrix_perm(points: list[tuple], m: np.ndarray) -> Permutation:
    index = {pt: i for i, pt in enumerate(points)}
    images = np.empty(len(points), dtype=np.int64)
    for i, pt in enumerate(points):
        images[i] = index[canonical(np.array(pt, dtype=np.int64) @ m)]
    return Permutation(images)


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "subdeg" / "fixtures" / "j1_266.json"
    )
    t0 = time.time()
    points = projective_orbit(canonical(np.array(SEED_VECTOR)), [Y, Z])
    assert len(points) == 1540, f"orbit size {len(points)}, expected 1540"
    pY = matrix_perm(points, Y)
    pZ = matrix_perm(points, Z)
    G = PermGroup(1540, [pY, pZ], label="J1_1540")
    n = order(G)
    assert n == 175560, f"group order {n}, expected 175560"

    u = compose(pY, compose(pZ, pZ))  # Y Z Z
    v = compose(pZ, compose(pY, compose(pY, compose(pZ, compose(pY, pY)))))  # Z Y Y Z Y Y
    H = PermGroup(1540, [u, v], label="psl2(11)-in-J1")
    assert order(H) == 660, f"subgroup order {order(H)}, expected 660"

    action, _reps = coset_action(G, H)
    assert action.degree == 266
    act = PermGroup(action.degree, action.generators, label="J1_266")
    assert order(act) == 175560
    assert is_primitive(act)
    stab = point_stabilizer(act, 0)
    assert order(stab) == 660
    assert fixed_points(stab) == (0,)
    prof = subdegrees(act)
    assert prof.subdegrees == (1, 11, 12, 110, 132), prof.subdegrees

    out.parent.mkdir(parents=True, exist_ok=True)
    # image lists are bulkier than cycle strings but trivially diffable
    payload_gens = [[int(x) + 1 for x in g.images] for g in act.generators]
    import json

    payload = {
        "name": "J1_266",
        "degree": 266,
        "generators": payload_gens,
        "metadata": {
            "source": "tools/make_j1_fixture.py: coset action of the 1540-point projective representation of J1 over GF(11) on a PSL(2,11) subgroup",
            "expected_order": "175560",
        },
    }
    out.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {out} in {time.time() - t0:.1f}s (subdegrees {prof.subdegrees})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
