"""Independent oracles and shared inputs for the test suite.

Everything here recomputes results by brute force or by a different
algorithm than the library, so agreement is meaningful.
"""

from __future__ import annotations

import math
from itertools import combinations, product

import skelcube as sk


def oracle_is_subface(p: str, q: str) -> bool:
    """Subface test by expanding both faces to their vertex boxes."""
    vp = set(vertices_of(p))
    vq = set(vertices_of(q))
    return vp <= vq


def vertices_of(w: str):
    options = [("01" if ch == "*" else ch) for ch in w]
    for combo in product(*options):
        yield "".join(combo)


def all_words(n: int):
    for combo in product("01*", repeat=n):
        yield "".join(combo)


def proper_subfaces_of(w: str):
    for cand in all_words(len(w)):
        if cand != w and oracle_is_subface(cand, w):
            yield cand


def gf2_rank_dense(rows) -> int:
    """Dense row-reduction rank over GF(2), no bit packing."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
    return rank


def betti_oracle_gf2(c: sk.CubicalComplex) -> tuple[int, ...]:
    """GF(2) Betti numbers from dense incidence matrices built by brute force."""
    levels: dict[int, list[str]] = {}
    for w in c.faces:
        levels.setdefault(w.count("*"), []).append(w)
    top = max(levels, default=-1)
    ranks: dict[int, int] = {}
    for j in range(1, top + 1):
        rows_faces = sorted(levels.get(j - 1, []))
        cols_faces = sorted(levels.get(j, []))
        mat = [
            [1 if oracle_is_subface(rw, cw) else 0 for cw in cols_faces]
            for rw in rows_faces
        ]
        ranks[j] = gf2_rank_dense(mat)
    return tuple(
        len(levels.get(j, [])) - ranks.get(j, 0) - ranks.get(j + 1, 0) for j in range(top + 1)
    )


def _det(mat) -> int:
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    total = 0
    for j, v in enumerate(mat[0]):
        if v:
            minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
            total += (-1) ** j * v * _det(minor)
    return total


def snf_oracle(mat) -> tuple[int, ...]:
    """Invariant factors as successive quotients of gcds of k-minors."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    prev = 1
    factors = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rsel in combinations(range(rows), k):
            for csel in combinations(range(cols), k):
                g = math.gcd(g, _det([[mat[i][j] for j in csel] for i in rsel]))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return tuple(factors)


def candidate_oracle(skel: sk.CubicalComplex, k: int) -> list[str]:
    """Scan every ambient word and test all proper subfaces, not just facets."""
    n = skel.ambient_dim
    out = []
    for w in all_words(n):
        if w.count("*") != k + 1:
            continue
        if all(s in skel.faces for s in proper_subfaces_of(w)):
            out.append(w)
    return sorted(out)


def is_full_subcomplex(c: sk.CubicalComplex, g: sk.CubicalComplex) -> bool:
    """Whether g contains every face of c spanned by vertices of g."""
    gverts = {w for w in g.faces if "*" not in w}
    for w in c.faces:
        if set(vertices_of(w)) <= gverts and w not in g.faces:
            return False
    return True


def random_subcomplex(rng, base: sk.CubicalComplex, max_generators: int = 6) -> sk.CubicalComplex:
    faces = sorted(base.faces)
    count = rng.randint(0, min(max_generators, len(faces)))
    gens = rng.sample(faces, count)
    return sk.closure(base.ambient_dim, gens)


# 6-vertex triangulation of the projective plane (antipodal icosahedron),
# used through cubical barycentric subdivision as the torsion specimen
RP2_TRIANGLES = [
    frozenset({0, 1, 2}),
    frozenset({0, 2, 3}),
    frozenset({0, 3, 4}),
    frozenset({0, 4, 5}),
    frozenset({0, 1, 5}),
    frozenset({1, 2, 4}),
    frozenset({2, 3, 5}),
    frozenset({1, 3, 4}),
    frozenset({2, 4, 5}),
    frozenset({1, 3, 5}),
]


def projective_plane() -> sk.CubicalComplex:
    return sk.cubical_barycentric_subdivision(RP2_TRIANGLES)
