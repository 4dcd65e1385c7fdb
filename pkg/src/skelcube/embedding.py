"""Embedding graphs into hypercube graphs and lifting complexes along them.

A labelling of the edges by coordinates {1..n} certifies an embedding
when every cycle uses each label an even number of times and every path
uses some label an odd number of times.  Both conditions reduce to XOR
codes along a spanning tree: fundamental cycles must close with even
parity, and vertex codes must be pairwise distinct.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complex import CubicalComplex
from .errors import ContractError, ContradictionError, StructuralError
from .words import STAR, ZERO, ONE, sort_words, word_dim, word_vertices

__all__ = [
    "SimpleGraph",
    "HypercubeEmbedding",
    "graph_of",
    "bipartition_or_odd_cycle",
    "verify_labelling",
    "find_graph_embedding",
    "labelling_from_embedding",
    "lift_to_complex_embedding",
]

def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    num_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.num_vertices < 0:
            raise StructuralError("vertex count must be nonnegative")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            u, v = e
            if u == v:
                raise StructuralError(f"loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise StructuralError(f"edge {e} out of range")
            if u > v:
                raise StructuralError(f"edge {e} not normalized (expected min first)")

    @classmethod
    def from_edges(cls, num_vertices: int, pairs) -> "SimpleGraph":
        return cls(num_vertices, frozenset(_normalize_edge(u, v) for u, v in pairs))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        if self.num_vertices <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.num_vertices


@dataclass(frozen=True)
class HypercubeEmbedding:
    """Injective map into {0,1}^n; codes[i] is the image of vertex i as a bit mask."""

    n: int
    codes: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise StructuralError("hypercube dimension must be nonnegative")
        for c in self.codes:
            if not 0 <= c < (1 << self.n):
                raise StructuralError(f"code {c} outside {{0,1}}^{self.n}")
        if len(set(self.codes)) != len(self.codes):
            raise StructuralError("embedding is not injective")

    def is_valid_for(self, g: SimpleGraph) -> bool:
        if len(self.codes) != g.num_vertices:
            return False
        return all((self.codes[u] ^ self.codes[v]).bit_count() == 1 for u, v in g.edges)


def graph_of(c: CubicalComplex) -> SimpleGraph:
    """The 1-skeleton as a graph; vertices are numbered in canonical word order."""
    verts = sort_words(c.vertices())
    index = {v: i for i, v in enumerate(verts)}
    edges = set()
    for w in c.faces:
        if word_dim(w) == 1:
            a, b = word_vertices(w)
            edges.add(_normalize_edge(index[a], index[b]))
    return SimpleGraph(len(verts), frozenset(edges))


def bipartition_or_odd_cycle(g: SimpleGraph):
    """Return (colors, None) for bipartite g, else (None, odd cycle vertex list)."""
    adj = g.adjacency()
    color = [-1] * g.num_vertices
    parent = [-1] * g.num_vertices
    for root in range(g.num_vertices):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return None, _close_cycle(u, v, parent)
    return color, None


def _close_cycle(u: int, v: int, parent: list[int]) -> list[int]:
    up, vp = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x] >= 0:
        x = parent[x]
        seen[x] = len(up)
        up.append(x)
    x = v
    while x not in seen:
        x = parent[x]
        vp.append(x)
    # up to the meeting point, then back down the other branch
    cycle = up[: seen[x] + 1] + vp[-2::-1]
    return cycle


def verify_labelling(g: SimpleGraph, labels: dict[tuple[int, int], int]) -> bool:
    """Check the two parity conditions for an edge labelling.

    Labels are positive coordinate indices.  XOR codes are propagated
    from vertex 0 along a BFS tree; every non-tree edge must close its
    fundamental cycle evenly, and codes must be pairwise distinct.
    Fundamental cycles span the cycle space and path parities equal code
    differences, so this decides both conditions exactly.
    """
    if not g.is_connected():
        raise StructuralError("labelling verification needs a connected graph")
    for e in g.edges:
        if e not in labels:
            raise StructuralError(f"edge {e} has no label")
        if labels[e] < 1:
            raise StructuralError(f"edge {e} has non-positive label {labels[e]}")
    if g.num_vertices == 0:
        return True
    adj = g.adjacency()
    code = [-1] * g.num_vertices
    code[0] = 0
    tree = set()
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if code[v] < 0:
                code[v] = code[u] ^ (1 << (labels[_normalize_edge(u, v)] - 1))
                tree.add(_normalize_edge(u, v))
                queue.append(v)
    for e in g.edges:
        if e not in tree:
            u, v = e
            if code[u] ^ code[v] != 1 << (labels[e] - 1):
                return False
    return len(set(code)) == g.num_vertices


def find_graph_embedding(g: SimpleGraph, n_max: int) -> HypercubeEmbedding | None:
    """Search for an embedding into some I^n with n <= n_max.

    Backtracking assigns vertices in BFS order.  Symmetry is broken by
    sending the first vertex to the all-zeros code and introducing fresh
    coordinates in increasing order, which loses no embeddings because
    cube symmetries can always relabel an embedding into this shape.
    None is therefore a certificate for every n up to n_max, and for all
    n at once when the graph is not bipartite.
    """
    if n_max < 0:
        raise ContractError(f"n_max >= 0 required, got {n_max}")
    if g.num_vertices == 0:
        return HypercubeEmbedding(0, ())
    colors, _odd = bipartition_or_odd_cycle(g)
    if colors is None:
        return None
    adj = g.adjacency()
    if max((len(a) for a in adj), default=0) > n_max:
        return None

    # BFS forest order; roots of later components float freely
    order: list[int] = []
    seen = [False] * g.num_vertices
    for root in range(g.num_vertices):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)

    pos = {v: i for i, v in enumerate(order)}
    code = [-1] * g.num_vertices
    used_codes: set[int] = set()

    def place(i: int, used_coords: int) -> int | None:
        if i == len(order):
            return used_coords
        v = order[i]
        earlier = [u for u in adj[v] if pos[u] < i]
        if not earlier:
            candidates = [0] if i == 0 else [c for c in range(1 << n_max) if c not in used_codes]
        else:
            base = code[earlier[0]]
            width = min(used_coords + 1, n_max)
            candidates = [base ^ (1 << b) for b in range(width)]
        for cand in candidates:
            if cand in used_codes:
                continue
            if any((cand ^ code[u]).bit_count() != 1 for u in earlier):
                continue
            code[v] = cand
            used_codes.add(cand)
            grown = max(used_coords, cand.bit_length())
            res = place(i + 1, grown)
            if res is not None:
                return res
            used_codes.discard(cand)
            code[v] = -1
        return None

    final = place(0, 0)
    if final is None:
        return None
    return HypercubeEmbedding(final, tuple(code))


def labelling_from_embedding(emb: HypercubeEmbedding, g: SimpleGraph) -> dict[tuple[int, int], int]:
    """Label every edge with the coordinate its endpoints differ in (1-based)."""
    if len(emb.codes) != g.num_vertices:
        raise ContradictionError("embedding and graph disagree on the vertex count")
    out: dict[tuple[int, int], int] = {}
    for e in g.edges:
        u, v = e
        x = emb.codes[u] ^ emb.codes[v]
        if x.bit_count() != 1:
            raise ContradictionError(f"edge {e} maps to codes differing in {x.bit_count()} coordinates")
        out[e] = x.bit_length()
    return out


def lift_to_complex_embedding(c: CubicalComplex, emb: HypercubeEmbedding) -> CubicalComplex:
    """Transport a complex along a graph embedding of its 1-skeleton.

    Vertex i of the graph is the i-th vertex of c in canonical order.
    Each face must map onto the full vertex set of an ambient face of
    I^n; any failure raises, since for complexes sitting in a cube the
    image of a cube graph always spans a face.
    """
    verts = sort_words(c.vertices())
    if len(verts) != len(emb.codes):
        raise ContradictionError("embedding does not cover the vertex set of the complex")
    if not emb.is_valid_for(graph_of(c)):
        raise ContradictionError("not a graph embedding of the 1-skeleton")
    code_of = {v: emb.codes[i] for i, v in enumerate(verts)}
    n = emb.n
    out = set()
    for w in c.faces:
        codes = [code_of[v] for v in word_vertices(w)]
        lo = hi = codes[0]
        for x in codes[1:]:
            lo &= x
            hi |= x
        varying = hi & ~lo
        if varying.bit_count() != word_dim(w) or len(set(codes)) != 1 << word_dim(w):
            raise ContradictionError(f"image of face {w!r} does not span a face")
        letters = []
        for i in range(n):
            if varying >> i & 1:
                letters.append(STAR)
            else:
                letters.append(ONE if lo >> i & 1 else ZERO)
        out.add("".join(letters))
    return CubicalComplex(n, frozenset(out))
