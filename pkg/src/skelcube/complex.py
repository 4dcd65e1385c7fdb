"""Cubical complexes: downward-closed sets of faces of I^n."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import StructuralError
from .words import (
    STAR,
    canon_key,
    facets,
    is_subword,
    proper_subwords,
    sort_words,
    subwords,
    validate_word,
    word_dim,
    word_vertices,
)

__all__ = [
    "CubicalComplex",
    "closure",
    "full_cube",
    "cube_boundary",
    "skeleton",
    "delete",
    "face_subcomplex",
    "face_boundary",
    "is_face_like",
    "product_complex",
    "components",
    "ambient_faces",
]


@dataclass(frozen=True)
class CubicalComplex:
    """Immutable set of face words of I^ambient_dim.

    Operations in this module keep the face set downward closed; the
    constructor only checks word shape, closure is asserted separately
    by validate().
    """

    ambient_dim: int
    faces: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise StructuralError("ambient_dim must be nonnegative")
        if not isinstance(self.faces, frozenset):
            object.__setattr__(self, "faces", frozenset(self.faces))
        for w in self.faces:
            validate_word(w, self.ambient_dim)

    @property
    def dim(self) -> int:
        """Top face dimension, -1 for the empty complex."""
        return max((word_dim(w) for w in self.faces), default=-1)

    def __contains__(self, w: str) -> bool:
        return w in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for w in self.faces:
            counts[word_dim(w)] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** j * n for j, n in enumerate(self.f_vector()))

    def vertices(self) -> frozenset[str]:
        return frozenset(w for w in self.faces if word_dim(w) == 0)

    def sorted_faces(self) -> list[str]:
        return sort_words(self.faces)

    def maximal_faces(self) -> list[str]:
        """Faces not properly contained in another face, canonical order."""
        out = []
        for w in self.faces:
            for i, letter in enumerate(w):
                if letter != STAR and w[:i] + STAR + w[i + 1 :] in self.faces:
                    break
            else:
                out.append(w)
        return sort_words(out)

    def is_subcomplex_of(self, other: "CubicalComplex") -> bool:
        return self.ambient_dim == other.ambient_dim and self.faces <= other.faces

    def validate(self) -> None:
        """Assert downward closure; word shape was checked on construction."""
        for w in self.faces:
            for f in facets(w):
                if f not in self.faces:
                    raise StructuralError(f"complex is not closed: {w!r} present, facet {f!r} missing")


def closure(ambient_dim: int, generators) -> CubicalComplex:
    """Downward closure of a set of face words inside I^ambient_dim."""
    out: set[str] = set()
    for g in generators:
        validate_word(g, ambient_dim)
        if g not in out:
            out.update(subwords(g))
    return CubicalComplex(ambient_dim, frozenset(out))


def full_cube(n: int) -> CubicalComplex:
    """All faces of I^n."""
    if n < 0:
        raise StructuralError("cube dimension must be nonnegative")
    return closure(n, [STAR * n])


def cube_boundary(n: int) -> CubicalComplex:
    """All faces of I^n except the top one."""
    if n < 1:
        raise StructuralError("boundary of I^n needs n >= 1")
    top = STAR * n
    return CubicalComplex(n, frozenset(s for s in subwords(top) if s != top))


def skeleton(c: CubicalComplex, k: int) -> CubicalComplex:
    """Faces of dimension at most k; k < 0 yields the empty complex."""
    if k < 0:
        return CubicalComplex(c.ambient_dim, frozenset())
    return CubicalComplex(c.ambient_dim, frozenset(w for w in c.faces if word_dim(w) <= k))


def _require_subcomplex(c: CubicalComplex, g: CubicalComplex, role: str) -> None:
    if g.ambient_dim != c.ambient_dim:
        raise StructuralError(f"{role} lives in I^{g.ambient_dim}, expected I^{c.ambient_dim}")
    if not g.faces <= c.faces:
        raise StructuralError(f"{role} is not a subcomplex: {len(g.faces - c.faces)} faces missing from the host")


def delete(c: CubicalComplex, g: CubicalComplex) -> CubicalComplex:
    """Faces of c containing no vertex of g."""
    _require_subcomplex(c, g, "deletion argument")
    gverts = g.vertices()
    keep = frozenset(w for w in c.faces if not any(v in gverts for v in word_vertices(w)))
    return CubicalComplex(c.ambient_dim, keep)


def face_subcomplex(c: CubicalComplex, f: str) -> CubicalComplex:
    """The subcomplex of all subfaces of a single face of c."""
    if f not in c.faces:
        raise StructuralError(f"face {f!r} is not in the complex")
    return CubicalComplex(c.ambient_dim, frozenset(subwords(f)))


def face_boundary(c: CubicalComplex, f: str) -> CubicalComplex:
    """Proper subfaces of a face of c."""
    if f not in c.faces:
        raise StructuralError(f"face {f!r} is not in the complex")
    return CubicalComplex(c.ambient_dim, frozenset(proper_subwords(f)))


def is_face_like(c: CubicalComplex, g: CubicalComplex) -> bool:
    """Whether every face of c meets the vertices of g in nothing or in a face of g.

    The test is purely combinatorial: intersect each face's vertex set
    with V(g) and look the result up among vertex sets of faces of g.
    """
    _require_subcomplex(c, g, "face-likeness argument")
    gverts = g.vertices()
    gface_vertex_sets = {frozenset(word_vertices(w)) for w in g.faces}
    for w in c.faces:
        hit = frozenset(v for v in word_vertices(w) if v in gverts)
        if hit and hit not in gface_vertex_sets:
            return False
    return True


def product_complex(a: CubicalComplex, b: CubicalComplex) -> CubicalComplex:
    """Concatenate face words; realizes the product in I^(m+n)."""
    faces = frozenset(wa + wb for wa in a.faces for wb in b.faces)
    return CubicalComplex(a.ambient_dim + b.ambient_dim, faces)


def components(c: CubicalComplex) -> list[CubicalComplex]:
    """Connected components, ordered by their smallest vertex."""
    adj: dict[str, set[str]] = {v: set() for v in c.vertices()}
    for w in c.faces:
        if word_dim(w) == 1:
            u, v = word_vertices(w)
            adj[u].add(v)
            adj[v].add(u)
    comp_of: dict[str, int] = {}
    reps: list[str] = []
    for v in sort_words(adj):
        if v in comp_of:
            continue
        idx = len(reps)
        reps.append(v)
        stack = [v]
        comp_of[v] = idx
        while stack:
            u = stack.pop()
            for nb in adj[u]:
                if nb not in comp_of:
                    comp_of[nb] = idx
                    stack.append(nb)
    buckets: list[set[str]] = [set() for _ in reps]
    for w in c.faces:
        buckets[comp_of[next(word_vertices(w))]].add(w)
    return [CubicalComplex(c.ambient_dim, frozenset(b)) for b in buckets]


def ambient_faces(n: int, k: int):
    """All k-faces of I^n (unsorted; callers sort when order matters)."""
    if not 0 <= k <= n:
        return
    fixed_positions = list(range(n))
    for stars in combinations(range(n), k):
        star_set = set(stars)
        free = [i for i in fixed_positions if i not in star_set]
        for bits in product("01", repeat=n - k):
            w = [STAR] * n
            for i, b in zip(free, bits):
                w[i] = b
            yield "".join(w)
