"""Reduced simplicial homology over the rationals, computed with exact integers.

Faces are handled internally as bitmasks over a fixed vertex order; the
orientation of a face is the increasing order of its vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import CapExceeded
from .graph import Graph, natural_key

FACE_CAP = 1 << 20


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex given by its facets.

    ``facets == frozenset()`` is the void complex (no faces at all);
    ``facets == {frozenset()}`` is the complex whose only face is the empty set.
    """

    vertices: tuple[str, ...]
    facets: frozenset

    def __post_init__(self):
        fs = list(self.facets)
        for a in fs:
            if not a <= set(self.vertices):
                raise ValueError(f"facet {sorted(a)} uses unknown vertices")
            if any(a < b for b in fs):
                raise ValueError(f"facet {sorted(a)} is not maximal")

    @classmethod
    def from_faces(cls, vertices: Sequence[str], faces: Iterable[Iterable[str]]) -> "SimplicialComplex":
        fs = {frozenset(f) for f in faces}
        return cls(tuple(vertices), frozenset(f for f in fs if not any(f < o for o in fs)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def face_masks(self, cap: int = FACE_CAP) -> list[int]:
        index = {v: i for i, v in enumerate(self.vertices)}
        seen = set()
        for facet in self.facets:
            bits = [1 << index[v] for v in facet]
            for r in range(len(bits) + 1):
                for combo in combinations(bits, r):
                    seen.add(sum(combo))
                    if len(seen) > cap:
                        raise CapExceeded(f"complex has more than {cap} faces")
        return sorted(seen, key=lambda m: (bin(m).count("1"), m))

    def faces(self) -> list[frozenset]:
        return [frozenset(self.vertices[i] for i in _bits(m)) for m in self.face_masks()]

    def f_vector(self) -> list[int]:
        """Face counts by dimension, starting at dimension -1."""
        return [len(fs) for fs in _by_dim(self.face_masks())]

    def to_json(self) -> dict:
        facets = sorted((sorted(f, key=natural_key) for f in self.facets),
                        key=lambda f: (len(f), [natural_key(v) for v in f]))
        return {"vertices": list(self.vertices), "facets": facets}


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _by_dim(masks: Iterable[int]) -> list[list[int]]:
    """Group face masks by dimension; slot 0 holds dimension -1."""
    groups: list[list[int]] = []
    for m in masks:
        d = bin(m).count("1")
        while len(groups) <= d:
            groups.append([])
        groups[d].append(m)
    for g in groups:
        g.sort()
    return groups


# -- complexes from graphs and ideals -----------------------------------------

def stanley_reisner_faces(n: int, gen_masks: Sequence[int], within: int | None = None,
                          cap: int = FACE_CAP) -> list[int]:
    """Masks of all subsets of ``within`` that contain no generator mask."""
    if within is None:
        within = (1 << n) - 1
    by_vertex = [[g for g in gen_masks if g >> v & 1] for v in range(n)]
    verts = [v for v in range(n) if within >> v & 1]
    faces = [0]
    if any(g == 0 for g in gen_masks):
        return []  # the unit ideal: void complex

    def grow(face, start):
        for idx in range(start, len(verts)):
            v = verts[idx]
            new = face | (1 << v)
            if any(g & ~new == 0 for g in by_vertex[v]):
                continue
            faces.append(new)
            if len(faces) > cap:
                raise CapExceeded(f"complex has more than {cap} faces")
            grow(new, idx + 1)

    grow(0, 0)
    return faces


def _maximal(masks: list[int]) -> list[int]:
    ms = set(masks)
    return [m for m in ms if not any(m != o and m & o == m for o in ms)]


def _complex_from_masks(vertices: Sequence[str], masks: list[int]) -> SimplicialComplex:
    facets = frozenset(frozenset(vertices[i] for i in _bits(m)) for m in _maximal(masks))
    return SimplicialComplex(tuple(vertices), facets)


def _edge_masks(g: Graph, vertices: Sequence[str]) -> list[int]:
    index = {v: i for i, v in enumerate(vertices)}
    return [sum(1 << index[v] for v in e) for e in g.edges if all(v in index for v in e)]


def independence_complex(g: Graph) -> SimplicialComplex:
    n = g.n
    return _complex_from_masks(g.vertices, stanley_reisner_faces(n, _edge_masks(g, g.vertices)))


def induced_subcomplex(g: Graph, w: Iterable[str]) -> SimplicialComplex:
    return independence_complex(g.induced(w))


def stanley_reisner_complex(ideal, vertices: Sequence[str] | None = None) -> SimplicialComplex:
    """Faces are the vertex subsets containing no generator's support."""
    if vertices is None:
        vertices = ideal.variables()
    index = {v: i for i, v in enumerate(vertices)}
    masks = [sum(1 << index[v] for v in m.support) for m in ideal.generators]
    return _complex_from_masks(vertices, stanley_reisner_faces(len(vertices), masks))


# -- exact ranks ---------------------------------------------------------------

def rank_echelon(columns: Sequence[dict]) -> int:
    """Rank of a sparse integer matrix (given column-wise) by integer echelon form.

    Row operations are integer combinations a*v - b*p followed by removal of
    the content, so no fractions ever appear.
    """
    pivots: dict[int, dict] = {}
    for col in columns:
        v = {k: x for k, x in col.items() if x}
        while v:
            p = min(v)
            row = pivots.get(p)
            if row is None:
                pivots[p] = v
                break
            a, b = row[p], v[p]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * x for k, x in v.items()}
            for k, x in row.items():
                new[k] = new.get(k, 0) - b * x
            v = {k: x for k, x in new.items() if x}
            if v:
                c = 0
                for x in v.values():
                    c = gcd(c, x)
                if c > 1:
                    v = {k: x // c for k, x in v.items()}
    return len(pivots)


def rank_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by Bareiss fraction-free elimination."""
    a = [list(row) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        pc = prow[c]
        for i in range(r + 1, m):
            row = a[i]
            ic = row[c]
            for j in range(c + 1, n):
                row[j] = (pc * row[j] - ic * prow[j]) // prev
            row[c] = 0
        prev = pc
        r += 1
    return r


def boundary_columns(faces_by_dim: list[list[int]], d: int) -> list[dict]:
    """Sparse columns of the boundary map from d-faces to (d-1)-faces."""
    rows = faces_by_dim[d] if d < len(faces_by_dim) else []
    cols = faces_by_dim[d + 1] if d + 1 < len(faces_by_dim) else []
    index = {f: i for i, f in enumerate(rows)}
    out = []
    for f in cols:
        col = {}
        for t, b in enumerate(_bits(f)):
            col[index[f & ~(1 << b)]] = -1 if t % 2 else 1
        out.append(col)
    return out


def boundary_matrix(faces_by_dim: list[list[int]], d: int) -> list[list[int]]:
    cols = boundary_columns(faces_by_dim, d)
    nrows = len(faces_by_dim[d]) if d < len(faces_by_dim) else 0
    return [[col.get(i, 0) for col in cols] for i in range(nrows)]


def _rank(faces_by_dim, d, method):
    if method == "echelon":
        return rank_echelon(boundary_columns(faces_by_dim, d))
    if method == "bareiss":
        return rank_bareiss(boundary_matrix(faces_by_dim, d))
    raise ValueError(f"unknown rank method {method!r}")


def homology_from_faces(face_masks: Iterable[int], method: str = "echelon") -> list[int]:
    """Reduced Betti numbers indexed from dimension -1 (slot 0)."""
    groups = _by_dim(face_masks)
    if not groups:
        return [0]
    top = len(groups)  # groups[s] holds faces of dimension s-1
    # ranks[s]: rank of the map from slot s to slot s-1
    ranks = [0] * (top + 1)
    for s in range(1, top):
        if groups[s] and groups[s - 1]:
            if s == 1:
                ranks[s] = 1  # every vertex maps onto the empty face
            else:
                ranks[s] = _rank(groups, s - 1, method)
    return [len(groups[s]) - ranks[s] - ranks[s + 1] for s in range(top)]


def reduced_homology_dims(c: SimplicialComplex, method: str = "echelon") -> list[int]:
    return homology_from_faces(c.face_masks(), method)


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    """Sum of (-1)^d f_d over dimensions d >= -1."""
    return sum((-1) ** (s - 1) * f for s, f in enumerate(c.f_vector()))
