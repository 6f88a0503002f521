"""Simple graphs, induced chordless cycles and cycle-relative edge partitions."""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ChordError,
    CycleTooShortError,
    DuplicateEdgeWarning,
    GraphParseError,
    LoopError,
    NotACycleError,
    UnknownVertexError,
)

Edge = frozenset  # frozenset of exactly two vertex names

_DIGITS = re.compile(r"(\d+)")


def natural_key(name: str) -> tuple:
    """Sort key that orders ``u2`` before ``u10``."""
    parts = _DIGITS.split(name)
    return tuple((0, int(p), p) if p.isdigit() else (1, 0, p) for p in parts if p != "")


def edge_key(e: Edge) -> tuple:
    return tuple(sorted((natural_key(v) for v in e)))


def edge_str(e: Edge) -> str:
    return "".join(sorted(e, key=natural_key))


def _edge(a: str, b: str) -> Edge:
    if a == b:
        raise LoopError(f"loop edge at vertex {a!r}")
    return frozenset((a, b))


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphParseError("duplicate vertex names")
        names = set(self.vertices)
        for e in self.edges:
            if len(e) != 2:
                raise LoopError(f"loop edge {sorted(e)}")
            for v in e:
                if v not in names:
                    raise UnknownVertexError(f"edge endpoint {v!r} is not a vertex")

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[str]], vertices: Iterable[str] = ()) -> "Graph":
        order = list(dict.fromkeys(vertices))
        seen = set(order)
        es = set()
        for a, b in edges:
            for v in (a, b):
                if v not in seen:
                    seen.add(v)
                    order.append(v)
            es.add(_edge(a, b))
        return cls(tuple(order), frozenset(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=edge_key)

    def neighbors(self, v: str) -> frozenset:
        self._check(v)
        return frozenset(x for e in self.edges if v in e for x in e if x != v)

    def adjacency(self) -> dict[str, set]:
        adj = {v: set() for v in self.vertices}
        for a, b in (tuple(e) for e in self.edges):
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def has_edge(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edges

    def induced(self, vertices: Iterable[str]) -> "Graph":
        keep = set(vertices)
        for v in keep:
            self._check(v)
        return Graph(tuple(v for v in self.vertices if v in keep),
                     frozenset(e for e in self.edges if e <= keep))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": [sorted(e, key=natural_key) for e in self.sorted_edges()]}

    def to_edge_list(self) -> str:
        lines = [" ".join(sorted(e, key=natural_key)) for e in self.sorted_edges()]
        return "".join(line + "\n" for line in lines)

    def _check(self, v):
        if v not in self.vertices:
            raise UnknownVertexError(f"unknown vertex {v!r}")


# -- parsing -----------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    edges = []
    seen = set()
    order: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"line {lineno}: expected two vertex tokens, got {len(tokens)}")
        a, b = tokens
        e = _edge(a, b)
        if e in seen:
            warnings.warn(f"line {lineno}: duplicate edge {a} {b} ignored", DuplicateEdgeWarning, stacklevel=2)
            continue
        seen.add(e)
        edges.append((a, b))
        for v in (a, b):
            if v not in order:
                order.append(v)
    return Graph.from_edges(edges, order)


def parse_graph_json(doc) -> Graph:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "edges" not in doc:
        raise GraphParseError('JSON graph must be an object with an "edges" list')
    raw_edges = doc["edges"]
    if not isinstance(raw_edges, list):
        raise GraphParseError('"edges" must be a list')
    vertices = doc.get("vertices")
    if vertices is not None:
        if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
            raise GraphParseError('"vertices" must be a list of strings')
        if len(set(vertices)) != len(vertices):
            raise GraphParseError("duplicate vertex names")
    edges = []
    seen = set()
    for idx, pair in enumerate(raw_edges):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, str) for v in pair)):
            raise GraphParseError(f"edge #{idx}: expected a pair of vertex names")
        e = _edge(*pair)
        if e in seen:
            warnings.warn(f"edge #{idx}: duplicate edge {pair[0]} {pair[1]} ignored",
                          DuplicateEdgeWarning, stacklevel=2)
            continue
        if vertices is not None:
            for v in pair:
                if v not in vertices:
                    raise UnknownVertexError(f"edge #{idx}: endpoint {v!r} is not listed in vertices")
        seen.add(e)
        edges.append(tuple(pair))
    return Graph.from_edges(edges, vertices or ())


def parse_graph(text: str) -> Graph:
    """Parse either the edge-list or the JSON document format."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_edge_list(text)


# -- constructors ------------------------------------------------------------

def cycle_graph(n: int, prefix: str = "u") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges([(names[i], names[(i + 1) % n]) for i in range(n)], names)


def star_graph(leaves: Sequence[str], hub: str = "w") -> Graph:
    return Graph.from_edges([(hub, v) for v in leaves], [hub, *leaves])


def wheel_graph(k: int) -> Graph:
    """Full wheel on 2k+1 vertices: rim u1..u2k, hub w joined to every rim vertex."""
    rim = cycle_graph(2 * k)
    return Graph.from_edges([tuple(e) for e in rim.edges] + [("w", u) for u in rim.vertices],
                            (*rim.vertices, "w"))


def spoke_deleted_wheel(k: int) -> Graph:
    """Wheel on 2k+1 vertices keeping only the spokes to u2, u4, ..., u2k."""
    rim = cycle_graph(2 * k)
    spokes = [("w", f"u{i}") for i in range(2, 2 * k + 1, 2)]
    return Graph.from_edges([tuple(e) for e in rim.edges] + spokes, (*rim.vertices, "w"))


def degree(g: Graph, v: str) -> int:
    g._check(v)
    return sum(1 for e in g.edges if v in e)


# -- cycles ------------------------------------------------------------------

def canonical_cycle(cycle: Sequence[str]) -> tuple[str, ...]:
    """Least rotation/reflection of a cyclic vertex sequence (natural name order)."""
    k = len(cycle)
    seqs = []
    for seq in (list(cycle), list(reversed(cycle))):
        for r in range(k):
            seqs.append(tuple(seq[r:] + seq[:r]))
    return min(seqs, key=lambda s: [natural_key(v) for v in s])


@dataclass(frozen=True)
class CyclePartition:
    cycle: tuple[str, ...]
    outside: tuple[str, ...]
    eu: frozenset
    ew: frozenset
    ex: frozenset

    @property
    def k(self) -> int:
        return len(self.cycle)

    def u(self, i: int) -> str:
        """Cycle vertex u_i with 1-based index read mod k."""
        return self.cycle[(i - 1) % self.k]

    def cycle_edges(self) -> list[Edge]:
        """E_U in cycle order u1u2, u2u3, ..., uku1."""
        return [frozenset((self.u(i), self.u(i + 1))) for i in range(1, self.k + 1)]

    def summary(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "k": self.k,
            "outside": list(self.outside),
            "E_U": [edge_str(e) for e in self.cycle_edges()],
            "E_W": [edge_str(e) for e in sorted(self.ew, key=edge_key)],
            "E_X": [edge_str(e) for e in sorted(self.ex, key=edge_key)],
        }


def make_cycle_partition(g: Graph, cycle: Sequence[str], min_k: int = 4) -> CyclePartition:
    """Validate ``cycle`` as an induced chordless cycle of g and split the edge set.

    ``min_k`` is lowered only by the cycle enumerator; the splitting code
    always works with the default of 4.
    """
    cycle = tuple(cycle)
    for v in cycle:
        g._check(v)
    if len(set(cycle)) != len(cycle):
        raise NotACycleError("cycle repeats a vertex")
    k = len(cycle)
    if k < min_k:
        raise CycleTooShortError(f"cycle length {k} < {min_k}")
    eu = set()
    for i in range(k):
        e = frozenset((cycle[i], cycle[(i + 1) % k]))
        if e not in g.edges:
            raise NotACycleError(f"{cycle[i]} and {cycle[(i + 1) % k]} are not adjacent")
        eu.add(e)
    on_cycle = set(cycle)
    ew, ex = set(), set()
    for e in g.edges:
        inside = len(e & on_cycle)
        if inside == 2:
            if e not in eu:
                raise ChordError(f"chord {edge_str(e)} in cycle", chord=e)
        elif inside == 1:
            ex.add(e)
        else:
            ew.add(e)
    outside = tuple(v for v in g.vertices if v not in on_cycle)
    return CyclePartition(cycle, outside, frozenset(eu), frozenset(ew), frozenset(ex))


def induced_chordless_cycles(g: Graph, min_k: int = 4) -> list[CyclePartition]:
    """All induced chordless cycles of length >= min_k, each reported once."""
    if min_k < 3:
        raise ValueError("min_k must be at least 3")
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = g.adjacency()
    found = set()

    # Paths start at their least-index vertex s and only use vertices after s.
    def extend(path, blocked):
        s, last = path[0], path[-1]
        for x in sorted(adj[last], key=index.__getitem__):
            if index[x] <= index[s] or x in path or x in blocked:
                continue
            if len(path) >= 2 and s in adj[x]:
                if len(path) + 1 >= min_k:
                    found.add(canonical_cycle(path + [x]))
                continue
            # x sees no path vertex other than `last` (and is not adjacent to s).
            extend(path + [x], blocked | (adj[last] - {x}))

    for s in g.vertices:
        for v1 in adj[s]:
            if index[v1] > index[s]:
                extend([s, v1], set())
    cycles = sorted(found, key=lambda c: (len(c), [natural_key(v) for v in c]))
    return [make_cycle_partition(g, c, min_k) for c in cycles]


def cycle_complement(g: Graph, cp: CyclePartition) -> Graph:
    """Same vertex set, edges E_W u E_X."""
    return Graph(g.vertices, cp.ew | cp.ex)


def cycle_subgraph(g: Graph, cp: CyclePartition) -> Graph:
    return Graph(g.vertices, cp.eu)


def cycle_neighborhood(g: Graph, cp: CyclePartition) -> frozenset:
    on_cycle = set(cp.cycle)
    adj = g.adjacency()
    return frozenset(x for u in cp.cycle for x in adj[u] if x not in on_cycle)


def attached_adjacent_pairs(g: Graph, cp: CyclePartition) -> list[tuple[str, str]]:
    """Consecutive pairs (u_i, u_{i+1}) that both have a neighbour off the cycle."""
    outside = set(cp.outside)
    adj = g.adjacency()
    hit = [bool(adj[u] & outside) for u in cp.cycle]
    k = cp.k
    return [(cp.cycle[i], cp.cycle[(i + 1) % k]) for i in range(k) if hit[i] and hit[(i + 1) % k]]


def splitting_condition(g: Graph, cp: CyclePartition) -> bool:
    """True iff no two consecutive cycle vertices both have degree > 2."""
    k = cp.k
    big = [degree(g, u) > 2 for u in cp.cycle]
    return not any(big[i] and big[(i + 1) % k] for i in range(k))
