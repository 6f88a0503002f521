"""Graph families shared by the sweep-style tests."""

import random

import networkx as nx

from splitcycles.graph import Graph, induced_chordless_cycles


def from_nx(h) -> Graph:
    names = {v: f"v{v}" for v in h.nodes}
    return Graph.from_edges([(names[a], names[b]) for a, b in h.edges], [names[v] for v in sorted(h.nodes)])


def atlas_graphs(max_n=7, connected=True):
    """Every graph on 1..max_n vertices up to isomorphism."""
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected and not nx.is_connected(h):
            continue
        yield from_nx(h)


def cycle_instances(graphs, require_complement=True):
    for g in graphs:
        for cp in induced_chordless_cycles(g):
            if require_complement and not (cp.ew or cp.ex):
                continue
            yield g, cp


def _hypothesis_friendly(rng, n):
    k = rng.randint(4, min(7, n - 1))
    us = [f"u{i}" for i in range(1, k + 1)]
    ws = [f"w{i}" for i in range(1, n - k + 1)]
    edges = [(us[i], us[(i + 1) % k]) for i in range(k)]
    # attach outside vertices only to pairwise non-consecutive cycle positions
    start = rng.randrange(k)
    attach = [us[(start + 2 * t) % k] for t in range(k // 2)]
    for w in ws:
        for u in rng.sample(attach, rng.randint(0, min(2, len(attach)))):
            edges.append((u, w))
    for a in range(len(ws)):
        for b in range(a + 1, len(ws)):
            if rng.random() < 0.35:
                edges.append((ws[a], ws[b]))
    return Graph.from_edges(edges, us + ws)


def random_graphs(count=100, seed=20240517, sizes=(8, 9)):
    """``count`` random graphs that each carry a chordless cycle with nonzero complement.

    Even draws are G(n, p); odd draws are built around a cycle whose outside
    neighbours avoid consecutive cycle vertices, so the degree condition often holds.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice(sizes)
        if len(out) % 2 == 0:
            h = nx.gnp_random_graph(n, rng.uniform(0.2, 0.45), seed=rng.randrange(1 << 30))
            g = from_nx(h)
        else:
            g = _hypothesis_friendly(rng, n)
        if any(cp.ew or cp.ex for cp in induced_chordless_cycles(g)):
            out.append(g)
    return out
