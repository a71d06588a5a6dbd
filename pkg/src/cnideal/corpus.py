"""Small-graph corpora for exhaustive checks.

Graphs up to seven vertices come from the networkx graph atlas; trees from
networkx's non-isomorphic tree generator.  Connected chordal graphs are grown
here by attaching a simplicial vertex to a clique: removing a simplicial vertex
keeps a connected chordal graph connected and chordal, so every connected
chordal graph on n vertices arises from one on n - 1.
"""

from __future__ import annotations

import itertools
from typing import Iterator

import networkx as nx

from .bits import members
from .graph import Graph, is_connected

ATLAS_MAX = 7


def from_networkx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in h.edges()))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def atlas_graphs(max_n: int = ATLAS_MAX, min_n: int = 1) -> list[Graph]:
    """All graphs with min_n..max_n vertices up to isomorphism, atlas order."""
    if max_n > ATLAS_MAX:
        raise ValueError(f"the atlas stops at {ATLAS_MAX} vertices")
    return [
        from_networkx(h)
        for h in nx.graph_atlas_g()
        if min_n <= h.number_of_nodes() <= max_n
    ]


def connected_graphs(max_n: int = ATLAS_MAX, min_n: int = 1) -> list[Graph]:
    return [g for g in atlas_graphs(max_n, min_n) if is_connected(g)]


def trees(n: int) -> list[Graph]:
    if n == 1:
        return [Graph(1, (0,))]
    return [from_networkx(t) for t in nx.nonisomorphic_trees(n)]


def trees_up_to(max_n: int) -> list[Graph]:
    return [t for n in range(1, max_n + 1) for t in trees(n)]


def _cliques(g: Graph) -> Iterator[int]:
    """Nonempty cliques as bitmasks."""
    def grow(clique: int, candidates: int) -> Iterator[int]:
        for v in members(candidates):
            c = clique | (1 << v)
            yield c
            yield from grow(c, candidates & g.adjacency[v] & ~((1 << (v + 1)) - 1))

    yield from grow(0, g.vertices)


def _dedupe(graphs: list[Graph]) -> list[Graph]:
    buckets: dict[str, list[nx.Graph]] = {}
    out = []
    for g in graphs:
        h = to_networkx(g)
        key = f"{sorted(d for _, d in h.degree())}|{nx.weisfeiler_lehman_graph_hash(h, iterations=3)}"
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        out.append(g)
    return out


def connected_chordal_graphs(n: int) -> list[Graph]:
    """Connected chordal graphs on exactly n vertices, up to isomorphism."""
    level = [Graph(1, (0,))]
    for k in range(1, n):
        grown = []
        for g in level:
            for clique in _cliques(g):
                edges = list(g.edges()) + [(v, k) for v in members(clique)]
                grown.append(Graph.from_edges(k + 1, edges))
        level = _dedupe(grown)
    return level if n >= 1 else []


def connected_chordal_up_to(max_n: int) -> list[Graph]:
    return [g for n in range(1, max_n + 1) for g in connected_chordal_graphs(n)]


def complete_bipartite_profiles(max_total: int, min_part: int = 2) -> list[tuple[int, int]]:
    return [
        (n1, n2)
        for n1, n2 in itertools.product(range(min_part, max_total + 1), repeat=2)
        if n1 >= n2 and n1 + n2 <= max_total
    ]


def parse_corpus(spec: str) -> list[Graph]:
    """``connected:7``, ``atlas:7``, ``trees:9``, ``chordal:8`` (all up to the given size)."""
    name, _, arg = spec.partition(":")
    n = int(arg)
    if name == "connected":
        return connected_graphs(n)
    if name == "atlas":
        return atlas_graphs(n)
    if name == "trees":
        return trees_up_to(n)
    if name == "chordal":
        return connected_chordal_up_to(n)
    raise ValueError(f"unknown corpus {name!r}")


CORPORA = ("connected", "atlas", "trees", "chordal")
