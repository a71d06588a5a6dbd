"""Simple undirected graphs over bitmask vertex sets.

Vertex order is part of the contract: every constructor below documents it,
so that witnesses (dominating sets, private-neighbor choices) are
reproducible across runs.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .bits import VertexSet, bit, from_indices, full, lex_key, members, size

MAX_VERTICES = 128


class CapacityError(ValueError):
    """A construction would exceed :data:`MAX_VERTICES`."""


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the open neighborhood of ``v``; ``closed[v]`` caches
    ``N[v]``.  ``origin`` maps vertices of an induced subgraph back to the
    parent graph it was cut from.  Equality compares structure only.
    """

    n: int
    adjacency: tuple[VertexSet, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    origin: tuple[int, ...] | None = field(default=None, compare=False)
    closed: tuple[VertexSet, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n > MAX_VERTICES:
            raise CapacityError(f"{self.n} vertices exceeds capacity {MAX_VERTICES}")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        mask = full(self.n)
        for v, nb in enumerate(self.adjacency):
            if nb & ~mask:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in members(nb):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {{{v}, {u}}}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length does not match vertex count")
        object.__setattr__(
            self, "closed", tuple(nb | (1 << v) for v, nb in enumerate(self.adjacency))
        )

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> "Graph":
        if n > MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {{{u}, {v}}} out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @property
    def vertices(self) -> VertexSet:
        return full(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in members(self.adjacency[v] >> (v + 1) << (v + 1)):
                yield v, u

    @property
    def num_edges(self) -> int:
        return sum(size(nb) for nb in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return size(self.adjacency[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def closed_neighborhood(self, s: VertexSet) -> VertexSet:
        """N[S], the union of N[v] over v in S."""
        out = 0
        closed = self.closed
        for v in members(s):
            out |= closed[v]
        return out

    def open_neighborhood(self, s: VertexSet) -> VertexSet:
        out = 0
        for v in members(s):
            out |= self.adjacency[v]
        return out

    def induced(self, s: VertexSet) -> "Graph":
        """Induced subgraph on ``s``, vertices renumbered in increasing order."""
        old = list(members(s))
        index = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            adj.append(from_indices(index[u] for u in members(self.adjacency[v] & s)))
        labels = tuple(self.labels[v] for v in old) if self.labels is not None else None
        origin = tuple(self.origin[v] for v in old) if self.origin is not None else tuple(old)
        return Graph(len(old), tuple(adj), labels, origin)

    def lift(self, s: VertexSet) -> VertexSet:
        """Map a vertex set of an induced subgraph back to its parent."""
        if self.origin is None:
            return s
        return from_indices(self.origin[v] for v in members(s))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


# ---------------------------------------------------------------- graph6

def _n_encode(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise CapacityError(f"{n} vertices cannot be graph6-encoded")


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adjacency[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _n_encode(g.n) + body


def from_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is skipped)."""
    s = text.strip()
    start = 0
    if s.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    for k in range(start, len(s)):
        if not 63 <= ord(s[k]) <= 126:
            raise Graph6Error(f"character {s[k]!r} outside the graph6 range", k)
    if start >= len(s):
        raise Graph6Error("missing vertex-count header", start)
    pos = start
    if s[pos] == "~":
        if pos + 1 < len(s) and s[pos + 1] == "~":
            raise Graph6Error("8-byte vertex-count header not supported", pos)
        if len(s) < pos + 4:
            raise Graph6Error("truncated vertex-count header", len(s))
        n = 0
        for c in s[pos + 1:pos + 4]:
            n = (n << 6) | (ord(c) - 63)
        pos += 4
    else:
        n = ord(s[pos]) - 63
        pos += 1
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = s[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated edge data: expected {need} bytes, got {len(body)}", len(s))
    if len(body) > need:
        raise Graph6Error("trailing data after edge bits", pos + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | Graph6Error]]:
    """Yield ``(line_number, text, graph_or_error)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            yield lineno, text, from_graph6(text)
        except Graph6Error as exc:
            yield lineno, text, exc


# ------------------------------------------------------------- edge lists

def from_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines (0-based).  A line holding a single index declares
    an isolated vertex.  Blank lines and ``#`` comments are ignored."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(nums) == 1:
            top = max(top, nums[0])
        elif len(nums) == 2:
            edges.append((nums[0], nums[1]))
            top = max(top, *nums)
        else:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        if min(nums) < 0:
            raise ValueError(f"line {lineno}: negative vertex index")
    if n is None:
        n = top + 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines.extend(str(v) for v in range(g.n) if g.degree(v) == 0)
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------- families

def path(n: int) -> Graph:
    """P_n with vertices v1..vn in path order."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], [f"v{i + 1}" for i in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], [f"v{i + 1}" for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(
        n, itertools.combinations(range(n), 2), [f"v{i + 1}" for i in range(n)]
    )


def complete_multipartite(*parts: int) -> Graph:
    """K_{n1,...,nr}; part k occupies a contiguous block, parts in argument order.

    Vertex ``v{k}_{i}`` is the i-th vertex of the k-th part (both 1-based).
    """
    if not parts:
        raise ValueError("at least one part is required")
    if any(p < 1 for p in parts):
        raise ValueError("every part must be nonempty")
    block = []
    labels = []
    for k, p in enumerate(parts):
        block.extend([k] * p)
        labels.extend(f"v{k + 1}_{i + 1}" for i in range(p))
    n = len(block)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if block[u] != block[v]]
    return Graph.from_edges(n, edges, labels)


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def hamming_graph(m: int, q: int) -> Graph:
    """Γ(m, q): words of length m over {0..q-1}, adjacent at Hamming distance 1.

    Vertex index of word (x_1..x_m) is sum x_i q^(m-i), i.e. words appear in
    lexicographic order; labels are the digit strings.
    """
    if m < 1:
        raise ValueError("length must be positive")
    if not is_prime_power(q):
        raise ValueError(f"alphabet size {q} is not a prime power")
    n = q ** m
    if n > MAX_VERTICES:
        raise CapacityError(f"Γ({m},{q}) has {n} vertices, capacity is {MAX_VERTICES}")
    words = list(itertools.product(range(q), repeat=m))
    adj = []
    for x in words:
        nb = 0
        for pos in range(m):
            weight = q ** (m - 1 - pos)
            base = word_index(x, q) - x[pos] * weight
            for a in range(q):
                if a != x[pos]:
                    nb |= 1 << (base + a * weight)
        adj.append(nb)
    labels = ["".join(map(str, w)) for w in words] if q <= 10 else None
    return Graph(n, tuple(adj), tuple(labels) if labels else None)


def word_index(word: Sequence[int], q: int) -> int:
    idx = 0
    for a in word:
        idx = idx * q + a
    return idx


def parse_family(spec: str) -> Graph:
    """Build a graph from ``name:args``, e.g. ``path:6``, ``kpartite:2,3``, ``hamming:3,2``."""
    name, _, args = spec.partition(":")
    try:
        nums = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise ValueError(f"bad family arguments in {spec!r}") from None
    builders = {
        "path": (path, 1),
        "cycle": (cycle, 1),
        "complete": (complete, 1),
        "hamming": (hamming_graph, 2),
    }
    if name == "kpartite":
        return complete_multipartite(*nums)
    if name == "empty":
        return Graph.from_edges(nums[0], [])
    if name not in builders:
        raise ValueError(f"unknown family {name!r}")
    fn, arity = builders[name]
    if len(nums) != arity:
        raise ValueError(f"family {name!r} takes {arity} argument(s)")
    return fn(*nums)


# ------------------------------------------------------ structure queries

def connected_components(g: Graph) -> list[Graph]:
    """Components as induced subgraphs, ordered by smallest vertex; each
    carries ``origin`` back to ``g``."""
    return [g.induced(c) for c in component_sets(g)]


def component_sets(g: Graph) -> list[VertexSet]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = bit(v)
        frontier = comp
        while frontier:
            frontier = g.open_neighborhood(frontier) & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(component_sets(g)) <= 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in members(g.adjacency[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search, then the perfect-elimination check."""
    n = g.n
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= 1 << v
        for u in members(g.adjacency[v] & ~visited):
            weight[u] += 1
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in members(g.adjacency[v]) if position[u] < position[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=position.__getitem__)
        rest = from_indices(earlier) & ~bit(parent)
        if rest & ~g.adjacency[parent]:
            return False
    return True


def maximal_independent_sets(g: Graph) -> list[VertexSet]:
    """All maximal independent sets (Bron–Kerbosch with pivoting on the
    complement graph), in lex order."""
    comp = [g.vertices & ~g.closed[v] for v in range(g.n)]
    out: list[VertexSet] = []

    def expand(r: VertexSet, p: VertexSet, x: VertexSet) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(members(p | x), key=lambda u: size(comp[u] & p))
        for v in members(p & ~comp[pivot]):
            expand(r | bit(v), p & comp[v], x & comp[v])
            p &= ~bit(v)
            x |= bit(v)

    if g.n:
        expand(0, g.vertices, 0)
    else:
        out.append(0)
    return sorted(out, key=lex_key)


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not (g.adjacency[v] & s) for v in members(s))


def is_very_well_covered(g: Graph) -> bool:
    """Well-covered, no isolated vertices, every maximal independent set of size n/2."""
    if g.n == 0 or g.n % 2:
        return False
    if any(nb == 0 for nb in g.adjacency):
        return False
    half = g.n // 2
    return all(size(s) == half for s in maximal_independent_sets(g))


def has_isolated_vertex(g: Graph) -> bool:
    return any(nb == 0 for nb in g.adjacency)

