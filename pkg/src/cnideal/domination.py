"""Dominating sets, private neighbors and the classical graph invariants.

Exact values throughout; witnesses are the lexicographically smallest optimal
sets in the graph's vertex order (sets compared as increasing tuples).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .bits import VertexSet, bit, lex_key, members, minimal_sets, size
from .graph import Graph, maximal_independent_sets


# ---------------------------------------------------- hypergraph transversals

def minimal_transversals(edges: Iterable[VertexSet]) -> list[VertexSet]:
    """Inclusion-minimal sets meeting every edge, in lex order.

    Berge's sequential algorithm: extend the transversals of the first i edges
    to the (i+1)-th edge and discard non-minimal extensions.  An extension
    ``t | x`` can only be subsumed by a kept transversal that contains ``x``.
    An empty edge admits no transversal.
    """
    hyper = minimal_sets(edges)
    if any(e == 0 for e in hyper):
        return []
    trans: list[VertexSet] = [0]
    for e in sorted(hyper, key=size):
        keep = [t for t in trans if t & e]
        extended = []
        for t in trans:
            if t & e:
                continue
            for x in members(e):
                c = t | bit(x)
                if not any((k >> x & 1) and k & ~c == 0 for k in keep):
                    extended.append(c)
        trans = keep + extended
    return sorted(trans, key=lex_key)


# ------------------------------------------------------------- domination

def is_dominating(g: Graph, d: VertexSet) -> bool:
    return g.closed_neighborhood(d) == g.vertices


def minimal_dominating_sets(g: Graph) -> list[VertexSet]:
    """Every inclusion-minimal dominating set, in lex order.

    These are exactly the minimal transversals of {N[v] : v in V}.
    """
    if g.n == 0:
        return [0]
    return minimal_transversals(g.closed)


@dataclass(frozen=True)
class PrivateNeighborProfile:
    """Private neighbors of ``d``: ``owners[u]`` holds every v with N[v] ∩ D = {u}."""

    d: VertexSet
    owners: dict[int, VertexSet]
    all_pn: VertexSet
    internal: VertexSet = 0

    def kind(self, v: int) -> str | None:
        """'external', 'self', 'internal', or None for a non-private vertex."""
        if self.internal >> v & 1:
            return "internal"
        if not self.all_pn >> v & 1:
            return None
        return "self" if self.d >> v & 1 else "external"


def private_neighbors(g: Graph, d: VertexSet) -> PrivateNeighborProfile:
    owners = {u: 0 for u in members(d)}
    all_pn = 0
    for v in range(g.n):
        hit = g.closed[v] & d
        if hit and hit & (hit - 1) == 0:
            owners[hit.bit_length() - 1] |= bit(v)
            all_pn |= bit(v)
    internal = 0
    for u in members(d):
        if size(g.adjacency[u] & d) == 1:
            internal |= bit(u)
    return PrivateNeighborProfile(d, owners, all_pn, internal)


def is_irredundant(g: Graph, d: VertexSet) -> bool:
    return all(private_neighbors(g, d).owners.values())


def is_minimal_dominating(g: Graph, d: VertexSet) -> bool:
    # a dominating set is minimal iff every member keeps a private neighbor
    return is_dominating(g, d) and is_irredundant(g, d)


def is_efficient_dominating(g: Graph, d: VertexSet) -> bool:
    """Every closed neighborhood meets ``d`` exactly once."""
    for v in range(g.n):
        hit = g.closed[v] & d
        if not hit or hit & (hit - 1):
            return False
    return True


def find_efficient_dominating(g: Graph) -> VertexSet | None:
    """Lexicographically first efficient dominating set, or None.

    Vertices are decided in index order, inclusion tried first; a vertex is
    abandoned once every member of its closed neighborhood has been decided
    without covering it.  All efficient dominating sets of a graph have the
    same size, so include-first order yields the lex-smallest one.
    """
    n = g.n
    closed = g.closed
    # deadline[i]: vertices whose closed neighborhood lies within 0..i
    deadline = [0] * n
    for v in range(n):
        deadline[closed[v].bit_length() - 1] |= bit(v)

    def search(i: int, chosen: VertexSet, covered: VertexSet) -> VertexSet | None:
        if i == n:
            return chosen
        if not closed[i] & covered:
            c = covered | closed[i]
            if deadline[i] & ~c == 0:
                found = search(i + 1, chosen | bit(i), c)
                if found is not None:
                    return found
        if deadline[i] & ~covered == 0:
            return search(i + 1, chosen, covered)
        return None

    return search(0, 0, 0) if n else 0


# ---------------------------------------------------- exact set cover engine

class _CoverProblem:
    """Choose candidates whose cover masks jointly contain ``universe``."""

    def __init__(self, universe: int, cover_of: list[int]):
        self.universe = universe
        self.cover_of = cover_of
        self.who = {}
        for e in members(universe):
            self.who[e] = sum(1 << c for c, m in enumerate(cover_of) if m >> e & 1)

    def search(self, limit: int, include: int = 0, exclude: int = 0) -> int | None:
        covered = 0
        for c in members(include):
            covered |= self.cover_of[c]
        return self._dfs(include, covered, exclude, limit)

    def _dfs(self, chosen: int, covered: int, banned: int, limit: int) -> int | None:
        uncovered = self.universe & ~covered
        if not uncovered:
            return chosen
        room = limit - size(chosen)
        if room <= 0:
            return None
        best_e, best_opts = -1, None
        for e in members(uncovered):
            opts = self.who[e] & ~banned
            if best_opts is None or size(opts) < size(best_opts):
                best_e, best_opts = e, opts
                if size(opts) <= 1:
                    break
        if not best_opts:
            return None
        allowed = ~banned & ~chosen
        reach = max(
            (size(m & uncovered) for c, m in enumerate(self.cover_of) if allowed >> c & 1),
            default=0,
        )
        if reach == 0 or -(-size(uncovered) // reach) > room:
            return None
        for c in members(best_opts):
            found = self._dfs(chosen | bit(c), covered | self.cover_of[c], banned, limit)
            if found is not None:
                return found
            banned |= bit(c)
        return None

    def minimum(self) -> tuple[int, int]:
        """Optimal size and the lexicographically smallest optimal choice."""
        k = 0
        while self.search(k) is None:
            k += 1
        return k, self.lex_smallest(k)

    def lex_smallest(self, k: int, include: int = 0, exclude: int = 0) -> int:
        chosen, banned = include, exclude
        for c in range(len(self.cover_of)):
            if size(chosen) == k:
                break
            if (chosen | banned) >> c & 1:
                continue
            if self.search(k, chosen | bit(c), banned) is not None:
                chosen |= bit(c)
            else:
                banned |= bit(c)
        return chosen


def domination_number(g: Graph) -> tuple[int, VertexSet]:
    """γ(G) with the lexicographically smallest minimum dominating set."""
    return _CoverProblem(g.vertices, list(g.closed)).minimum()


def _vertex_cover_problem(g: Graph) -> _CoverProblem:
    edges = list(g.edges())
    cover_of = [0] * g.n
    for idx, (u, v) in enumerate(edges):
        cover_of[u] |= 1 << idx
        cover_of[v] |= 1 << idx
    return _CoverProblem((1 << len(edges)) - 1, cover_of)


def vertex_cover_number(g: Graph) -> tuple[int, VertexSet]:
    return _vertex_cover_problem(g).minimum()


def independence_number(g: Graph) -> tuple[int, VertexSet]:
    """i(G) = n − τ(G); the witness is the lex-smallest maximum independent set,
    found as a complement-constrained vertex cover search."""
    problem = _vertex_cover_problem(g)
    tau = problem.minimum()[0]
    k = g.n - tau
    chosen, banned = 0, 0
    for v in range(g.n):
        if size(chosen) == k:
            break
        # v joins the independent set iff a τ-cover avoids chosen ∪ {v}
        if problem.search(tau, include=banned, exclude=chosen | bit(v)) is not None:
            chosen |= bit(v)
        else:
            banned |= bit(v)
    return k, chosen


def matching_number(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Maximum matching by memoized search over remaining-vertex masks."""
    adj = g.adjacency

    @lru_cache(maxsize=None)
    def best(mask: int) -> tuple[int, tuple[tuple[int, int], ...]]:
        while mask:
            v = (mask & -mask).bit_length() - 1
            if adj[v] & mask:
                break
            mask &= ~bit(v)
        else:
            return 0, ()
        rest = mask & ~bit(v)
        value, edges = best(rest)
        for u in members(adj[v] & rest):
            sub, sub_edges = best(rest & ~bit(u))
            if sub + 1 > value:
                value, edges = sub + 1, ((v, u),) + sub_edges
        return value, edges

    value, edges = best(g.vertices)
    return value, list(edges)


@dataclass
class InvariantReport:
    gamma: int
    tau: int
    indep: int
    matching: int
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "tau": self.tau,
            "indep": self.indep,
            "matching": self.matching,
            "witnesses": {
                "gamma": list(members(self.witnesses["gamma"])),
                "tau": list(members(self.witnesses["tau"])),
                "indep": list(members(self.witnesses["indep"])),
                "matching": [list(e) for e in self.witnesses["matching"]],
            },
        }


def invariants(g: Graph) -> InvariantReport:
    gamma, wg = domination_number(g)
    tau, wt = vertex_cover_number(g)
    indep, wi = independence_number(g)
    a, wm = matching_number(g)
    return InvariantReport(gamma, tau, indep, a, {"gamma": wg, "tau": wt, "indep": wi, "matching": wm})


def maximal_independent_are_minimal_dominating(g: Graph) -> bool:
    return all(is_minimal_dominating(g, s) for s in maximal_independent_sets(g))
