"""Castelnuovo–Mumford regularity of S/N_G via Hochster's formula.

The Stanley–Reisner complex of N_G has as faces the sets F with t_F not in
N_G, i.e. the sets whose complement dominates G.  Hochster's formula gives

    β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|_σ),

so reg(S/I) is the largest d + 1 over induced subcomplexes with H̃_d ≠ 0.

Homology conventions: the complex {∅} has H̃_{-1} of dimension 1; the void
complex (no faces, only for the unit ideal) has no homology at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .bits import VertexSet, bit, from_indices, full, lex_key, members, size
from .domination import (
    matching_number,
    minimal_dominating_sets,
    minimal_transversals,
    vertex_cover_number,
)
from .graph import Graph, is_bipartite, is_chordal, is_tree, is_very_well_covered
from .monomial import SquarefreeIdeal, closed_neighborhood_ideal

FIELDS = ("gf2", "rational")
DEFAULT_CAP = 14


class RegularityUnavailable(RuntimeError):
    pass


class SimplicialComplexView:
    """Stanley–Reisner complex of a squarefree ideal, given by its minimal nonfaces."""

    def __init__(self, ideal: SquarefreeIdeal):
        self.ideal = ideal
        self.n = ideal.ambient_n
        self.ambient = full(self.n)
        self.nonfaces = ideal.gens

    def is_face(self, f: VertexSet) -> bool:
        return not any(g & ~f == 0 for g in self.nonfaces)

    @cached_property
    def facets(self) -> list[VertexSet]:
        """Maximal faces: complements of minimal transversals of the nonfaces."""
        if self.ideal.is_unit:
            return []
        return sorted((self.ambient & ~t for t in minimal_transversals(self.nonfaces)), key=lex_key)

    def faces_within(self, sigma: VertexSet) -> list[list[VertexSet]]:
        """Faces of the induced subcomplex on ``sigma``, bucketed by size."""
        if self.ideal.is_unit:
            return []
        local = [g for g in self.nonfaces if g & ~sigma == 0]
        verts = list(members(sigma))
        by_size: list[list[VertexSet]] = [[] for _ in range(len(verts) + 1)]

        def grow(face: VertexSet, k: int, start: int) -> None:
            by_size[k].append(face)
            for j in range(start, len(verts)):
                f = face | bit(verts[j])
                if all(g & ~f for g in local):
                    grow(f, k + 1, j + 1)

        grow(0, 0, 0)
        while len(by_size) > 1 and not by_size[-1]:
            by_size.pop()
        return by_size

    def cone_apex(self, sigma: VertexSet) -> int | None:
        """A vertex of sigma lying in no minimal nonface inside sigma, if any."""
        used = 0
        for g in self.nonfaces:
            if g & ~sigma == 0:
                used |= g
        free = sigma & ~used
        return (free & -free).bit_length() - 1 if free else None


def stanley_reisner(g: Graph) -> SimplicialComplexView:
    view = SimplicialComplexView(closed_neighborhood_ideal(g))
    expected = sorted((g.vertices & ~d for d in minimal_dominating_sets(g)), key=lex_key)
    if view.facets != expected:
        raise AssertionError("facets differ from complements of minimal dominating sets")
    return view


# ------------------------------------------------------------------ ranks

def rank_gf2(rows: list[int]) -> int:
    """Rank of a 0/1 matrix whose rows are bitmasks."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


def rank_rational(matrix: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in matrix if any(row)]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, len(m)):
            factor = m[r][c]
            row, prow = m[r], m[rank]
            for k in range(c, cols):
                row[k] = (p * row[k] - factor * prow[k]) // prev
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def _boundary_rank(lower: list[VertexSet], upper: list[VertexSet], fld: str) -> int:
    """Rank of the boundary map from faces ``upper`` (size k+1) to ``lower`` (size k)."""
    if not lower or not upper:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    if fld == "gf2":
        rows = []
        for f in upper:
            r = 0
            for v in members(f):
                r |= 1 << index[f & ~bit(v)]
            rows.append(r)
        return rank_gf2(rows)
    matrix = []
    for f in upper:
        row = [0] * len(lower)
        for j, v in enumerate(members(f)):
            row[index[f & ~bit(v)]] = -1 if j % 2 else 1
        matrix.append(row)
    return rank_rational(matrix)


def reduced_homology_dims(view: SimplicialComplexView, sigma: VertexSet, fld: str = "gf2") -> list[int]:
    """dim H̃_d of the subcomplex induced on ``sigma`` for d = -1 .. |sigma|-1."""
    if fld not in FIELDS:
        raise ValueError(f"unknown field {fld!r}")
    dims = [0] * (size(sigma) + 1)
    by_size = view.faces_within(sigma)
    if not by_size:
        return dims
    ranks = [_boundary_rank(by_size[k - 1], by_size[k], fld) for k in range(1, len(by_size))]
    ranks.append(0)
    for k, faces in enumerate(by_size):
        # faces of size k sit in degree k - 1
        dims[k] = len(faces) - ranks[k] - (ranks[k - 1] if k else 0)
    return dims


# --------------------------------------------------------------- Betti table

@dataclass
class BettiTable:
    """Multigraded Betti numbers of S/I: (i, σ) -> rank."""

    entries: dict[tuple[int, VertexSet], int] = field(default_factory=dict)
    field_tag: str = "gf2"

    @property
    def reg(self) -> int:
        return max(size(s) - i for (i, s) in self.entries)

    @property
    def pd(self) -> int:
        return max(i for (i, _) in self.entries)

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, s), r in self.entries.items():
            out[i, size(s)] = out.get((i, size(s)), 0) + r
        return dict(sorted(out.items()))

    def to_json(self) -> list[dict]:
        items = sorted(self.entries.items(), key=lambda kv: (kv[0][0], size(kv[0][1]), lex_key(kv[0][1])))
        return [{"i": i, "sigma": list(members(s)), "rank": r} for (i, s), r in items]


def betti_table_of(ideal: SquarefreeIdeal, fld: str = "gf2", cap: int = DEFAULT_CAP) -> BettiTable:
    n = ideal.ambient_n
    if n > cap:
        raise RegularityUnavailable(f"regularity unavailable at this size: {n} variables > cap {cap}")
    view = SimplicialComplexView(ideal)
    table = BettiTable(field_tag=fld)
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            sigma = from_indices(combo)
            if k and view.cone_apex(sigma) is not None:
                continue
            for d, h in enumerate(reduced_homology_dims(view, sigma, fld), start=-1):
                if h:
                    table.entries[k - d - 1, sigma] = h
    return table


def betti_table(g: Graph, fld: str = "gf2", cap: int = DEFAULT_CAP) -> BettiTable:
    return betti_table_of(closed_neighborhood_ideal(g), fld, cap)


def regularity(g: Graph, fld: str = "gf2", cap: int = DEFAULT_CAP) -> int:
    return betti_table(g, fld, cap).reg


def projective_dimension(g: Graph, fld: str = "gf2", cap: int = DEFAULT_CAP) -> int:
    return betti_table(g, fld, cap).pd


@dataclass(frozen=True)
class RegularityBounds:
    lower: int
    rationale: str
    exact: int | None = None


def regularity_bounds(g: Graph) -> RegularityBounds:
    """Best proven bound on reg(S/N_G) that applies to ``g``.

    reg >= a(G) always; reg >= τ(G) for bipartite or very well-covered
    graphs; reg = τ(G) for chordal graphs (and then = a(G) for trees).
    """
    a = matching_number(g)[0]
    if is_chordal(g):
        tau = vertex_cover_number(g)[0]
        why = "tree: reg = tau = matching" if is_tree(g) else "chordal: reg = tau"
        return RegularityBounds(tau, why, tau)
    if is_bipartite(g):
        return RegularityBounds(vertex_cover_number(g)[0], "bipartite: reg >= tau")
    if is_very_well_covered(g):
        return RegularityBounds(vertex_cover_number(g)[0], "very well-covered: reg >= tau")
    return RegularityBounds(a, "any graph: reg >= matching number")
