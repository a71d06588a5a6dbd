"""v-number of closed neighborhood ideals from dominating-set combinatorics.

For a connected graph the v-number equals the minimum of |N[U] \\ D| over
minimal dominating sets D and sets U of private neighbors of D that dominate
D.  Choosing one private neighbor per member of D is enough, so U ranges over
the Cartesian product of the per-owner private-neighbor lists.

Disconnected graphs are handled component by component and summed (the
v-number is additive over ideals in disjoint variable sets).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bits import VertexSet, lex_key, members, size
from .domination import is_dominating, minimal_dominating_sets, private_neighbors
from .graph import Graph, component_sets


class NotMinimalDominating(ValueError):
    pass


@dataclass(frozen=True)
class VNumberWitness:
    value: int
    d: VertexSet
    u: VertexSet
    expansion: VertexSet
    components: tuple["VNumberWitness", ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        parts = self.components or (self,)
        return {
            "value": self.value,
            "D": list(members(self.d)),
            "U": list(members(self.u)),
            "expansion": list(members(self.expansion)),
            "per_component": [
                {
                    "value": w.value,
                    "D": list(members(w.d)),
                    "U": list(members(w.u)),
                    "expansion": list(members(w.expansion)),
                }
                for w in parts
            ],
        }


def _owner_lists(g: Graph, d: VertexSet) -> list[list[int]]:
    profile = private_neighbors(g, d)
    lists = []
    for owner in members(d):
        pn = profile.owners[owner]
        if not pn:
            raise NotMinimalDominating(
                f"vertex {owner} of D owns no private neighbor, so D is not minimal"
            )
        lists.append(list(members(pn)))
    return lists


def _best_u(g: Graph, d: VertexSet, lists: list[list[int]]) -> tuple[int, VertexSet]:
    """Minimum |N[U] \\ D| for fixed D with the lex-smallest minimizing U."""
    closed = g.closed
    best: list = [None, None]

    def dfs(i: int, u: VertexSet, reach: VertexSet) -> None:
        cost = size(reach & ~d)
        if best[0] is not None and cost > best[0]:
            return
        if i == len(lists):
            if best[0] is None or cost < best[0] or lex_key(u) < lex_key(best[1]):
                best[0], best[1] = cost, u
            return
        for v in lists[i]:
            dfs(i + 1, u | (1 << v), reach | closed[v])

    dfs(0, 0, 0)
    return best[0], best[1]


def v_number_local(g: Graph, d: VertexSet) -> VNumberWitness:
    """Localized v-number at the associated prime generated by ``d``."""
    if not is_dominating(g, d):
        raise NotMinimalDominating("D does not dominate the graph")
    lists = _owner_lists(g, d)
    value, u = _best_u(g, d, lists)
    # private neighbors of distinct owners are distinct, so |U| = |D|
    assert size(u) == size(d)
    return VNumberWitness(value, d, u, g.closed_neighborhood(u) & ~d)


def _v_number_connected(g: Graph) -> VNumberWitness:
    closed = g.closed
    best_value: int | None = None
    best_d: VertexSet = 0
    for d in minimal_dominating_sets(g):
        lists = _owner_lists(g, d)
        seen: list[set[int]] = [set() for _ in range(len(lists) + 1)]
        found: list = [None]

        def dfs(i: int, reach: VertexSet) -> None:
            cost = size(reach & ~d)
            bound = best_value if found[0] is None else found[0]
            if bound is not None and cost >= bound:
                return
            if reach in seen[i]:
                return
            seen[i].add(reach)
            if i == len(lists):
                found[0] = cost
                return
            for v in lists[i]:
                dfs(i + 1, reach | closed[v])

        dfs(0, 0)
        if found[0] is not None:
            best_value, best_d = found[0], d
            if best_value == 0:
                break
    # tie-break: first optimal D in lex order, then the lex-smallest U for it
    return v_number_local(g, best_d)


def v_number(g: Graph) -> VNumberWitness:
    """v(N_G) with a witness (D, U); components are solved separately and summed."""
    comps = component_sets(g)
    if len(comps) <= 1:
        return _v_number_connected(g)
    parts = []
    for mask in comps:
        sub = g.induced(mask)
        w = _v_number_connected(sub)
        parts.append(VNumberWitness(w.value, sub.lift(w.d), sub.lift(w.u), sub.lift(w.expansion)))
    d = u = exp = 0
    for w in parts:
        d |= w.d
        u |= w.u
        exp |= w.expansion
    return VNumberWitness(sum(w.value for w in parts), d, u, exp, tuple(parts))
