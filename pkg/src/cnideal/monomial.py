"""Squarefree monomial ideals as antichains of supports.

This is the algebraic cross-check for :mod:`cnideal.vnumber`: it computes the
v-number straight from its definition, sweeping squarefree monomials t_A in
order of degree and testing whether the colon ideal (N_G : t_A) is generated
by variables.  No dominating-set machinery is used on this path.

Restricting to squarefree monomials is sound because for a monomial ideal the
least degree is attained by a monomial f, and for a squarefree ideal the colon
by a monomial depends only on its support, so dropping exponents never hurts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bits import VertexSet, bit, from_indices, lex_key, members, minimal_sets
from .graph import Graph


class OracleUnavailable(RuntimeError):
    pass


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Ideal generated by t_g for g in ``gens``; kept minimalized.

    ``gens == ()`` is the zero ideal and ``gens == (0,)`` the unit ideal.
    """

    gens: tuple[VertexSet, ...]
    ambient_n: int

    @classmethod
    def generated_by(cls, gens, ambient_n: int) -> "SquarefreeIdeal":
        return cls(tuple(minimal_sets(gens)), ambient_n)

    @property
    def is_unit(self) -> bool:
        return self.gens == (0,)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, b: VertexSet) -> bool:
        """Whether the monomial t_B lies in the ideal."""
        return any(g & ~b == 0 for g in self.gens)

    def __le__(self, other: "SquarefreeIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def colon(self, a: VertexSet) -> "SquarefreeIdeal":
        return colon_by_subset(self, a)

    def __str__(self) -> str:
        if self.is_zero:
            return "<0>"
        if self.is_unit:
            return "<1>"
        return "<" + ", ".join("*".join(f"t{i}" for i in members(g)) for g in self.gens) + ">"


def variable_ideal(d: VertexSet, ambient_n: int) -> SquarefreeIdeal:
    """The prime ⟨D⟩ generated by the variables in ``d``."""
    return SquarefreeIdeal.generated_by([bit(v) for v in members(d)], ambient_n)


def closed_neighborhood_ideal(g: Graph) -> SquarefreeIdeal:
    return SquarefreeIdeal.generated_by(g.closed, g.n)


def colon_by_subset(ideal: SquarefreeIdeal, a: VertexSet) -> SquarefreeIdeal:
    """(I : t_A) for squarefree I: strip A from every generator, minimalize."""
    return SquarefreeIdeal.generated_by([g & ~a for g in ideal.gens], ideal.ambient_n)


def as_variable_prime(ideal: SquarefreeIdeal) -> VertexSet | None:
    """D when the ideal is ⟨D⟩ for a nonempty variable set D, else None."""
    if not ideal.gens or ideal.is_unit:
        return None
    d = 0
    for g in ideal.gens:
        if g & (g - 1):
            return None
        d |= g
    return d


def v_number_bruteforce(g: Graph, cap: int = 20) -> tuple[int, VertexSet, VertexSet]:
    """Smallest |A| with (N_G : t_A) a variable prime ⟨D⟩; returns (|A|, A, D).

    Subsets are visited by size, lexicographically within a size, so the
    witness is deterministic.
    """
    if g.n > cap:
        raise OracleUnavailable(f"oracle unavailable at this size: {g.n} vertices > cap {cap}")
    ideal = closed_neighborhood_ideal(g)
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            a = from_indices(combo)
            d = as_variable_prime(colon_by_subset(ideal, a))
            if d is not None:
                # a colon equal to ⟨D⟩ never involves variables of D
                assert a & d == 0, "witness meets its prime"
                return k, a, d
    raise AssertionError("no associated prime reached; the ideal must be zero")


def realized_primes(g: Graph, cap: int = 16) -> set[VertexSet]:
    """Every D with (N_G : t_A) = ⟨D⟩ for some squarefree t_A (full sweep)."""
    if g.n > cap:
        raise OracleUnavailable(f"oracle unavailable at this size: {g.n} vertices > cap {cap}")
    ideal = closed_neighborhood_ideal(g)
    found = set()
    for a in range(1 << g.n):
        d = as_variable_prime(colon_by_subset(ideal, a))
        if d is not None:
            found.add(d)
    return found


def associated_primes(g: Graph) -> list[VertexSet]:
    """Associated primes of N_G as variable sets: its minimal dominating sets.

    Each listed D is confirmed realized by the colon at N[U] \\ D for its
    v-number witness U.
    """
    from .domination import minimal_dominating_sets
    from .vnumber import v_number_local

    ideal = closed_neighborhood_ideal(g)
    primes = minimal_dominating_sets(g)
    for d in primes:
        w = v_number_local(g, d)
        if as_variable_prime(colon_by_subset(ideal, w.expansion)) != d:
            raise AssertionError(f"prime {sorted(members(d))} not realized by its witness")
    return sorted(primes, key=lex_key)
