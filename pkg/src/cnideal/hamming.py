"""q-ary Hamming codes as efficient dominating sets of Hamming graphs.

Field elements are the integers 0..q-1.  For prime q this is arithmetic mod
q.  For q = p^e the integer with base-p digits (c_{e-1} .. c_0) stands for
c_{e-1} x^{e-1} + ... + c_0 modulo a fixed irreducible polynomial:

    GF(4): x^2 + x + 1      GF(8): x^3 + x + 1      GF(9): x^2 + 1

Parity-check columns are the normalized projective points of GF(q)^r (first
nonzero entry 1) in systematic layout H = [A | I_r]: the identity occupies the
last r positions and A lists the remaining points, those with first entry 1
before those with first entry 0, each group in lexicographic order.  For
q = 2, r = 3 this gives the generator rows 1000101, 0100110, 0010111, 0001011.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb

from .bits import VertexSet, from_indices
from .graph import Graph, hamming_graph, is_prime_power, word_index

IRREDUCIBLE = {4: (2, [1, 1, 1]), 8: (2, [1, 0, 1, 1]), 9: (3, [1, 0, 1])}
EXPLICIT_LIMIT = 2 ** 20


class GF:
    """Addition and multiplication tables for a field of order q <= 9."""

    def __init__(self, q: int):
        if not is_prime_power(q) or q > 9:
            raise ValueError(f"unsupported field order {q}")
        self.q = q
        if q in IRREDUCIBLE:
            p, poly = IRREDUCIBLE[q]
        else:
            p, poly = q, None
        self.p = p
        self.e = 1
        while p ** self.e < q:
            self.e += 1
        self.add = [[self._add(a, b) for b in range(q)] for a in range(q)]
        self.mul = [[self._mul(a, b, poly) for b in range(q)] for a in range(q)]
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0) for a in range(q)]

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.e)]

    def _from_digits(self, digits: list[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(digits))

    def _add(self, a: int, b: int) -> int:
        if self.p == self.q:
            return (a + b) % self.q
        return self._from_digits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _mul(self, a: int, b: int, poly) -> int:
        if poly is None:
            return a * b % self.q
        p = self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (len(da) + len(db) - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        # poly is listed from the leading coefficient down
        e = len(poly) - 1
        low = list(reversed(poly))
        for top in range(len(prod) - 1, e - 1, -1):
            c = prod[top]
            if c:
                for i in range(e + 1):
                    prod[top - e + i] = (prod[top - e + i] - c * low[i]) % p
        return self._from_digits(prod[:e])

    def dot(self, u, v) -> int:
        acc = 0
        for a, b in zip(u, v):
            acc = self.add[acc][self.mul[a][b]]
        return acc

    def sum(self, u) -> int:
        acc = 0
        for a in u:
            acc = self.add[acc][a]
        return acc


@lru_cache(maxsize=None)
def galois_field(q: int) -> GF:
    return GF(q)


def hamming_length(q: int, r: int) -> int:
    return (q ** r - 1) // (q - 1)


def hamming_redundancy(m: int, q: int) -> int | None:
    """r >= 1 with m = (q^r - 1)/(q - 1), or None."""
    r = 1
    while hamming_length(q, r) < m:
        r += 1
    return r if hamming_length(q, r) == m else None


def hamming_distance(u, v) -> int:
    return sum(a != b for a, b in zip(u, v))


@dataclass(frozen=True)
class CodeParams:
    m: int
    k: int
    delta: int

    @property
    def t(self) -> int:
        return (self.delta - 1) // 2


@dataclass(frozen=True)
class HammingCode:
    q: int
    r: int
    parity_check: tuple[tuple[int, ...], ...]
    codewords: frozenset[tuple[int, ...]] | None

    @property
    def n(self) -> int:
        return hamming_length(self.q, self.r)

    @property
    def k(self) -> int:
        return self.n - self.r

    min_dist = 3

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.n, self.k, self.min_dist)

    @cached_property
    def size(self) -> int:
        return self.q ** self.k

    def as_strings(self) -> set[str]:
        return {"".join(map(str, c)) for c in self.codewords}

    def vertex_set(self) -> VertexSet:
        """Codewords as vertices of hamming_graph(n, q)."""
        return from_indices(word_index(c, self.q) for c in self.codewords)


def parity_check_columns(q: int, r: int) -> list[tuple[int, ...]]:
    points = []
    for v in itertools.product(range(q), repeat=r):
        nz = next((a for a in v if a), 0)
        if nz == 1:
            points.append(v)
    units = [tuple(int(i == j) for i in range(r)) for j in range(r)]
    rest = [v for v in points if v not in units]
    rest.sort(key=lambda v: (v[0] != 1, v))
    return rest + units


def hamming_code(q: int, r: int) -> HammingCode:
    """H_q(r): the [n, n-r, 3] code with the parity-check layout described above.

    The codeword set is listed only when q^(n-r) <= 2^20.
    """
    if r < 2:
        raise ValueError("redundancy must be at least 2")
    field = galois_field(q)
    cols = parity_check_columns(q, r)
    n = len(cols)
    k = n - r
    h = tuple(tuple(col[i] for col in cols) for i in range(r))
    if q ** k > EXPLICIT_LIMIT:
        return HammingCode(q, r, h, None)
    words = set()
    for msg in itertools.product(range(q), repeat=k):
        # row i of H reads A_i . msg + parity_i = 0
        parity = tuple(field.neg[field.dot(h[i][:k], msg)] for i in range(r))
        words.add(msg + parity)
    return HammingCode(q, r, h, frozenset(words))


def is_perfect(codewords, m: int, q: int, t: int) -> bool:
    """Sphere-packing equality and pairwise-disjoint radius-t balls, both checked."""
    words = list(codewords)
    ball = sum(comb(m, i) * (q - 1) ** i for i in range(t + 1))
    if len(words) * ball != q ** m:
        return False
    # balls are pairwise disjoint iff no word is reached twice
    covered = set()
    for w in words:
        for x in _ball(tuple(w), t, q):
            if x in covered:
                return False
            covered.add(x)
    return True


def _ball(word: tuple[int, ...], t: int, q: int):
    yield word
    for k in range(1, t + 1):
        for pos in itertools.combinations(range(len(word)), k):
            choices = [[a for a in range(q) if a != word[p]] for p in pos]
            for vals in itertools.product(*choices):
                w = list(word)
                for p, a in zip(pos, vals):
                    w[p] = a
                yield tuple(w)


def syndrome_ok(code: HammingCode, word) -> bool:
    field = galois_field(code.q)
    return all(field.dot(row, word) == 0 for row in code.parity_check)


def hamming_graph_invariants(m: int, q: int) -> dict:
    """Closed forms for Γ(m, q): domination number (exact at Hamming lengths,
    otherwise the strict sphere-packing lower bound), independence and cover
    numbers."""
    r = hamming_redundancy(m, q)
    if r is not None:
        gamma, exact = q ** (m - r), True
    else:
        gamma, exact = q ** m // (1 + m * (q - 1)) + 1, False
    return {
        "gamma": gamma,
        "gamma_exact": exact,
        "indep": q ** (m - 1),
        "tau": q ** (m - 1) * (q - 1),
    }


def v_number_bounds_hamming(q: int, r: int) -> dict:
    if r < 2:
        raise ValueError("redundancy must be at least 2")
    n = hamming_length(q, r)
    return {"n": n, "lower": q ** (n - r), "upper": q ** (n - 1) * (q - 1)}


def sum_zero_words(m: int, q: int) -> list[tuple[int, ...]]:
    """Words whose entries sum to 0 in GF(q): a maximum independent set of Γ(m, q)."""
    field = galois_field(q)
    return [w for w in itertools.product(range(q), repeat=m) if field.sum(w) == 0]


def code_graph(code: HammingCode) -> Graph:
    return hamming_graph(code.n, code.q)
