"""Generators for witness families and hardness gadgets.

Covers the parity, majority and threshold families, the XOR-matching and
exact-half witnesses whose models are all isolated, and the half-size
independent set machinery behind the equivalence and counting hardness
results.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .core import BnnRep, BoolVec, FunctionTable, require_exhaustive
from .errors import InvariantViolation, VertexCountTooLarge

#: Vertex cap for brute-force independent-set counting.
HALF_IS_MAX_VERTICES = 24


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..vertices."""

    vertices: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if self.vertices < 1:
            raise InvariantViolation("a graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvariantViolation(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > self.vertices:
                raise InvariantViolation(f"edge {e} outside 1..{self.vertices}")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))


@dataclass(frozen=True)
class Cnf3:
    """CNF with one to three literals per clause; repetition inside a clause
    is allowed, complementary literals are not."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise InvariantViolation("a formula needs at least one variable")
        norm = []
        for clause in self.clauses:
            lits = tuple(sorted((int(l) for l in clause), key=lambda l: (abs(l), l)))
            if not 1 <= len(lits) <= 3:
                raise InvariantViolation(f"clause {clause!r} must have 1 to 3 literals")
            for l in lits:
                if l == 0 or abs(l) > self.num_vars:
                    raise InvariantViolation(f"literal {l} outside variables 1..{self.num_vars}")
                if -l in lits:
                    raise InvariantViolation(f"clause {clause!r} contains complementary literals")
            norm.append(lits)
        object.__setattr__(self, "clauses", tuple(norm))


def gen_parity(n: int) -> BnnRep:
    """Parity needs every vector as a prototype: odd weights positive, even
    weights negative."""
    if n < 1:
        raise InvariantViolation("dimension must be at least 1")
    require_exhaustive(n, "parity generation")
    pos = [BoolVec(n, m) for m in range(1 << n) if m.bit_count() % 2 == 1]
    neg = [BoolVec(n, m) for m in range(1 << n) if m.bit_count() % 2 == 0]
    return BnnRep(n, pos, neg)


def gen_majority(n: int) -> BnnRep:
    """Non-strict majority: weight at least ceil(n/2).

    Odd n: all-ones against all-zeros, size 2.  Even n = 2k: the k+1 vectors
    of weight 2k-1 whose zero coordinate sits at positions 1..k+1, against
    all-zeros, size n/2 + 2.
    """
    if n < 1:
        raise InvariantViolation("dimension must be at least 1")
    ones = (1 << n) - 1
    if n % 2 == 1:
        return BnnRep(n, (BoolVec(n, ones),), (BoolVec(n, 0),))
    k = n // 2
    pos = [BoolVec(n, ones ^ (1 << (n - i))) for i in range(1, k + 2)]
    return BnnRep(n, pos, (BoolVec(n, 0),))


def gen_threshold(n: int, t: int) -> FunctionTable:
    """Model table of the unit-weight threshold function: weight >= t."""
    if not 1 <= t <= n:
        raise InvariantViolation(f"threshold {t} outside 1..{n}")
    require_exhaustive(n, "threshold generation")
    return FunctionTable.from_masks(n, (m for m in range(1 << n) if m.bit_count() >= t))


def gen_xor_match(n: int) -> FunctionTable:
    """Conjunction of x_i xor y_i over 2n variables ordered x_1..x_n, y_1..y_n.

    2^n models (pick which side of each pair carries the 1), every one of
    them isolated: flipping any bit breaks its pair.
    """
    if n < 1:
        raise InvariantViolation("pair count must be at least 1")
    require_exhaustive(2 * n, "xor-match generation")
    masks = []
    for sel in range(1 << n):
        m = 0
        for i in range(n):
            xi = (sel >> (n - 1 - i)) & 1
            if xi:
                m |= 1 << (2 * n - 1 - i)  # coordinate i+1
            else:
                m |= 1 << (n - 1 - i)  # coordinate n+i+1
        masks.append(m)
    return FunctionTable.from_masks(2 * n, masks)


def xor_match_cnf(n: int) -> Cnf3:
    """The 2n-clause CNF companion of :func:`gen_xor_match`:
    (x_i or y_i) and (not x_i or not y_i) for each pair."""
    if n < 1:
        raise InvariantViolation("pair count must be at least 1")
    clauses = []
    for i in range(1, n + 1):
        clauses.append((i, n + i))
        clauses.append((-i, -(n + i)))
    return Cnf3(2 * n, tuple(clauses))


def gen_exact_half(n: int) -> FunctionTable:
    """Exactly half the 2n inputs set: all weight-n vectors of the 2n-cube.

    The conjunction of non-strict majority and minority; all C(2n, n) models
    are isolated, since flipping any bit moves the weight off n.
    """
    if n < 1:
        raise InvariantViolation("half-size must be at least 1")
    require_exhaustive(2 * n, "exact-half generation")
    return FunctionTable.from_masks(
        2 * n, (m for m in range(1 << (2 * n)) if m.bit_count() == n)
    )


class HsisPair(NamedTuple):
    f: BnnRep
    h: BnnRep


def gen_hsis_pair(g: Graph) -> HsisPair:
    """Equivalence-hardness pair for a graph on 2k vertices (k > 2).

    ``f`` is the non-strict majority on 2k variables: all weight-(2k-1)
    vectors positive against the all-zeros vector.  ``h`` keeps the all-ones
    vector and one weight-(2k-2) prototype per edge (zeros at the endpoints)
    positive, against all weight-1 vectors.  The two agree off the middle
    level, and on it ``h`` flips exactly the vectors whose zero set is an
    independent set of size k, so the pair is equivalent iff the graph has no
    half-size independent set; counterexamples have weight exactly k.
    """
    nv = g.vertices
    if nv % 2 == 1:
        raise InvariantViolation("the construction needs an even vertex count")
    k = nv // 2
    if k <= 2:
        raise InvariantViolation("the construction needs more than 4 vertices (k > 2)")
    ones = (1 << nv) - 1
    f = BnnRep(
        nv,
        [BoolVec(nv, ones ^ (1 << b)) for b in range(nv)],
        (BoolVec(nv, 0),),
    )
    h_pos = [BoolVec(nv, ones)]
    for u, v in g.sorted_edges:
        h_pos.append(BoolVec(nv, ones ^ (1 << (nv - u)) ^ (1 << (nv - v))))
    h_neg = [BoolVec(nv, 1 << b) for b in range(nv)]
    return HsisPair(f, BnnRep(nv, h_pos, h_neg))


def count_half_is(g: Graph) -> int:
    """Exact number of independent sets of size vertices/2, by enumeration."""
    nv = g.vertices
    if nv > HALF_IS_MAX_VERTICES:
        raise VertexCountTooLarge(
            f"{nv} vertices exceed the brute-force limit {HALF_IS_MAX_VERTICES}"
        )
    if nv % 2 == 1:
        raise InvariantViolation("half-size needs an even vertex count")
    adj = [0] * (nv + 1)
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    count = 0
    for subset in combinations(range(1, nv + 1), nv // 2):
        chosen = 0
        for v in subset:
            if adj[v] & chosen:
                break
            chosen |= 1 << v
        else:
            count += 1
    return count


def gen_hsis_from_3sat(phi: Cnf3) -> Graph:
    """Reduce a 3-CNF to a half-size independent set instance.

    One triangle per clause (shorter clauses are padded by repeating their
    first literal as distinct vertices), edges between vertices carrying
    complementary literals, and one padding (isolated) vertex per clause:
    4m vertices in total, and the formula is satisfiable iff the graph has an
    independent set of exactly 2m vertices.
    """
    m = len(phi.clauses)
    if m == 0:
        raise InvariantViolation("the reduction needs at least one clause")
    lits: list[int] = []
    for clause in phi.clauses:
        padded = list(clause) + [clause[0]] * (3 - len(clause))
        lits.extend(padded)
    edges = set()
    for j in range(m):
        base = 3 * j
        edges.update({(base + 1, base + 2), (base + 1, base + 3), (base + 2, base + 3)})
    for a in range(len(lits)):
        for b in range(a + 1, len(lits)):
            if lits[a] == -lits[b]:
                edges.add((a + 1, b + 1))
    return Graph(4 * m, frozenset(edges))
