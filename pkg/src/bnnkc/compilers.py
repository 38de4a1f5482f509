"""Compilers between representation languages.

Two constructive directions exist at polynomial size: an explicit model set
compiles to a models-plus-boundary prototype pair, and any prototype pair
compiles to an unrestricted binary decision diagram of quadratic size built
from pairwise distance-comparison gadgets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BnnRep,
    BoolVec,
    FunctionTable,
    N_MAX,
    neighborhood,
)
from .errors import DimensionMismatch, DimensionTooLarge, InvariantViolation


@dataclass(frozen=True)
class Terminal:
    """Sink of a decision diagram carrying a constant value."""

    value: int

    def __post_init__(self) -> None:
        if self.value not in (0, 1):
            raise InvariantViolation(f"terminal value must be 0 or 1, got {self.value!r}")

    def __repr__(self) -> str:
        return f"T{self.value}"


T0 = Terminal(0)
T1 = Terminal(1)

Child = "int | Terminal"


@dataclass(frozen=True)
class BddNode:
    """One decision node: branch on x_var, lo on 0 and hi on 1."""

    var: int
    lo: int | Terminal
    hi: int | Terminal


@dataclass(frozen=True)
class Bdd:
    """Unrestricted binary decision diagram.

    A node's id is its position in ``nodes``; every edge points to a strictly
    larger id or to a terminal, so the table order is itself topological and
    the graph is acyclic by construction.  A variable may repeat along a path
    (this is the unrestricted language, not the free or ordered variants).
    Every node must be reachable from the root.
    """

    n: int
    nodes: tuple[BddNode, ...] = ()
    root: int | Terminal = T0

    def __post_init__(self) -> None:
        nodes = tuple(self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if self.n < 1:
            raise InvariantViolation("dimension must be at least 1")
        if self.n > N_MAX:
            raise DimensionTooLarge(f"dimension {self.n} exceeds N_MAX={N_MAX}")
        for idx, node in enumerate(nodes):
            if not 1 <= node.var <= self.n:
                raise InvariantViolation(f"node {idx} tests x{node.var}, outside 1..{self.n}")
            for child in (node.lo, node.hi):
                if isinstance(child, Terminal):
                    continue
                if not isinstance(child, int) or not idx < child < len(nodes):
                    raise InvariantViolation(
                        f"node {idx} child {child!r} must be a terminal or a strictly later id"
                    )
        if isinstance(self.root, Terminal):
            if nodes:
                raise InvariantViolation("terminal root leaves the node table unreachable")
            return
        if not isinstance(self.root, int) or not 0 <= self.root < len(nodes):
            raise InvariantViolation(f"root {self.root!r} is not a node id or terminal")
        seen: set[int] = set()
        stack = [self.root]
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            for child in (nodes[i].lo, nodes[i].hi):
                if not isinstance(child, Terminal):
                    stack.append(child)
        if len(seen) != len(nodes):
            raise InvariantViolation(f"{len(nodes) - len(seen)} node(s) unreachable from root")


def bdd_eval(b: Bdd, x: BoolVec) -> int:
    """Follow the root-to-terminal path selected by x and return its value."""
    if x.n != b.n:
        raise DimensionMismatch(f"vector dimension {x.n} != diagram dimension {b.n}")
    cur = b.root
    mask, n = x.mask, x.n
    while not isinstance(cur, Terminal):
        node = b.nodes[cur]
        cur = node.hi if (mask >> (n - node.var)) & 1 else node.lo
    return cur.value


def bdd_node_count(b: Bdd) -> int:
    """Decision nodes reachable from the root (all of them, by the type
    invariant); terminals are not counted."""
    return len(b.nodes)


def mods_to_bnn(table: FunctionTable) -> BnnRep:
    """Compile an explicit model set into a models-plus-boundary pair.

    The models become the positive prototypes and their distance-one
    neighborhood the negative ones; any non-model then has a boundary
    prototype strictly closer than every model, because a shortest path from
    it to the nearest model crosses the boundary.  At most |M| + n|M|
    prototypes.  Constants collapse to a single prototype: the full cube
    (detected by an empty boundary) to its smallest member as the lone
    positive, the empty set to the all-zeros vector as the lone negative.
    """
    n = table.n
    if not table.models:
        return BnnRep(n, (), (BoolVec(n, 0),))
    boundary = neighborhood(table.models, n)
    if not boundary:
        return BnnRep(n, (min(table.models),), ())
    return BnnRep(n, tuple(table.models), tuple(boundary))


def _gadget_nodes(
    pi: BoolVec,
    pj: BoolVec,
    base: int,
    exit_i: int | Terminal,
    exit_j: int | Terminal,
) -> list[BddNode]:
    """Node table of one comparison gadget, with ids offset by ``base``.

    The first phase accumulates a = d(x, pi) over coordinates 1..n (level t
    holds one node per partial count).  The second phase accumulates
    b = d(x, pj) while only the surplus m = a - b matters, exiting as soon as
    the comparison is decided: winner ``pi`` once b >= a (m hits 0), winner
    ``pj`` once b plus the remaining coordinates cannot reach a (m > n - t).
    Ties therefore go to ``pi``.  Total n(n+1) nodes, within the
    (n+1)^2 - 1 budget.
    """
    n = pi.n
    half = n * (n + 1) // 2

    def p1(t: int, c: int) -> int:
        return base + t * (t - 1) // 2 + c

    def p2(t: int, m: int) -> int:
        return base + half + (t - 1) * (n + 1) - t * (t - 1) // 2 + (m - 1)

    def entry(a: int) -> int | Terminal:
        return exit_i if a == 0 else p2(1, a)

    nodes: list[BddNode] = []
    for t in range(1, n + 1):
        for c in range(t):
            on_match = p1(t + 1, c) if t < n else entry(c)
            on_diff = p1(t + 1, c + 1) if t < n else entry(c + 1)
            hi, lo = (on_match, on_diff) if pi.bit(t) else (on_diff, on_match)
            nodes.append(BddNode(t, lo, hi))
    for t in range(1, n + 1):
        for m in range(1, n - t + 2):
            on_match = exit_j if m > n - t else p2(t + 1, m)
            on_diff = exit_i if m == 1 else p2(t + 1, m - 1)
            hi, lo = (on_match, on_diff) if pj.bit(t) else (on_diff, on_match)
            nodes.append(BddNode(t, lo, hi))
    return nodes


def comparison_gadget(pi: BoolVec, pj: BoolVec) -> Bdd:
    """Standalone gadget diagram: value 1 iff pi is at most as close as pj."""
    if pi.n != pj.n:
        raise DimensionMismatch(f"prototype dimensions differ: {pi.n} vs {pj.n}")
    return Bdd(pi.n, tuple(_gadget_nodes(pi, pj, 0, T1, T0)), 0)


def bnn_to_bdd(rep: BnnRep) -> Bdd:
    """Compile a prototype pair into an equivalent decision diagram.

    Prototypes are ranked positives first, then negatives (each set in
    lexicographic order).  A triangle of comparison gadgets maintains a
    running champion: level j-1 challenges each possible champion with
    prototype j, and after the last level the champion's class becomes the
    terminal.  Each gadget re-derives both distances coordinate by
    coordinate, so ids never point backwards and the table stays
    topologically ordered.  Size: k(k-1)/2 gadgets of n(n+1) nodes each.

    Ties inside a gadget go to the lower-ranked prototype.  For a
    semantically valid pair all nearest prototypes share a class, so
    tie-breaking cannot change the computed function; an ill-defined pair
    still compiles, to its tie-broken function.
    """
    protos = rep.pos + rep.neg
    k = len(protos)
    npos = len(rep.pos)

    def tau(w: int) -> Terminal:
        return T1 if w <= npos else T0

    if k == 1:
        return Bdd(rep.n, (), tau(1))
    n = rep.n
    size = n * (n + 1)

    def gadget_root(i: int, j: int) -> int:
        return ((j - 2) * (j - 1) // 2 + (i - 1)) * size

    nodes: list[BddNode] = []
    for j in range(2, k + 1):
        for i in range(1, j):
            if j == k:
                exit_i: int | Terminal = tau(i)
                exit_j: int | Terminal = tau(j)
            else:
                exit_i = gadget_root(i, j + 1)
                exit_j = gadget_root(j, j + 1)
            nodes.extend(_gadget_nodes(protos[i - 1], protos[j - 1], gadget_root(i, j), exit_i, exit_j))
    return Bdd(n, tuple(nodes), 0)
