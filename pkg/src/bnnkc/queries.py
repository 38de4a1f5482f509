"""The query suite over prototype-pair inputs.

Consistency, validity, the implicant check, clausal entailment and model
enumeration run in polynomial time.  Equivalence, sentential entailment and
model counting are NP-hard for this language, so they are provided as
exhaustive oracles restricted to exhaustive-scale dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BnnRep,
    BoolVec,
    _classify,
    negate,
    require_exhaustive,
)
from .errors import DimensionMismatch, InvariantViolation


@dataclass
class QueryStats:
    """Mutable instrumentation counters threaded through query calls.

    ``distance_evals`` counts projection-to-positive-prototype distance
    computations inside the implicant check (the nested-loop work that
    dominates its O(n |P| |N|) runtime); ``im_calls`` counts implicant tests,
    which bounds the work of model enumeration.
    """

    im_calls: int = 0
    distance_evals: int = 0


@dataclass(frozen=True)
class _LiteralSet:
    literals: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        lits = frozenset(int(l) for l in self.literals)
        object.__setattr__(self, "literals", lits)
        if 0 in lits:
            raise InvariantViolation("literal 0 does not name a variable")
        clash = sorted(abs(l) for l in lits if -l in lits)
        if clash:
            raise InvariantViolation(f"complementary literals on variable(s) {clash}")

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(abs(l) for l in self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    @property
    def sorted_literals(self) -> tuple[int, ...]:
        return tuple(sorted(self.literals, key=lambda l: (abs(l), l)))

    def masks(self, n: int) -> tuple[int, int]:
        """(fixed, value) coordinate masks for dimension n."""
        fixed = value = 0
        for l in self.literals:
            v = abs(l)
            if v > n:
                raise InvariantViolation(f"variable x{v} outside 1..{n}")
            bit = 1 << (n - v)
            fixed |= bit
            if l > 0:
                value |= bit
        return fixed, value


class Term(_LiteralSet):
    """A consistent conjunction of literals; empty means the whole cube.

    Literals are signed variable indices: ``3`` fixes x3 = 1, ``-3`` fixes
    x3 = 0.
    """


class Clause(_LiteralSet):
    """A consistent disjunction of literals; empty is never satisfied."""

    def negated(self) -> Term:
        """The term equivalent to the clause's complement (De Morgan)."""
        return Term(frozenset(-l for l in self.literals))


def co(rep: BnnRep) -> bool:
    """Consistency: some model exists, equivalently P is non-empty."""
    return bool(rep.pos)


def va(rep: BnnRep) -> bool:
    """Validity: every vector is a model, equivalently N is empty."""
    return not rep.neg


def project(q: BoolVec, t: Term) -> BoolVec:
    """Overwrite the coordinates fixed by the term with their forced values."""
    fixed, value = t.masks(q.n)
    return BoolVec(q.n, (q.mask & ~fixed) | value)


def _im_masks(
    n: int,
    pos_masks: tuple[int, ...],
    neg_masks: tuple[int, ...],
    fixed: int,
    value: int,
    stats: QueryStats | None = None,
) -> bool:
    if stats is not None:
        stats.im_calls += 1
    for q in neg_masks:
        off = (q ^ value) & fixed
        if off == 0:
            return False  # negative prototype inside the sub-cube
        qp = (q & ~fixed) | value  # projection onto the sub-cube
        best: int | None = None
        for p in pos_masks:
            if stats is not None:
                stats.distance_evals += 1
            d = (p ^ qp).bit_count()
            if best is None or d < best:
                best = d
        if best is None or off.bit_count() <= best:
            return False  # the projection is itself a non-model
    return True


def im(rep: BnnRep, t: Term, stats: QueryStats | None = None) -> bool:
    """Implicant check: does the term imply the represented function?

    Every negative prototype is projected into the term's sub-cube; if some
    prototype sits inside the sub-cube, or is at most as far from its
    projection as every positive prototype, that projection is a non-model
    inside the sub-cube and the answer is no.  Otherwise the sub-cube contains
    models only.  Runs in O(n |P| |N|).
    """
    fixed, value = t.masks(rep.n)
    return _im_masks(rep.n, rep._pos_masks, rep._neg_masks, fixed, value, stats)


def ce(rep: BnnRep, c: Clause, stats: QueryStats | None = None) -> bool:
    """Clausal entailment: does the represented function imply the clause?

    f implies C exactly when the complement of C implies the complement of f,
    and complementing a pair just swaps its prototype sets, so this is one
    implicant check on the swapped pair.
    """
    return im(negate(rep), c.negated(), stats)


def me(rep: BnnRep, limit: int | None = None, stats: QueryStats | None = None) -> list[BoolVec]:
    """Enumerate models in lexicographic order.

    Depth-first over variables x_1..x_n, 0-branch before 1-branch; a branch is
    descended into only when its sub-function is not identically zero, which
    is one implicant test on the complemented pair per candidate branch.  The
    number of implicant tests is therefore linear in n times the number of
    emitted models.  With ``limit`` the search stops after that many models.
    """
    if limit is not None and limit <= 0:
        return []
    n = rep.n
    cpos, cneg = rep._neg_masks, rep._pos_masks  # prototype sets of the complement
    out: list[BoolVec] = []
    if _im_masks(n, cpos, cneg, 0, 0, stats):
        return out  # identically zero
    stack: list[tuple[int, int, int]] = [(0, 0, 0)]  # (depth, fixed, value), known non-zero
    while stack:
        depth, fixed, value = stack.pop()
        if depth == n:
            out.append(BoolVec(n, value))
            if limit is not None and len(out) >= limit:
                return out
            continue
        bit = 1 << (n - depth - 1)
        child_fixed = fixed | bit
        # push the 1-branch first so the 0-branch is explored first
        for child_value in (value | bit, value):
            if not _im_masks(n, cpos, cneg, child_fixed, child_value, stats):
                stack.append((depth + 1, child_fixed, child_value))
    return out


def ct_enumerate(rep: BnnRep, stats: QueryStats | None = None) -> int:
    """Exact model count by enumeration; cost is proportional to the count."""
    return len(me(rep, stats=stats))


def eq(a: BnnRep, b: BnnRep) -> BoolVec | None:
    """Equivalence oracle: the first vector where the pairs disagree, or None.

    Exhaustive lexicographic scan, so the returned counterexample is the
    smallest witness.
    """
    if a.n != b.n:
        raise DimensionMismatch(f"cannot compare dimensions {a.n} and {b.n}")
    require_exhaustive(a.n, "the equivalence check")
    for m in range(1 << a.n):
        va_ = _classify(a._pos_masks, a._neg_masks, m, a.n)
        vb_ = _classify(b._pos_masks, b._neg_masks, m, b.n)
        if va_ != vb_:
            return BoolVec(a.n, m)
    return None


def se(a: BnnRep, b: BnnRep) -> BoolVec | None:
    """Sentential entailment oracle: does a entail b?

    Returns the first vector classified positive by ``a`` and negative by
    ``b``, or None when every model of ``a`` is a model of ``b``.
    """
    if a.n != b.n:
        raise DimensionMismatch(f"cannot compare dimensions {a.n} and {b.n}")
    require_exhaustive(a.n, "the entailment check")
    for m in range(1 << a.n):
        if (
            _classify(a._pos_masks, a._neg_masks, m, a.n) == 1
            and _classify(b._pos_masks, b._neg_masks, m, b.n) == 0
        ):
            return BoolVec(a.n, m)
    return None
