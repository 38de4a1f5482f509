"""Lower bounds from the hypercube component structure, plus an exact
minimum-size search for tiny dimensions.

Any representation needs a positive prototype in every connected component of
the model-induced subgraph (a component without one would be classified
through outside prototypes, but its boundary vertices would then tie or flip),
and symmetrically for non-models; isolated vectors are therefore forced
prototypes.  Summing both sides gives a lower bound on the minimum size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .core import BnnRep, BoolVec, FunctionTable, neighborhood
from .errors import DimensionTooLarge

#: Search-space bound for the exact minimizer: 3^(2**n) candidate pairs.
MIN_BNN_MAX_N = 4

_INF = float("inf")


@dataclass(frozen=True)
class ComponentReport:
    """Connected components of the model and non-model induced subgraphs.

    Each component is a sorted tuple; components are ordered by smallest
    member.  Isolated vectors are the members of singleton components.
    """

    positive_components: tuple[tuple[BoolVec, ...], ...]
    negative_components: tuple[tuple[BoolVec, ...], ...]
    isolated_positive: tuple[BoolVec, ...]
    isolated_negative: tuple[BoolVec, ...]

    @property
    def positive_count(self) -> int:
        return len(self.positive_components)

    @property
    def negative_count(self) -> int:
        return len(self.negative_components)


def _mask_components(masks: set[int], n: int) -> list[list[int]]:
    comps: list[list[int]] = []
    left = set(masks)
    while left:
        start = min(left)
        seen = {start}
        stack = [start]
        while stack:
            m = stack.pop()
            for i in range(n):
                peer = m ^ (1 << i)
                if peer in left and peer not in seen:
                    seen.add(peer)
                    stack.append(peer)
        left -= seen
        comps.append(sorted(seen))
    comps.sort(key=lambda c: c[0])
    return comps


def components(f: FunctionTable) -> ComponentReport:
    """Decompose both induced subgraphs of the hypercube graph."""
    n = f.n
    models = set(f.model_masks)
    non_models = set(range(1 << n)) - models
    pos = _mask_components(models, n)
    neg = _mask_components(non_models, n)

    def wrap(comps: list[list[int]]) -> tuple[tuple[BoolVec, ...], ...]:
        return tuple(tuple(BoolVec(n, m) for m in comp) for comp in comps)

    def isolated(comps: list[list[int]]) -> tuple[BoolVec, ...]:
        return tuple(BoolVec(n, comp[0]) for comp in comps if len(comp) == 1)

    return ComponentReport(wrap(pos), wrap(neg), isolated(pos), isolated(neg))


def bnn_lower_bound(f: FunctionTable) -> int:
    """Component count of both sides summed; never exceeds the minimum size."""
    report = components(f)
    return report.positive_count + report.negative_count


class MinBnn(NamedTuple):
    size: int
    rep: BnnRep


def min_bnn(f: FunctionTable) -> MinBnn:
    """Exact minimum prototype count, with a witness pair.

    Candidates are ordered by total size, then positive count, then
    lexicographically by negative and positive sets, and the first pair whose
    truth table equals ``f`` wins (the minimum size is the contract; the
    witness is one of possibly many, fixed for reproducibility).  Three sound
    restrictions keep the space tractable without
    changing the answer: prototypes must classify to their own class, so
    positives range over models and negatives over non-models; isolated
    vectors are prototypes in every representation, so they are forced into
    each candidate; and sizes below the component lower bound are skipped.
    The models-plus-boundary pair is always feasible, so the search
    terminates.
    """
    if f.n > MIN_BNN_MAX_N:
        raise DimensionTooLarge(
            f"exact minimization searches 3^(2^{f.n}) pairs; limit is n <= {MIN_BNN_MAX_N}"
        )
    n = f.n
    total = 1 << n
    model_set = set(f.model_masks)
    report = components(f)
    forced_p = sorted(v.mask for v in report.isolated_positive)
    forced_n = sorted(v.mask for v in report.isolated_negative)
    pool_p = sorted(model_set - set(forced_p))
    pool_n = sorted(set(range(total)) - model_set - set(forced_n))

    if not model_set:
        upper = 1
    elif len(model_set) == total:
        upper = 1
    else:
        upper = len(model_set) + len(neighborhood(f.models, n))
    floor = max(
        1,
        report.positive_count + report.negative_count,
        len(forced_p) + len(forced_n),
    )

    values = [1 if m in model_set else 0 for m in range(total)]

    def valid(p_masks: list[int], n_min: list[int | float]) -> bool:
        for x in range(total):
            dn = n_min[x]
            dp: int | float = _INF
            for p in p_masks:
                d = (x ^ p).bit_count()
                if d < dp:
                    dp = d
            if dp == dn or (dp < dn) != (values[x] == 1):
                return False
        return True

    for s in range(floor, upper + 1):
        for p_count in range(s + 1):
            n_count = s - p_count
            if not len(forced_p) <= p_count <= len(forced_p) + len(pool_p):
                continue
            if not len(forced_n) <= n_count <= len(forced_n) + len(pool_n):
                continue
            for extra_n in combinations(pool_n, n_count - len(forced_n)):
                n_masks = sorted(forced_n + list(extra_n))
                n_min: list[int | float] = [
                    min(((x ^ q).bit_count() for q in n_masks), default=_INF)
                    for x in range(total)
                ]
                for extra_p in combinations(pool_p, p_count - len(forced_p)):
                    p_masks = sorted(forced_p + list(extra_p))
                    if valid(p_masks, n_min):
                        rep = BnnRep(
                            n,
                            tuple(BoolVec(n, m) for m in p_masks),
                            tuple(BoolVec(n, m) for m in n_masks),
                        )
                        return MinBnn(s, rep)
    raise AssertionError("unreachable: the models-plus-boundary pair is always feasible")
