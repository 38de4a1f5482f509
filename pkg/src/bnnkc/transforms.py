"""Conditioning and forgetting by model-set recompilation.

Neither transformation admits a polynomial-time algorithm on this language
(the minimum representation can blow up exponentially), so both operate
semantically: compute the transformed model set over the surviving variables
and recompile through the models-plus-boundary construction.  Work is
exponential only in the number of surviving variables.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .compilers import mods_to_bnn
from .core import BnnRep, FunctionTable, _classify, require_exhaustive
from .errors import DegenerateDimension, InvariantViolation
from .queries import Term, _im_masks


class ReducedRep(NamedTuple):
    """A recompiled representation over re-indexed surviving variables.

    ``kept[j]`` is the original index of new variable j+1; surviving
    variables keep their relative order.
    """

    rep: BnnRep
    kept: tuple[int, ...]


def _survivors(n: int, dropped: frozenset[int]) -> tuple[int, ...]:
    for v in dropped:
        if not 1 <= v <= n:
            raise InvariantViolation(f"variable x{v} outside 1..{n}")
    kept = tuple(v for v in range(1, n + 1) if v not in dropped)
    if not kept:
        raise DegenerateDimension(
            "all variables would be eliminated; evaluate the representation instead"
        )
    return kept


def _embedding(n: int, kept: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    n2 = len(kept)
    return tuple((n2 - 1 - j, n - kept[j]) for j in range(n2))


def condition(rep: BnnRep, t: Term) -> ReducedRep:
    """Restrict the function by fixing the term's variables.

    The model set of the restriction is computed by evaluating the original
    pair on every extension, then recompiled; the result is a valid pair on
    n - |t| variables.
    """
    kept = _survivors(rep.n, t.variables)
    n2 = len(kept)
    require_exhaustive(n2, "conditioning")
    _, value = t.masks(rep.n)
    spread = _embedding(rep.n, kept)
    pos, neg = rep._pos_masks, rep._neg_masks
    models = []
    for m2 in range(1 << n2):
        x = value
        for src, dst in spread:
            if (m2 >> src) & 1:
                x |= 1 << dst
        if _classify(pos, neg, x, rep.n) == 1:
            models.append(m2)
    return ReducedRep(mods_to_bnn(FunctionTable.from_masks(n2, models)), kept)


def forget(rep: BnnRep, variables: Iterable[int]) -> ReducedRep:
    """Existentially quantify the given variables.

    A surviving assignment is a model iff its sub-cube contains a model of
    the original function, i.e. the restriction there is not identically
    zero; that is one implicant test on the complemented pair per surviving
    assignment, so the original dimension only enters polynomially.
    """
    dropped = frozenset(int(v) for v in variables)
    kept = _survivors(rep.n, dropped)
    n2 = len(kept)
    require_exhaustive(n2, "forgetting")
    fixed = 0
    for v in kept:
        fixed |= 1 << (rep.n - v)
    spread = _embedding(rep.n, kept)
    cpos, cneg = rep._neg_masks, rep._pos_masks  # prototype sets of the complement
    models = []
    for m2 in range(1 << n2):
        value = 0
        for src, dst in spread:
            if (m2 >> src) & 1:
                value |= 1 << dst
        if not _im_masks(rep.n, cpos, cneg, fixed, value):
            models.append(m2)
    return ReducedRep(mods_to_bnn(FunctionTable.from_masks(n2, models)), kept)
