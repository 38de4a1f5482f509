"""Core types for Boolean nearest-neighbor function representations.

A function is described by a pair of disjoint prototype sets (positive and
negative) over the n-dimensional Boolean hypercube; the value of a vector is
the class of its strictly nearest prototype under Hamming distance.  A
distance tie means the pair does not represent any function at that point,
which surfaces as :class:`~bnnkc.errors.TieError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    InvariantViolation,
    TieError,
)

#: Dimension cap for polynomial-time operations.
N_MAX = 4096

#: Dimension cap for operations that sweep all 2**n vectors.  Overridable at
#: runtime (the CLI exposes --max-n and the BNNKC_MAX_N environment variable).
EXH_MAX = 24

_INF = float("inf")


def require_exhaustive(n: int, what: str) -> None:
    """Reject dimensions too large for a full 2**n sweep."""
    if n > EXH_MAX:
        raise DimensionTooLarge(
            f"{what} sweeps 2^{n} vectors; the exhaustive limit is n <= {EXH_MAX}"
        )


@dataclass(frozen=True, order=True)
class BoolVec:
    """An immutable Boolean vector of fixed dimension.

    Coordinates are 1-based and coordinate 1 is the leftmost character of the
    textual form.  ``mask`` packs the coordinates so that integer order equals
    lexicographic order of the bitstrings, which makes sorting canonical.
    """

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvariantViolation("dimension must be at least 1")
        if self.n > N_MAX:
            raise DimensionTooLarge(f"dimension {self.n} exceeds N_MAX={N_MAX}")
        if not 0 <= self.mask < (1 << self.n):
            raise InvariantViolation(f"mask {self.mask} does not fit in {self.n} bits")

    @classmethod
    def from_string(cls, text: str) -> "BoolVec":
        """Build from a bitstring such as ``"0101"``."""
        if not text or any(c not in "01" for c in text):
            raise InvariantViolation(f"expected a non-empty string over 0/1, got {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BoolVec":
        values = tuple(bits)
        mask = 0
        for b in values:
            mask = (mask << 1) | (1 if b else 0)
        return cls(len(values), mask)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> (self.n - i)) & 1 for i in range(1, self.n + 1))

    def bit(self, i: int) -> int:
        """Coordinate x_i (1-based)."""
        if not 1 <= i <= self.n:
            raise InvariantViolation(f"coordinate {i} outside 1..{self.n}")
        return (self.mask >> (self.n - i)) & 1

    def flip(self, i: int) -> "BoolVec":
        """A copy with coordinate x_i flipped."""
        if not 1 <= i <= self.n:
            raise InvariantViolation(f"coordinate {i} outside 1..{self.n}")
        return BoolVec(self.n, self.mask ^ (1 << (self.n - i)))

    def __str__(self) -> str:
        return format(self.mask, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"BoolVec({str(self)!r})"


@dataclass(frozen=True)
class BnnRep:
    """A pair of disjoint prototype sets over the same hypercube.

    Prototypes are stored deduplicated in lexicographic order, so equal pairs
    compare equal and serialize identically.  Construction checks structural
    well-formedness only; freedom from distance ties is the separate,
    exponential :func:`validate_semantic` check.
    """

    n: int
    pos: tuple[BoolVec, ...] = ()
    neg: tuple[BoolVec, ...] = ()

    def __post_init__(self) -> None:
        pos = tuple(sorted(set(self.pos)))
        neg = tuple(sorted(set(self.neg)))
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)
        if self.n < 1:
            raise InvariantViolation("dimension must be at least 1")
        if self.n > N_MAX:
            raise DimensionTooLarge(f"dimension {self.n} exceeds N_MAX={N_MAX}")
        for v in pos + neg:
            if v.n != self.n:
                raise DimensionMismatch(
                    f"prototype {v} has dimension {v.n}, expected {self.n}"
                )
        if not pos and not neg:
            raise InvariantViolation(
                "at least one prototype is required; an empty pair represents no function"
            )
        overlap = {v.mask for v in pos} & {v.mask for v in neg}
        if overlap:
            shared = ", ".join(str(BoolVec(self.n, m)) for m in sorted(overlap))
            raise InvariantViolation(f"prototype sets must be disjoint, both contain: {shared}")

    @property
    def size(self) -> int:
        """Total prototype count |P| + |N|."""
        return len(self.pos) + len(self.neg)

    @cached_property
    def _pos_masks(self) -> tuple[int, ...]:
        return tuple(v.mask for v in self.pos)

    @cached_property
    def _neg_masks(self) -> tuple[int, ...]:
        return tuple(v.mask for v in self.neg)


@dataclass(frozen=True)
class FunctionTable:
    """Explicit model set of a Boolean function at exhaustive scale."""

    n: int
    models: frozenset[BoolVec] = frozenset()

    def __post_init__(self) -> None:
        models = frozenset(self.models)
        object.__setattr__(self, "models", models)
        if self.n < 1:
            raise InvariantViolation("dimension must be at least 1")
        require_exhaustive(self.n, "a function table")
        for v in models:
            if v.n != self.n:
                raise DimensionMismatch(f"model {v} has dimension {v.n}, expected {self.n}")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "FunctionTable":
        return cls(n, frozenset(BoolVec(n, m) for m in masks))

    @cached_property
    def model_masks(self) -> frozenset[int]:
        return frozenset(v.mask for v in self.models)

    @property
    def sorted_models(self) -> tuple[BoolVec, ...]:
        return tuple(sorted(self.models))


def hamming(x: BoolVec, y: BoolVec) -> int:
    """Number of coordinates in which x and y differ."""
    if x.n != y.n:
        raise DimensionMismatch(f"cannot compare dimensions {x.n} and {y.n}")
    return (x.mask ^ y.mask).bit_count()


def weight(x: BoolVec) -> int:
    """Number of coordinates equal to 1."""
    return x.mask.bit_count()


def neighborhood(vectors: Iterable[BoolVec], n: int) -> set[BoolVec]:
    """Vectors at Hamming distance exactly one from the given set."""
    members = set()
    for v in vectors:
        if v.n != n:
            raise DimensionMismatch(f"member {v} has dimension {v.n}, expected {n}")
        members.add(v.mask)
    out = set()
    for m in members:
        for i in range(n):
            peer = m ^ (1 << i)
            if peer not in members:
                out.add(peer)
    return {BoolVec(n, m) for m in out}


def _min_dist(mask: int, protos: tuple[int, ...]) -> int | float:
    best: int | float = _INF
    for p in protos:
        d = (mask ^ p).bit_count()
        if d < best:
            if d == 0:
                return 0
            best = d
    return best


def _classify(pos_masks: tuple[int, ...], neg_masks: tuple[int, ...], mask: int, n: int) -> int:
    dp = _min_dist(mask, pos_masks)
    dn = _min_dist(mask, neg_masks)
    if dp == dn:
        raise TieError(BoolVec(n, mask))
    return 1 if dp < dn else 0


def evaluate(rep: BnnRep, x: BoolVec) -> int:
    """Class (1 or 0) of x under the nearest-prototype rule.

    Raises :class:`TieError` when x is equidistant from both sets, i.e. the
    pair is not a well-defined representation at x.
    """
    if x.n != rep.n:
        raise DimensionMismatch(f"vector dimension {x.n} != representation dimension {rep.n}")
    return _classify(rep._pos_masks, rep._neg_masks, x.mask, rep.n)


def negate(rep: BnnRep) -> BnnRep:
    """Swap the prototype sets: represents the pointwise complement.

    Linear in the representation size; ties are preserved as ties.
    """
    return BnnRep(rep.n, rep.neg, rep.pos)


def validate_semantic(rep: BnnRep) -> BoolVec | None:
    """Sweep every vector for a distance tie.

    Returns None when the pair defines a total function, otherwise the
    lexicographically first tie witness.
    """
    require_exhaustive(rep.n, "semantic validation")
    pos, neg = rep._pos_masks, rep._neg_masks
    for m in range(1 << rep.n):
        if _min_dist(m, pos) == _min_dist(m, neg):
            return BoolVec(rep.n, m)
    return None


def to_truth_table(rep: BnnRep) -> FunctionTable:
    """Brute-force expansion into an explicit model set.

    Raises :class:`TieError` with the witness if the pair turns out not to be
    semantically valid.
    """
    require_exhaustive(rep.n, "truth-table expansion")
    pos, neg = rep._pos_masks, rep._neg_masks
    models = [m for m in range(1 << rep.n) if _classify(pos, neg, m, rep.n) == 1]
    return FunctionTable.from_masks(rep.n, models)
