"""Exact arithmetic on finite continued fractions with non-negative entries.

A continued fraction is a finite sequence ``a_1, ..., a_n``.  Its numerator
``N[a_1, ..., a_n]`` is computed with the tail recursion

    N[a_1..a_n] = a_n * N[a_1..a_{n-1}] + N[a_1..a_{n-2}],   N[] = 1,

which also gives the right answer on sequences carrying ``0, 0``
placeholders.  Zero pairs are never removed implicitly; use
:func:`strip_zero_pairs` for that.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "ContinuedFraction",
    "Marker",
    "PLACEHOLDER",
    "ReplacementSplit",
    "SegmentedCF",
    "StructureError",
    "DomainError",
    "continuant",
    "numerator",
    "evaluate",
    "reverse",
    "strip_zero_pairs",
    "graft_numerator",
    "tail_identity_terms",
    "replace_at",
    "replacement_difference",
    "replacement_split",
    "drop_last",
    "drop_first",
]

PLACEHOLDER: tuple[int, ...] = (0, 0)


class StructureError(ValueError):
    """Raised when entries violate the zero-pair or segment structure."""


class DomainError(ValueError):
    """Raised when an operation is undefined for an otherwise valid input."""


def _zero_runs_even(entries: Sequence[int]) -> bool:
    run = 0
    for a in entries:
        if a == 0:
            run += 1
        else:
            if run % 2:
                return False
            run = 0
    return run % 2 == 0


@dataclass(frozen=True)
class ContinuedFraction:
    """Finite continued fraction ``[a_1, ..., a_n]`` with entries >= 0.

    Zeros may only appear in adjacent ``0, 0`` pairs.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        if any(a < 0 for a in entries):
            raise StructureError(f"negative entry in {list(entries)}")
        if not _zero_runs_even(entries):
            raise StructureError(f"isolated zero in {list(entries)}")

    @property
    def strict(self) -> bool:
        """All entries positive (so in particular no zero pairs)."""
        return all(a > 0 for a in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __repr__(self):
        return f"ContinuedFraction({list(self.entries)})"


CFLike = Union[ContinuedFraction, Sequence[int]]


def _as_cf(cf: CFLike) -> ContinuedFraction:
    if isinstance(cf, ContinuedFraction):
        return cf
    return ContinuedFraction(tuple(cf))


def continuant(entries: Iterable[int]) -> int:
    """Tail-recursion numerator of an arbitrary non-negative sequence.

    No structural validation: this is the raw polynomial, so it also
    evaluates sequences such as ``[0]`` (value 0) that appear when a
    placeholder has an entry deleted.
    """
    prev, cur = 0, 1  # N[a_1..a_{-1}] is never read with a nonzero weight
    for a in entries:
        prev, cur = cur, a * cur + prev
    return cur


def numerator(cf: CFLike) -> int:
    """Return ``N[cf]``; the empty sequence has numerator 1."""
    return continuant(_as_cf(cf).entries)


def strip_zero_pairs(cf: CFLike) -> ContinuedFraction:
    """Remove every ``0, 0`` placeholder pair; the numerator is unchanged."""
    cf = _as_cf(cf)
    return ContinuedFraction(tuple(a for a in cf.entries if a != 0))


def evaluate(cf: CFLike) -> Fraction:
    """Reduced rational value of ``cf`` after zero-pair removal."""
    entries = strip_zero_pairs(cf).entries
    if not entries:
        raise DomainError("empty continued fraction has no value")
    # numerator and denominator continuants are coprime for positive entries
    return Fraction(continuant(entries), continuant(entries[1:]))


def reverse(cf: CFLike) -> ContinuedFraction:
    return ContinuedFraction(_as_cf(cf).entries[::-1])


def graft_numerator(cf: CFLike, i: int) -> int:
    """Numerator of ``cf`` assembled from a split after position ``i``.

    ``N[a_1..a_i] * N[a_{i+1}..a_n] + N[a_1..a_{i-1}] * N[a_{i+2}..a_n]``
    with ``1 <= i < n``.
    """
    cf = _as_cf(cf)
    a = cf.entries
    if not cf.strict:
        raise StructureError("grafting needs strictly positive entries")
    if not 1 <= i < len(a):
        raise DomainError(f"split index {i} out of range for length {len(a)}")
    return continuant(a[:i]) * continuant(a[i:]) + continuant(a[: i - 1]) * continuant(a[i + 1:])


def tail_identity_terms(cf: CFLike) -> tuple[int, int, int, int]:
    """Return ``(N[cf,2], N[cf,1], N[cf], N[cf minus its last entry])``.

    These satisfy ``n2 == n1 + n0`` and ``2*n1 == n2 + nminus``.
    """
    cf = _as_cf(cf)
    a = cf.entries
    if not a:
        raise DomainError("tail identities need a nonempty continued fraction")
    if not cf.strict:
        raise StructureError("tail identities need strictly positive entries")
    return continuant(a + (2,)), continuant(a + (1,)), continuant(a), continuant(a[:-1])


# -- replacement calculus --------------------------------------------------


class Marker(enum.Enum):
    """A replaceable entry: a single ``2`` or a pair ``1, 1``."""

    TWO = "2"
    ONEONE = "1,1"

    @property
    def entries(self) -> tuple[int, ...]:
        return (2,) if self is Marker.TWO else (1, 1)

    def flip(self) -> "Marker":
        return Marker.ONEONE if self is Marker.TWO else Marker.TWO


def _check_segment(mu: Sequence[int]) -> tuple[int, ...]:
    mu = tuple(int(a) for a in mu)
    if mu == PLACEHOLDER:
        return mu
    if not mu:
        raise StructureError("segment must be nonempty or the 0,0 placeholder")
    if any(a <= 0 for a in mu):
        raise StructureError(f"segment {list(mu)} must be positive or exactly 0,0")
    return mu


def drop_last(seq: Sequence[int]) -> tuple[int, ...]:
    """Deletion ``mu^-``: the 0,0 placeholder becomes ``(0,)`` with N = 0."""
    return tuple(seq[:-1])


def drop_first(seq: Sequence[int]) -> tuple[int, ...]:
    """Deletion ``^-mu``."""
    return tuple(seq[1:])


@dataclass(frozen=True)
class SegmentedCF:
    """Segments ``mu_1..mu_k`` interleaved with markers ``alpha_1..alpha_{k-1}``."""

    mus: tuple[tuple[int, ...], ...]
    alphas: tuple[Marker, ...]

    def __post_init__(self):
        mus = tuple(_check_segment(mu) for mu in self.mus)
        alphas = tuple(Marker(a) if not isinstance(a, Marker) else a for a in self.alphas)
        if not mus:
            raise StructureError("need at least one segment")
        if len(alphas) != len(mus) - 1:
            raise StructureError(
                f"{len(mus)} segments need {len(mus) - 1} markers, got {len(alphas)}"
            )
        object.__setattr__(self, "mus", mus)
        object.__setattr__(self, "alphas", alphas)

    @property
    def k(self) -> int:
        return len(self.mus)

    def flatten(self, alphas: Sequence[Marker] | None = None, tail: Sequence[int] = ()) -> tuple[int, ...]:
        """Entries ``mu_1, alpha_1, ..., mu_k`` followed by ``tail``.

        ``alphas`` overrides the stored markers (same length).
        """
        alphas = self.alphas if alphas is None else tuple(alphas)
        out = list(self.mus[0])
        for a, mu in zip(alphas, self.mus[1:]):
            out.extend(a.entries)
            out.extend(mu)
        out.extend(tail)
        return tuple(out)

    def to_cf(self) -> ContinuedFraction:
        return ContinuedFraction(self.flatten())

    def flipped(self) -> "SegmentedCF":
        """Every marker flipped (``alpha'``)."""
        return SegmentedCF(self.mus, tuple(a.flip() for a in self.alphas))


def replace_at(seg: SegmentedCF, j: int) -> SegmentedCF:
    """Flip marker ``j`` (0-based) between ``2`` and ``1, 1``."""
    if not 0 <= j < len(seg.alphas):
        raise DomainError(f"marker index {j} out of range for {len(seg.alphas)} markers")
    alphas = list(seg.alphas)
    alphas[j] = alphas[j].flip()
    return SegmentedCF(seg.mus, tuple(alphas))


def replacement_difference(mu1: Sequence[int], mu2: Sequence[int]) -> int:
    """``N[mu1, 1, 1, mu2] - N[mu1, 2, mu2]`` in closed form: ``N[mu1^-] * N[^-mu2]``."""
    mu1 = _check_segment(mu1)
    mu2 = _check_segment(mu2)
    return continuant(drop_last(mu1)) * continuant(drop_first(mu2))


@dataclass(frozen=True)
class ReplacementSplit:
    """``delta_j = mu_1,2,...,mu_j`` and ``epsilon_j = mu_{j+1},1,1,...,mu_k``."""

    delta: tuple[int, ...]
    epsilon: tuple[int, ...]

    def term(self) -> int:
        """``N[delta^-] * N[^-epsilon]``."""
        return continuant(drop_last(self.delta)) * continuant(drop_first(self.epsilon))


def replacement_split(mus: Sequence[Sequence[int]], j: int) -> ReplacementSplit:
    """Split after segment ``j`` (1-based, ``1 <= j < k``)."""
    mus = [_check_segment(mu) for mu in mus]
    if not 1 <= j < len(mus):
        raise DomainError(f"split index {j} out of range for {len(mus)} segments")
    head = SegmentedCF(tuple(mus[:j]), (Marker.TWO,) * (j - 1))
    tail = SegmentedCF(tuple(mus[j:]), (Marker.ONEONE,) * (len(mus) - j - 1))
    return ReplacementSplit(head.flatten(), tail.flatten())
