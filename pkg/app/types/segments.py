from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from app.types.errors import DomainError


@dataclass(frozen=True, order=True)
class Segment:
    """The interval [i, j]; labels the indecomposable V^{i,j}."""
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise DomainError(f"segment [{self.i},{self.j}] needs 1 <= i <= j")

    @property
    def length(self) -> int:
        return self.j - self.i + 1

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]"


def _canonical_order(seg: Segment) -> tuple[int, int]:
    # i descending, then j descending
    return (-seg.i, -seg.j)


@dataclass(frozen=True)
class Multisegment:
    """
    A multiset of segments for A_n, kept in canonical order.

    Names one G_V-orbit of E_{V,Omega}, hence one irreducible component of
    the Lusztig variety.
    """
    n: int
    segments: tuple[Segment, ...] = ()

    def __post_init__(self):
        for seg in self.segments:
            if seg.j > self.n:
                raise DomainError(f"segment {seg} exceeds rank {self.n}")
        object.__setattr__(self, "segments", tuple(sorted(self.segments, key=_canonical_order)))

    @classmethod
    def of(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Multisegment":
        return cls(n=n, segments=tuple(Segment(i, j) for i, j in pairs))

    @classmethod
    def empty(cls, n: int) -> "Multisegment":
        return cls(n=n)

    @property
    def dimvec(self) -> tuple[int, ...]:
        v = [0] * self.n
        for seg in self.segments:
            for k in range(seg.i, seg.j + 1):
                v[k - 1] += 1
        return tuple(v)

    @property
    def size(self) -> int:
        return sum(seg.length for seg in self.segments)

    def counts(self) -> Counter:
        return Counter(self.segments)

    def add(self, seg: Segment) -> "Multisegment":
        return Multisegment(self.n, self.segments + (seg,))

    def remove(self, seg: Segment) -> "Multisegment":
        segs = list(self.segments)
        segs.remove(seg)
        return Multisegment(self.n, tuple(segs))

    def replace(self, old: Segment, new: Segment) -> "Multisegment":
        return self.remove(old).add(new)

    def union(self, other: "Multisegment") -> "Multisegment":
        if other.n != self.n:
            raise DomainError("multisegments of different rank")
        return Multisegment(self.n, self.segments + other.segments)

    def key(self) -> str:
        """Canonical encoding, used as a registry and cache key."""
        return ";".join(f"{s.i},{s.j}" for s in self.segments) or "-"

    def seed_ints(self) -> list[int]:
        return [self.n] + [x for s in self.segments for x in (s.i, s.j)]

    def to_pairs(self) -> list[list[int]]:
        return [[s.i, s.j] for s in self.segments]

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.segments) + "}"
