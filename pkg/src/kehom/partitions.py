"""Partitions, transposes and eventually linear sequences.

All half-integer arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

HALF = Fraction(1, 2)


def as_half_integer(x) -> Fraction:
    """Coerce ``x`` to an exact Fraction that is an integer or half-integer."""
    if isinstance(x, str):
        x = Fraction(x.strip())
    q = Fraction(x)
    if (2 * q).denominator != 1:
        raise ValueError(f"{x!r} is not a half-integer")
    return q


def format_half(x) -> str:
    """Render an exact number as ``"p"`` or ``"p/2"``."""
    q = Fraction(x)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Indexing is 1-based and returns 0 beyond the stored length, so
    ``p[i]`` matches the usual ``lambda_i`` notation.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        object.__setattr__(self, "parts", parts)

    def __getitem__(self, i: int) -> int:
        if i < 1:
            raise IndexError("partitions are indexed from 1")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def transpose(self) -> "Partition":
        return transpose(self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)


@dataclass(frozen=True)
class PartitionPair:
    """The pair ``(minus, plus)`` labelling highest weights of type a."""

    minus: Partition = field(default_factory=Partition)
    plus: Partition = field(default_factory=Partition)

    def __post_init__(self):
        if not isinstance(self.minus, Partition):
            object.__setattr__(self, "minus", Partition(tuple(self.minus)))
        if not isinstance(self.plus, Partition):
            object.__setattr__(self, "plus", Partition(tuple(self.plus)))

    def __str__(self) -> str:
        return f"{self.minus}|{self.plus}"

    @property
    def size(self) -> int:
        return self.minus.size + self.plus.size

    @classmethod
    def parse(cls, text: str) -> "PartitionPair":
        return parse_pair(text)


def transpose(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for x in p.parts if x >= j) for j in range(1, p.parts[0] + 1)))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    if any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def parse_pair(text: str) -> PartitionPair:
    """Parse ``"minus|plus"``, e.g. ``"2,1|3"``."""
    if text.count("|") != 1:
        raise ValueError(f"partition pair must look like 'minus|plus': {text!r}")
    left, right = text.split("|")
    return PartitionPair(parse_partition(left), parse_partition(right))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    return [Partition(p) for p in _partitions(n, n)]


def partitions_up_to(n: int) -> list[Partition]:
    return [p for s in range(n + 1) for p in partitions_of(s)]


def strict_partitions_of(n: int) -> list[Partition]:
    """Partitions of ``n`` into distinct parts."""
    return [p for p in partitions_of(n) if len(set(p.parts)) == len(p.parts)]


def partition_pairs_up_to(n: int) -> list[PartitionPair]:
    return [
        PartitionPair(a, b)
        for s in range(n + 1)
        for t in range(s + 1)
        for a in partitions_of(t)
        for b in partitions_of(s - t)
    ]


@dataclass(frozen=True)
class EventuallyLinearSeq:
    """Strictly monotone sequence with a finite head and an affine tail.

    The value at index ``i`` is ``head[i - origin]`` while that is stored,
    and ``tail_intercept - i`` (decreasing) or ``tail_intercept + i``
    (increasing) afterwards.  The head is kept minimal.
    """

    head: tuple[Fraction, ...]
    tail_intercept: Fraction
    origin: int = 1
    direction: int = -1

    def __post_init__(self):
        if self.direction not in (-1, 1):
            raise ValueError("direction must be -1 (decreasing) or +1 (increasing)")
        c = Fraction(self.tail_intercept)
        head = [Fraction(x) for x in self.head]
        while head and head[-1] == c + self.direction * (self.origin + len(head) - 1):
            head.pop()
        object.__setattr__(self, "head", tuple(head))
        object.__setattr__(self, "tail_intercept", c)
        vals = list(head) + [self._tail(self.origin + len(head))]
        for a, b in zip(vals, vals[1:]):
            if (b - a) * self.direction <= 0:
                raise ValueError(f"sequence is not strictly monotone: {vals}")

    def _tail(self, i: int) -> Fraction:
        return self.tail_intercept + self.direction * i

    def __call__(self, i: int) -> Fraction:
        k = i - self.origin
        if k < 0:
            raise IndexError(f"index {i} precedes origin {self.origin}")
        return self.head[k] if k < len(self.head) else self._tail(i)

    @property
    def tail_start(self) -> int:
        """First index governed by the affine tail."""
        return self.origin + len(self.head)

    def values(self, count: int) -> list[Fraction]:
        return [self(self.origin + k) for k in range(count)]

    @property
    def lattice_offset(self) -> Fraction:
        """0 for integer-valued sequences, 1/2 for sequences in 1/2 + Z."""
        vals = self.values(len(self.head) + 1)
        offsets = {v - (v.numerator // v.denominator) for v in vals}
        if len(offsets) != 1 or not offsets <= {Fraction(0), HALF}:
            raise ValueError("sequence values are not uniformly in Z or 1/2 + Z")
        return offsets.pop()

    @classmethod
    def from_values(cls, values: Sequence, origin: int = 1, direction: int = -1) -> "EventuallyLinearSeq":
        """Build from an explicit sample whose last entry already follows the tail."""
        if not values:
            raise ValueError("need at least one sample value")
        vals = [Fraction(v) for v in values]
        last = origin + len(vals) - 1
        return cls(tuple(vals), vals[-1] - direction * last, origin, direction)


def rho_shifted_seq(p: Partition, shift=0, use_transpose: bool = False) -> EventuallyLinearSeq:
    """The sequence ``i -> p_i - i + shift`` (or with ``p'`` in place of ``p``)."""
    q = transpose(p) if use_transpose else p
    shift = as_half_integer(shift)
    head = tuple(q[i] - i + shift for i in range(1, len(q) + 1))
    return EventuallyLinearSeq(head, shift)


def dual_partner(s: EventuallyLinearSeq) -> EventuallyLinearSeq:
    """The decreasing sequence ``b`` with ``image(s)`` and ``-image(b)`` tiling the lattice."""
    if s.direction != -1 or s.origin != 1:
        raise ValueError("dual_partner expects a decreasing sequence indexed from 1")
    offset = s.lattice_offset
    top = s(1)
    # every lattice value <= floor_val is a tail value of s
    floor_val = s._tail(s.tail_start)
    image = set(s.values(len(s.head) + 1))
    missing = []
    x = floor_val + 1
    while x <= top:
        if x not in image:
            missing.append(x)
        x += 1
    assert all((v - offset).denominator == 1 for v in missing)
    head = tuple(-x for x in missing)
    h = len(head)
    # beyond the head every lattice point above ``top`` is uncovered
    return EventuallyLinearSeq(head, h - top)


def is_dual_pair(s1: EventuallyLinearSeq, s2: EventuallyLinearSeq, window: int | None = None) -> bool:
    """Check that ``image(s1)`` and ``-image(s2)`` tile Z (or 1/2 + Z) exactly once.

    The check is exhaustive on ``[-window, window]``; outside the window the
    affine tails certify the tiling, and a window too small for that raises.
    """
    for s in (s1, s2):
        if s.direction != -1 or s.origin != 1:
            raise ValueError("dual pairs are formed by decreasing sequences indexed from 1")
    off1, off2 = s1.lattice_offset, s2.lattice_offset
    if off1 != off2:
        return False
    needed = required_window(s1, s2)
    if window is None:
        window = needed
    if window < needed:
        raise ValueError(f"window {window} too small to certify; need >= {needed}")
    lo, hi = -window, window
    counts: dict[Fraction, int] = {}
    for s, sign in ((s1, 1), (s2, -1)):
        i = 1
        while True:
            v = sign * s(i)
            # s1 decreasing: stop once below lo; -s2 increasing: stop once above hi
            if (sign == 1 and v < lo) or (sign == -1 and v > hi):
                break
            if lo <= v <= hi:
                counts[v] = counts.get(v, 0) + 1
            i += 1
    x = lo + off1
    while x <= hi:
        if counts.get(x, 0) != 1:
            return False
        x += 1
    return True


def required_window(s1: EventuallyLinearSeq, s2: EventuallyLinearSeq) -> int:
    """Smallest window for which the tails alone cover everything outside it."""
    need = [
        abs(s1(1)), abs(s2(1)),
        abs(s1._tail(s1.tail_start)), abs(s2._tail(s2.tail_start)),
    ]
    return int(max(need)) + 2

