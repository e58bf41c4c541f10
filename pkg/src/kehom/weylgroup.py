"""Permutation models of the Weyl groups W_a, W_c, W_d.

W_a acts on Z by finitely supported permutations; W_c (resp. W_d) acts on
Z* = Z \\ {0} by finitely supported signed (resp. even signed)
permutations.  Only the positive half of a signed permutation is stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .partitions import EventuallyLinearSeq, partitions_of, strict_partitions_of

FAMILIES = ("a", "c", "d")


@dataclass(frozen=True)
class WeylElement:
    """A finitely supported (signed) permutation.

    ``mapping`` holds the non-fixed pairs ``(i, w(i))``; for families c and
    d only ``i > 0`` is stored and ``w(-i) = -w(i)``.
    """

    family: str
    mapping: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        pairs = dict(self.mapping)
        signed = self.family != "a"
        if signed and any(i <= 0 for i in pairs):
            raise ValueError("signed permutations store positive indices only")
        pairs = {i: j for i, j in pairs.items() if i != j}
        dom = set(pairs)
        img = {abs(j) for j in pairs.values()} if signed else set(pairs.values())
        if dom != img or (signed and 0 in {j for j in pairs.values()}):
            raise ValueError(f"not a bijection: {sorted(pairs.items())}")
        if len(img) != len(pairs):
            raise ValueError(f"not injective: {sorted(pairs.items())}")
        if self.family == "d" and sum(1 for j in pairs.values() if j < 0) % 2:
            raise ValueError("family d requires an even number of sign changes")
        object.__setattr__(self, "mapping", tuple(sorted(pairs.items())))

    @classmethod
    def from_map(cls, family: str, mapping: Mapping[int, int]) -> "WeylElement":
        return cls(family, tuple(mapping.items()))

    @classmethod
    def identity(cls, family: str) -> "WeylElement":
        return cls(family)

    @property
    def signed(self) -> bool:
        return self.family != "a"

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.mapping)

    def __call__(self, i: int) -> int:
        if self.signed:
            if i == 0:
                raise ValueError("0 is not in Z*")
            if i < 0:
                return -self(-i)
        for k, v in self.mapping:
            if k == i:
                return v
        return i

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def is_identity(self) -> bool:
        return not self.mapping

    def __str__(self) -> str:
        return format_element(self)


def compose(s1: WeylElement, s2: WeylElement) -> WeylElement:
    """The product ``s1 * s2``, i.e. ``i -> s1(s2(i))``."""
    if s1.family != s2.family:
        raise ValueError(f"family mismatch: {s1.family} vs {s2.family}")
    dom = set(s1.support) | set(s2.support)
    return WeylElement(s1.family, tuple((i, s1(s2(i))) for i in dom))


def inverse(s: WeylElement) -> WeylElement:
    if s.signed:
        pairs = []
        for i, j in s.mapping:
            pairs.append((abs(j), i if j > 0 else -i))
        return WeylElement(s.family, tuple(pairs))
    return WeylElement(s.family, tuple((j, i) for i, j in s.mapping))


def simple_reflection(family: str, j: int) -> WeylElement:
    """The generator ``sigma_j`` in the permutation model."""
    if family == "a":
        return WeylElement("a", ((j, j + 1), (j + 1, j)))
    if j < 0:
        raise ValueError("simple reflections of c/d are indexed by j >= 0")
    if j > 0:
        return WeylElement(family, ((j, j + 1), (j + 1, j)))
    if family == "c":
        return WeylElement("c", ((1, -1),))
    return WeylElement("d", ((1, -2), (2, -1)))


def is_min_coset_rep(s: WeylElement) -> bool:
    """Monotonicity test for minimal coset representatives.

    Family a: increasing on ``i <= 0`` and on ``i > 0``; families c, d:
    increasing on positive indices.
    """
    if not s.support:
        return True
    lo, hi = min(s.support), max(s.support)
    if s.signed:
        vals = [s(i) for i in range(1, hi + 2)]
        return all(a < b for a, b in zip(vals, vals[1:]))
    left = [s(i) for i in range(min(lo, 0) - 1, 1)]
    right = [s(i) for i in range(1, max(hi, 1) + 2)]
    return all(a < b for a, b in zip(left, left[1:])) and all(a < b for a, b in zip(right, right[1:]))


def length(s: WeylElement) -> int:
    """Inversion-count length of a minimal coset representative."""
    if not is_min_coset_rep(s):
        raise ValueError(f"length is only defined on minimal coset representatives: {s}")
    if not s.support:
        return 0
    lo, hi = min(s.support), max(s.support)
    if s.family == "a":
        idx = range(lo, hi + 1)
        return sum(1 for i in idx for j in idx if i < j and s(i) > s(j))
    strict = s.family == "d"
    idx = range(1, hi + 1)
    return sum(
        1 for i in idx for j in idx
        if (i < j if strict else i <= j) and s(-i) > s(j)
    )


def _from_negated(family: str, negated: Iterable[int]) -> WeylElement:
    """The increasing signed permutation sending 1..j onto ``-negated``."""
    neg = sorted(negated, reverse=True)
    top = max(neg, default=0)
    rest = [x for x in range(1, top + 1) if x not in set(neg)]
    values = [-x for x in neg] + rest
    return WeylElement(family, tuple((i + 1, v) for i, v in enumerate(values)))


def _grassmannian(beta) -> WeylElement:
    """Family-a element whose image of ``{i <= 0}`` is ``{beta_t - t + 1}``."""
    r = len(beta)
    if r == 0:
        return WeylElement("a")
    left_vals = [beta[t] - t + 1 for t in range(1, r + 1)]  # images of 0, -1, ..., 1-r
    lo = 1 - r
    hi = max(beta[1], 1)
    left_set = set(left_vals)
    right_vals = [x for x in range(lo, hi + 1) if x not in left_set]
    pairs = [(1 - t, left_vals[t - 1]) for t in range(1, r + 1)]
    pairs += [(lo + r + k, v) for k, v in enumerate(right_vals)]
    return WeylElement("a", tuple(pairs))


@lru_cache(maxsize=None)
def _enumerate_w0(family: str, k: int) -> tuple[WeylElement, ...]:
    if family == "a":
        return tuple(_grassmannian(b) for b in partitions_of(k))
    if family == "c":
        return tuple(_from_negated("c", b.parts) for b in strict_partitions_of(k))
    out = []
    for b in strict_partitions_of(k):
        neg = [x + 1 for x in b.parts]
        if len(neg) % 2:
            neg.append(1)
        out.append(_from_negated("d", neg))
    return tuple(out)


def enumerate_w0(family: str, k: int) -> list[WeylElement]:
    """All minimal coset representatives of length ``k``.

    Family a is parametrised by partitions of ``k``, families c and d by
    strict partitions of ``k``.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if k < 0:
        return []
    return list(_enumerate_w0(family, k))


def _negative_count(s: WeylElement) -> int:
    return sum(1 for _, v in s.mapping if v < 0)


def bar_map(s: WeylElement) -> WeylElement:
    """The length-preserving bijection from W^0_c to W^0_d."""
    if s.family != "c" or not is_min_coset_rep(s):
        raise ValueError("bar_map expects a minimal coset representative of family c")
    j = _negative_count(s)
    top = max(s.support, default=0) + 2
    out = {}
    for i in range(1, top + 1):
        if i <= j:
            out[i] = s(i) - 1
        elif i == j + 1:
            out[i] = 1 if j % 2 == 0 else -1
        else:
            out[i] = s(i - 1) + 1
    return WeylElement.from_map("d", out)


def bar_map_inverse(s: WeylElement) -> WeylElement:
    """Inverse of :func:`bar_map`."""
    if s.family != "d" or not is_min_coset_rep(s):
        raise ValueError("bar_map_inverse expects a minimal coset representative of family d")
    negs = _negative_count(s)
    # bar of sigma has j+1 negatives (j odd) or j negatives (j even)
    j = negs - 1 if negs and s(negs) == -1 else negs
    top = max(s.support, default=0) + 1
    out = {}
    for i in range(1, top + 1):
        out[i] = s(i) + 1 if i <= j else s(i + 1) - 1
    result = WeylElement.from_map("c", out)
    assert bar_map(result) == s
    return result


def relabel_seq(s: WeylElement, xs: EventuallyLinearSeq) -> EventuallyLinearSeq:
    """The sequence ``i -> xs_{s(i)}`` with the convention ``xs_{-i} = -xs_i``."""
    if s.family != "c":
        raise ValueError("relabel_seq expects a family-c element")
    if xs.direction != -1 or xs.origin != 1:
        raise ValueError("xs must be decreasing and indexed from 1")
    if xs(1) >= 0:
        raise ValueError("xs must be negative-valued")

    def x(i: int):
        return xs(i) if i > 0 else -xs(-i)

    top = max(max(s.support, default=0), xs.tail_start) + 1
    return EventuallyLinearSeq.from_values([x(s(i)) for i in range(1, top + 1)])


def format_element(s: WeylElement) -> str:
    body = ",".join(f"{i}->{j}" for i, j in s.mapping)
    return f"{s.family}:{body}"


def parse_element(text: str) -> WeylElement:
    """Parse ``"c:1->-2,2->-1"``; an empty body is the identity."""
    if ":" not in text:
        raise ValueError(f"missing family prefix in {text!r}")
    family, body = text.split(":", 1)
    pairs = []
    for item in filter(None, (x.strip() for x in body.split(","))):
        left, right = item.split("->")
        pairs.append((int(left), int(right)))
    return WeylElement(family.strip(), tuple(pairs))
