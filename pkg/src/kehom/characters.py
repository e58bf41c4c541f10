"""Exact Laurent-polynomial characters at finite rank.

Characters are dictionaries from exponent tuples (ordered by the tag's
index list) to integer multiplicities.  The Weyl character formula is
evaluated by dividing the alternant by ``prod (1 - e^{-alpha})`` one
factor at a time; each division is exact and checked.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .homology import HomologyDecomposition, kostant_all_degrees
from .rootsystem import (
    FiniteWeylElement,
    Root,
    finite_weyl_group,
    noncompact_positive_roots,
    positive_roots,
)
from .weights import AlgebraTag, WeightVector

WEYL_GUARD = 20000

Exp = tuple[int, ...]


@dataclass(frozen=True)
class FormalCharacter:
    """A finite integer combination of monomials ``x^exp``."""

    indices: tuple[int, ...]
    terms: tuple[tuple[Exp, int], ...] = ()

    @classmethod
    def from_dict(cls, indices: Sequence[int], terms: dict) -> "FormalCharacter":
        return cls(tuple(indices), tuple(sorted((e, c) for e, c in terms.items() if c)))

    @classmethod
    def one(cls, indices: Sequence[int]) -> "FormalCharacter":
        return cls.from_dict(indices, {(0,) * len(indices): 1})

    def as_dict(self) -> dict[Exp, int]:
        return dict(self.terms)

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._same(other)
        out = defaultdict(int, self.as_dict())
        for e, c in other.terms:
            out[e] += c
        return FormalCharacter.from_dict(self.indices, out)

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter(self.indices, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + (-other)

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._same(other)
        out = defaultdict(int)
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return FormalCharacter.from_dict(self.indices, out)

    def _same(self, other: "FormalCharacter"):
        if self.indices != other.indices:
            raise ValueError("characters live on different index sets")

    def dimension(self) -> int:
        return sum(c for _, c in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coef": c} for e, c in self.terms]

    @classmethod
    def from_json(cls, indices: Sequence[int], data: list[dict]) -> "FormalCharacter":
        return cls.from_dict(indices, {tuple(t["exp"]): int(t["coef"]) for t in data})


def _as_exp(indices: Sequence[int], coords: dict) -> Exp:
    out = []
    for i in indices:
        x = Fraction(coords.get(i, 0))
        if x.denominator != 1:
            raise ValueError(f"non-integral exponent {x} at index {i}")
        out.append(int(x))
    return tuple(out)


def _root_exp(indices: Sequence[int], r: Root) -> Exp:
    return tuple(r.coef(i) for i in indices)


def divide_by_binomial(terms: dict[Exp, int], alpha: Exp) -> dict[Exp, int]:
    """Exact quotient of ``terms`` by ``1 - x^{-alpha}``.

    Along each alpha-string the quotient is the running sum of the dividend
    taken from the top; it must vanish below the lowest dividend term.
    """
    p = next(i for i, a in enumerate(alpha) if a)
    strings: dict[Exp, dict[int, int]] = defaultdict(dict)
    for e, c in terms.items():
        t = e[p] // alpha[p]
        base = tuple(x - t * a for x, a in zip(e, alpha))
        strings[base][t] = c
    out = {}
    for base, points in strings.items():
        running = 0
        ts = sorted(points, reverse=True)
        for hi, lo in zip(ts, ts[1:] + [None]):
            running += points[hi]
            stop = lo if lo is not None else hi - 1
            if lo is None and running:
                raise ArithmeticError("not divisible by the binomial factor")
            if running:
                for t in range(hi, stop, -1):
                    out[tuple(x + t * a for x, a in zip(base, alpha))] = running
    return out


def _det(w: FiniteWeylElement) -> int:
    targets = [t for t, _ in w.images]
    order = sorted(range(len(targets)), key=lambda k: targets[k])
    sign, seen = 1, [False] * len(order)
    for start in range(len(order)):
        if seen[start]:
            continue
        k, cycle = start, 0
        while not seen[k]:
            seen[k] = True
            k = order[k]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    for _, s in w.images:
        sign *= s
    return sign


def _int_rho(tag: AlgebraTag) -> dict[int, int]:
    """Half the sum of positive roots, shifted by a central vector for gl to make it integral."""
    shift = 1 if tag.algebra == "d" else 0
    return {i: shift - i for i in tag.indices()}


def weyl_quotient(indices: Sequence[int], orbit: Iterable[tuple[dict, int]], rho: dict,
                  pos: Iterable[Root]) -> FormalCharacter:
    """``A_top / A_rho`` from the signed orbit ``(w(top), det w)``; ``A_rho = x^rho prod (1 - x^{-alpha})``."""
    num = defaultdict(int)
    for moved, sign in orbit:
        num[_as_exp(indices, {i: moved.get(i, 0) - rho[i] for i in indices})] += sign
    terms = {e: c for e, c in num.items() if c}
    for r in pos:
        terms = divide_by_binomial(terms, _root_exp(indices, r))
    return FormalCharacter.from_dict(indices, terms)


def _dominant_integral(tag: AlgebraTag, coords: dict, pos: Iterable[Root]) -> bool:
    for r in pos:
        val = r.coroot_pairing(lambda i: coords.get(i, 0))
        if val.denominator != 1 or val < 0:
            return False
    return True


def weyl_character(tag: AlgebraTag, weight: WeightVector) -> FormalCharacter:
    """Character of the irreducible finite-dimensional module of highest weight ``weight``."""
    if tag.infinite or weight.tag.n != tag.n or weight.tag.algebra != tag.algebra:
        raise ValueError("weyl_character expects a finite-rank weight of the given algebra")
    coords = {i: weight.total(i) for i in tag.indices()}
    pos = positive_roots(tag)
    if not _dominant_integral(tag, coords, pos):
        raise ValueError(f"{weight} is not dominant integral")
    rho = _int_rho(tag)
    top = {i: coords[i] + rho[i] for i in tag.indices()}
    orbit = ((w.apply_coords(top), _det(w)) for w in finite_weyl_group(tag, WEYL_GUARD))
    return weyl_quotient(tag.indices(), orbit, rho, pos)


def levi_blocks(tag: AlgebraTag) -> list[list[int]]:
    """Index blocks of the general-linear Levi subalgebra."""
    idx = tag.indices()
    if tag.algebra == "a":
        return [[i for i in idx if i <= 0], [i for i in idx if i >= 1]]
    return [idx]


def schur_laurent(values: Sequence) -> dict[Exp, int]:
    """Character of gl(r) with non-increasing integral highest weight ``values``."""
    r = len(values)
    vals = [Fraction(v) for v in values]
    if any(a < b for a, b in zip(vals, vals[1:])):
        raise ValueError(f"{values} is not dominant for gl({r})")
    idx = list(range(1, r + 1))
    rho = {i: -i for i in idx}
    top = [vals[k] + rho[i] for k, i in enumerate(idx)]
    orbit = []
    for perm in itertools.permutations(range(r)):
        inversions = sum(1 for a in range(r) for b in range(a + 1, r) if perm[a] > perm[b])
        orbit.append(({idx[perm[k]]: top[k] for k in range(r)}, -1 if inversions % 2 else 1))
    pos = [Root.diff(i, j) for a, i in enumerate(idx) for j in idx[a + 1:]]
    return weyl_quotient(idx, orbit, rho, pos).as_dict()


def levi_character(tag: AlgebraTag, weight: WeightVector) -> FormalCharacter:
    """Product of the Laurent-Schur characters of the Levi blocks."""
    out = FormalCharacter.one(tag.indices())
    for block in levi_blocks(tag):
        if not block:
            continue
        part = schur_laurent([weight.total(i) for i in block])
        # re-embed the block exponents into the full index list
        place = {i: k for k, i in enumerate(tag.indices())}
        full = {}
        for e, c in part.items():
            vec = [0] * len(tag.indices())
            for i, x in zip(block, e):
                vec[place[i]] = x
            full[tuple(vec)] = c
        out = out * FormalCharacter.from_dict(tag.indices(), full)
    return out


def noncompact_factor(tag: AlgebraTag) -> FormalCharacter:
    """``prod (1 - x^{-alpha})`` over the nilradical roots."""
    idx = tag.indices()
    out = FormalCharacter.one(idx)
    for r in sorted(noncompact_positive_roots(tag), key=lambda r: r.coeffs):
        neg = tuple(-c for c in _root_exp(idx, r))
        out = out * FormalCharacter.from_dict(idx, {(0,) * len(idx): 1, neg: -1})
    return out


def euler_lhs(tag: AlgebraTag, degrees: list[HomologyDecomposition]) -> FormalCharacter:
    """Alternating sum of the Levi characters of all summands."""
    lhs = FormalCharacter.from_dict(tag.indices(), {})
    for dec in degrees:
        for s in dec.summands:
            ch = levi_character(tag, s.weight)
            lhs = lhs + ch if dec.degree % 2 == 0 else lhs - ch
    return lhs


def euler_check_kostant(tag: AlgebraTag, weight: WeightVector,
                        degrees: Optional[list[HomologyDecomposition]] = None) -> bool:
    """Euler characteristic of the Kostant homology against ``ch L * prod(1 - x^{-alpha})``.

    ``degrees`` may be supplied (e.g. a corrupted list); by default the
    homology is computed with :func:`kostant_all_degrees`.
    """
    if degrees is None:
        degrees = kostant_all_degrees(tag, weight)
    return euler_lhs(tag, degrees) == weyl_character(tag, weight) * noncompact_factor(tag)


def weyl_dimension(tag: AlgebraTag, weight: WeightVector) -> Fraction:
    """Product formula over positive roots, independent of any character expansion."""
    coords = {i: weight.total(i) for i in tag.indices()}
    rho = {i: weight.rho(i) for i in tag.indices()}
    out = Fraction(1)
    for r in positive_roots(tag):
        num = sum(c * (coords[i] + rho[i]) for i, c in r.coeffs)
        den = sum(c * rho[i] for i, c in r.coeffs)
        out *= Fraction(num, 1) / den
    return out


def dominant_weights(tag: AlgebraTag, bound: int = 3) -> list[WeightVector]:
    """Dominant integral weights with entries in ``0..bound`` (gl) or ``-bound..bound`` (sp, so)."""
    idx = tag.indices()
    lo = 0 if tag.algebra == "a" else -bound
    out = []
    pos = positive_roots(tag)
    for vals in itertools.combinations_with_replacement(range(bound, lo - 1, -1), len(idx)):
        coords = dict(zip(idx, vals))
        if _dominant_integral(tag, coords, pos):
            out.append(WeightVector.from_dict(tag, coords))
    return out


__all__ = [
    "FormalCharacter", "weyl_character", "levi_character", "schur_laurent",
    "euler_check_kostant", "euler_lhs", "weyl_dimension", "noncompact_factor", "levi_blocks",
    "divide_by_binomial", "dominant_weights", "WEYL_GUARD",
]
