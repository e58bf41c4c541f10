"""Roots, the Psi/Phi sets, the subsystems Delta(lam, d) and their W^0.

Roots are stored as sparse integer vectors in the epsilon basis.  A root is
positive iff the height ``sum(-i * coef_i)`` is positive; this matches the
positive systems used throughout (``e_i - e_j`` for ``i < j``, ``-e_i - e_j``
and ``-2e_i``).
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .weights import AlgebraTag, WeightLabel, WeightVector, CofiniteSet, zeta_data
from .weylgroup import WeylElement, enumerate_w0


@dataclass(frozen=True)
class Root:
    """A root as sorted ``(index, coefficient)`` pairs."""

    coeffs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        clean = tuple(sorted((int(i), int(c)) for i, c in dict(self.coeffs).items() if c))
        if not clean or len(clean) > 2:
            raise ValueError(f"not a classical root: {clean}")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def diff(cls, i: int, j: int) -> "Root":
        return cls(((i, 1), (j, -1)))

    @classmethod
    def neg_sum(cls, i: int, j: int) -> "Root":
        return cls(((i, -1), (j, -1)))

    @classmethod
    def neg_double(cls, i: int) -> "Root":
        return cls(((i, -2),))

    @property
    def kind(self) -> str:
        vals = sorted(c for _, c in self.coeffs)
        if len(vals) == 1:
            return "double"
        return "diff" if vals == [-1, 1] else "sum"

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.coeffs)

    def coef(self, i: int) -> int:
        return dict(self.coeffs).get(i, 0)

    def norm2(self) -> int:
        return sum(c * c for _, c in self.coeffs)

    def is_long(self) -> bool:
        return self.kind == "double"

    def height(self) -> int:
        return sum(-i * c for i, c in self.coeffs)

    def is_positive(self) -> bool:
        return self.height() > 0

    def __neg__(self) -> "Root":
        return Root(tuple((i, -c) for i, c in self.coeffs))

    def positive(self) -> "Root":
        return self if self.is_positive() else -self

    def inner(self, other: "Root") -> int:
        mine = dict(self.coeffs)
        return sum(mine.get(i, 0) * c for i, c in other.coeffs)

    def coroot_pairing(self, coords: Callable[[int], Fraction]) -> Fraction:
        """``<x, root^vee>`` for the weight with epsilon coordinates ``coords``."""
        return Fraction(2 * sum(c * coords(i) for i, c in self.coeffs), self.norm2())

    def reflect(self, other: "Root") -> "Root":
        """``s_self(other)``."""
        k = Fraction(2 * self.inner(other), self.norm2())
        vec = dict(other.coeffs)
        for i, c in self.coeffs:
            vec[i] = vec.get(i, 0) - k * c
        return Root(tuple((i, int(c)) for i, c in vec.items()))

    def __str__(self) -> str:
        return format_root(self)


def format_root(r: Root) -> str:
    parts = []
    for i, c in r.coeffs:
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}e({i})")
    return "".join(parts)


_TERM = re.compile(r"([+-]?)(\d*)e\((-?\d+)\)")


def parse_root(text: str) -> Root:
    """Parse ``"e(1)-e(2)"``, ``"-e(1)-e(2)"``, ``"-2e(3)"`` and the like."""
    text = text.replace(" ", "")
    pos, coeffs = 0, {}
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse root {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeffs[int(m.group(3))] = sign * int(m.group(2) or 1)
        pos = m.end()
    return Root(tuple(coeffs.items()))


def is_root_of(r: Root, algebra: str) -> bool:
    """Membership in the full root system of family ``algebra`` (up to index range)."""
    kind = r.kind
    if algebra == "a":
        return kind == "diff"
    if algebra == "d":
        return kind in ("diff", "sum")
    return True


def is_compact(r: Root, algebra: str) -> bool:
    """Whether ``r`` belongs to the Levi subalgebra."""
    if r.kind != "diff":
        return False
    if algebra != "a":
        return True
    i, j = r.indices
    return (i <= 0) == (j <= 0)


# -- root sets --------------------------------------------------------------

def _index_window(tag: AlgebraTag, bound: int | None) -> list[int]:
    if not tag.infinite:
        return tag.indices()
    if bound is None:
        raise ValueError("infinite rank needs an explicit index bound")
    if tag.algebra == "a":
        return list(range(1 - bound, bound + 1))
    return list(range(1, bound + 1))


def positive_roots(tag: AlgebraTag, bound: int | None = None) -> list[Root]:
    idx = _index_window(tag, bound)
    out = [Root.diff(i, j) for i, j in itertools.combinations(idx, 2)]
    if tag.algebra != "a":
        out += [Root.neg_sum(i, j) for i, j in itertools.combinations(idx, 2)]
    if tag.algebra == "c":
        out += [Root.neg_double(i) for i in idx]
    return out


def compact_positive_roots(tag: AlgebraTag, bound: int | None = None) -> list[Root]:
    return [r for r in positive_roots(tag, bound) if is_compact(r, tag.algebra)]


def noncompact_positive_roots(tag: AlgebraTag, bound: int | None = None) -> set[Root]:
    """Roots of the nilradical: ``e_i - e_j`` (i <= 0 < j), ``-e_i - e_j``, ``-2e_i``."""
    return {r for r in positive_roots(tag, bound) if not is_compact(r, tag.algebra)}


def shifted_coords(xi: WeightVector) -> Callable[[int], Fraction]:
    """Coordinates of ``xi + rho`` on which coroot pairings are evaluated."""
    v = xi.plus_rho()
    return v.effective if v.tag.infinite else v.total


def psi_phi(xi: WeightVector, bound: int | None = None) -> tuple[set[Root], set[Root]]:
    """The sets Psi(xi) and Phi(xi) of noncompact positive roots.

    At infinite rank only roots supported in ``[1, bound]`` (or
    ``[1-bound, bound]`` for type a) are examined.
    """
    coords = shifted_coords(xi)
    roots = noncompact_positive_roots(xi.tag, bound)
    psi = {r for r in roots if r.coroot_pairing(coords) == 0}
    has_long = any(r.is_long() for r in psi)
    phi = set()
    for r in roots:
        val = r.coroot_pairing(coords)
        if val.denominator != 1 or val < 1:
            continue
        if any(r.inner(a) for a in psi):
            continue
        if has_long and r.is_long():
            continue
        phi.add(r)
    return psi, phi


def reflection_closure(roots: Iterable[Root]) -> set[Root]:
    """All roots whose reflections lie in the group generated by ``roots``."""
    found = set()
    for r in roots:
        found.add(r)
        found.add(-r)
    queue = list(found)
    while queue:
        a = queue.pop()
        for b in list(found):
            for c in (a.reflect(b), b.reflect(a)):
                if c not in found:
                    found.add(c)
                    queue.append(c)
    return found


# -- the subsystem Delta(lam, d) -----------------------------------------------

@dataclass(frozen=True)
class RootSubsystem:
    """A root subsystem of the partner algebra on a cofinite index set.

    ``support`` is one CofiniteSet for families c/d and the pair
    ``(J_minus, J_plus)`` for family a.
    """

    ambient: AlgebraTag
    abstract_type: str
    support: tuple[CofiniteSet, ...]

    def index_map(self, count: int) -> dict[int, int]:
        """Increasing identification of abstract indices with the support."""
        if self.abstract_type == "a":
            minus, plus = self.support
            out = {1 - t: v for t, v in enumerate(minus.first(count), start=1)}
            out.update({t: v for t, v in enumerate(plus.first(count), start=1)})
            return out
        return {t: v for t, v in enumerate(self.support[0].first(count), start=1)}

    def contains_index(self, i: int) -> bool:
        return any(i in s for s in self.support)

    def roots(self, bound: int) -> set[Root]:
        """All roots of the subsystem (both signs) supported in the window."""
        idx = [i for i in _index_window(self.ambient, bound) if self.contains_index(i)]
        out = set()
        for i, j in itertools.combinations(idx, 2):
            out |= {Root.diff(i, j), Root.diff(j, i)}
            if self.abstract_type != "a":
                out |= {Root.neg_sum(i, j), -Root.neg_sum(i, j)}
        if self.abstract_type == "c":
            for i in idx:
                out |= {Root.neg_double(i), -Root.neg_double(i)}
        return out

    def describe(self) -> str:
        return f"type {self.abstract_type} on " + " u ".join(s.describe() for s in self.support)


def delta_subsystem(label: WeightLabel) -> RootSubsystem:
    z = zeta_data(label)
    ambient = label.tag.bar()
    if label.family == "a":
        return RootSubsystem(ambient, "a", (z.j_minus, z.j_plus))
    if label.family == "c":
        return RootSubsystem(ambient, "d", (z.j0_set,))
    no_zero = z.j0_set == z.j_set
    if no_zero and (label.d / 2).denominator == 1:
        return RootSubsystem(ambient, "c", (z.j_set,))
    return RootSubsystem(ambient, "d", (z.j_set,))


def relabel_element(sub: RootSubsystem, w: WeylElement) -> WeylElement:
    """Transport an abstract group element to the ambient indices."""
    if w.family != sub.abstract_type:
        raise ValueError(f"{w} is not of type {sub.abstract_type}")
    span = max([abs(i) for i in w.support] + [abs(w(i)) for i in w.support], default=0) + 1
    f = sub.index_map(span)

    def g(i: int) -> int:
        if sub.abstract_type != "a" and i < 0:
            return -f[-i]
        return f[i]

    family = sub.ambient.algebra
    return WeylElement(family, tuple((g(i), g(w(i))) for i in w.support))


def subsystem_w0(sub: RootSubsystem, k: int) -> list[WeylElement]:
    """Minimal coset representatives of length ``k`` in the subsystem's Weyl group."""
    return [relabel_element(sub, w) for w in enumerate_w0(sub.abstract_type, k)]


# -- finite-rank Weyl groups --------------------------------------------------

@dataclass(frozen=True)
class FiniteWeylElement:
    """A signed permutation of a finite index set.

    ``images[p] = (target, sign)`` sends ``e_{index p}`` to ``sign * e_target``.
    """

    tag: AlgebraTag
    images: tuple[tuple[int, int], ...]

    @classmethod
    def identity(cls, tag: AlgebraTag) -> "FiniteWeylElement":
        return cls(tag, tuple((i, 1) for i in tag.indices()))

    @classmethod
    def reflection(cls, tag: AlgebraTag, r: Root) -> "FiniteWeylElement":
        table = {i: (i, 1) for i in tag.indices()}
        if r.kind == "double":
            (i,) = r.indices
            table[i] = (i, -1)
        else:
            i, j = r.indices
            sign = -1 if r.kind == "sum" else 1
            table[i], table[j] = (j, sign), (i, sign)
        return cls(tag, tuple(table[i] for i in tag.indices()))

    def _table(self) -> dict[int, tuple[int, int]]:
        return dict(zip(self.tag.indices(), self.images))

    def apply_coords(self, coords: dict) -> dict:
        out = {}
        for i, (t, s) in self._table().items():
            out[t] = s * coords.get(i, 0)
        return out

    def apply_root(self, r: Root) -> Root:
        table = self._table()
        return Root(tuple((table[i][0], table[i][1] * c) for i, c in r.coeffs))

    def compose(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        """``self * other``."""
        mine = self._table()
        out = []
        for t, s in other.images:
            t2, s2 = mine[t]
            out.append((t2, s * s2))
        return FiniteWeylElement(self.tag, tuple(out))

    def inverse(self) -> "FiniteWeylElement":
        inv = {t: (i, s) for i, (t, s) in self._table().items()}
        return FiniteWeylElement(self.tag, tuple(inv[i] for i in self.tag.indices()))

    def __str__(self) -> str:
        return ",".join(f"{i}->{'-' if s < 0 else ''}{t}" for i, (t, s) in self._table().items() if (t, s) != (i, 1))


def finite_weyl_group(tag: AlgebraTag, guard: int = 20000) -> list[FiniteWeylElement]:
    """All elements of the finite Weyl group (size-guarded)."""
    idx = tag.indices()
    n = len(idx)
    size = _factorial(n) * (1 if tag.algebra == "a" else 2 ** (n - (tag.algebra == "d")))
    if size > guard:
        raise ValueError(f"Weyl group of order {size} exceeds the guard {guard}")
    out = []
    for perm in itertools.permutations(idx):
        if tag.algebra == "a":
            out.append(FiniteWeylElement(tag, tuple((t, 1) for t in perm)))
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if tag.algebra == "d" and signs.count(-1) % 2:
                continue
            out.append(FiniteWeylElement(tag, tuple(zip(perm, signs))))
    return out


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def simple_roots(pos: Iterable[Root]) -> list[Root]:
    """Indecomposable elements of a positive system."""
    pos = set(pos)
    out = []
    for r in pos:
        decomposable = False
        for a in pos:
            if a == r:
                continue
            diff = dict(r.coeffs)
            for i, c in a.coeffs:
                diff[i] = diff.get(i, 0) - c
            vec = {i: c for i, c in diff.items() if c}
            if 0 < len(vec) <= 2:
                try:
                    rest = Root(tuple(vec.items()))
                except ValueError:
                    continue
                if rest in pos:
                    decomposable = True
                    break
        if not decomposable:
            out.append(r)
    return sorted(out, key=lambda r: (r.height(), r.coeffs))


def coset_reps(tag: AlgebraTag, system: set[Root]) -> list[tuple[FiniteWeylElement, int]]:
    """Minimal coset representatives of W(system) / W_0(system) with their lengths.

    ``system`` is a reflection-closed root set (both signs).  Lengths are
    inversion counts against ``system`` intersected with the positive roots.
    """
    pos = [r for r in system if r.is_positive()]
    compact = [r for r in pos if is_compact(r, tag.algebra)]
    gens = [FiniteWeylElement.reflection(tag, r) for r in simple_roots(pos)]

    def length(w):
        return sum(1 for r in pos if not w.apply_root(r).is_positive())

    def minimal(w):
        return all(w.apply_root(r).is_positive() for r in compact)

    start = FiniteWeylElement.identity(tag)
    seen = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        lw = seen[w]
        for s in gens:
            u = s.compose(w)
            if u in seen or not minimal(u):
                continue
            lu = length(u)
            if lu == lw + 1:
                seen[u] = lu
                queue.append(u)
    return sorted(seen.items(), key=lambda p: (p[1], p[0].images))


def finite_w0(xi: WeightVector) -> list[tuple[FiniteWeylElement, int]]:
    """W^0(xi) for a finite-rank weight, built from Phi(xi)."""
    if xi.tag.infinite:
        raise ValueError("finite_w0 expects a finite-rank weight")
    _, phi = psi_phi(xi)
    return coset_reps(xi.tag, reflection_closure(phi))


__all__ = [
    "Root", "RootSubsystem", "FiniteWeylElement", "format_root", "parse_root",
    "positive_roots", "compact_positive_roots", "noncompact_positive_roots",
    "psi_phi", "reflection_closure", "delta_subsystem", "relabel_element",
    "subsystem_w0", "finite_weyl_group", "simple_roots", "coset_reps", "finite_w0",
    "is_compact", "is_root_of", "shifted_coords",
]
