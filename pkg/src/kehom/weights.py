"""Highest weights, their zeta data and the Weyl group action on them.

Weights of the infinite-rank algebras are stored as a finitely supported
epsilon part, a multiple of rho and a theta (level) coefficient.  The Weyl
group acts on the *effective* coordinates, which absorb the level: in those
coordinates every group element is a literal (signed) permutation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Union

from .partitions import (
    EventuallyLinearSeq,
    Partition,
    PartitionPair,
    as_half_integer,
    format_half,
    rho_shifted_seq,
    transpose,
)
from .weylgroup import WeylElement, inverse, is_min_coset_rep

BAR = {"a": "a", "c": "d", "d": "c"}
# <theta, K> for each family
THETA_LEVEL = {"a": Fraction(1), "c": Fraction(1), "d": Fraction(1, 2)}


@dataclass(frozen=True)
class AlgebraTag:
    """Which algebra a weight lives on.

    ``side="bar"`` means the partner algebra (a->a, c->d, d->c).  Finite rank
    is given by ``n`` (and ``m`` for family a); ``n is None`` is infinite rank.
    """

    family: str
    side: str = "g"
    m: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.family not in BAR:
            raise ValueError(f"unknown family {self.family!r}")
        if self.side not in ("g", "bar"):
            raise ValueError(f"side must be 'g' or 'bar', got {self.side!r}")
        if self.n is not None:
            if self.n < 1:
                raise ValueError("finite rank requires n >= 1")
            if self.algebra == "a" and (self.m is None or self.m < 1):
                raise ValueError("finite rank of type a requires m >= 1")
            if self.algebra != "a" and self.m is not None:
                object.__setattr__(self, "m", None)

    @property
    def algebra(self) -> str:
        """Family of the algebra the weight actually lives on."""
        return self.family if self.side == "g" else BAR[self.family]

    @property
    def infinite(self) -> bool:
        return self.n is None

    def bar(self) -> "AlgebraTag":
        return AlgebraTag(self.family, "bar" if self.side == "g" else "g", self.m, self.n)

    def indices(self) -> list[int]:
        """Index set of the Cartan subalgebra at finite rank."""
        if self.infinite:
            raise ValueError("infinite rank has no finite index set")
        if self.algebra == "a":
            return list(range(1 - self.m, self.n + 1))
        return list(range(1, self.n + 1))

    def rank_label(self):
        if self.infinite:
            return "infinite"
        return {"m": self.m, "n": self.n} if self.algebra == "a" else {"n": self.n}

    @classmethod
    def gl(cls, m: int, n: int) -> "AlgebraTag":
        return cls("a", "g", m, n)

    @classmethod
    def sp(cls, n: int) -> "AlgebraTag":
        return cls("c", "g", None, n)

    @classmethod
    def so(cls, n: int) -> "AlgebraTag":
        return cls("d", "g", None, n)


Label = Union[Partition, PartitionPair]


@dataclass(frozen=True)
class WeightLabel:
    """The symbolic data ``(lambda, d)`` of a highest weight."""

    tag: AlgebraTag
    lam: Label
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d", Fraction(self.d))
        pair = isinstance(self.lam, PartitionPair)
        if pair != (self.tag.family == "a"):
            raise ValueError("family a takes a PartitionPair, families c/d a Partition")

    @classmethod
    def make(cls, family: str, lam, d) -> "WeightLabel":
        if not isinstance(lam, (Partition, PartitionPair)):
            lam = PartitionPair(*lam) if family == "a" else Partition(tuple(lam))
        return cls(AlgebraTag(family), lam, Fraction(d))

    @property
    def family(self) -> str:
        return self.tag.family

    def in_D(self) -> bool:
        return in_D(self.family, self.lam, self.d)

    def __str__(self) -> str:
        return f"{self.family}({self.lam}; d={format_half(self.d)})"


def in_D(family: str, lam: Label, d) -> bool:
    """Membership of ``(lam, d)`` in the parameter set D(g)."""
    d = Fraction(d)
    if d.denominator != 1 or d < 0:
        return False
    if family == "c":
        return transpose(lam)[1] <= d
    if family == "d":
        t = transpose(lam)
        return t[1] + t[2] <= d
    return transpose(lam.minus)[1] + transpose(lam.plus)[1] <= d


def _require_D(label: WeightLabel):
    if not label.in_D():
        raise ValueError(f"{label} is not in D({label.family})")


def rho_value(algebra: str, i: int, m: int | None = None, n: int | None = None) -> Fraction:
    """Coefficient of epsilon_i in rho (finite rank when ``n`` is given)."""
    if algebra == "d":
        return Fraction(1 - i)
    if algebra == "a" and n is not None:
        return Fraction(-i) + Fraction(n - m + 1, 2)
    return Fraction(-i)


@dataclass(frozen=True)
class WeightVector:
    """``sum eps_i e_i + rho_mult * rho + theta * vartheta``.

    ``eps`` is finitely supported and stored as sorted ``(index, value)``
    pairs with zero entries dropped.
    """

    tag: AlgebraTag
    eps: tuple[tuple[int, Fraction], ...] = ()
    theta: Fraction = Fraction(0)
    rho_mult: int = 0

    def __post_init__(self):
        items = dict(self.eps)
        clean = tuple(sorted((int(i), Fraction(v)) for i, v in items.items() if v != 0))
        for i, _ in clean:
            if self.tag.algebra != "a" and i < 1:
                raise ValueError(f"index {i} outside N")
            if not self.tag.infinite and i not in self.tag.indices():
                raise ValueError(f"index {i} outside the finite index set")
        object.__setattr__(self, "eps", clean)
        object.__setattr__(self, "theta", Fraction(self.theta))
        if not self.tag.infinite and self.theta != 0:
            raise ValueError("finite-rank weights carry no theta component")

    @classmethod
    def from_dict(cls, tag: AlgebraTag, coeffs: dict, theta=0, rho_mult: int = 0) -> "WeightVector":
        return cls(tag, tuple(coeffs.items()), Fraction(theta), rho_mult)

    def coeff(self, i: int) -> Fraction:
        for k, v in self.eps:
            if k == i:
                return v
        return Fraction(0)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.eps)

    def rho(self, i: int) -> Fraction:
        return rho_value(self.tag.algebra, i, self.tag.m, self.tag.n)

    def total(self, i: int) -> Fraction:
        """Full epsilon coefficient at ``i`` including the rho part."""
        return self.coeff(i) + self.rho_mult * self.rho(i)

    def level_shift(self, i: int) -> Fraction:
        if not self.tag.infinite:
            return Fraction(0)
        if self.tag.algebra == "a":
            return self.theta if i <= 0 else Fraction(0)
        return -self.theta * THETA_LEVEL[self.tag.algebra]

    def effective(self, i: int) -> Fraction:
        """Coordinate on which the Weyl group acts by permutation."""
        return self.total(i) + self.level_shift(i)

    def with_rho(self, mult: int) -> "WeightVector":
        """Same weight, re-expressed with a different rho multiplier."""
        shift = self.rho_mult - mult
        support = set(dict(self.eps))
        if shift and self.tag.infinite:
            raise ValueError("changing the rho multiplier at infinite rank needs add_rho")
        idx = support if self.tag.infinite else self.tag.indices()
        return WeightVector(self.tag, tuple((i, self.coeff(i) + shift * self.rho(i)) for i in idx), self.theta, mult)

    def plus_rho(self) -> "WeightVector":
        return WeightVector(self.tag, self.eps, self.theta, self.rho_mult + 1)

    def minus_rho(self) -> "WeightVector":
        return WeightVector(self.tag, self.eps, self.theta, self.rho_mult - 1)

    def sort_key(self):
        return (tuple((i, v) for i, v in self.eps), self.theta, self.rho_mult)

    def __str__(self) -> str:
        terms = [f"{format_half(v)}e({i})" for i, v in self.eps]
        if self.theta:
            terms.append(f"{format_half(self.theta)}theta")
        if self.rho_mult:
            terms.append(f"{self.rho_mult}rho")
        return " + ".join(terms) if terms else "0"


# -- constructors -----------------------------------------------------------

def lambda_weight(label: WeightLabel) -> WeightVector:
    """The integrable-side weight built from the transpose of ``lam``."""
    _require_D(label)
    lam = label.lam
    tag = AlgebraTag(label.family, "g")
    if label.family == "a":
        lm, lp = transpose(lam.minus), transpose(lam.plus)
        eps = {-i: -lm[i + 1] for i in range(len(lm))}
        eps.update({i: lp[i] for i in range(1, len(lp) + 1)})
        return WeightVector.from_dict(tag, eps, label.d)
    t = transpose(lam)
    return WeightVector.from_dict(tag, {i: t[i] for i in range(1, len(t) + 1)}, label.d)


def bar_level(family: str, d) -> Fraction:
    """Theta coefficient of the unitarizable weight at level parameter ``d``."""
    if family == "a":
        return -Fraction(d)
    return -Fraction(d) * THETA_LEVEL[family] / THETA_LEVEL[BAR[family]]


def bar_lambda_weight(label: WeightLabel) -> WeightVector:
    """The unitarizable weight on the partner algebra."""
    _require_D(label)
    return bar_weight(label.family, label.lam, label.d)


def bar_weight(family: str, lam: Label, d) -> WeightVector:
    tag = AlgebraTag(family, "bar")
    if family == "a":
        eps = {-i: -lam.minus[i + 1] for i in range(len(lam.minus))}
        eps.update({i: lam.plus[i] for i in range(1, len(lam.plus) + 1)})
    else:
        eps = {i: lam[i] for i in range(1, len(lam) + 1)}
    return WeightVector.from_dict(tag, eps, bar_level(family, d))


def label_of_bar_weight(v: WeightVector, d) -> Label | None:
    """Recover ``lam`` from ``bar_weight(family, lam, d)``, or None if ``v`` is not of that form."""
    if v.rho_mult or v.theta != bar_level(v.tag.family, d) or not v.tag.infinite:
        return None
    coeffs = v.as_dict()
    if any(x.denominator != 1 for x in coeffs.values()):
        return None
    try:
        if v.tag.family == "a":
            minus = [-coeffs.get(-i, 0) for i in range(0, len(coeffs) + 1)]
            plus = [coeffs.get(i, 0) for i in range(1, len(coeffs) + 2)]
            lam = PartitionPair(Partition(tuple(minus)), Partition(tuple(plus)))
        else:
            lam = Partition(tuple(coeffs.get(i, 0) for i in range(1, len(coeffs) + 2)))
    except ValueError:
        return None
    return lam if bar_weight(v.tag.family, lam, d) == v else None


def gamma_weight(label: WeightLabel, m: int | None, n: int) -> WeightVector:
    """The finite-rank weight obtained by truncating to ``m``, ``n`` indices."""
    fam, lam, d = label.family, label.lam, label.d
    tag = AlgebraTag(fam, "bar", m, n)
    if fam == "a":
        if len(lam.plus) > n or len(lam.minus) > m:
            raise ValueError(f"{lam} does not fit into gl({m}+{n})")
        eps = {1 - i: -d - lam.minus[i] for i in range(1, m + 1)}
        eps.update({i: Fraction(lam.plus[i]) for i in range(1, n + 1)})
        return WeightVector.from_dict(tag, eps)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    shift = d if fam == "c" else d / 2
    return WeightVector.from_dict(tag, {i: lam[i] + shift for i in range(1, n + 1)})


# -- zeta data --------------------------------------------------------------

@dataclass(frozen=True)
class CofiniteSet:
    """``{i >= 1} \\ excluded`` (``sign=+1``) or ``{i <= 0} \\ excluded`` (``sign=-1``)."""

    excluded: frozenset = frozenset()
    sign: int = 1

    def __contains__(self, i: int) -> bool:
        inside = i >= 1 if self.sign == 1 else i <= 0
        return inside and i not in self.excluded

    def __iter__(self) -> Iterator[int]:
        i = 1 if self.sign == 1 else 0
        while True:
            if i not in self.excluded:
                yield i
            i += self.sign

    def first(self, count: int) -> list[int]:
        """The ``count`` elements closest to the boundary, in order away from it."""
        out = []
        for i in self:
            if len(out) == count:
                break
            out.append(i)
        return out

    def describe(self) -> str:
        base = "N" if self.sign == 1 else "Z<=0"
        if not self.excluded:
            return base
        return f"{base} \\ {{{','.join(map(str, sorted(self.excluded)))}}}"


@dataclass(frozen=True)
class ZetaData:
    """The sequences zeta / zeta-bar of a label with their pairing sets.

    For families c, d the sequences live on N.  For family a ``zeta`` and
    ``zbar`` hold the block ``i >= 1`` and ``zeta_neg`` / ``zbar_neg`` hold
    the block ``i <= 0`` re-indexed by ``t = 1 - i``.
    """

    label: WeightLabel
    zeta: EventuallyLinearSeq
    zbar: EventuallyLinearSeq
    n_pairs: frozenset
    j_set: CofiniteSet | None = None
    j0_set: CofiniteSet | None = None
    j_plus: CofiniteSet | None = None
    j_minus: CofiniteSet | None = None
    zeta_neg: EventuallyLinearSeq | None = None
    zbar_neg: EventuallyLinearSeq | None = None
    window: int = field(default=0, compare=False)

    def zeta_at(self, i: int) -> Fraction:
        if i >= 1:
            return self.zeta(i)
        if self.zeta_neg is None:
            return -self.zeta(-i)
        return self.zeta_neg(1 - i)

    def zbar_at(self, i: int) -> Fraction:
        if i >= 1:
            return self.zbar(i)
        if self.zbar_neg is None:
            return -self.zbar(-i)
        return self.zbar_neg(1 - i)


def _pair_window(label: WeightLabel) -> int:
    lam, d = label.lam, label.d
    parts = [lam.minus, lam.plus] if label.family == "a" else [lam]
    size = sum(p[1] + transpose(p)[1] for p in parts)
    return int(size + 2 * d + 4)


def zeta_data(label: WeightLabel) -> ZetaData:
    _require_D(label)
    fam, lam, d = label.family, label.lam, label.d
    B = _pair_window(label)
    if fam in ("c", "d"):
        if fam == "c":
            zeta = rho_shifted_seq(lam, -d, use_transpose=True)
            zbar = rho_shifted_seq(lam, 1 + d)
        else:
            zeta = rho_shifted_seq(lam, 1 - d / 2, use_transpose=True)
            zbar = rho_shifted_seq(lam, d / 2)
        vals = {i: zbar(i) for i in range(1, B + 1)}
        pairs = frozenset((i, j) for i in vals for j in vals if vals[i] + vals[j] == 0)
        # tail beyond B is negative and below -zbar(1): no partners there
        assert zbar(B) < 0 and zbar(B) < -zbar(1), "pair window too small"
        touched = {i for i, _ in pairs}
        zeros = {i for i in vals if vals[i] == 0}
        j_set = CofiniteSet(frozenset(touched))
        j0_set = CofiniteSet(frozenset(touched - zeros))
        return ZetaData(label, zeta, zbar, pairs, j_set=j_set, j0_set=j0_set, window=B)
    lp, lm = lam.plus, lam.minus
    lmt = transpose(lm)
    zeta = rho_shifted_seq(lp, 1, use_transpose=True)
    zbar = rho_shifted_seq(lp, 0)
    zeta_neg = EventuallyLinearSeq(tuple(-lmt[t] + t + d for t in range(1, len(lmt) + 1)), d, 1, 1)
    zbar_neg = EventuallyLinearSeq(tuple(-lm[t] + t - 1 - d for t in range(1, len(lm) + 1)), -1 - d, 1, 1)
    neg = {1 - t: zbar_neg(t) for t in range(1, B + 1)}
    pos = {j: zbar(j) for j in range(1, B + 1)}
    assert zbar_neg(B) > zbar(1) and zbar(B) < zbar_neg(1), "pair window too small"
    pairs = frozenset((i, j) for i in neg for j in pos if neg[i] == pos[j])
    return ZetaData(
        label, zeta, zbar, pairs,
        j_plus=CofiniteSet(frozenset(j for _, j in pairs)),
        j_minus=CofiniteSet(frozenset(i for i, _ in pairs), -1),
        zeta_neg=zeta_neg, zbar_neg=zbar_neg, window=B,
    )


# -- Weyl group action ------------------------------------------------------

def _check_family(w: WeylElement, v: WeightVector):
    if w.family != v.tag.algebra:
        raise ValueError(f"W_{w.family} does not act on weights of {v.tag.algebra}")


def act_on_weight(w: WeylElement, v: WeightVector) -> WeightVector:
    """Linear action of ``w`` (level-shifted as in the permutation model)."""
    _check_family(w, v)
    w_inv = inverse(w)
    touched = set(w.support) | {abs(w(i)) for i in w.support}
    if not v.tag.infinite and not touched <= set(v.tag.indices()):
        raise ValueError("group element moves indices outside the finite rank")
    new = dict(v.eps)
    for m in touched:
        src = w_inv(m)
        sign = 1
        if w.signed and src < 0:
            src, sign = -src, -1
        eff = sign * v.effective(src)
        new[m] = eff - v.level_shift(m) - v.rho_mult * v.rho(m)
    return WeightVector(v.tag, tuple(new.items()), v.theta, v.rho_mult)


def dot_action(w: WeylElement, v: WeightVector) -> WeightVector:
    """``w(v + rho) - rho``."""
    return act_on_weight(w, v.plus_rho()).minus_rho()


def dominant_rep(v: WeightVector) -> WeightVector:
    """Sort the epsilon coefficients (with rho) decreasingly inside each Levi block."""
    blocks = _blocks(v)
    new = dict(v.eps)
    for block, beyond in blocks:
        vals = sorted((v.total(i) for i in block), reverse=True)
        if beyond is not None:
            edge = v.total(beyond)
            ok = vals[-1] >= edge if block[0] >= 1 or v.tag.algebra != "a" else vals[0] <= edge
            if not ok:
                raise ValueError(f"{v} has no dominant representative with finite support")
        if block and block[0] <= 0 and v.tag.algebra == "a":
            # indices run 0, -1, -2, ...: values must increase along the block
            vals = vals[::-1]
        for i, x in zip(block, vals):
            new[i] = x - v.rho_mult * v.rho(i)
    return WeightVector(v.tag, tuple(new.items()), v.theta, v.rho_mult)


def _blocks(v: WeightVector) -> list[tuple[list[int], int | None]]:
    """Levi blocks as index lists ordered away from the boundary, plus the next index outside."""
    if not v.tag.infinite:
        idx = v.tag.indices()
        if v.tag.algebra == "a":
            return [(sorted([i for i in idx if i <= 0], reverse=True), None), ([i for i in idx if i >= 1], None)]
        return [(idx, None)]
    support = [i for i, _ in v.eps]
    hi = max([i for i in support if i >= 1], default=0) + 1
    out = [(list(range(1, hi + 1)), hi + 1)]
    if v.tag.algebra == "a":
        lo = min([i for i in support if i <= 0], default=1) - 1
        out.insert(0, (list(range(0, lo - 1, -1)), lo - 1))
    return out


def dot_action_mu(w: WeylElement, label: WeightLabel) -> Label:
    """The label ``mu`` with ``Lambda(mu, d) = w^{-1} . Lambda(lam, d)``."""
    _require_D(label)
    if w.family != label.family or not is_min_coset_rep(w):
        raise ValueError(f"{w} is not a minimal coset representative of family {label.family}")
    z = zeta_data(label)
    fam, d = label.family, label.d
    parts = [label.lam.minus, label.lam.plus] if fam == "a" else [label.lam]
    top = max([abs(i) for i in w.support] + [p[1] for p in parts]) + 2

    def xi(i):
        return z.zeta_at(w(i))

    if fam == "a":
        plus_t = [xi(i) - 1 + i for i in range(1, top + 1)]
        minus_t = [t + d - xi(1 - t) for t in range(1, top + 1)]
        return PartitionPair(_as_partition(transpose_values(minus_t)), _as_partition(transpose_values(plus_t)))
    mu_t = [xi(i) + i + (d if fam == "c" else -1 + d / 2) for i in range(1, top + 1)]
    return _as_partition(transpose_values(mu_t))


def transpose_values(values: list) -> list[int]:
    """Transpose of an explicit weakly decreasing list of nonnegative integers."""
    ints = []
    for x in values:
        x = Fraction(x)
        if x.denominator != 1 or x < 0:
            raise AssertionError(f"non-partition coefficients {values}")
        ints.append(int(x))
    if ints and ints[-1] != 0:
        raise AssertionError(f"window too small for {values}")
    return list(transpose(_as_partition(ints)).parts)


def _as_partition(values) -> Partition:
    try:
        return Partition(tuple(int(x) for x in values))
    except ValueError as exc:
        raise AssertionError(f"not a partition: {values}") from exc


# -- serialization ----------------------------------------------------------

def weight_to_json(v: WeightVector) -> dict:
    return {
        "family": v.tag.family,
        "side": v.tag.side,
        "rank": v.tag.rank_label(),
        "eps": {"coeffs": {str(i): format_half(x) for i, x in v.eps}},
        "rho": v.rho_mult,
        "theta": format_half(v.theta),
    }


def weight_from_json(data: dict) -> WeightVector:
    rank = data["rank"]
    m = n = None
    if rank != "infinite":
        m, n = rank.get("m"), rank["n"]
    tag = AlgebraTag(data["family"], data["side"], m, n)
    coeffs = {int(i): Fraction(x) for i, x in data["eps"]["coeffs"].items()}
    return WeightVector.from_dict(tag, coeffs, Fraction(data["theta"]), int(data.get("rho", 0)))


def weight_dumps(v: WeightVector) -> str:
    return json.dumps(weight_to_json(v), sort_keys=True)


def parse_level(text: str) -> Fraction:
    """Parse a level parameter ``"p"`` or ``"p/2"`` (any rational is accepted)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse level {text!r}") from None


__all__ = [
    "AlgebraTag", "WeightLabel", "WeightVector", "ZetaData", "CofiniteSet",
    "lambda_weight", "bar_lambda_weight", "gamma_weight", "zeta_data",
    "act_on_weight", "dot_action", "dot_action_mu", "dominant_rep", "in_D",
    "rho_value", "bar_level", "weight_to_json", "weight_from_json", "as_half_integer",
]
