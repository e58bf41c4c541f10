"""Homology of the nilradical with coefficients in unitarizable modules.

Three independent routes compute the infinite-rank answer:

* ``h_route_g``: dot action of W^0 on the integrable side, then swap sides;
* ``h_route_relabel``: permute the zeta-bar sequence along the unpaired indices;
* ``h_route_bar``: act by the minimal coset representatives of Delta(lam, d).

``h_enright_finite`` gives the finite-rank formula, either by truncating the
infinite-rank answer or directly from Phi(xi).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .partitions import Partition, PartitionPair, parse_pair, parse_partition, transpose
from .rootsystem import (
    FiniteWeylElement,
    coset_reps,
    finite_w0,
    positive_roots,
    delta_subsystem,
    subsystem_w0,
)
from .weights import (
    AlgebraTag,
    Label,
    WeightLabel,
    WeightVector,
    act_on_weight,
    bar_lambda_weight,
    bar_weight,
    dominant_rep,
    dot_action_mu,
    gamma_weight,
    in_D,
    label_of_bar_weight,
    weight_from_json,
    weight_to_json,
    zeta_data,
)
from .weylgroup import bar_map_inverse, enumerate_w0, inverse


class NotUnitarizableError(ValueError):
    """The requested finite-rank weight is not unitarizable."""


class OutOfScopeError(ValueError):
    """The weight is unitarizable but the formula does not cover it."""


@dataclass(frozen=True)
class HomologySummand:
    weight: WeightVector
    mu: Optional[Label] = None

    def to_json(self) -> dict:
        return {"weight": weight_to_json(self.weight), "mu": None if self.mu is None else label_text(self.mu)}

    @classmethod
    def from_json(cls, data: dict) -> "HomologySummand":
        weight = weight_from_json(data["weight"])
        mu = data.get("mu")
        if mu is not None:
            mu = parse_pair(mu) if weight.tag.family == "a" else parse_partition(mu)
        return cls(weight, mu)


def label_text(lam: Label) -> str:
    return str(lam)


@dataclass(frozen=True)
class HomologyDecomposition:
    """Levi-module decomposition of one homology group; summands kept sorted."""

    degree: int
    summands: tuple[HomologySummand, ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.summands, key=lambda s: s.weight.sort_key()))
        object.__setattr__(self, "summands", ordered)

    @property
    def weights(self) -> tuple[WeightVector, ...]:
        return tuple(s.weight for s in self.summands)

    def same_as(self, other: "HomologyDecomposition") -> bool:
        return self.degree == other.degree and self.weights == other.weights

    def is_multiplicity_free(self) -> bool:
        return len(set(self.weights)) == len(self.weights)

    def __len__(self) -> int:
        return len(self.summands)

    def to_json(self) -> dict:
        return {"degree": self.degree, "summands": [s.to_json() for s in self.summands]}

    @classmethod
    def from_json(cls, data: dict) -> "HomologyDecomposition":
        return cls(int(data["degree"]), tuple(HomologySummand.from_json(s) for s in data["summands"]))


def _decomposition(k: int, summands: list[HomologySummand], infinite: bool) -> HomologyDecomposition:
    out = HomologyDecomposition(k, tuple(summands))
    if infinite:
        assert out.is_multiplicity_free(), f"repeated summand in degree {k}"
    return out


def _require_D(label: WeightLabel):
    if not label.in_D():
        raise ValueError(f"{label} is not in D({label.family})")


# -- route through the integrable side ----------------------------------------

def h_route_g(label: WeightLabel, k: int) -> HomologyDecomposition:
    _require_D(label)
    out = []
    for w in enumerate_w0(label.family, k):
        mu = dot_action_mu(w, label)
        out.append(HomologySummand(bar_weight(label.family, mu, label.d), mu))
    return _decomposition(k, out, True)


# -- route by relabelling zeta-bar --------------------------------------------

def _mu_from_sorted_cd(family: str, eta: list[Fraction], d: Fraction) -> Partition:
    shift = -1 - d if family == "c" else -d / 2
    parts = [x + i + shift for i, x in enumerate(eta, start=1)]
    if any(p.denominator != 1 for p in parts):
        raise AssertionError(f"non-integral parts {parts}")
    return Partition(tuple(int(p) for p in parts))


def _relabel_cd(label: WeightLabel, k: int) -> list[HomologySummand]:
    z = zeta_data(label)
    fam, d = label.family, label.d
    use_bar = fam == "d" and z.zeta(1) == 0
    out = []
    for w in enumerate_w0(fam, k):
        sigma = bar_map_inverse(w) if use_bar else w
        top = max(sigma.support, default=0) + 1
        js = z.j_set.first(top)
        size = max(js[-1], z.window) + 2
        eta = {i: z.zbar(i) for i in range(1, size + 1)}
        for i in range(1, top + 1):
            t = sigma(i)
            val = z.zbar(js[abs(t) - 1])
            eta[js[i - 1]] = val if t > 0 else -val
        vals = sorted(eta.values(), reverse=True)
        assert vals[-1] > z.zbar(size + 1), "relabel window too small"
        mu = _mu_from_sorted_cd(fam, vals, d)
        out.append(HomologySummand(bar_weight(fam, mu, d), mu))
    return out


def _relabel_a(label: WeightLabel, k: int) -> list[HomologySummand]:
    z = zeta_data(label)
    d = label.d
    out = []
    for w in enumerate_w0("a", k):
        span = max([abs(i) for i in w.support], default=0) + 2
        plus = z.j_plus.first(span + 1)
        minus = z.j_minus.first(span + 1)

        def j(i):
            # strictly decreasing enumeration: j_0 = min J+, j_1 = max J-
            return plus[-i] if i <= 0 else minus[i - 1]

        size = max(max(plus), -min(minus), z.window) + 2
        eta = {i: z.zbar_at(i) for i in range(1 - size, size + 1)}
        for i in range(1 - span, span + 1):
            eta[j(i)] = z.zbar_at(j(w(i)))
        pos = sorted((eta[i] for i in range(1, size + 1)), reverse=True)
        neg = sorted((eta[i] for i in range(1 - size, 1)))
        assert pos[-1] > z.zbar_at(size + 1) and neg[-1] < z.zbar_at(-size), "relabel window too small"
        mu_plus = [x + i for i, x in enumerate(pos, start=1)]
        mu_minus = [-x + t - 1 - d for t, x in enumerate(neg, start=1)]
        if any(Fraction(x).denominator != 1 for x in mu_plus + mu_minus):
            raise AssertionError("non-integral parts")
        mu = PartitionPair(Partition(tuple(int(x) for x in mu_minus)), Partition(tuple(int(x) for x in mu_plus)))
        out.append(HomologySummand(bar_weight("a", mu, d), mu))
    return out


def h_route_relabel(label: WeightLabel, k: int) -> HomologyDecomposition:
    _require_D(label)
    out = _relabel_a(label, k) if label.family == "a" else _relabel_cd(label, k)
    return _decomposition(k, out, True)


# -- route through Delta(lam, d) -----------------------------------------------

def h_route_bar(label: WeightLabel, k: int) -> HomologyDecomposition:
    _require_D(label)
    shifted = bar_lambda_weight(label).plus_rho()
    sub = delta_subsystem(label)
    out = []
    for w in subsystem_w0(sub, k):
        v = dominant_rep(act_on_weight(inverse(w), shifted)).minus_rho()
        out.append(HomologySummand(v, label_of_bar_weight(v, label.d)))
    return _decomposition(k, out, True)


ROUTES = {"g": h_route_g, "relabel": h_route_relabel, "bar": h_route_bar}


# -- finite rank --------------------------------------------------------------

def _finite_summands(xi: WeightVector, reps, k: int) -> list[HomologySummand]:
    """``[w^{-1}(xi + rho)]^+ - rho`` for every representative of length ``k``."""
    shifted = {i: xi.total(i) + xi.rho(i) for i in xi.tag.indices()}
    out = []
    for w, length in reps:
        if length != k:
            continue
        moved = w.inverse().apply_coords(shifted)
        v = WeightVector.from_dict(xi.tag, {i: moved[i] - xi.rho(i) for i in xi.tag.indices()}, 0, 1)
        out.append(HomologySummand(dominant_rep(v).minus_rho()))
    return out


def twist_weight(v: WeightVector, twist) -> WeightVector:
    """Add ``twist`` times the sum of all epsilons (finite rank)."""
    if not twist:
        return v
    return WeightVector.from_dict(v.tag, {i: v.coeff(i) + twist for i in v.tag.indices()})


@dataclass(frozen=True)
class FiniteLabel:
    """A finite-rank weight ``Gamma(lam, d) + twist * sum(e_i)`` with lam normalized."""

    label: WeightLabel
    m: Optional[int]
    n: int
    twist: Fraction

    @property
    def weight(self) -> WeightVector:
        return twist_weight(gamma_weight(self.label, self.m, self.n), self.twist)


def normalize_finite(label: WeightLabel, m: Optional[int], n: int, twist=0) -> FiniteLabel:
    """Strip full columns so that the last row (last row of each block for a) is empty."""
    fam, lam, d = label.family, label.lam, label.d
    twist = Fraction(twist)
    if fam == "a":
        if len(lam.plus) > n or len(lam.minus) > m:
            raise ValueError(f"{lam} does not fit into gl({m}+{n})")
        sm, sp = lam.minus[m], lam.plus[n]
        lam = PartitionPair(
            Partition(tuple(x - sm for x in lam.minus)), Partition(tuple(x - sp for x in lam.plus))
        )
        d, twist = d + sm + sp, twist + sp
    else:
        if len(lam) > n:
            raise ValueError(f"{lam} has more than {n} parts")
        s = lam[n]
        lam = Partition(tuple(x - s for x in lam))
        d = d + (s if fam == "c" else 2 * s)
    return FiniteLabel(WeightLabel(label.tag, lam, d), m, n, twist)


def continuous_bound(fam: str, lam: Label, m: Optional[int], n: int) -> Fraction:
    """Lower end of the continuous unitarizable range (normalized lam)."""
    if fam == "a":
        return Fraction(min(transpose(lam.minus)[1] + n - 1, transpose(lam.plus)[1] + m - 1))
    t = transpose(lam)
    if fam == "d":
        return Fraction(n - 1 + t[2])
    if (n - t[1]) % 2 == 0:
        return Fraction(t[1] + n, 2) - 1
    return Fraction(t[1] + n - 1, 2) - 1


def classify_finite(fl: FiniteLabel) -> str:
    """'discrete' (in the truncatable parameter set), 'free' or raise."""
    lab = fl.label
    fam, lam, d = lab.family, lab.lam, lab.d
    if fam == "c" and fl.n >= 2 and lam[fl.n - 1] != lam[fl.n]:
        raise OutOfScopeError(f"{lab} at n={fl.n}: last two coordinates differ (outside the covered range)")
    if in_D(fam, lam, d):
        return "discrete"
    bound = continuous_bound(fam, lam, fl.m, fl.n)
    if d > bound:
        return "free"
    if d == bound:
        raise OutOfScopeError(f"{lab} at n={fl.n}: boundary of the continuous range (outside the covered range)")
    raise NotUnitarizableError(f"{lab} at m={fl.m}, n={fl.n}: not unitarizable")


def _fits(mu: Label, m: Optional[int], n: int) -> bool:
    if isinstance(mu, PartitionPair):
        return len(mu.plus) <= n and len(mu.minus) <= m
    return len(mu) <= n


def _check_rank_args(label: WeightLabel, m, n, twist):
    if label.family == "a":
        if m is None or m < 1 or n < 1:
            raise ValueError("family a needs m, n >= 1")
    else:
        if twist:
            raise ValueError("det_twist is only defined for family a")
        if n < 1:
            raise ValueError("need n >= 1")


def h_enright_truncation(fl: FiniteLabel, k: int) -> HomologyDecomposition:
    """Truncate the infinite-rank answer to rank (m, n)."""
    lab = fl.label
    out = []
    for s in h_route_g(lab, k).summands:
        if _fits(s.mu, fl.m, fl.n):
            g = gamma_weight(WeightLabel(lab.tag, s.mu, lab.d), fl.m, fl.n)
            out.append(HomologySummand(twist_weight(g, fl.twist), s.mu))
    return _decomposition(k, out, False)


def h_enright_direct(fl: FiniteLabel, k: int) -> HomologyDecomposition:
    """Finite-rank formula from the reflection subgroup generated by Phi(xi)."""
    xi = fl.weight
    return _decomposition(k, _finite_summands(xi, finite_w0(xi), k), False)


def h_enright_finite(label: WeightLabel, m: Optional[int], n: int, k: int, det_twist=0,
                     verify: bool = False) -> HomologyDecomposition:
    _check_rank_args(label, m, n, det_twist)
    fl = normalize_finite(label, m if label.family == "a" else None, n, det_twist)
    regime = classify_finite(fl)
    if regime == "free":
        summands = [HomologySummand(fl.weight)] if k == 0 else []
        out = _decomposition(k, summands, False)
        if verify:
            direct = h_enright_direct(fl, k)
            assert direct.same_as(out), "direct path disagrees in the free regime"
        return out
    out = h_enright_truncation(fl, k)
    if verify:
        direct = h_enright_direct(fl, k)
        assert direct.same_as(out), f"truncation and direct paths disagree for {label}, n={n}, k={k}"
    return out


def kostant_finite(tag: AlgebraTag, weight: WeightVector, k: int) -> HomologyDecomposition:
    """Classical Kostant formula for a dominant integral weight at finite rank."""
    if tag.infinite or weight.tag != tag:
        raise ValueError("kostant_finite expects a finite-rank weight on the given tag")
    coords = {i: weight.total(i) + weight.rho(i) for i in tag.indices()}
    pos = positive_roots(tag)
    for r in pos:
        val = r.coroot_pairing(lambda i: coords[i])
        if val.denominator != 1 or val < 1:
            raise ValueError(f"{weight} is not dominant integral")
    system = set(pos) | {-r for r in pos}
    return _decomposition(k, _finite_summands(weight, coset_reps(tag, system), k), False)


def kostant_all_degrees(tag: AlgebraTag, weight: WeightVector) -> list[HomologyDecomposition]:
    """Kostant homology in every degree (one coset enumeration shared by all degrees)."""
    kostant_finite(tag, weight, 0)
    pos = positive_roots(tag)
    reps = coset_reps(tag, set(pos) | {-r for r in pos})
    top = max(length for _, length in reps)
    return [_decomposition(k, _finite_summands(weight, reps, k), False) for k in range(top + 1)]


__all__ = [
    "HomologySummand", "HomologyDecomposition", "NotUnitarizableError", "OutOfScopeError",
    "h_route_g", "h_route_relabel", "h_route_bar", "h_enright_finite", "h_enright_truncation",
    "h_enright_direct", "kostant_finite", "kostant_all_degrees", "normalize_finite", "classify_finite", "FiniteLabel",
    "continuous_bound", "twist_weight", "ROUTES",
]
