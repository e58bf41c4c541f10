"""Verification sweeps shared by the test-suite and the ``verify`` command.

Each ``criterion_*`` function returns a :class:`CriterionResult`; the sweep
sizes come from a :class:`SweepConfig`.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable

from .characters import (
    dominant_weights,
    euler_check_kostant,
    euler_lhs,
    levi_blocks,
    noncompact_factor,
    weyl_character,
)
from .homology import (
    HomologyDecomposition,
    HomologySummand,
    OutOfScopeError,
    classify_finite,
    continuous_bound,
    h_enright_direct,
    h_enright_finite,
    h_enright_truncation,
    h_route_bar,
    h_route_g,
    h_route_relabel,
    kostant_all_degrees,
    normalize_finite,
    twist_weight,
)
from .oracles import brute_w0_counts, distinct_partition_counts, partition_counts
from .partitions import (
    EventuallyLinearSeq,
    Partition,
    PartitionPair,
    dual_partner,
    is_dual_pair,
    partition_pairs_up_to,
    partitions_up_to,
    rho_shifted_seq,
    transpose,
)
from .weights import AlgebraTag, WeightLabel, WeightVector, bar_weight, gamma_weight, in_D, zeta_data
from .weylgroup import bar_map, enumerate_w0, length


@dataclass(frozen=True)
class SweepConfig:
    size: int = 6          # max |lam| for route agreement
    dmax: int = 8
    kmax: int = 4
    trunc_size: int = 4    # truncation sweep
    trunc_dmax: int = 6
    trunc_kmax: int = 3
    nmax: int = 6          # finite rank for families c, d
    mnmax: int = 4         # finite rank bound for family a
    enum_kmax: int = 10
    plain_size: int = 10   # plain dual-pair check
    char_bound: int = 3


FULL = SweepConfig()
QUICK = SweepConfig(size=4, dmax=5, kmax=3, trunc_size=3, trunc_dmax=4, trunc_kmax=3,
                    nmax=4, mnmax=3, enum_kmax=10, plain_size=8, char_bound=2)


def config_from_env(base: SweepConfig) -> SweepConfig:
    """Apply ``KE_SWEEP_BOUND`` (max partition size) on top of ``base``."""
    raw = os.environ.get("KE_SWEEP_BOUND")
    if not raw:
        return base
    bound = int(raw)
    if bound < 0:
        raise ValueError("KE_SWEEP_BOUND must be nonnegative")
    return replace(base, size=bound, trunc_size=min(bound, base.trunc_size), plain_size=max(bound, 1))


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] criterion {self.number}: {self.name} ({self.checked} checks, {self.seconds:.1f}s){extra}"


def _timed(number: int, name: str, body: Callable[[list], int]) -> CriterionResult:
    start = time.perf_counter()
    failures: list = []
    checked = body(failures)
    return CriterionResult(number, name, not failures, checked, failures, time.perf_counter() - start)


def sweep_labels(family: str, size: int, dmin: int, dmax: int) -> list[WeightLabel]:
    lams = partition_pairs_up_to(size) if family == "a" else partitions_up_to(size)
    return [
        WeightLabel.make(family, lam, d)
        for lam in lams
        for d in range(dmin, dmax + 1)
        if in_D(family, lam, d)
    ]


# -- 1. route agreement -------------------------------------------------------

def criterion_route_agreement(cfg: SweepConfig = FULL) -> CriterionResult:
    def body(failures):
        n = 0
        for fam in "acd":
            for label in sweep_labels(fam, cfg.size, 1, cfg.dmax):
                for k in range(cfg.kmax + 1):
                    n += 1
                    g = h_route_g(label, k)
                    r = h_route_relabel(label, k)
                    b = h_route_bar(label, k)
                    if not (g.same_as(r) and g.same_as(b)) or len(g) != len(enumerate_w0(fam, k)):
                        failures.append(f"{label} k={k}")
        return n

    return _timed(1, "route agreement", body)


# -- 2. worked example ----------------------------------------------------------

def criterion_worked_example() -> CriterionResult:
    def body(failures):
        label = WeightLabel.make("c", (1,), 1)
        expected = WeightVector.from_dict(AlgebraTag("c", "bar"), {1: 1, 2: 1, 3: 1}, -2)
        if bar_weight("c", Partition((1, 1, 1)), 1) != expected:
            failures.append("constructor mismatch")
        for name, route in (("g", h_route_g), ("relabel", h_route_relabel), ("bar", h_route_bar)):
            dec = route(label, 1)
            if dec.weights != (expected,):
                failures.append(f"route {name}: {[str(w) for w in dec.weights]}")
        return 3

    return _timed(2, "worked example c,(1),d=1,k=1", body)


# -- 3. enumeration counts ------------------------------------------------------

def criterion_enumeration(cfg: SweepConfig = FULL) -> CriterionResult:
    def body(failures):
        kmax = cfg.enum_kmax
        p, q = partition_counts(kmax), distinct_partition_counts(kmax)
        n = 0
        for k in range(kmax + 1):
            n += 1
            a, c, d = (enumerate_w0(f, k) for f in "acd")
            if len(a) != p[k] or len(c) != q[k] or len(d) != q[k]:
                failures.append(f"k={k}: counts {len(a)},{len(c)},{len(d)} vs {p[k]},{q[k]}")
            images = [bar_map(s) for s in c]
            if set(images) != set(d) or len(set(images)) != len(images):
                failures.append(f"k={k}: bar_map is not a bijection")
            if any(length(x) != k for x in images):
                failures.append(f"k={k}: bar_map changes length")
        return n

    return _timed(3, "enumeration counts", body)


# -- 4. dual pairs --------------------------------------------------------------

def _neg_seq(s: EventuallyLinearSeq) -> EventuallyLinearSeq:
    """``t -> -s(t)`` for an increasing sequence, as a decreasing one."""
    return EventuallyLinearSeq(tuple(-x for x in s.head), -s.tail_intercept, s.origin, -s.direction)


def _window_set(values_at, lo: int, hi: int, vmin, vmax) -> set:
    return {v for v in (values_at(i) for i in range(lo, hi + 1)) if vmin <= v <= vmax}


def check_label_zeta(label: WeightLabel) -> list[str]:
    """All zeta-level identity checks for one label; returns failure messages."""
    z = zeta_data(label)
    fam, d, lam = label.family, label.d, label.lam
    out = []
    if fam in ("c", "d"):
        if not is_dual_pair(z.zeta, z.zbar):
            out.append("zeta/zbar not dual")
        if dual_partner(z.zeta) != z.zbar:
            out.append("dual_partner(zeta) != zbar")
        W = z.window
        js = z.j_set.first(3 * W)
        S_bar = {z.zbar(j) for j in js if z.zbar(j) >= -W}
        S = {z.zeta(i) for i in range(1, 4 * W) if z.zeta(i) >= -W}
        has_zero_bar = any(z.zbar(i) == 0 for i in range(1, W + 1))
        if fam == "c":
            if S_bar != S:
                out.append("S-bar != S")
            if z.zbar(int(d) + 1) != 0:
                out.append("zbar_{d+1} != 0")
        else:
            odd = d % 2 == 1
            if odd:
                if S_bar != S or 0 in S or has_zero_bar:
                    out.append("odd-d case fails")
            elif transpose(lam)[1] == d / 2:
                if S_bar | {0} != S or z.zeta(1) != 0 or has_zero_bar:
                    out.append("even-d, lam'_1 = d/2 case fails")
            else:
                if S_bar != S or not has_zero_bar or 0 in S:
                    out.append("even-d, lam'_1 != d/2 case fails")
        return out
    if not is_dual_pair(z.zbar, z.zeta):
        out.append("plus block not dual")
    if not is_dual_pair(_neg_seq(z.zeta_neg), _neg_seq(z.zbar_neg)):
        out.append("minus block not dual")
    W = z.window
    vmin, vmax = -W, W
    s_plus = _window_set(z.zeta_at, 1, 4 * W, vmin, vmax)
    s_minus = _window_set(z.zeta_at, -4 * W, 0, vmin, vmax)
    sb_plus = {z.zbar_at(j) for j in z.j_plus.first(4 * W)}
    sb_minus = {z.zbar_at(i) for i in z.j_minus.first(4 * W)}
    sb_plus = {v for v in sb_plus if vmin <= v <= vmax}
    sb_minus = {v for v in sb_minus if vmin <= v <= vmax}
    if sb_plus != {-v for v in s_minus}:
        out.append("S-bar_+ != -S_-")
    if sb_minus != {-v for v in s_plus}:
        out.append("S-bar_- != -S_+")
    return out


def criterion_dual_pairs(cfg: SweepConfig = FULL) -> CriterionResult:
    def body(failures):
        n = 0
        for lam in partitions_up_to(cfg.plain_size):
            n += 1
            s1 = rho_shifted_seq(lam, 0)
            s2 = rho_shifted_seq(lam, 1, use_transpose=True)
            if not is_dual_pair(s1, s2) or dual_partner(s1) != s2:
                failures.append(f"plain {lam}")
        for fam in "acd":
            for label in sweep_labels(fam, cfg.size, 0, cfg.dmax):
                n += 1
                for msg in check_label_zeta(label):
                    failures.append(f"{label}: {msg}")
        return n

    return _timed(4, "dual pairs and zeta identities", body)


# -- 5. truncation --------------------------------------------------------------

def finite_ranks(family: str, cfg: SweepConfig):
    if family == "a":
        return [(m, n) for m in range(1, cfg.mnmax + 1) for n in range(1, cfg.mnmax + 1)]
    return [(None, n) for n in range(1, cfg.nmax + 1)]


def criterion_truncation(cfg: SweepConfig = FULL) -> CriterionResult:
    def body(failures):
        n = 0
        for fam in "acd":
            for label in sweep_labels(fam, cfg.trunc_size, 1, cfg.trunc_dmax):
                for m, rank in finite_ranks(fam, cfg):
                    lam = label.lam
                    if fam == "a" and (len(lam.plus) > rank or len(lam.minus) > m):
                        continue
                    if fam != "a" and len(lam) > rank:
                        continue
                    fl = normalize_finite(label, m, rank)
                    try:
                        classify_finite(fl)
                    except OutOfScopeError:
                        continue
                    for k in range(cfg.trunc_kmax + 1):
                        n += 1
                        if not h_enright_truncation(fl, k).same_as(h_enright_direct(fl, k)):
                            failures.append(f"{label} m={m} n={rank} k={k}")
        return n

    return _timed(5, "truncation commutes", body)


# -- 6. generic regime ----------------------------------------------------------

def generic_labels() -> list[tuple[WeightLabel, int | None, int, Fraction]]:
    """Twenty labels with non-integral d strictly inside the continuous range."""
    specs = [
        ("d", (), None, 3, Fraction(1, 2)), ("d", (1,), None, 4, Fraction(1, 2)),
        ("d", (2, 1), None, 4, Fraction(1, 3)), ("d", (1, 1), None, 5, Fraction(3, 2)),
        ("d", (3,), None, 2, Fraction(5, 2)), ("d", (2, 2, 1), None, 6, Fraction(2, 3)),
        ("c", (), None, 4, Fraction(1, 2)), ("c", (), None, 5, Fraction(1, 2)),
        ("c", (1, 1), None, 4, Fraction(1, 2)), ("c", (2, 2), None, 4, Fraction(3, 2)),
        ("c", (1,), None, 1, Fraction(1, 2)), ("c", (1, 1, 1, 1), None, 6, Fraction(1, 4)),
        ("a", ((), ()), 2, 2, Fraction(1, 2)), ("a", ((1,), (1,)), 2, 3, Fraction(1, 2)),
        ("a", ((2,), ()), 2, 2, Fraction(1, 3)), ("a", ((), (1, 1)), 3, 3, Fraction(3, 2)),
        ("a", ((1, 1), (2,)), 3, 2, Fraction(1, 2)), ("a", ((1,), ()), 1, 1, Fraction(1, 2)),
        ("a", ((), ()), 4, 3, Fraction(5, 2)), ("a", ((2, 1), (1,)), 3, 3, Fraction(1, 2)),
    ]
    out = []
    for fam, lam, m, n, offset in specs:
        base = WeightLabel.make(fam, lam, 0)
        d = continuous_bound(fam, base.lam, m, n) + offset
        twist = Fraction(1) if fam == "a" and len(out) % 2 else Fraction(0)
        out.append((WeightLabel.make(fam, lam, d), m, n, twist))
    return out


def criterion_generic(kmax: int = 4) -> CriterionResult:
    def body(failures):
        n = 0
        for label, m, rank, twist in generic_labels():
            if label.d.denominator == 1:
                failures.append(f"{label}: d is integral")
                continue
            expected = twist_weight(gamma_weight(label, m, rank), twist)
            for k in range(kmax + 1):
                n += 1
                dec = h_enright_finite(label, m, rank, k, det_twist=twist, verify=True)
                want = (expected,) if k == 0 else ()
                if dec.weights != want:
                    failures.append(f"{label} m={m} n={rank} k={k}")
        return n

    return _timed(6, "generic regime vanishing", body)


# -- 7 and 8. Kostant baseline and negative controls ------------------------------

KOSTANT_TAGS = {
    "gl(3)": AlgebraTag.gl(1, 2),
    "gl(4)": AlgebraTag.gl(2, 2),
    "sp(4)": AlgebraTag.sp(2),
    "sp(6)": AlgebraTag.sp(3),
    "so(6)": AlgebraTag.so(3),
    "so(8)": AlgebraTag.so(4),
}
COSET_COUNTS = {"gl(3)": 3, "gl(4)": 6, "sp(4)": 4, "sp(6)": 8, "so(6)": 4, "so(8)": 8}


def corrupt(dec: HomologyDecomposition, pos: int) -> HomologyDecomposition:
    """Raise the top coordinate of one summand's first Levi block by one."""
    tag = dec.summands[pos].weight.tag
    w = dec.summands[pos].weight
    first = levi_blocks(tag)[0][0]
    coords = {i: w.total(i) for i in tag.indices()}
    coords[first] += 1
    bad = HomologySummand(WeightVector.from_dict(tag, coords))
    rest = list(dec.summands)
    rest[pos] = bad
    return HomologyDecomposition(dec.degree, tuple(rest))


def criterion_kostant(cfg: SweepConfig = FULL, controls: list | None = None) -> CriterionResult:
    """Euler check for every dominant weight; stores corrupted variants in ``controls``."""
    def body(failures):
        n = 0
        for name, tag in KOSTANT_TAGS.items():
            for weight in dominant_weights(tag, cfg.char_bound):
                n += 1
                degrees = kostant_all_degrees(tag, weight)
                total = sum(len(d) for d in degrees)
                if total != COSET_COUNTS[name]:
                    failures.append(f"{name} {weight}: {total} summands")
                if not euler_check_kostant(tag, weight, degrees):
                    failures.append(f"{name} {weight}: Euler identity fails")
                if controls is not None:
                    controls.append((name, tag, weight, degrees))
        return n

    return _timed(7, "Kostant baseline with characters", body)


def criterion_negative_controls(cfg: SweepConfig = FULL, controls: list | None = None) -> CriterionResult:
    def body(failures):
        n = 0
        data = controls
        if data is None:
            data = []
            for name, tag in KOSTANT_TAGS.items():
                for weight in dominant_weights(tag, cfg.char_bound):
                    data.append((name, tag, weight, kostant_all_degrees(tag, weight)))
        rhs_cache = {}
        for name, tag, weight, degrees in data:
            rhs = rhs_cache.setdefault((name, weight), weyl_character(tag, weight) * noncompact_factor(tag))
            for di, dec in enumerate(degrees):
                for pos in range(len(dec)):
                    n += 1
                    bad = list(degrees)
                    bad[di] = corrupt(dec, pos)
                    if euler_lhs(tag, bad) == rhs:
                        failures.append(f"{name} {weight}: corruption of degree {dec.degree} not detected")
        n += 1
        even = brute_w0_counts("d", 4, even=True)
        odd = brute_w0_counts("d", 4, even=False)
        if even == odd:
            failures.append("dropping evenness does not change W^0_d counts")
        if even != [len(enumerate_w0("d", k)) for k in range(5)]:
            failures.append("brute-force W^0_d counts disagree with enumerate_w0")
        return n

    return _timed(8, "negative controls", body)


def run_all(cfg: SweepConfig = FULL, report: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    controls: list = []
    steps = [
        lambda: criterion_route_agreement(cfg),
        criterion_worked_example,
        lambda: criterion_enumeration(cfg),
        lambda: criterion_dual_pairs(cfg),
        lambda: criterion_truncation(cfg),
        criterion_generic,
        lambda: criterion_kostant(cfg, controls),
        lambda: criterion_negative_controls(cfg, controls),
    ]
    results = []
    for step in steps:
        res = step()
        results.append(res)
        if report:
            report(res)
    return results
