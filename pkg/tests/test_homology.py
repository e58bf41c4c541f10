import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kehom.homology import (
    HomologyDecomposition,
    NotUnitarizableError,
    OutOfScopeError,
    h_enright_direct,
    h_enright_finite,
    h_enright_truncation,
    h_route_bar,
    h_route_g,
    h_route_relabel,
    kostant_all_degrees,
    kostant_finite,
    normalize_finite,
)
from kehom.partitions import Partition, PartitionPair
from kehom.weights import AlgebraTag, WeightLabel, WeightVector, bar_lambda_weight, bar_weight
from kehom.weylgroup import enumerate_w0

F = Fraction
ROUTES = (h_route_g, h_route_relabel, h_route_bar)
partitions = st.lists(st.integers(1, 3), max_size=3).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


@st.composite
def labels(draw):
    fam = draw(st.sampled_from("acd"))
    if fam == "a":
        lam = PartitionPair(draw(partitions), draw(partitions))
        need = len(lam.minus) + len(lam.plus)
    else:
        lam = draw(partitions)
        need = len(lam) if fam == "c" else len(lam) + sum(1 for x in lam.parts if x >= 2)
    return WeightLabel.make(fam, lam, draw(st.integers(max(need, 1), need + 3)))


def label(fam, lam, d):
    return WeightLabel.make(fam, lam, d)


def coeffs(v):
    return {i: x for i, x in v.eps}


def test_running_example_all_routes():
    lab = label("c", (1,), 1)
    for route in ROUTES:
        (s,) = route(lab, 1).summands
        assert s.mu == Partition((1, 1, 1))
        assert coeffs(s.weight) == {1: 1, 2: 1, 3: 1} and s.weight.theta == -2


@pytest.mark.parametrize("route", ROUTES)
def test_degree_zero_is_the_module_itself(route):
    for lab in (label("c", (2, 1), 2), label("d", (1,), 1), label("a", ((1,), (2,)), 2)):
        (s,) = route(lab, 0).summands
        assert s.weight == bar_lambda_weight(lab)


def test_family_a_degree_one():
    # the level shift on the minus block doubles both columns
    for route in ROUTES:
        (s,) = route(label("a", ((), ()), 1), 1).summands
        assert s.mu == PartitionPair(Partition((1, 1)), Partition((1, 1)))


def test_zero_branch_of_family_d():
    lab = label("d", (1, 1), 4)
    for k in range(4):
        assert h_route_relabel(lab, k).same_as(h_route_g(lab, k))


def test_outside_D_rejected():
    with pytest.raises(ValueError):
        h_route_g(label("c", (1, 1), 1), 0)


@settings(max_examples=60, deadline=None)
@given(labels(), st.integers(0, 3))
def test_routes_agree(lab, k):
    g = h_route_g(lab, k)
    assert h_route_relabel(lab, k).same_as(g)
    assert h_route_bar(lab, k).same_as(g)
    assert g.is_multiplicity_free()
    assert len(g) == len(enumerate_w0(lab.family, k))
    for s in g.summands:
        assert s.weight == bar_weight(lab.family, s.mu, lab.d)


@settings(max_examples=30, deadline=None)
@given(labels(), st.integers(0, 3))
def test_json_round_trip(lab, k):
    dec = h_route_g(lab, k)
    assert HomologyDecomposition.from_json(json.loads(json.dumps(dec.to_json()))) == dec


def test_truncation_examples():
    lab = label("c", (1,), 1)
    (s,) = h_enright_finite(lab, None, 4, 1, verify=True).summands
    assert [s.weight.coeff(i) for i in range(1, 5)] == [2, 2, 2, 1]
    # degree one of the trivial label at d = 2 is mu = (1^6)
    assert len(h_enright_finite(label("c", (), 2), None, 6, 1, verify=True)) == 1
    assert len(h_enright_finite(label("c", (), 2), None, 5, 1, verify=True)) == 0
    assert len(h_enright_finite(label("c", (1, 1), 2), None, 2, 3, verify=True)) == 0
    with pytest.raises(OutOfScopeError):
        h_enright_finite(lab, None, 2, 1)


def test_free_regime():
    lab = label("d", (), F(5, 2))
    (s,) = h_enright_finite(lab, None, 3, 0, verify=True).summands
    assert [s.weight.coeff(i) for i in (1, 2, 3)] == [F(5, 4)] * 3
    for k in range(1, 5):
        assert len(h_enright_finite(lab, None, 3, k, verify=True)) == 0


def test_not_unitarizable():
    with pytest.raises(NotUnitarizableError):
        h_enright_finite(label("d", (), F(1, 2)), None, 3, 0)
    with pytest.raises(NotUnitarizableError):
        h_enright_finite(label("c", (), F(1, 2)), None, 4, 0)
    with pytest.raises(NotUnitarizableError):
        h_enright_finite(label("a", ((), (1,)), F(1, 2)), 2, 2, 0)


def test_normalize_strips_full_columns():
    fl = normalize_finite(label("c", (2, 1), 3), None, 2)
    assert fl.label.lam == Partition((1,)) and fl.label.d == 4
    fl = normalize_finite(label("d", (2, 2), 4), None, 2)
    assert fl.label.lam == Partition() and fl.label.d == 8
    fl = normalize_finite(label("a", ((1,), (2, 1)), 3), 1, 2)
    assert fl.label.lam == PartitionPair(Partition(), Partition((1,))) and fl.label.d == 5 and fl.twist == 1


@pytest.mark.parametrize("fam,lam,d,m,n", [
    ("c", (1,), 1, None, 3), ("c", (2,), 2, None, 4), ("d", (1, 1), 3, None, 3),
    ("d", (2,), 2, None, 4), ("a", ((1,), ()), 2, 2, 2), ("a", ((), (1, 1)), 3, 2, 3),
])
def test_truncation_equals_direct(fam, lam, d, m, n):
    lab = label(fam, lam, d)
    fl = normalize_finite(lab, m, n)
    for k in range(4):
        assert h_enright_truncation(fl, k).same_as(h_enright_direct(fl, k))


def test_kostant_counts():
    tag = AlgebraTag.gl(2, 2)
    zero = WeightVector(tag)
    assert [len(kostant_finite(tag, zero, k)) for k in range(5)] == [1, 1, 2, 1, 1]
    assert kostant_finite(tag, zero, 0).weights == (zero,)
    sp4 = AlgebraTag.sp(2)
    assert sum(len(d) for d in kostant_all_degrees(sp4, WeightVector(sp4))) == 4
    with pytest.raises(ValueError):
        kostant_finite(tag, WeightVector.from_dict(tag, {1: -1, 2: 1}), 0)
