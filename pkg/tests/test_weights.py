import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kehom.partitions import Partition, PartitionPair, is_dual_pair
from kehom.weights import (
    AlgebraTag,
    WeightLabel,
    WeightVector,
    act_on_weight,
    bar_lambda_weight,
    dominant_rep,
    dot_action,
    dot_action_mu,
    gamma_weight,
    in_D,
    lambda_weight,
    parse_level,
    weight_from_json,
    weight_to_json,
    zeta_data,
)
from kehom.verify import check_label_zeta
from kehom.weylgroup import enumerate_w0, inverse, parse_element, simple_reflection

F = Fraction
partitions = st.lists(st.integers(1, 4), max_size=4).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def label(fam, lam, d):
    return WeightLabel.make(fam, lam, d)


@st.composite
def labels(draw):
    fam = draw(st.sampled_from("acd"))
    if fam == "a":
        lam = PartitionPair(draw(partitions), draw(partitions))
        need = len(lam.minus) + len(lam.plus)
    else:
        lam = draw(partitions)
        need = len(lam) if fam == "c" else len(lam) + sum(1 for x in lam.parts if x >= 2)
    d = draw(st.integers(need, need + 4))
    return WeightLabel.make(fam, lam, d)


def eps(v):
    return {i: x for i, x in v.eps}


def test_in_D():
    assert in_D("c", Partition((1, 1)), 2) and not in_D("c", Partition((1, 1)), 1)
    assert in_D("d", Partition((2, 1)), 3) and not in_D("d", Partition((2, 1)), 2)
    assert in_D("a", PartitionPair(Partition((1,)), Partition((1,))), 2)
    assert not in_D("a", PartitionPair(Partition((1,)), Partition((1,))), 1)
    assert not in_D("c", Partition(), F(1, 2))


def test_lambda_weight_examples():
    v = lambda_weight(label("c", (2, 1), 2))
    assert eps(v) == {1: 2, 2: 1} and v.theta == 2
    assert lambda_weight(label("c", (), 0)) == WeightVector(AlgebraTag("c"))
    v = lambda_weight(label("a", ((1,), (1,)), 2))
    assert eps(v) == {0: -1, 1: 1} and v.theta == 2


def test_bar_lambda_examples():
    v = bar_lambda_weight(label("c", (1,), 1))
    assert eps(v) == {1: 1} and v.theta == -2 and v.tag.algebra == "d"
    v = bar_lambda_weight(label("d", (1,), 2))
    assert eps(v) == {1: 1} and v.theta == -1 and v.tag.algebra == "c"
    v = bar_lambda_weight(label("a", ((), ()), 3))
    assert eps(v) == {} and v.theta == -3


def test_gamma_examples():
    g = gamma_weight(label("c", (1,), 1), None, 4)
    assert [g.coeff(i) for i in range(1, 5)] == [2, 1, 1, 1]
    g = gamma_weight(label("d", (), 2), None, 2)
    assert [g.coeff(i) for i in (1, 2)] == [1, 1]
    g = gamma_weight(label("a", ((1,), (2,)), 2), 2, 2)
    # the minus block is dominant read from index 0 outward
    assert [g.coeff(i) for i in (-1, 0, 1, 2)] == [-2, -3, 2, 0]
    with pytest.raises(ValueError):
        gamma_weight(label("c", (1, 1, 1), 3), None, 2)


def test_zeta_examples():
    z = zeta_data(label("c", (2, 1), 2))
    assert z.zeta.values(4) == [-1, -3, -5, -6]
    assert z.zbar.values(5) == [4, 2, 0, -1, -2]
    assert z.zbar(3) == 0  # zeta-bar at d+1 vanishes
    assert is_dual_pair(z.zeta, z.zbar)
    z = zeta_data(label("c", (1,), 1))
    assert z.n_pairs == {(1, 4), (4, 1), (2, 2)}
    assert z.j_set.first(3) == [3, 5, 6]
    assert z.j0_set.first(4) == [2, 3, 5, 6]
    assert zeta_data(label("d", (1, 1), 4)).zeta(1) == 0


def test_zeta_a_blocks():
    z = zeta_data(label("a", ((), ()), 0))
    assert z.zbar.values(3) == [-1, -2, -3]
    assert [z.zbar_at(i) for i in (0, -1, -2)] == [0, 1, 2]
    # the blocks take disjoint values, so nothing pairs up
    assert z.n_pairs == frozenset()
    assert z.j_plus.first(2) == [1, 2] and z.j_minus.first(2) == [0, -1]
    z = zeta_data(label("a", ((), ()), 2))
    # zeta-bar is t - 3 on the minus block and -j on the plus block
    assert z.n_pairs == {(0, 2), (-1, 1)}


@given(labels())
def test_zeta_invariants(lab):
    z = zeta_data(lab)
    assert check_label_zeta(lab) == []
    if lab.family != "a":
        assert is_dual_pair(z.zeta, z.zbar)
    for a, b in z.n_pairs:
        assert z.zbar_at(a) + (z.zbar_at(b) if lab.family != "a" else -z.zbar_at(b)) == 0


def test_act_and_dot_examples():
    v = bar_lambda_weight(label("c", (1,), 1))
    assert act_on_weight(parse_element("d:"), v) == v
    # a pure permutation permutes the epsilon coefficients
    swap = simple_reflection("d", 1)
    w = act_on_weight(swap, WeightVector.from_dict(v.tag, {1: 3, 2: 1}, v.theta))
    assert eps(w) == {1: 1, 2: 3}
    # on level-normalized coordinates the action is a signed permutation
    shifted = v.plus_rho()
    assert [shifted.effective(i) for i in range(1, 5)] == [2, 0, -1, -2]
    moved = act_on_weight(simple_reflection("d", 0), shifted)
    assert [moved.effective(i) for i in range(1, 5)] == [0, -2, -1, -2]
    back = dot_action(simple_reflection("d", 0), dot_action(simple_reflection("d", 0), v))
    assert back == v


def test_dominant_rep_examples():
    tag = AlgebraTag("c", "bar")  # acts on so(inf)
    rho = {i: 1 - i for i in range(1, 8)}
    raw = [2, 0, 1, -2, -3]
    v = WeightVector.from_dict(tag, {i: x - rho[i] for i, x in enumerate(raw, 1)}, 0, 1)
    out = dominant_rep(v)
    assert [out.total(i) for i in range(1, 6)] == [2, 1, 0, -2, -3]
    assert dominant_rep(out) == out


def test_dot_action_mu_examples():
    lab = label("c", (1,), 1)
    assert dot_action_mu(parse_element("c:"), lab) == Partition((1,))
    assert dot_action_mu(simple_reflection("c", 0), lab) == Partition((1, 1, 1))
    (w,) = enumerate_w0("a", 1)
    # the level shift at d = 1 lands on ((1,1),(1,1))
    assert dot_action_mu(w, label("a", ((), ()), 1)) == PartitionPair(Partition((1, 1)), Partition((1, 1)))


@given(labels(), st.integers(0, 3), st.data())
def test_dot_action_mu_matches_dot_action(lab, k, data):
    ws = enumerate_w0(lab.family, k)
    w = data.draw(st.sampled_from(ws))
    mu = dot_action_mu(w, lab)
    moved = dot_action(inverse(w), lambda_weight(lab))
    assert moved == integrable_weight(lab.family, mu, lab.d)


def integrable_weight(fam, mu, d):
    tag = AlgebraTag(fam)
    if fam == "a":
        lm, lp = mu.minus.transpose(), mu.plus.transpose()
        coeffs = {1 - i: -lm[i] for i in range(1, len(lm) + 1)}
        coeffs.update({i: lp[i] for i in range(1, len(lp) + 1)})
    else:
        t = mu.transpose()
        coeffs = {i: t[i] for i in range(1, len(t) + 1)}
    return WeightVector.from_dict(tag, coeffs, d)


@given(labels())
def test_json_round_trip(lab):
    for v in (lambda_weight(lab), bar_lambda_weight(lab)):
        assert weight_from_json(json.loads(json.dumps(weight_to_json(v)))) == v


def test_parse_level():
    assert parse_level("5/2") == F(5, 2)
    with pytest.raises(ValueError):
        parse_level("x")
