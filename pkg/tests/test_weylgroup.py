from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kehom.oracles import brute_w0, brute_w0_counts, distinct_partition_counts, partition_counts
from kehom.partitions import EventuallyLinearSeq
from kehom.weylgroup import (
    WeylElement,
    bar_map,
    bar_map_inverse,
    compose,
    enumerate_w0,
    format_element,
    inverse,
    is_min_coset_rep,
    length,
    parse_element,
    relabel_seq,
    simple_reflection,
)

C0 = simple_reflection("c", 0)
D0 = simple_reflection("d", 0)


def el(text):
    return parse_element(text)


def test_compose_and_inverse():
    ident = WeylElement.identity("c")
    assert compose(C0, C0) == ident
    assert compose(ident, C0) == C0
    s1 = simple_reflection("c", 1)
    assert compose(C0, s1) != compose(s1, C0)
    assert compose(C0, s1)(1) == 2 and compose(s1, C0)(1) == -2
    assert inverse(ident) == ident and inverse(C0) == C0
    cyc = WeylElement.from_map("a", {0: 1, 1: 2, 2: 0})
    assert inverse(cyc).as_dict() == {1: 0, 2: 1, 0: 2}


def test_element_validation():
    with pytest.raises(ValueError):
        WeylElement.from_map("d", {1: -1})  # odd sign change
    with pytest.raises(ValueError):
        WeylElement.from_map("c", {1: 2})  # not a bijection
    assert C0(-1) == 1


def test_length_examples():
    assert length(C0) == 1
    assert length(el("c:1->-2,2->-1")) == 3
    assert length(D0) == 1


def test_min_coset_examples():
    assert is_min_coset_rep(WeylElement.identity("c"))
    assert not is_min_coset_rep(simple_reflection("c", 1))
    assert is_min_coset_rep(el("c:1->-2,2->-1"))


def test_enumerate_small():
    assert enumerate_w0("c", 0) == [WeylElement.identity("c")]
    assert enumerate_w0("c", 1) == [C0]
    assert len(enumerate_w0("a", 2)) == 2


@pytest.mark.parametrize("family", ["a", "c", "d"])
@pytest.mark.parametrize("k", range(5))
def test_enumerate_matches_brute_force(family, k):
    # [DERIVED] brute force over all (signed) permutations of a window
    assert set(enumerate_w0(family, k)) == set(brute_w0(family, k))


def test_counts_against_generating_functions():
    p, q = partition_counts(10), distinct_partition_counts(10)
    for k in range(11):
        assert len(enumerate_w0("a", k)) == p[k]
        assert len(enumerate_w0("c", k)) == q[k] == len(enumerate_w0("d", k))


def test_odd_signs_change_counts():
    assert brute_w0_counts("d", 4, even=True) != brute_w0_counts("d", 4, even=False)


def test_enumerated_elements_are_reps_of_right_length():
    for family in "acd":
        for k in range(7):
            for w in enumerate_w0(family, k):
                assert is_min_coset_rep(w) and length(w) == k


def test_bar_map_examples():
    assert bar_map(C0) == D0
    assert bar_map(WeylElement.identity("c")) == WeylElement.identity("d")
    # the flagged example: sigma(1)=-2, sigma(2)=-1 has j=2 (even), so the image
    # sends 3 -> 1 and keeps two sign changes
    img = bar_map(el("c:1->-2,2->-1"))
    assert img == el("d:1->-3,2->-2,3->1")
    assert length(img) == 3
    assert bar_map_inverse(D0) == C0
    with pytest.raises(ValueError):
        bar_map(simple_reflection("c", 1))


def test_bar_map_bijection():
    for k in range(7):
        cs, ds = enumerate_w0("c", k), enumerate_w0("d", k)
        assert sorted(map(format_element, (bar_map(s) for s in cs))) == sorted(map(format_element, ds))
        for s in ds:
            assert bar_map(bar_map_inverse(s)) == s


def test_relabel_seq_examples():
    minus_i = EventuallyLinearSeq((), Fraction(0))
    assert relabel_seq(WeylElement.identity("c"), minus_i) == minus_i
    assert relabel_seq(C0, minus_i).values(3) == [1, -2, -3]


@pytest.mark.parametrize("k", range(6))
def test_relabel_set_identity(k):
    # {xs_{s(i)}} + {0} equals {xbar_{bar(s)(i)}} with xbar_1 = 0, xbar_{i+1} = xs_i
    xs = EventuallyLinearSeq((), Fraction(0))

    def xbar(i):
        v = 0 if abs(i) == 1 else xs(abs(i) - 1)
        return v if i > 0 else -v

    for s in enumerate_w0("c", k):
        sbar = bar_map(s)
        top = max(sbar.support, default=0) + 3
        left = set(relabel_seq(s, xs).values(top - 1)) | {0}
        right = {xbar(sbar(i)) for i in range(1, top + 1)}
        assert left == right


def test_format_round_trip():
    for family in "acd":
        for w in enumerate_w0(family, 4):
            assert parse_element(format_element(w)) == w
    assert format_element(el("c:1->-2,2->-1")) == "c:1->-2,2->-1"


@given(st.permutations(range(1, 6)), st.lists(st.booleans(), min_size=5, max_size=5))
def test_inverse_property(perm, flips):
    w = WeylElement.from_map("c", {i + 1: (-p if f else p) for i, (p, f) in enumerate(zip(perm, flips))})
    assert compose(w, inverse(w)).is_identity()
    assert inverse(inverse(w)) == w
