"""Brute-force reference computations used to cross-check the fast paths."""

from __future__ import annotations

import itertools
from collections import Counter

from .weylgroup import WeylElement


def partition_counts(kmax: int) -> list[int]:
    """p(0..kmax) by Euler's pentagonal recurrence."""
    p = [1] + [0] * kmax
    for n in range(1, kmax + 1):
        total, j = 0, 1
        while True:
            for g in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
                if g > n:
                    break
                total += (-1) ** (j + 1) * p[n - g]
            if j * (3 * j - 1) // 2 > n:
                break
            j += 1
        p[n] = total
    return p


def distinct_partition_counts(kmax: int) -> list[int]:
    """q(0..kmax): coefficients of prod (1 + x^i)."""
    q = [1] + [0] * kmax
    for part in range(1, kmax + 1):
        for n in range(kmax, part - 1, -1):
            q[n] += q[n - part]
    return q


def _signed_length(images: dict[int, int], window: int, with_long: bool) -> int:
    """Number of positive roots of type c (``with_long``) or d made negative."""
    def val(i):
        return images[i] if i > 0 else -images[-i]

    count = 0
    for i in range(1, window + 1):
        for j in range(i + 1, window + 1):
            # e_i - e_j and -e_i - e_j; a root is negative iff its height is
            if val(i) > val(j):
                count += 1
            if -val(i) > val(j):
                count += 1
        if with_long and val(i) < 0:
            count += 1
    return count


def brute_w0_signed(family: str, k: int, even: bool = True) -> list[WeylElement | dict]:
    """Signed permutations of ``1..k+2`` increasing on N with length ``k``.

    The length counts type-c roots for family c and type-d roots for
    family d.  With ``even=False`` family d admits odd sign changes; such
    elements are returned as plain dictionaries.
    """
    window = k + 2
    out = []
    for perm in itertools.permutations(range(1, window + 1)):
        for signs in itertools.product((1, -1), repeat=window):
            negs = signs.count(-1)
            if family == "d" and even and negs % 2:
                continue
            images = {i + 1: s * p for i, (p, s) in enumerate(zip(perm, signs))}
            vals = [images[i] for i in range(1, window + 1)]
            if any(a >= b for a, b in zip(vals, vals[1:])):
                continue
            # the window must be large enough: the last index stays fixed
            if images[window] != window:
                continue
            if _signed_length(images, window, family == "c") != k:
                continue
            if family == "d" and negs % 2:
                out.append(images)
            else:
                out.append(WeylElement.from_map(family, images))
    return out


def brute_w0_a(k: int) -> list[WeylElement]:
    """Permutations of ``[-k, k+1]`` increasing on both blocks with ``k`` inversions.

    Every such permutation is a shuffle, so candidates are enumerated by the
    image set of the left block.
    """
    idx = list(range(-k, k + 2))
    left_idx = [i for i in idx if i <= 0]
    right_idx = [i for i in idx if i > 0]
    out = []
    for left_img in itertools.combinations(idx, len(left_idx)):
        right_img = [x for x in idx if x not in left_img]
        images = dict(zip(left_idx, left_img))
        images.update(zip(right_idx, right_img))
        if images[idx[0]] != idx[0] or images[idx[-1]] != idx[-1]:
            continue
        inv = sum(1 for a, b in itertools.combinations(idx, 2) if images[a] > images[b])
        if inv == k:
            out.append(WeylElement.from_map("a", images))
    return out


def brute_w0(family: str, k: int, even: bool = True) -> list:
    if family == "a":
        return brute_w0_a(k)
    return brute_w0_signed(family, k, even)


def brute_w0_counts(family: str, kmax: int, even: bool = True) -> list[int]:
    return [len(brute_w0(family, k, even)) for k in range(kmax + 1)]


def multiset(items) -> Counter:
    return Counter(items)
