"""Kostant homology of a gl(2|2)-graded gl(4) weight and its Euler characteristic."""

from kehom.characters import euler_check_kostant, levi_character, noncompact_factor, weyl_character
from kehom.homology import kostant_all_degrees
from kehom.weights import AlgebraTag, WeightVector

tag = AlgebraTag.gl(2, 2)
weight = WeightVector.from_dict(tag, {-1: 2, 0: 1, 1: 1, 2: 0})
print("highest weight:", weight)
for dec in kostant_all_degrees(tag, weight):
    for s in dec.summands:
        print(f"  H_{dec.degree}: {s.weight}  (dim {levi_character(tag, s.weight).dimension()})")

ch = weyl_character(tag, weight)
print("dim L =", ch.dimension())
print("Euler identity holds:", euler_check_kostant(tag, weight))
print("nilradical factor has", len(noncompact_factor(tag).terms), "terms")
