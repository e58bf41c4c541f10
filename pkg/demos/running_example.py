"""Walk through the degree-one homology of the label (c, (1), d=1) on every route."""

from kehom.homology import h_enright_finite, h_route_bar, h_route_g, h_route_relabel
from kehom.rootsystem import delta_subsystem
from kehom.weights import WeightLabel, bar_lambda_weight, zeta_data

label = WeightLabel.make("c", (1,), 1)
print("label:", label)
print("unitarizable weight on so(inf):", bar_lambda_weight(label))

z = zeta_data(label)
print("zeta     :", [str(x) for x in z.zeta.values(6)], "...")
print("zeta-bar :", [str(x) for x in z.zbar.values(6)], "...")
print("zero-sum pairs:", sorted(z.n_pairs))
print("J  =", z.j_set.describe())
print("J0 =", z.j0_set.describe())
print("subsystem:", delta_subsystem(label).describe())

for name, route in (("g", h_route_g), ("relabel", h_route_relabel), ("bar", h_route_bar)):
    for k in range(3):
        dec = route(label, k)
        print(f"route {name:7s} H_{k}:", ", ".join(f"mu={s.mu}" for s in dec.summands))

for n in (3, 4, 6):
    dec = h_enright_finite(label, None, n, 1, verify=True)
    print(f"rank {n}: H_1 =", [str(w) for w in dec.weights] or "0")
