"""Weyl groups with diagram automorphisms: double cosets, Mackey terms and quasi-Levis."""
from gspringer.rootdata import (
    ExtendedWeylGroup,
    ParabolicPair,
    composition_subset,
    double_cosets,
    element_json,
    enumerate_parabolic_pairs,
    mackey_terms,
    quasi_levi_labels,
)

# %% W(A2) = S3 as permutations of the six roots
g = ExtendedWeylGroup("A", 2)
print(g.order_w0, "elements,", g.roots.n_positive, "positive roots")
for d in double_cosets(g, [], []):
    print("  rep", element_json(g, d.rep)["word"], "length", d.length, "dim QwP", d.dim)

# %% Bruhat cells between two parabolics of B3
g = ExtendedWeylGroup("B", 3)
for d in double_cosets(g, [0], [1, 2]):
    print("  B3:", element_json(g, d.rep)["word"], "size", d.size, "dim", d.dim)

# %% Mackey formula for GL_4, P_(2,2) against P_(3,1)
g = ExtendedWeylGroup("A", 3)
P, Q = ParabolicPair(composition_subset((3, 1))), ParabolicPair(composition_subset((2, 2)))
for t in mackey_terms(g, P, Q):
    print("  w =", element_json(g, t.w)["word"], " M n wL:", t.levi_MwL.semisimple_type)

# %% Disconnected groups: D4 with its triality automorphisms
g = ExtendedWeylGroup("D", 4, "triality")
print(len(g.pi0), "diagram automorphisms,", len(enumerate_parabolic_pairs(g)), "parabolic pairs (X, Omega)")
for lab in quasi_levi_labels(g):
    print("  quasi-Levi", sorted(i + 1 for i in lab.X), lab.semisimple_type, "omega size", len(lab.omega))
