"""Projective representations, twisted extended quotients and a toy Bernstein block."""
import numpy as np

from gspringer.bernstein import assemble_all, component_description, klein_catalog_entry, random_catalog
from gspringer.extquot import GroupAction, TwistedQuotientData, build, random_action, strict_from_lifts
from gspringer.projrep import character_table, cyclic_group, direct_product, klein_cocycle, symmetric_group, trivial_cocycle, twisted_irreps

# %% Ordinary characters, computed exactly
ct = character_table(symmetric_group(4))
for row in ct.characters:
    print("  ", [str(v) for v in row])

# %% The Klein four group has a cocycle with C[V, kappa] = M_2(C)
V, kappa = klein_cocycle()
print("untwisted dims", twisted_irreps(V, trivial_cocycle(V)).dims)
print("twisted dims  ", twisted_irreps(V, kappa).dims)

# %% Extended quotient of a point with V acting trivially
act = GroupAction(V, [[0]] * 4)
print("plain:  ", build(act))
data = TwistedQuotientData.from_parts(act, 2, {0: kappa.table})
print("twisted:", build(act, data))

# a random S3-set: one point per orbit and irreducible of the stabilizer
rng = np.random.default_rng(3)
act = random_action(rng, symmetric_group(3), 6)
print("S3 on 6 points:", [(p.x, p.dim) for p in build(act)])

# V x Z/2 acting on two points through Z/2, the cocycle carried along the orbit
G = direct_product(V, cyclic_group(2))
pair = GroupAction(G, [[x ^ (g % 2) for x in range(2)] for g in range(G.order)])
print("stabilizer of 0:", pair.stabilizer(0))
print("orbit of length two:", build(pair, strict_from_lifts(pair, {0: kappa})))

# %% A synthetic inertial class whose stabilizer is V with the nontrivial cocycle
entry = klein_catalog_entry()
print(component_description(entry, "s").to_json())
print(assemble_all([entry]))

cat = random_catalog(np.random.default_rng(0), 3)
for key, pts in assemble_all(cat).items():
    print(key, [(p.label, p.dim, p.tag) for p in pts])
