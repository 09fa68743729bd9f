"""Nilpotent orbits, their component groups, and where cuspidal local systems live."""
from collections import Counter

from gspringer.cuspidal import count_cuspidal, cuspidal_systems, cuspidal_support_exceptional, exceptional_pairs, is_cuspidal_pair
from gspringer.orbits import GroupLabel, component_group, enumerate_orbits
from gspringer.partitions import Partition, stats

# %% Exceptional groups: how many orbits, and which A(O) occur
for fam in ("G2", "F4", "E6", "E7", "E8"):
    g = GroupLabel(fam)
    orbs = enumerate_orbits(g)
    census = Counter(str(component_group(g, o)) for o in orbs)
    print(f"{fam}: {len(orbs)} orbits  {dict(census)}")

# %% A classical orbit is a partition; A(O) depends on the odd/even parts
lam = Partition((4, 2))
print(lam, stats(lam))
g = GroupLabel("C", 3)
for o in enumerate_orbits(g):
    print(f"  C3 {o}: A(O) = {component_group(g, o)}")

# %% Cuspidal counts: SL_n has phi(n) of them, Sp_2n needs n triangular
print([count_cuspidal(GroupLabel("A", n)) for n in range(1, 13)])
print([n for n in range(1, 60) if count_cuspidal(GroupLabel("C", n))])

# Spin_1225 = B_612: 1225 is both a square and a triangular number
for s in cuspidal_systems(GroupLabel("B", 612)):
    print("B612:", s.orbit.partition[:6], "...", s.rep)

# %% In E8 every pair except one has support on the maximal torus
g = GroupLabel("E8")
pairs = exceptional_pairs(g)
cusp = [(o.bala_carter, e) for o, e in pairs if is_cuspidal_pair(g, o, e)]
print(f"E8: {len(pairs)} pairs, cuspidal: {cusp}")
o, e = pairs[10]
print(o.bala_carter, e, "->", cuspidal_support_exceptional(g, o, e))
