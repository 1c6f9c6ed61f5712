"""Counting friezes of finite type and watching the gliding symmetry."""

from clusterfrieze.cli import ascii_staggered
from clusterfrieze.coxeter import F_map, coxeter_orbit
from clusterfrieze.frieze import enumerate_friezes, propagate

for label in ["A2", "A3", "B2", "G2"]:
    en = enumerate_friezes(label, bound=16)
    print(label, len(en), "friezes, largest initial entry", en.max_initial)

# G2 has friezes starting at (3, 14) and (5, 14): a bound of 8 misses them
print(sorted(f.cluster_values for f in enumerate_friezes("G2", bound=16)))

cd = coxeter_orbit("A3")
print("h =", cd.h, "h(i;c) =", cd.h_i, "i* =", cd.istar)
pat = propagate("A3", (), (1, 2, 1), window=(0, 2 * cd.h + 4))
print(ascii_staggered(pat.rows()))

# f(F(i, m)) = f(i, m)
for i in range(1, 4):
    j, n = F_map(cd, i, 0)
    print((i, 0), "->", (j, n), pat[(i, 0)], pat[(j, n)])

# with coefficients: unitary friezes are always there
en = enumerate_friezes("A2", [[1, -1], [0, 1]], fp=(2, 3), bound=12)
for fr, p in zip(en, en.patterns):
    print(fr.values, p.is_F_invariant())
