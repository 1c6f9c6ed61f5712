"""G2 with BFZ coefficients: the eight cluster variables and frieze points."""

from clusterfrieze.frieze import bfz_reconstruct, bfz_seed, frieze_point_check
from clusterfrieze.laurent import Alphabet
from clusterfrieze.seeds import explore

seed = bfz_seed("G2")
print(seed.matrix.tolist())  # B_A on top of U_A

frag = explore(seed)
print(len(frag.variables), "cluster variables, closed:", frag.closed)

# rewrite them in z1..z4, using p1 = z1 z3 - z2 and p2 = z2 z4 - z3^3
quad = Alphabet(["z1", "z2", "z3", "z4"])
z1, z2, z3, z4 = quad.gens()
images = [z1, z2, z1 * z3 - z2, z2 * z4 - z3 ** 3]
for x in frag.cluster_variables():
    print("  ", x.substitute(images, quad))

# frieze points: positive z with p1, p2 > 0
for point in [(1, 1, 2, 9), (1, 1, 2, 8)]:
    rep = frieze_point_check("bfz", "G2", point)
    print(point, rep.verdict, rep.witnesses)

# or parametrize by (z1, z2, p1, p2)
print(bfz_reconstruct("G2", (1, 1), (1, 1)))
print(bfz_reconstruct("G2", (2, 1), (1, 1)))
print(bfz_reconstruct("G2", (2, 1), (2, 1)))
