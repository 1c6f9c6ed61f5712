"""Universal coefficients in type A2 and pulling friezes back."""

from clusterfrieze.belt import build_BA, build_UA
from clusterfrieze.frieze import unitary_frieze
from clusterfrieze.morphisms import (delete, g_vectors, positive_basis_rows, property_F_check,
                                     pullback_frieze, rescaling_vectors, universal_specialization)
from clusterfrieze.seeds import ExtendedMutationMatrix, Seed, explore

B = build_BA("A2")
for x, g in g_vectors(B).items():
    print(g, x)

d = universal_specialization(B, build_UA("A2"))
print("P^univ", d.Puniv)
print("E", d.E)

# (1, -1) is a g-vector, but e1 + (-e2) also solves both equations
print(positive_basis_rows((1, -1), d.Puniv))

data = rescaling_vectors(d.hom)
print("R_u all zero:", data.all_zero(), "tt2 everywhere:", all(data.tt2.values()))

v = property_F_check(d.hom)
print(v)
print(pullback_frieze(d.hom, unitary_frieze(d.hom.target, (2, 1)), v))

# deleting u2 from A2 sends the five cluster variables to
hom = delete(Seed.root(ExtendedMutationMatrix(B)), [2])
print([str(hom(u)) for u in explore(hom.source).cluster_variables()])
print(property_F_check(hom))
