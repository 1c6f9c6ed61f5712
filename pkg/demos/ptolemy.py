"""The Ptolemy pattern of rank 3 and its generalized diamond rule."""

from clusterfrieze.belt import knit, ptolemy_seed
from clusterfrieze.cli import ascii_staggered
from clusterfrieze.frieze import propagate

B, P = ptolemy_seed(3)
for row in B + P:
    print(row)

# p(i, m): the +1 entries are the two frozen variables at the diamond center,
# a -1 entry on a border row stands in for the missing neighbour
t = knit("A3", P, 0, 6)
names = t.alphabet.frozen
for m in range(3):
    for i in range(1, 4):
        p = t.p[(i, m)]
        center = "*".join(names[k] for k, e in enumerate(p) if e > 0)
        border = [names[k] for k, e in enumerate(p) if e < 0]
        print((i, m), center, border, t.relation_holds(i, m))

pat = propagate("A3", P, (1, 1, 1), (1,) * len(P), window=(0, 12))
print(ascii_staggered(pat.rows()))
print("relation failures:", pat.relation_failures())

# other frozen values
pat = propagate("A3", P, (2, 3, 2), (1, 1, 1, 1, 1, 1), window=(0, 12))
print(pat if pat else "rejected at %r" % ((pat.i, pat.m),))
