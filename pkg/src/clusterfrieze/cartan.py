"""Symmetrizable Cartan matrices and the named finite types.

Labelling follows Kac's tables.  The labelling matters: the Coxeter
element is s_1 ... s_r in index order and B_A is oriented by it.

    A_n   1 - 2 - ... - n
    B_n   1 - ... - (n-1) => n        a_{n,n-1} = -2
    C_n   transpose of B_n            a_{n-1,n} = -2
    D_n   1 - ... - (n-2), with n-1 and n both attached to n-2
    E_6   1 - 2 - 3 - 4 - 5, with 6 attached to 3
    E_7   1 - ... - 6, with 7 attached to 4
    E_8   1 - ... - 7, with 8 attached to 5
    F_4   1 - 2 => 3 - 4              a_{3,2} = -2
    G_2   a_{1,2} = -3, a_{2,1} = -1
"""

import re

import networkx as nx

from .seeds import NotSkewSymmetrizable, symmetrizer


class CartanError(ValueError):
    pass


class CartanMatrix:
    def __init__(self, A):
        A = tuple(tuple(int(x) for x in row) for row in A)
        r = len(A)
        if any(len(row) != r for row in A):
            raise CartanError("Cartan matrix must be square")
        for i in range(r):
            if A[i][i] != 2:
                raise CartanError("diagonal entry a_%d%d is %d, not 2" % (i + 1, i + 1, A[i][i]))
            for j in range(r):
                if i != j and A[i][j] > 0:
                    raise CartanError("positive off-diagonal entry a_%d%d" % (i + 1, j + 1))
        try:
            D = symmetrizer(A, skew=False)
        except NotSkewSymmetrizable as exc:
            raise CartanError("not symmetrizable: %s" % exc) from None
        self.A = A
        self.r = r
        self.D = D

    @classmethod
    def from_type(cls, label):
        return cls(named_cartan(label))

    def __getitem__(self, ij):
        i, j = ij
        return self.A[i][j]

    def tolist(self):
        return [list(row) for row in self.A]

    def symmetrized(self):
        return [[self.D[i] * self.A[i][j] for j in range(self.r)] for i in range(self.r)]

    def dynkin_graph(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.r))
        for i in range(self.r):
            for j in range(i + 1, self.r):
                if self.A[i][j]:
                    g.add_edge(i, j)
        return g

    def components(self):
        """Connected components as sorted lists of 0-based indices."""
        return sorted(sorted(c) for c in nx.connected_components(self.dynkin_graph()))

    def is_indecomposable(self):
        return self.r > 0 and len(self.components()) == 1

    def submatrix(self, indices):
        return CartanMatrix([[self.A[i][j] for j in indices] for i in indices])

    def is_finite_type(self):
        return is_positive_definite(self.A)

    def label(self):
        return classify(self)

    def __eq__(self, other):
        return isinstance(other, CartanMatrix) and self.A == other.A

    def __hash__(self):
        return hash(self.A)

    def __repr__(self):
        return "CartanMatrix(%r)" % (self.tolist(),)


def as_cartan(A):
    """Accept a CartanMatrix, a nested list, or a type label."""
    if isinstance(A, CartanMatrix):
        return A
    if isinstance(A, str):
        return CartanMatrix.from_type(A)
    return CartanMatrix(A)


def is_positive_definite(A):
    """Leading principal minors of DA are all positive (exact arithmetic)."""
    import sympy

    M = as_cartan(A)
    S = sympy.Matrix(M.symmetrized())
    return all(S[:k, :k].det() > 0 for k in range(1, M.r + 1))


def _chain(n):
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2
        if i + 1 < n:
            A[i][i + 1] = A[i + 1][i] = -1
    return A


def _attach(A, leaf, node):
    A[leaf][node] = A[node][leaf] = -1


def named_cartan(label):
    """Cartan matrix for a label like ``"A3"``, ``"G2"`` or ``"A2xA1"``."""
    parts = [p for p in re.split(r"[x*+ ]", label.strip()) if p]
    if len(parts) > 1:
        blocks = [named_cartan(p) for p in parts]
        n = sum(len(b) for b in blocks)
        A = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b):
                for j, x in enumerate(row):
                    A[off + i][off + j] = x
            off += len(b)
        return A
    m = re.fullmatch(r"([A-Ga-g])_?(\d+)", label.strip())
    if not m:
        raise CartanError("unknown type label %r" % label)
    kind, n = m.group(1).upper(), int(m.group(2))
    if kind == "A" and n >= 1:
        return _chain(n)
    if kind in "BC" and n >= 2:
        A = _chain(n)
        if kind == "B":
            A[n - 1][n - 2] = -2
        else:
            A[n - 2][n - 1] = -2
        return A
    if kind == "D" and n >= 4:
        A = _chain(n - 1)
        A.append([0] * n)
        for row in A[:-1]:
            row.append(0)
        A[n - 1][n - 1] = 2
        _attach(A, n - 1, n - 3)
        return A
    if kind == "E" and n in (6, 7, 8):
        A = _chain(n - 1)
        for row in A:
            row.append(0)
        A.append([0] * (n - 1) + [2])
        branch = {6: 2, 7: 3, 8: 4}[n]
        _attach(A, n - 1, branch)
        return A
    if kind == "F" and n == 4:
        A = _chain(4)
        A[2][1] = -2
        return A
    if kind == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    raise CartanError("unknown type label %r" % label)


FINITE_LABELS = (["A%d" % n for n in range(1, 9)] + ["B%d" % n for n in range(2, 9)]
                 + ["C%d" % n for n in range(3, 9)] + ["D%d" % n for n in range(4, 9)]
                 + ["E6", "E7", "E8", "F4", "G2"])


def _weighted_digraph(A, nodes):
    g = nx.DiGraph()
    g.add_nodes_from(range(len(nodes)))
    for a, i in enumerate(nodes):
        for b, j in enumerate(nodes):
            if i != j and A[i][j]:
                g.add_edge(a, b, w=A[i][j])
    return g


def classify(cartan):
    """Finite-type label by graph isomorphism, e.g. ``"A2xA1"``; None if not finite."""
    cartan = as_cartan(cartan)
    labels = []
    match = nx.algorithms.isomorphism.numerical_edge_match("w", 0)
    for comp in cartan.components():
        g = _weighted_digraph(cartan.A, comp)
        found = None
        for lab in FINITE_LABELS:
            ref = named_cartan(lab)
            if len(ref) != len(comp):
                continue
            if nx.is_isomorphic(g, _weighted_digraph(ref, list(range(len(ref)))), edge_match=match):
                found = lab
                break
        if found is None:
            return None
        labels.append(found)
    return "x".join(labels)
