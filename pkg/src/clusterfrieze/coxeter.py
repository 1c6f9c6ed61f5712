"""Weight combinatorics of the Coxeter element c = s_1 s_2 ... s_r.

Weights are integer tuples in the basis of fundamental weights; roots
are integer tuples in the basis of simple roots.  The simple root
alpha_j is column j of the Cartan matrix in the weight basis.
Indices are 1-based in the public functions.
"""

from fractions import Fraction
from functools import cached_property
from math import lcm

import networkx as nx

from .cartan import as_cartan, classify


class CoxeterError(Exception):
    pass


class NonFiniteType(CoxeterError):
    pass


class UnsupportedType(CoxeterError):
    pass


class IndexOutOfWindow(CoxeterError):
    pass


def simple_root(A, i):
    """alpha_i in the weight basis."""
    A = as_cartan(A)
    return tuple(A[j, i - 1] for j in range(A.r))


def fundamental_weight(r, i):
    return tuple(1 if j == i - 1 else 0 for j in range(r))


def simple_reflection(A, i, w):
    """s_i(w) = w - w_i alpha_i."""
    A = as_cartan(A)
    wi = w[i - 1]
    if not wi:
        return tuple(w)
    return tuple(w[j] - wi * A[j, i - 1] for j in range(A.r))


def apply_coxeter(A, w, times=1):
    """c^times (w) with c = s_1 ... s_r, so s_r acts first."""
    A = as_cartan(A)
    for _ in range(times):
        for i in range(A.r, 0, -1):
            w = simple_reflection(A, i, w)
    return tuple(w)


def weight_to_root(A, w):
    """alpha-coordinates x of a weight w, i.e. the solution of A x = w."""
    A = as_cartan(A)
    inv = _inverse(A)
    out = []
    for i in range(A.r):
        v = sum(inv[i][j] * w[j] for j in range(A.r))
        if v.denominator != 1:
            raise CoxeterError("weight %r is not in the root lattice" % (w,))
        out.append(int(v))
    return tuple(out)


def root_to_weight(A, x):
    A = as_cartan(A)
    return tuple(sum(A[i, j] * x[j] for j in range(A.r)) for i in range(A.r))


_INVERSES = {}


def _inverse(A):
    if A.A not in _INVERSES:
        import sympy

        M = sympy.Matrix(A.tolist()).inv()
        _INVERSES[A.A] = [[Fraction(int(M[i, j].p), int(M[i, j].q)) for j in range(A.r)]
                          for i in range(A.r)]
    return _INVERSES[A.A]


class CoxeterData:
    """Orbit data of c on the fundamental weights."""

    def __init__(self, A, h_i, istar, h, component_h):
        self.A = A
        self.r = A.r
        self.h_i = tuple(h_i)
        self.istar = tuple(istar)
        self.h = h
        self.component_h = tuple(component_h)
        self.indecomposable = A.is_indecomposable()

    def hc(self, i):
        return self.h_i[i - 1]

    def star(self, i):
        return self.istar[i - 1]

    @cached_property
    def betas(self):
        """beta_i = omega_i - c omega_i, in the alpha basis."""
        out = []
        for i in range(1, self.r + 1):
            w = fundamental_weight(self.r, i)
            cw = apply_coxeter(self.A, w)
            out.append(weight_to_root(self.A, tuple(a - b for a, b in zip(w, cw))))
        return tuple(out)

    def label(self):
        return classify(self.A)

    def __repr__(self):
        return "CoxeterData(h=%r, h_i=%r, istar=%r)" % (self.h, self.h_i, self.istar)


def coxeter_order(A):
    """Order of c as a linear map on the weight lattice."""
    A = as_cartan(A)
    basis = [fundamental_weight(A.r, i) for i in range(1, A.r + 1)]
    current = basis
    limit = 2 * (A.r * 30)
    for k in range(1, limit + 1):
        current = [apply_coxeter(A, w) for w in current]
        if current == basis:
            return k
    raise NonFiniteType("c has no finite order within %d steps" % limit)


def coxeter_orbit(A):
    """Iterate c on each omega_i until it reaches some -omega_{i*}."""
    A = as_cartan(A)
    r = A.r
    limit = 2 * (r * 30)
    negatives = {tuple(-x for x in fundamental_weight(r, j)): j for j in range(1, r + 1)}
    h_i, istar = [], []
    for i in range(1, r + 1):
        w = fundamental_weight(r, i)
        for k in range(1, limit + 1):
            w = apply_coxeter(A, w)
            if w in negatives:
                h_i.append(k)
                istar.append(negatives[w])
                break
        else:
            raise NonFiniteType("orbit of omega_%d does not reach a negative fundamental weight" % i)
    comp_of = {}
    for comp in A.components():
        for i in comp:
            comp_of[i] = comp
    component_h = []
    for i in range(r):
        comp = comp_of[i]
        hs = {h_i[j] + h_i[istar[j] - 1] for j in comp}
        if len(hs) != 1:
            raise CoxeterError("h(i;c) + h(i*;c) is not constant on a component")
        component_h.append(hs.pop())
    h = component_h[0] if A.is_indecomposable() else lcm(*component_h)
    return CoxeterData(A, h_i, istar, h, component_h)


def _require_indecomposable(cd):
    if not cd.indecomposable:
        raise CoxeterError("this operation needs an indecomposable Cartan matrix")


def F_map(cd, i, m):
    """Gliding map (i, m) -> (i*, m + h(i*;c) + 1)."""
    _require_indecomposable(cd)
    j = cd.star(i)
    return j, m + cd.hc(j) + 1


def gamma_alpha_c(cd, i, m):
    """(gamma(i, m), alpha(i, m), c(i, m)) for m in [0, h+1].

    gamma is a weight; alpha is a root in the alpha basis and c(i, m) is
    its coordinate vector, so the last two entries coincide as tuples.
    """
    _require_indecomposable(cd)
    h, A, r = cd.h, cd.A, cd.r
    if not 0 <= m <= h + 1:
        raise IndexOutOfWindow("m=%d outside [0, %d]" % (m, h + 1))
    hi = cd.hc(i)
    j = cd.star(i)
    if m <= hi:
        gamma = apply_coxeter(A, fundamental_weight(r, i), m)
    else:
        gamma = apply_coxeter(A, fundamental_weight(r, j), m - hi - 1)

    def c_power_beta(k, idx):
        w = root_to_weight(A, cd.betas[idx - 1])
        return weight_to_root(A, apply_coxeter(A, w, k))

    def minus_simple(idx):
        return tuple(-1 if t == idx - 1 else 0 for t in range(r))

    if m < hi:
        alpha = c_power_beta(m, i)
    elif m == hi:
        alpha = minus_simple(j)
    elif m <= h:
        alpha = c_power_beta(m - hi - 1, j)
    else:
        alpha = minus_simple(i)
    return gamma, alpha, alpha


def fundamental_domain(cd):
    _require_indecomposable(cd)
    return {(i, m) for i in range(1, cd.r + 1) for m in range(cd.hc(i) + 1)}


COXETER_NUMBERS = {"A": lambda n: n + 1, "B": lambda n: 2 * n, "C": lambda n: 2 * n,
                   "D": lambda n: 2 * n - 2, "E": {6: 12, 7: 18, 8: 30}.get,
                   "F": lambda n: 12, "G": lambda n: 6}


def precedes(A, i, j):
    """i precedes j in the orientation of c: i < j and a_ij != 0."""
    A = as_cartan(A)
    return i < j and A[i - 1, j - 1] != 0


def bedard_numbers(A):
    """m_i = (h + a_i - b_i) / 2 from the Dynkin path between i and i*.

    The involution i -> i* is the nontrivial diagram automorphism for
    A_n, D_{2k+1} and E_6 and the identity otherwise, where m_i = h/2.
    The Coxeter number comes from the type table, so nothing here uses
    the orbit of c.
    """
    A = as_cartan(A)
    label = classify(A)
    if label is None or "x" in label:
        raise UnsupportedType("need an indecomposable finite type, got %r" % label)
    kind, n = label[0], int(label[1:])
    h = COXETER_NUMBERS[kind](n)
    graph = A.dynkin_graph()
    twisted = (kind == "A" and n > 1) or (kind == "D" and n % 2 == 1) or label == "E6"
    star = list(range(A.r))
    if twisted:
        autos = [a for a in nx.algorithms.isomorphism.GraphMatcher(graph, graph).isomorphisms_iter()
                 if any(a[v] != v for v in a)]
        if len(autos) != 1:
            raise CoxeterError("expected a unique nontrivial diagram automorphism")
        star = [autos[0][v] for v in range(A.r)]
    out = []
    for v in range(A.r):
        path = nx.shortest_path(graph, v, star[v])
        toward = sum(1 for x, y in zip(path, path[1:]) if x < y)
        away = len(path) - 1 - toward
        twice = h + toward - away
        if twice % 2:
            raise CoxeterError("odd value of h + a_i - b_i")
        out.append(twice // 2)
    return tuple(out)


def diagram_involution(A):
    """i -> i* from the orbit endpoint, 1-based."""
    return coxeter_orbit(A).istar
