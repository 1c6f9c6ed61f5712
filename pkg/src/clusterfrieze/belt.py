"""The acyclic belt through the seed (u, p, (B_A \\\\ P)) and the knitting algorithm.

Belt vertices are written t(i, m) with 1-based i.  Mutating the seed at
t(i, m) in direction i gives t(i+1, m), or t(1, m+1) when i = r; the
root is t(1, 0).  u(i, m) is the i-th cluster variable at t(i, m) and
p(i, m) the i-th column of the coefficient part there.
"""

from .cartan import as_cartan
from .laurent import Alphabet
from .seeds import BudgetExceeded, ExtendedMutationMatrix, Seed, mutate, pos


def build_BA(A):
    """(B_A)_ij = -a_ij above the diagonal, a_ij below, 0 on it."""
    A = as_cartan(A)
    r = A.r
    return [[-A[i, j] if i < j else (A[i, j] if i > j else 0) for j in range(r)] for i in range(r)]


def build_UA(A):
    """Upper unitriangular matrix with the Cartan entries above the diagonal."""
    A = as_cartan(A)
    r = A.r
    return [[A[i, j] if i < j else (1 if i == j else 0) for j in range(r)] for i in range(r)]


def _check_P(P, r):
    P = [list(row) for row in P]
    if any(len(row) != r for row in P):
        raise ValueError("coefficient matrix must have %d columns" % r)
    return P


def belt_root(A, P=(), alphabet=None):
    A = as_cartan(A)
    P = _check_P(P, A.r)
    matrix = ExtendedMutationMatrix.stack(build_BA(A), P)
    return Seed.root(matrix, alphabet)


def _next(i, m, r):
    return (i + 1, m) if i < r else (1, m + 1)


def _prev(i, m, r):
    return (i - 1, m) if i > 1 else (r, m - 1)


def walk_belt(root, m_lo, m_hi, step, budget=None):
    """Belt seeds t(i, m) for m in [m_lo, m_hi], via ``step(seed, k)``.

    ``step`` is a mutation function, so the same walk serves Laurent
    seeds and bare matrices.
    """
    if not m_lo <= 0 <= m_hi:
        raise ValueError("window must contain m = 0")
    r = root.r
    seeds = {(1, 0): root}
    pos_ = (1, 0)
    while True:
        i, m = pos_
        nxt = _next(i, m, r)
        if nxt[1] > m_hi:
            break
        seeds[nxt] = step(seeds[pos_], i)
        pos_ = nxt
        if budget is not None and len(seeds) > budget:
            raise BudgetExceeded("belt walk exceeds %d seeds" % budget)
    pos_ = (1, 0)
    while True:
        prv = _prev(*pos_, r)
        if prv[1] < m_lo:
            break
        # mu_k is an involution, so the edge t(prv) -k- t(pos) is walked backwards
        seeds[prv] = step(seeds[pos_], prv[0])
        pos_ = prv
        if budget is not None and len(seeds) > budget:
            raise BudgetExceeded("belt walk exceeds %d seeds" % budget)
    return seeds


class _MatrixSeed:
    """Stand-in seed carrying only a matrix, for cheap belt walks."""

    def __init__(self, matrix):
        self.matrix = matrix
        self.r = matrix.r


def _matrix_step(s, k):
    return _MatrixSeed(s.matrix.mutate(k - 1))


def belt_matrices(A, P, m_lo, m_hi):
    """Extended matrices at t(i, m) without computing cluster variables."""
    A = as_cartan(A)
    matrix = ExtendedMutationMatrix.stack(build_BA(A), _check_P(P, A.r))
    walked = walk_belt(_MatrixSeed(matrix), m_lo, m_hi, _matrix_step)
    return {key: s.matrix for key, s in walked.items()}


def belt_columns(A, P, m_lo, m_hi):
    """p(i, m) for the window, from matrix mutation alone."""
    mats = belt_matrices(A, P, m_lo, m_hi)
    r = as_cartan(A).r
    return {(i, m): mat.column(i - 1)[r:] for (i, m), mat in mats.items()}


class BeltTable:
    def __init__(self, A, P, m_lo, m_hi, seeds):
        self.A = A
        self.P = P
        self.r = A.r
        self.l = len(P)
        self.m_lo = m_lo
        self.m_hi = m_hi
        self.seeds = seeds
        self.alphabet = seeds[(1, 0)].alphabet
        self.u = {(i, m): s.cluster[i - 1] for (i, m), s in seeds.items()}
        self.p = {(i, m): s.matrix.column(i - 1)[self.r:] for (i, m), s in seeds.items()}

    def window(self):
        return [(i, m) for m in range(self.m_lo, self.m_hi + 1) for i in range(1, self.r + 1)]

    def interior(self):
        return [(i, m) for (i, m) in self.window() if m + 1 <= self.m_hi]

    def exchange_rhs(self, i, m):
        """Right-hand side of the belt exchange relation at (i, m)."""
        a = self.alphabet
        A = self.A
        p = self.p[(i, m)]
        plus = a.monomial([0] * self.r + [pos(x) for x in p])
        minus = a.monomial([0] * self.r + [pos(-x) for x in p])
        for j in range(i + 1, self.r + 1):
            if A[j - 1, i - 1]:
                minus = minus * self.u[(j, m)] ** (-A[j - 1, i - 1])
        for j in range(1, i):
            if A[j - 1, i - 1]:
                minus = minus * self.u[(j, m + 1)] ** (-A[j - 1, i - 1])
        return plus + minus

    def relation_holds(self, i, m):
        return self.u[(i, m)] * self.u[(i, m + 1)] == self.exchange_rhs(i, m)

    def check_relations(self):
        return [(i, m) for (i, m) in self.interior() if not self.relation_holds(i, m)]

    def source_shape_holds(self):
        """Column i of B at t(i, m) is <= 0 and B at t(1, m) is B_A."""
        BA = tuple(tuple(row) for row in build_BA(self.A))
        for (i, m), s in self.seeds.items():
            B = s.matrix.principal()
            if any(B[j][i - 1] > 0 for j in range(self.r)):
                return False
            if i == 1 and B != BA:
                return False
        return True

    def cluster(self, i, m):
        return self.seeds[(i, m)].cluster

    def evaluate(self, point):
        return {key: x.evaluate(point) for key, x in self.u.items()}

    def rows(self):
        """Table with row i and columns m_lo..m_hi."""
        return [[self.u[(i, m)] for m in range(self.m_lo, self.m_hi + 1)] for i in range(1, self.r + 1)]


def knit(A, P=(), m_lo=0, m_hi=None, alphabet=None, budget=None):
    """Run the knitting algorithm on [1, r] x [m_lo, m_hi]."""
    A = as_cartan(A)
    P = _check_P(P, A.r)
    if m_hi is None:
        m_hi = 2 * A.r + 2
    if alphabet is None:
        alphabet = Alphabet.standard(A.r, len(P))
    root = belt_root(A, P, alphabet)
    seeds = walk_belt(root, m_lo, m_hi, mutate, budget)
    return BeltTable(A, P, m_lo, m_hi, seeds)


class ClusterAdditiveFunction:
    """Integer vectors q(i, m) on a window, with the additive recursion."""

    def __init__(self, A, values, m_lo, m_hi, P_first=None):
        self.A = as_cartan(A)
        self.values = dict(values)
        self.m_lo = m_lo
        self.m_hi = m_hi
        self.P_first = P_first or {}

    def __getitem__(self, key):
        return self.values[key]

    def _plus_sum(self, terms):
        l = len(next(iter(self.values.values())))
        out = [0] * l
        for coeff, vec in terms:
            for t in range(l):
                out[t] += coeff * pos(vec[t])
        return tuple(out)

    def additivity_failures(self):
        r = self.A.r
        bad = []
        for m in range(self.m_lo, self.m_hi):
            for i in range(1, r + 1):
                lhs = tuple(a + b for a, b in zip(self.values[(i, m)], self.values[(i, m + 1)]))
                rhs = self._plus_sum(
                    [(-self.A[j - 1, i - 1], self.values[(j, m)]) for j in range(i + 1, r + 1)]
                    + [(-self.A[j - 1, i - 1], self.values[(j, m + 1)]) for j in range(1, i)])
                if lhs != rhs:
                    bad.append((i, m))
        return bad

    def first_column_failures(self):
        """Check both ways of writing column i of P at t(1, m) through p."""
        r = self.A.r
        bad = []
        for (i, m), P_im in self.P_first.items():
            q = self.values
            val = self._plus_sum([(self.A[j - 1, i - 1], q[(j, m)]) for j in range(1, i)])
            if (i, m) in q and tuple(a + b for a, b in zip(q[(i, m)], val)) != P_im:
                bad.append(("first", i, m))
            if (i, m - 1) in q and m - 1 >= self.m_lo:
                val = self._plus_sum([(-self.A[j - 1, i - 1], q[(j, m - 1)]) for j in range(i + 1, r + 1)])
                if tuple(b - a for a, b in zip(q[(i, m - 1)], val)) != P_im:
                    bad.append(("second", i, m))
        return bad


def coefficient_columns(belt):
    """The cluster-additive function (i, m) -> p(i, m) of a belt or of (A, P, m_lo, m_hi).

    Asserts the additive recursion and both expressions for the
    coefficient columns at the vertices t(1, m).
    """
    if isinstance(belt, BeltTable):
        A, r, m_lo, m_hi = belt.A, belt.r, belt.m_lo, belt.m_hi
        values = dict(belt.p)
        first = {}
        for m in range(m_lo, m_hi + 1):
            column = belt.seeds[(1, m)].matrix
            for i in range(1, r + 1):
                first[(i, m)] = column.column(i - 1)[r:]
    else:
        A, P, m_lo, m_hi = belt
        A = as_cartan(A)
        r = A.r
        mats = belt_matrices(A, P, m_lo, m_hi)
        values = {key: mat.column(key[0] - 1)[r:] for key, mat in mats.items()}
        first = {(i, m): mats[(1, m)].column(i - 1)[r:]
                 for m in range(m_lo, m_hi + 1) for i in range(1, r + 1)}
    f = ClusterAdditiveFunction(A, values, m_lo, m_hi, first)
    if values and len(next(iter(values.values()))):
        assert not f.additivity_failures(), f.additivity_failures()
        assert not f.first_column_failures(), f.first_column_failures()
    return f


def ptolemy_seed(r):
    """Exchange matrix and coefficient part for the shell triangulation of the (r+3)-gon.

    B is tridiagonal with +1 above and -1 below the diagonal.  The
    coefficient rows are e_i - e_{i+1} (i < r), e_r, -e_r, e_1, -e_1.
    """
    if r < 2:
        raise ValueError("rank must be at least 2")
    B = [[0] * r for _ in range(r)]
    for i in range(r - 1):
        B[i][i + 1] = 1
        B[i + 1][i] = -1

    def e(i, s=1):
        row = [0] * r
        row[i] = s
        return row

    P = []
    for i in range(r - 1):
        row = e(i)
        row[i + 1] = -1
        P.append(row)
    P += [e(r - 1), e(r - 1, -1), e(0), e(0, -1)]
    return B, P
