"""Seeds of geometric type, mutation, y-hat variables and exploration.

Cluster variables are always stored as Laurent polynomials in the
initial extended cluster of the root seed.  Mutation directions and
mutation words are 1-based, as in the usual notation mu_1, ..., mu_r.
"""

from collections import deque
from fractions import Fraction
from math import lcm

from .laurent import Alphabet, LaurentPolynomial, exact_div, is_positive


class SeedError(Exception):
    pass


class NotSkewSymmetrizable(SeedError):
    pass


class BudgetExceeded(SeedError):
    def __init__(self, message, fragment=None):
        super().__init__(message)
        self.fragment = fragment


class Inconclusive(SeedError):
    pass


DEFAULT_BUDGET = 100_000


def pos(x):
    return x if x > 0 else 0


def symmetrizer(M, skew=True):
    """Positive integer diagonal D with DM skew-symmetric (or symmetric).

    Works component by component on the graph of nonzero entries, scanning
    ratios m_ji / m_ij from a base vertex.  Raises NotSkewSymmetrizable if
    the sign pattern or the ratios are inconsistent.
    """
    r = len(M)
    sign = -1 if skew else 1
    for i in range(r):
        for j in range(r):
            if (M[i][j] == 0) != (M[j][i] == 0):
                raise NotSkewSymmetrizable("entry (%d,%d) is zero but its transpose is not" % (i + 1, j + 1))
            if i != j and M[i][j] and skew and (M[i][j] > 0) == (M[j][i] > 0):
                raise NotSkewSymmetrizable("entries (%d,%d) and (%d,%d) have the same sign" % (i + 1, j + 1, j + 1, i + 1))
        if skew and M[i][i]:
            raise NotSkewSymmetrizable("nonzero diagonal entry at %d" % (i + 1))
    d = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        component = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if j == i or M[i][j] == 0:
                    continue
                # d_i m_ij = sign * d_j m_ji
                want = d[i] * M[i][j] / (sign * M[j][i])
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                    component.append(j)
                elif d[j] != want:
                    raise NotSkewSymmetrizable("ratio scan is inconsistent at (%d,%d)" % (i + 1, j + 1))
        scale = lcm(*[d[i].denominator for i in component])
        for i in component:
            d[i] = d[i] * scale
        g = 0
        for i in component:
            g = _gcd(g, d[i].numerator)
        for i in component:
            d[i] = d[i] / g
    return tuple(int(x) for x in d)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


class ExtendedMutationMatrix:
    """An (r+l) x r integer matrix whose top r x r block is skew-symmetrizable."""

    def __init__(self, rows, r=None):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if r is None:
            r = len(rows[0]) if rows else 0
        if len(rows) < r or any(len(row) != r for row in rows):
            raise ValueError("extended mutation matrix must be (r+l) x r with r=%d" % r)
        self.rows = rows
        self.r = r
        self.l = len(rows) - r
        self.D = symmetrizer(self.principal())

    @classmethod
    def stack(cls, B, P=()):
        B = [list(row) for row in B]
        P = [list(row) for row in P]
        return cls(B + P, r=len(B))

    def principal(self):
        return self.rows[:self.r]

    def coefficients(self):
        return self.rows[self.r:]

    def column(self, k):
        """0-based column k."""
        return tuple(row[k] for row in self.rows)

    def mutate(self, k):
        """Matrix mutation in 0-based direction k."""
        b = self.rows
        out = []
        for i, row in enumerate(b):
            new = []
            for j, x in enumerate(row):
                if i == k or j == k:
                    new.append(-x)
                else:
                    new.append(x + pos(b[i][k]) * pos(b[k][j]) - pos(-b[i][k]) * pos(-b[k][j]))
            out.append(new)
        return ExtendedMutationMatrix(out, self.r)

    def transpose_principal(self):
        B = self.principal()
        return [[B[j][i] for j in range(self.r)] for i in range(self.r)]

    def tolist(self):
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, ExtendedMutationMatrix) and self.rows == other.rows and self.r == other.r

    def __hash__(self):
        return hash((self.rows, self.r))

    def __repr__(self):
        return "ExtendedMutationMatrix(%r)" % (self.tolist(),)


class Seed:
    """An extended cluster together with its extended mutation matrix.

    ``label`` is the 1-based mutation word leading from the root.
    """

    def __init__(self, matrix, cluster, alphabet, label=()):
        if len(cluster) != matrix.r or alphabet.r != matrix.r or alphabet.l != matrix.l:
            raise ValueError("cluster, alphabet and matrix sizes do not agree")
        self.matrix = matrix
        self.cluster = tuple(cluster)
        self.alphabet = alphabet
        self.label = tuple(label)

    @classmethod
    def root(cls, matrix, alphabet=None):
        if not isinstance(matrix, ExtendedMutationMatrix):
            matrix = ExtendedMutationMatrix(matrix)
        if alphabet is None:
            alphabet = Alphabet.standard(matrix.r, matrix.l)
        return cls(matrix, [alphabet.var(i) for i in range(matrix.r)], alphabet)

    @property
    def r(self):
        return self.matrix.r

    @property
    def l(self):
        return self.matrix.l

    @property
    def frozen(self):
        return self.alphabet.frozen

    def extended_cluster(self):
        a = self.alphabet
        return self.cluster + tuple(a.var(a.r + j) for j in range(a.l))

    def exchange_monomials(self, k):
        """The two terms of the exchange relation in 0-based direction k."""
        a = self.alphabet
        col = self.matrix.column(k)
        plus = a.monomial([0] * a.r + [pos(x) for x in col[a.r:]])
        minus = a.monomial([0] * a.r + [pos(-x) for x in col[a.r:]])
        for i in range(a.r):
            if col[i] > 0:
                plus = plus * self.cluster[i] ** col[i]
            elif col[i] < 0:
                minus = minus * self.cluster[i] ** -col[i]
        return plus, minus

    def mutate(self, k):
        return mutate(self, k)

    def mutate_word(self, word):
        s = self
        for k in word:
            s = mutate(s, k)
        return s

    def canonical_key(self):
        """(cluster multiset, matrix after the induced permutation)."""
        perm = sorted(range(self.r), key=lambda i: self.cluster[i].key())
        rows = self.matrix.rows
        principal = tuple(tuple(rows[i][j] for j in perm) for i in perm)
        frozen_rows = tuple(tuple(row[j] for j in perm) for row in rows[self.r:])
        return (tuple(self.cluster[i] for i in perm), principal + frozen_rows)

    def same_as(self, other):
        return self.canonical_key() == other.canonical_key()

    def __eq__(self, other):
        return (isinstance(other, Seed) and self.matrix == other.matrix
                and self.cluster == other.cluster and self.alphabet == other.alphabet)

    def __hash__(self):
        return hash((self.matrix, self.cluster))

    def __repr__(self):
        return "Seed(label=%r, cluster=[%s])" % (self.label, ", ".join(str(x) for x in self.cluster))

    def to_json(self):
        return {"r": self.r, "l": self.l, "B": self.matrix.tolist(),
                "mutable_names": list(self.alphabet.mutable),
                "frozen_names": list(self.alphabet.frozen),
                "word": list(self.label),
                "cluster": [x.to_json()["terms"] for x in self.cluster]}

    @classmethod
    def from_json(cls, data):
        """Read a seed file; without a ``cluster`` entry the seed is a root."""
        r = int(data["r"])
        l = int(data.get("l", 0))
        B = data["B"]
        if len(B) != r + l:
            raise ValueError("B has %d rows, expected r+l=%d" % (len(B), r + l))
        matrix = ExtendedMutationMatrix(B, r)
        frozen = data.get("frozen_names") or ["p%d" % (j + 1) for j in range(l)]
        mutable = data.get("mutable_names") or ["u%d" % (i + 1) for i in range(r)]
        if len(frozen) != l or len(mutable) != r:
            raise ValueError("variable name lists do not match r and l")
        alphabet = Alphabet(mutable, frozen)
        if "cluster" not in data:
            return cls.root(matrix, alphabet)
        cluster = [LaurentPolynomial.from_json({"vars": list(alphabet.names), "terms": t}, alphabet)
                   for t in data["cluster"]]
        return cls(matrix, cluster, alphabet, data.get("word", ()))


def reroot(seed):
    """A root seed carrying ``seed``'s matrix and fresh initial variables."""
    return Seed.root(seed.matrix, seed.alphabet)


def express_in(seed, x):
    """Rewrite ``x`` (a polynomial in the root variables) in ``seed``'s own extended cluster.

    The pattern is re-rooted at ``seed`` and walked back along the
    reversed mutation word, which expresses the root cluster in the
    cluster of ``seed``; substituting that gives the new expansion.  The
    result uses the same variable names, now standing for the cluster
    of ``seed``.
    """
    back = reroot(seed).mutate_word(reversed(seed.label))
    a = seed.alphabet
    images = list(back.cluster) + [a.var(a.r + j) for j in range(a.l)]
    return x.substitute(images, a)


def mutate(seed, k):
    """mu_k for a 1-based direction k."""
    if not 1 <= k <= seed.r:
        raise ValueError("direction %d outside [1, %d]" % (k, seed.r))
    i = k - 1
    plus, minus = seed.exchange_monomials(i)
    new_var = exact_div(plus + minus, seed.cluster[i])
    if not is_positive(new_var):
        raise SeedError("mutation produced a non-positive Laurent polynomial: %s" % new_var)
    cluster = list(seed.cluster)
    cluster[i] = new_var
    return Seed(seed.matrix.mutate(i), cluster, seed.alphabet, seed.label + (k,))


class YHat:
    """A ratio num/den of Laurent polynomials, enough for y-hat arithmetic.

    Equality is tested by cross-multiplication, so no normalization is
    ever needed.
    """

    def __init__(self, num, den=None):
        self.num = num
        self.den = num.alphabet.one() if den is None else den

    def __mul__(self, other):
        return YHat(self.num * other.num, self.den * other.den)

    def inverse(self):
        return YHat(self.den, self.num)

    def __pow__(self, k):
        if k < 0:
            return YHat(self.den ** -k, self.num ** -k)
        return YHat(self.num ** k, self.den ** k)

    def one_plus(self):
        return YHat(self.den + self.num, self.den)

    def __eq__(self, other):
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        return "YHat((%s) / (%s))" % (self.num, self.den)


def y_hat(seed):
    """For each direction, the exponent column of y-hat in the seed's own
    extended cluster and its expansion in the initial variables."""
    out = []
    for k in range(seed.r):
        col = seed.matrix.column(k)
        plus, minus = seed.exchange_monomials(k)
        out.append((col, YHat(plus, minus)))
    return out


def y_hat_mutation(yhats, matrix, k):
    """Predicted y-hat vector after mu_k (1-based), from the old one."""
    i = k - 1
    yk = yhats[i]
    out = []
    for j in range(matrix.r):
        if j == i:
            out.append(yk.inverse())
        else:
            b = matrix.rows[i][j]
            out.append(yhats[j] * yk ** pos(b) * yk.one_plus() ** (-b))
    return out


class SeedPatternFragment:
    """Result of a breadth-first exploration."""

    def __init__(self, root):
        self.root = root
        self.seeds = {}
        self.variables = {}
        self.closed = True
        self.depth = 0

    def add(self, seed):
        key = seed.canonical_key()
        if key in self.seeds:
            return False
        self.seeds[key] = seed
        for x in seed.cluster:
            self.variables.setdefault(x, seed.label)
        return True

    def cluster_variables(self):
        return list(self.variables)

    def clusters(self):
        return [s.cluster for s in self.seeds.values()]

    def __len__(self):
        return len(self.seeds)


def explore(root, max_depth=64, budget=DEFAULT_BUDGET):
    """Breadth-first closure of the seed pattern up to ``max_depth``.

    Seeds are deduplicated by cluster multiset and permuted matrix.
    ``fragment.closed`` is True when every reachable seed was found.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    frag = SeedPatternFragment(root)
    frag.add(root)
    queue = deque([(root, 0)])
    while queue:
        seed, depth = queue.popleft()
        frag.depth = max(frag.depth, depth)
        if depth == max_depth:
            frag.closed = False
            continue
        for k in range(1, seed.r + 1):
            if seed.label and seed.label[-1] == k:
                continue
            child = mutate(seed, k)
            if frag.add(child):
                if len(frag.seeds) > budget:
                    frag.closed = False
                    raise BudgetExceeded("node budget %d exceeded" % budget, frag)
                queue.append((child, depth + 1))
    if not frag.closed:
        # hitting the depth limit only matters if some seed there has a new child
        frag.closed = all(_children_known(frag, s) for s in frag.seeds.values() if len(s.label) == max_depth)
    return frag


def _children_known(frag, seed):
    for k in range(1, seed.r + 1):
        if seed.label and seed.label[-1] == k:
            continue
        if mutate(seed, k).canonical_key() not in frag.seeds:
            return False
    return True


def _canonical_matrix(rows):
    return tuple(tuple(row) for row in rows)


def _mutate_square(b, k):
    n = len(b)
    return tuple(
        tuple(-b[i][j] if i == k or j == k
              else b[i][j] + pos(b[i][k]) * pos(b[k][j]) - pos(-b[i][k]) * pos(-b[k][j])
              for j in range(n))
        for i in range(n))


def _two_finite(b):
    n = len(b)
    return all(abs(b[i][j] * b[j][i]) <= 3 for i in range(n) for j in range(i + 1, n))


def is_finite_type(B, budget=DEFAULT_BUDGET):
    """Finite-type test on the principal part of ``B``.

    The mutation class is explored matrix by matrix; a matrix with
    |b_ij b_ji| >= 4 certifies infinite type, and closure of the class with
    every member 2-finite certifies finite type.  For Cartan-shaped input
    the answer is cross-checked against positive-definiteness.
    """
    if isinstance(B, ExtendedMutationMatrix):
        b = B.principal()
    else:
        b = ExtendedMutationMatrix(B, len(B[0]) if B else 0).principal()
    b = _canonical_matrix(b)
    n = len(b)
    if n <= 1:
        return True
    seen = {b}
    queue = deque([b])
    verdict = True
    while queue:
        m = queue.popleft()
        if not _two_finite(m):
            verdict = False
            break
        for k in range(n):
            child = _mutate_square(m, k)
            if child not in seen:
                seen.add(child)
                if len(seen) > budget:
                    raise Inconclusive("mutation class exceeds budget %d without closing" % budget)
                queue.append(child)
    cartan = _cartan_companion(b)
    if cartan is not None:
        from .cartan import is_positive_definite
        if is_positive_definite(cartan) != verdict:
            raise SeedError("finite-type exploration disagrees with positive-definiteness")
    return verdict


def _cartan_companion(b):
    """Cartan matrix A with b = B_A, or None if b is not of that shape."""
    n = len(b)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i < j:
                if b[i][j] < 0:
                    return None
                a[i][j] = -b[i][j]
            elif i > j:
                if b[i][j] > 0:
                    return None
                a[i][j] = b[i][j]
    return a
