"""Friezes: positive integer evaluations, frieze patterns and frieze points.

A frieze is recorded by its values on the initial extended cluster
(u_1..u_r, p_1..p_l).  A frieze pattern is the table f(i, m) obtained
by running the belt exchange relations on integers.
"""

import itertools

from .belt import belt_columns, build_BA, build_UA, knit
from .cartan import as_cartan, is_positive_definite
from .coxeter import F_map, coxeter_orbit
from .laurent import evaluate
from .seeds import ExtendedMutationMatrix, Seed, explore, mutate


class FriezeError(Exception):
    pass


class RegimeMismatch(FriezeError):
    pass


class Frieze:
    def __init__(self, values, r):
        self.values = tuple(int(v) for v in values)
        self.r = r
        if any(v <= 0 for v in self.values):
            raise FriezeError("frieze values must be positive integers: %r" % (self.values,))

    @property
    def cluster_values(self):
        return self.values[:self.r]

    @property
    def frozen_values(self):
        return self.values[self.r:]

    def is_unitary(self):
        return all(v == 1 for v in self.cluster_values)

    def __eq__(self, other):
        return isinstance(other, Frieze) and self.values == other.values and self.r == other.r

    def __hash__(self):
        return hash((self.values, self.r))

    def __repr__(self):
        return "Frieze(%r)" % (self.values,)


def unitary_frieze(seed, m=()):
    m = tuple(m)
    if len(m) != seed.l:
        raise ValueError("need %d frozen values" % seed.l)
    return Frieze((1,) * seed.r + m, seed.r)


def check_frieze(variables, frieze):
    """Variables whose value at the frieze is not a positive integer."""
    bad = []
    for x in variables:
        v = evaluate(x, frieze.values)
        if v.denominator != 1 or v <= 0:
            bad.append((x, v))
    return bad


class Rejection:
    """Where propagation failed: position, reason and the offending value."""

    def __init__(self, i, m, reason, value=None):
        self.i = i
        self.m = m
        self.reason = reason
        self.value = value

    def __bool__(self):
        return False

    def __repr__(self):
        return "Rejection(i=%d, m=%d, %s)" % (self.i, self.m, self.reason)


class FriezePattern:
    def __init__(self, A, P, fp, f, m_lo, m_hi, columns):
        self.A = A
        self.P = P
        self.fp = tuple(fp)
        self.f = f
        self.m_lo = m_lo
        self.m_hi = m_hi
        self.columns = columns

    def __getitem__(self, key):
        return self.f[key]

    def column(self, m):
        return tuple(self.f[(i, m)] for i in range(1, self.A.r + 1))

    def rhs(self, i, m):
        return _rhs(self.A, self.columns[(i, m)], self.fp, self.f, i, m)

    def relation_failures(self):
        r = self.A.r
        return [(i, m) for m in range(self.m_lo, self.m_hi) for i in range(1, r + 1)
                if self.f[(i, m)] * self.f[(i, m + 1)] != self.rhs(i, m)]

    def initial_frieze(self):
        return Frieze(self.column(0) + self.fp, self.A.r)

    def is_F_invariant(self, cd=None):
        cd = cd or coxeter_orbit(self.A)
        for (i, m), v in self.f.items():
            j, n = F_map(cd, i, m)
            if (j, n) in self.f and self.f[(j, n)] != v:
                return False
        return True

    def rows(self):
        return [[self.f[(i, m)] for m in range(self.m_lo, self.m_hi + 1)]
                for i in range(1, self.A.r + 1)]

    def __bool__(self):
        return True

    def __repr__(self):
        return "FriezePattern(column0=%r, fp=%r)" % (self.column(0), self.fp)


def _frozen_power(fp, vec):
    plus = minus = 1
    for v, e in zip(fp, vec):
        if e > 0:
            plus *= v ** e
        elif e < 0:
            minus *= v ** -e
    return plus, minus


def _rhs(A, p, fp, f, i, m):
    plus, minus = _frozen_power(fp, p)
    prod = minus
    r = A.r
    for j in range(i + 1, r + 1):
        if A[j - 1, i - 1]:
            prod *= f[(j, m)] ** (-A[j - 1, i - 1])
    for j in range(1, i):
        if A[j - 1, i - 1]:
            prod *= f[(j, m + 1)] ** (-A[j - 1, i - 1])
    return plus + prod


def propagate(A, P=(), init=None, fp=(), window=None, columns=None):
    """Run the integer belt recursion from f(., 0) = init over ``window``.

    Returns a FriezePattern, or a Rejection at the first (i, m) where a
    quotient is not a positive integer.
    """
    A = as_cartan(A)
    r = A.r
    P = [list(row) for row in P]
    fp = tuple(int(v) for v in fp)
    if len(fp) != len(P):
        raise ValueError("need %d frozen values" % len(P))
    init = tuple(int(v) for v in init)
    if len(init) != r or any(v <= 0 for v in init) or any(v <= 0 for v in fp):
        raise ValueError("init and fp must be positive integers of the right length")
    if window is None:
        window = (0, coxeter_orbit(A).h + 2)
    m_lo, m_hi = window
    if columns is None:
        columns = belt_columns(A, P, min(m_lo, 0), max(m_hi, 0))
    f = {(i + 1, 0): v for i, v in enumerate(init)}
    for m in range(0, m_hi):
        for i in range(1, r + 1):
            num = _rhs(A, columns[(i, m)], fp, f, i, m)
            q, rem = divmod(num, f[(i, m)])
            if rem or q <= 0:
                return Rejection(i, m + 1, "non-integral" if rem else "non-positive", (num, f[(i, m)]))
            f[(i, m + 1)] = q
    for m in range(-1, m_lo - 1, -1):
        for i in range(r, 0, -1):
            num = _rhs(A, columns[(i, m)], fp, f, i, m)
            q, rem = divmod(num, f[(i, m + 1)])
            if rem or q <= 0:
                return Rejection(i, m, "non-integral" if rem else "non-positive", (num, f[(i, m + 1)]))
            f[(i, m)] = q
    return FriezePattern(A, P, fp, f, m_lo, m_hi, columns)


class FriezeEnumeration:
    """Friezes found by an exhaustive scan of [1, bound]^r.

    Only complete up to the bound; ``max_entry`` is the largest value in
    any accepted pattern, to help judge stabilization.
    """

    def __init__(self, patterns, bound, scanned):
        self.patterns = patterns
        self.friezes = [p.initial_frieze() for p in patterns]
        self.bound = bound
        self.scanned = scanned
        self.max_entry = max((v for p in patterns for v in p.f.values()), default=0)
        self.max_initial = max((v for fr in self.friezes for v in fr.cluster_values), default=0)

    def __len__(self):
        return len(self.friezes)

    def __iter__(self):
        return iter(self.friezes)


def enumerate_friezes(A, P=(), fp=(), bound=8):
    A = as_cartan(A)
    if not is_positive_definite(A):
        raise FriezeError("enumeration needs a Cartan matrix of finite type")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    cd = coxeter_orbit(A)
    h = cd.h
    P = [list(row) for row in P]
    columns = belt_columns(A, P, 0, h + 2)
    found = {}
    scanned = 0
    for init in itertools.product(range(1, bound + 1), repeat=A.r):
        scanned += 1
        pat = propagate(A, P, init, fp, (0, h + 2), columns)
        if not pat:
            continue
        if pat.column(h + 2) != pat.column(0):
            continue
        key = pat.column(0) + pat.fp
        found.setdefault(key, pat)
    patterns = [found[k] for k in sorted(found)]
    return FriezeEnumeration(patterns, bound, scanned)


def pattern_from_frieze(belt, frieze):
    """Evaluate the knitted polynomials of ``belt`` at a frieze."""
    values = belt.evaluate(frieze.values)
    out = {}
    for key, v in values.items():
        if v.denominator != 1:
            raise FriezeError("belt value at %r is not an integer" % (key,))
        out[key] = int(v)
    cols = {key: belt.p[key] for key in belt.p}
    return FriezePattern(belt.A, belt.P, frieze.frozen_values, out, belt.m_lo, belt.m_hi, cols)


def testing_set_check(seed, generators, values, fragment=None):
    """Integrality on a generating set plus positivity on an extended cluster.

    ``values`` are taken on the initial extended cluster of ``seed``.
    That ``generators`` really generate the algebra is the caller's
    responsibility.  On success every explored cluster variable is
    checked to be a positive integer as well.
    """
    values = tuple(values)
    if len(values) != seed.r + seed.l:
        raise ValueError("need %d values" % (seed.r + seed.l))
    point = values
    if any(v <= 0 for v in point):
        return False
    for z in generators:
        v = evaluate(z, point)
        if v.denominator != 1:
            return False
    if any(evaluate(u, point) <= 0 for u in seed.extended_cluster()):
        return False
    frag = fragment if fragment is not None else explore(seed)
    bad = check_frieze(frag.cluster_variables(), Frieze(point, seed.r))
    if bad:
        raise FriezeError("testing set accepted a point that is not a frieze: %r" % (bad[:3],))
    return True


def bfz_seed(A, alphabet=None):
    """The seed with extended matrix (B_A \\\\ U_A)."""
    A = as_cartan(A)
    matrix = ExtendedMutationMatrix.stack(build_BA(A), build_UA(A))
    if alphabet is None:
        from .laurent import Alphabet

        alphabet = Alphabet(["z%d" % (i + 1) for i in range(A.r)], ["p%d" % (i + 1) for i in range(A.r)])
    return Seed.root(matrix, alphabet)


def principal_seed(A, alphabet=None):
    A = as_cartan(A)
    r = A.r
    I = [[int(i == j) for j in range(r)] for i in range(r)]
    matrix = ExtendedMutationMatrix.stack(build_BA(A), I)
    if alphabet is None:
        from .laurent import Alphabet

        alphabet = Alphabet(["x%d" % (i + 1) for i in range(r)], ["y%d" % (i + 1) for i in range(r)])
    return Seed.root(matrix, alphabet)


def trivial_seed(A, alphabet=None):
    A = as_cartan(A)
    return Seed.root(ExtendedMutationMatrix(build_BA(A)), alphabet)


def bfz_p(A, z):
    """p_i = z_i z_{r+i} - prod_{j>i} z_j^{-a_ji} prod_{j<i} z_{r+j}^{-a_ji}."""
    A = as_cartan(A)
    r = A.r
    out = []
    for i in range(1, r + 1):
        prod = 1
        for j in range(i + 1, r + 1):
            prod *= z[j - 1] ** (-A[j - 1, i - 1])
        for j in range(1, i):
            prod *= z[r + j - 1] ** (-A[j - 1, i - 1])
        out.append(z[i - 1] * z[r + i - 1] - prod)
    return out


def bfz_reconstruct(A, z, p):
    """Solve for z_{r+1}..z_{2r} given z_1..z_r and p_1..p_r.

    Returns the full integer vector (z_1..z_{2r}), or a Rejection naming
    the first index whose quotient is not a positive integer.
    """
    A = as_cartan(A)
    r = A.r
    z = [int(v) for v in z]
    p = [int(v) for v in p]
    if len(z) != r or len(p) != r or min(z + p) <= 0:
        raise ValueError("need r positive z values and r positive p values")
    full = z + [0] * r
    for i in range(1, r + 1):
        prod = 1
        for j in range(i + 1, r + 1):
            prod *= full[j - 1] ** (-A[j - 1, i - 1])
        for j in range(1, i):
            prod *= full[r + j - 1] ** (-A[j - 1, i - 1])
        q, rem = divmod(p[i - 1] + prod, full[i - 1])
        if rem or q <= 0:
            return Rejection(i, 1, "z_%d not a positive integer" % (r + i), (p[i - 1] + prod, full[i - 1]))
        full[r + i - 1] = q
    return full


class FriezePointReport:
    def __init__(self, point, regime, witnesses):
        self.point = tuple(point)
        self.regime = regime
        self.witnesses = list(witnesses)
        self.verdict = not self.witnesses

    def to_json(self):
        return {"point": list(self.point), "regime": self.regime,
                "verdict": self.verdict, "witnesses": self.witnesses}

    def __bool__(self):
        return self.verdict

    def __repr__(self):
        return "FriezePointReport(%s, %r, verdict=%r)" % (self.regime, self.point, self.verdict)


REGIMES = {"bfz": 2, "principal": 3, "trivial-v": 2, "trivial-w": 2}


def _w_products(A, x, i):
    """prod_{j<i} x_j^{-a_ji} and prod_{j>i} x_j^{-a_ji}."""
    below = above = 1
    for j in range(1, i):
        below *= x[j - 1] ** (-A[j - 1, i - 1])
    for j in range(i + 1, A.r + 1):
        above *= x[j - 1] ** (-A[j - 1, i - 1])
    return below, above


def frieze_point_check(regime, A, point):
    regime = regime.lower()
    if regime not in REGIMES:
        raise RegimeMismatch("unknown regime %r" % regime)
    A = as_cartan(A)
    r = A.r
    point = [int(v) for v in point]
    if len(point) != REGIMES[regime] * r:
        raise RegimeMismatch("%s needs %d coordinates, got %d" % (regime, REGIMES[regime] * r, len(point)))
    witnesses = ["coordinate %d is %d, not positive" % (k + 1, v) for k, v in enumerate(point) if v <= 0]
    if regime == "bfz":
        for i, value in enumerate(bfz_p(A, point), 1):
            if value <= 0:
                witnesses.append("p_%d = %d is not positive" % (i, value))
    elif regime == "trivial-v":
        for i, value in enumerate(bfz_p(A, point), 1):
            if value != 1:
                witnesses.append("z_%d z_%d - (product) = %d, expected 1" % (i, r + i, value))
    else:
        x = point[0:2 * r:2]
        xp = point[1:2 * r:2]
        y = point[2 * r:] if regime == "principal" else [1] * r
        for i in range(1, r + 1):
            below, above = _w_products(A, x, i)
            lhs = x[i - 1] * xp[i - 1]
            rhs = y[i - 1] * below + above
            if lhs != rhs:
                witnesses.append("x_%d x_%d' = %d but the relation gives %d" % (i, i, lhs, rhs))
    return FriezePointReport(point, regime, witnesses)


def trivial_V_to_W(A, z):
    """Change of coordinates between the two descriptions of trivial frieze points."""
    A = as_cartan(A)
    r = A.r
    seed = trivial_seed(A)
    primes = [mutate(seed, i).cluster[i - 1] for i in range(1, r + 1)]
    out = []
    for i in range(r):
        v = evaluate(primes[i], z[:r])
        if v.denominator != 1:
            raise FriezeError("x_%d' is not an integer" % (i + 1))
        out += [z[i], int(v)]
    return out


def trivial_W_to_V(A, x):
    A = as_cartan(A)
    r = A.r
    belt = knit(A, [], 0, 1)
    xs = x[0:2 * r:2]
    out = list(xs)
    for i in range(1, r + 1):
        v = evaluate(belt.u[(i, 1)], xs)
        if v.denominator != 1:
            raise FriezeError("z_%d is not an integer" % (r + i))
        out.append(int(v))
    return out


def bfz_polynomial_images(A):
    """Cluster variables of the BFZ pattern rewritten in z_1..z_2r.

    Each p_i is replaced by its expression in the z's; the result is a
    Laurent polynomial in z_1..z_2r, returned with the exploration.
    """
    from .laurent import Alphabet

    A = as_cartan(A)
    r = A.r
    seed = bfz_seed(A)
    frag = explore(seed)
    target = Alphabet(["z%d" % (k + 1) for k in range(2 * r)])
    z = target.gens()
    images = z[:r]
    for i in range(1, r + 1):
        prod = target.one()
        for j in range(i + 1, r + 1):
            prod = prod * z[j - 1] ** (-A[j - 1, i - 1])
        for j in range(1, i):
            prod = prod * z[r + j - 1] ** (-A[j - 1, i - 1])
        images.append(z[i - 1] * z[r + i - 1] - prod)
    return frag, {x: x.substitute(images, target) for x in frag.cluster_variables()}
