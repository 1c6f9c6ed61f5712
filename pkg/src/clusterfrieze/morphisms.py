"""Homomorphisms between cluster algebras: freezing, deletion,
quasi-homomorphisms, universal coefficients and frieze pullback.

A homomorphism is stored by its values on the initial extended cluster
of the source root seed; everything else follows by substitution.
"""

from collections import deque

from .laurent import Alphabet, is_positive, tropicalize
from .seeds import (BudgetExceeded, DEFAULT_BUDGET, ExtendedMutationMatrix, Seed,
                    explore, is_finite_type, mutate, pos, reroot)


class MorphismError(Exception):
    pass


class NotFiniteTarget(MorphismError):
    pass


class NotFiniteType(MorphismError):
    pass


class REViolation(MorphismError):
    pass


class NotHomogeneous(MorphismError):
    pass


class NoSolution(MorphismError):
    pass


def _matmul(M, N):
    """Product of integer matrices given as lists of rows (N may have 0 rows)."""
    cols = len(N[0]) if N else 0
    return [[sum(M[i][k] * N[k][j] for k in range(len(N))) for j in range(cols)] for i in range(len(M))]


def _matvec(M, v):
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def _zeros(n, m):
    return [[0] * m for _ in range(n)]


class Homomorphism:
    """Ring map from the source algebra to the target algebra.

    ``images[k]`` is the image of the k-th generator of the source root
    alphabet (cluster variables first, then frozen ones), as a Laurent
    polynomial over the target root alphabet.
    """

    def __init__(self, source, target, images, kind="generic", E=None, R=None, spec=None):
        images = tuple(images)
        if len(images) != source.alphabet.n:
            raise MorphismError("need %d images, got %d" % (source.alphabet.n, len(images)))
        if any(x.alphabet != target.alphabet for x in images):
            raise MorphismError("images must live over the target alphabet")
        self.source = source
        self.target = target
        self.images = images
        self.kind = kind
        self.E = E
        self.R = R
        self.spec = spec

    def __call__(self, x):
        return x.substitute(self.images, self.target.alphabet)

    def then(self, other):
        """Apply self, then ``other``."""
        if other.source.alphabet != self.target.alphabet:
            raise MorphismError("composable maps need matching alphabets")
        E = None
        if self.E is not None and other.E is not None:
            E = _matmul(other.E, self.E)
        return Homomorphism(self.source, other.target, [other(x) for x in self.images],
                            kind="composite", E=E)

    def __repr__(self):
        return "Homomorphism(%s: %s)" % (self.kind, ", ".join(str(x) for x in self.images))


def identity(seed):
    root = reroot(seed)
    l = root.l
    E = [[int(i == j) for j in range(l)] for i in range(l)]
    return Homomorphism(root, root, root.alphabet.gens(), kind="identity", E=E, R=_zeros(l, root.r))


# freezing and deletion

def _subset(seed, subset):
    subset = sorted(set(subset))
    if any(not 1 <= k <= seed.r for k in subset):
        raise MorphismError("subset %r not inside [1, %d]" % (subset, seed.r))
    if len(subset) == seed.r:
        raise MorphismError("at least one cluster variable must stay mutable")
    return subset


def freeze(seed, subset):
    """Root seed of the pattern with the chosen cluster variables frozen.

    The kept cluster variables come first, then the newly frozen ones,
    then the old frozen ones.  Columns of the frozen directions are
    dropped.
    """
    subset = _subset(seed, subset)
    if not subset:
        return seed
    keep = [i for i in range(seed.r) if i + 1 not in subset]
    moved = [k - 1 for k in subset]
    order = keep + moved + list(range(seed.r, seed.r + seed.l))
    rows = [[seed.matrix.rows[i][j] for j in keep] for i in order]
    names = seed.alphabet.names
    alphabet = Alphabet([names[i] for i in keep], [names[i] for i in moved + order[len(keep) + len(moved):]])
    return Seed.root(ExtendedMutationMatrix(rows, len(keep)), alphabet)


def freezing_inclusion(seed, subset):
    """The inclusion A(frozen pattern) -> A(pattern), into the re-rooted ``seed``."""
    subset = _subset(seed, subset)
    target = reroot(seed)
    if not subset:
        return identity(seed)
    source = freeze(target, subset)
    gens = target.alphabet.gens()
    images = [gens[target.alphabet.index(name)] for name in source.alphabet.names]
    return Homomorphism(source, target, images, kind="freezing")


def delete(seed, subset, budget=DEFAULT_BUDGET):
    """Send the chosen cluster variables to 1 and delete their rows and columns."""
    subset = _subset(seed, subset)
    source = reroot(seed)
    keep = [i for i in range(seed.r) if i + 1 not in subset]
    rows = [[seed.matrix.rows[i][j] for j in keep] for i in keep + list(range(seed.r, seed.r + seed.l))]
    if len(keep) and not is_finite_type([row for row in rows[:len(keep)]], budget):
        raise NotFiniteTarget("the deleted pattern is not of finite type")
    names = seed.alphabet.names
    alphabet = Alphabet([names[i] for i in keep], seed.alphabet.frozen)
    target = Seed.root(ExtendedMutationMatrix(rows, len(keep)), alphabet)
    gens = alphabet.gens()
    images = []
    for i in range(seed.r):
        images.append(gens[keep.index(i)] if i in keep else alphabet.one())
    images += gens[len(keep):]
    return Homomorphism(source, target, images, kind="identity" if not subset else "deletion")


# quasi-homomorphisms

class QuasiHomSpec:
    """Data (t0, t0bar, R, E) for a quasi-homomorphism between two patterns.

    ``source`` and ``target`` are root seeds; ``t0`` and ``t0bar`` are
    mutation words from them.  R is lbar x r and E is lbar x l.
    """

    def __init__(self, source, target, R=None, E=None, t0=(), t0bar=()):
        self.source = source
        self.target = target
        self.t0 = tuple(t0)
        self.t0bar = tuple(t0bar)
        lbar, r, l = target.l, source.r, source.l
        self.R = [list(row) for row in R] if R is not None else _zeros(lbar, r)
        self.E = [list(row) for row in E] if E is not None else _zeros(lbar, l)
        if len(self.R) != lbar or any(len(row) != r for row in self.R):
            raise REViolation("R must be %d x %d" % (lbar, r))
        if len(self.E) != lbar or any(len(row) != l for row in self.E):
            raise REViolation("E must be %d x %d" % (lbar, l))

    @classmethod
    def from_json(cls, data):
        source = Seed.from_json(data["source"])
        target = Seed.from_json(data["target"])
        return cls(source, target, data.get("R"), data.get("E"), data.get("t0", ()), data.get("t0bar", ()))

    def to_json(self):
        return {"source": self.source.to_json(), "target": self.target.to_json(),
                "R": self.R, "E": self.E, "t0": list(self.t0), "t0bar": list(self.t0bar)}


def _re_residual(R, E, matrix, target_matrix):
    """R B + E P - Pbar, as a list of rows."""
    B = [list(row) for row in matrix.principal()]
    P = [list(row) for row in matrix.coefficients()]
    Pbar = target_matrix.coefficients()
    RB = _matmul(R, B)
    EP = _matmul(E, P) if P else _zeros(len(E), matrix.r)
    return [[RB[i][j] + EP[i][j] - Pbar[i][j] for j in range(matrix.r)] for i in range(len(Pbar))]


def quasi_hom(spec):
    """psi(u_t0, p) = (ubar_t0bar pbar^R, pbar^E), after validating eq. (R, E).

    The returned homomorphism has the source re-rooted at t0; its images
    are Laurent polynomials in the target's root variables.
    """
    s0 = spec.source.mutate_word(spec.t0)
    t0 = spec.target.mutate_word(spec.t0bar)
    if s0.matrix.principal() != t0.matrix.principal():
        raise REViolation("exchange matrices at t0 and t0bar differ")
    if any(any(row) for row in _re_residual(spec.R, spec.E, s0.matrix, t0.matrix)):
        raise REViolation("R B + E P != Pbar at t0")
    source = reroot(s0)
    a = spec.target.alphabet
    r, lbar = a.r, a.l

    def frozen_monomial(col):
        return a.monomial([0] * r + list(col))

    images = [t0.cluster[i] * frozen_monomial([spec.R[j][i] for j in range(lbar)]) for i in range(r)]
    images += [frozen_monomial([spec.E[j][k] for j in range(lbar)]) for k in range(source.l)]
    kind = "specialization" if not any(any(row) for row in spec.R) else "quasi"
    hom = Homomorphism(source, spec.target, images, kind=kind, E=spec.E, R=spec.R, spec=spec)
    hom.target_t0 = t0
    return hom


def rescaling_step(R, E, matrix, target_matrix, k):
    """R_{t'} from R_t across the edge labelled k (1-based).

    Both expressions of the recursion are computed and must agree.
    """
    i = k - 1
    col = matrix.column(i)
    r = matrix.r
    Bk, Pk = col[:r], col[r:]
    Pbk = target_matrix.column(i)[r:]
    lbar = len(R)

    def side(sign):
        RB = _matvec(R, [pos(sign * x) for x in Bk])
        EP = _matvec(E, [pos(sign * x) for x in Pk]) if Pk else [0] * lbar
        return [RB[j] + EP[j] - pos(sign * Pbk[j]) for j in range(lbar)]

    first, second = side(1), side(-1)
    if first != second:
        raise REViolation("the two expressions for R_t,k + R_t',k differ: %r vs %r" % (first, second))
    new = [list(row) for row in R]
    for j in range(lbar):
        new[j][i] = first[j] - R[j][i]
    return new, first, second


class RescalingData:
    """Rescaling vectors R_u per explored source cluster variable."""

    def __init__(self, vectors, tt2, closed, steps):
        self.vectors = vectors
        self.tt2 = tt2
        self.closed = closed
        self.steps = steps

    def all_zero(self):
        return all(not any(v) for v in self.vectors.values())

    def nonnegative(self):
        return all(min(v, default=0) >= 0 for v in self.vectors.values())


def _tt2_holds(E, matrix, target_matrix):
    P = [list(row) for row in matrix.coefficients()]
    Pbar = [list(row) for row in target_matrix.coefficients()]
    r = matrix.r
    EP = _matmul(E, P) if P else _zeros(len(E), r)
    Pp = [[pos(x) for x in row] for row in P]
    EPp = _matmul(E, Pp) if P else _zeros(len(E), r)
    return EP == Pbar and EPp == [[pos(x) for x in row] for row in Pbar]


def rescaling_vectors(hom, budget=DEFAULT_BUDGET, words=None):
    """R_u along the tree, by the recursion, cross-checked against tropicalize.

    Without ``words`` the source pattern is explored breadth first from
    t0 (deduplicated by seed); with ``words`` only the given mutation
    paths are followed.  R_t B_t + E P_t = Pbar_t is asserted at every
    visited vertex, and psi(u) is checked to equal ubar pbar^{R_u}.
    """
    if hom.spec is None:
        raise MorphismError("rescaling vectors need a quasi-homomorphism")
    E = hom.E
    a = hom.target.alphabet
    r = a.r
    vectors = {}
    tt2 = {}
    steps = 0

    def visit(s, t, R):
        if any(any(row) for row in _re_residual(R, E, s.matrix, t.matrix)):
            raise REViolation("R_t B_t + E P_t != Pbar_t at %r" % (s.label,))
        tt2[s.label] = _tt2_holds(E, s.matrix, t.matrix)
        for i, u in enumerate(s.cluster):
            Ru = tuple(R[j][i] for j in range(len(R)))
            image = hom(u)
            if tropicalize(image) != Ru:
                raise MorphismError("recursion and tropicalization disagree for %s" % u)
            if image != t.cluster[i] * a.monomial([0] * r + list(Ru)):
                raise MorphismError("psi(%s) is not ubar pbar^R" % u)
            vectors.setdefault(u, Ru)

    s0, t0 = hom.source, hom.target_t0
    R0 = [list(row) for row in hom.R]
    visit(s0, t0, R0)
    closed = True
    if words is not None:
        for word in words:
            s, t, R = s0, t0, R0
            for k in word:
                R, _, _ = rescaling_step(R, E, s.matrix, t.matrix, k)
                s, t = mutate(s, k), mutate(t, k)
                steps += 1
                visit(s, t, R)
        return RescalingData(vectors, tt2, False, steps)
    seen = {s0.canonical_key()}
    queue = deque([(s0, t0, R0)])
    while queue:
        s, t, R = queue.popleft()
        for k in range(1, s.r + 1):
            if s.label and s.label[-1] == k:
                continue
            R2, _, _ = rescaling_step(R, E, s.matrix, t.matrix, k)
            s2, t2 = mutate(s, k), mutate(t, k)
            steps += 1
            key = s2.canonical_key()
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > budget:
                closed = False
                queue.clear()
                break
            visit(s2, t2, R2)
            queue.append((s2, t2, R2))
    return RescalingData(vectors, tt2, closed, steps)


# Property F

class PropertyFVerdict:
    def __init__(self, passed, definitive, evidence, explored, reason="", witnesses=()):
        self.passed = passed
        self.definitive = definitive
        self.evidence = evidence
        self.explored = explored
        self.reason = reason
        self.witnesses = list(witnesses)

    def __bool__(self):
        return self.passed

    def to_json(self):
        return {"passed": self.passed, "definitive": self.definitive, "evidence": self.evidence,
                "explored": self.explored, "reason": self.reason,
                "witnesses": [str(w) for w in self.witnesses]}

    def __repr__(self):
        return "PropertyFVerdict(passed=%r, definitive=%r, evidence=%r)" % (
            self.passed, self.definitive, self.evidence)


def _explore_partial(root, budget):
    try:
        return explore(root, budget=budget)
    except BudgetExceeded as exc:
        return exc.fragment


def _label(closed):
    return "exhaustive" if closed else "bounded evidence"


def property_F_check(hom, budget=DEFAULT_BUDGET):
    """Certify Property F on every source cluster variable explored within ``budget``.

    Rescaling-type maps use E >= 0 and R_u >= 0.  Freezing inclusions are
    certified by membership of the images in the target's cluster
    variables.  Other maps use Laurent positivity in the target, upgraded
    to a cluster-monomial decomposition when the target has rank <= 2.
    """
    if hom.E is not None and hom.kind in ("quasi", "specialization", "identity"):
        bad = [(j, k) for j, row in enumerate(hom.E) for k, x in enumerate(row) if x < 0]
        if bad:
            return PropertyFVerdict(False, True, "E has a negative entry", 0,
                                    "E[%d][%d] < 0" % (bad[0][0] + 1, bad[0][1] + 1))
        if hom.kind == "identity":
            return PropertyFVerdict(True, True, "identity", 0)
        data = rescaling_vectors(hom, budget)
        negative = [u for u, v in data.vectors.items() if min(v, default=0) < 0]
        return PropertyFVerdict(not negative, data.closed and not negative or bool(negative),
                                _label(data.closed), len(data.vectors),
                                "some R_u has a negative entry" if negative else "", negative)

    frag = _explore_partial(hom.source, budget)
    variables = frag.cluster_variables()
    if hom.kind == "freezing":
        tfrag = _explore_partial(hom.target, budget)
        known = set(tfrag.variables)
        missing = [u for u in variables if hom(u) not in known]
        if missing and tfrag.closed:
            return PropertyFVerdict(False, True, "image is not a cluster variable", len(variables),
                                    "", missing)
        definitive = frag.closed and not missing
        return PropertyFVerdict(not missing, definitive, _label(definitive), len(variables),
                                "" if not missing else "target exploration incomplete", missing)

    images = [hom(u) for u in variables]
    negative = [u for u, x in zip(variables, images) if not is_positive(x)]
    if negative:
        return PropertyFVerdict(False, True, "image is not a positive Laurent polynomial",
                                len(variables), "", negative)
    if hom.target.r <= 2:
        tfrag = _explore_partial(hom.target, budget)
        if tfrag.closed:
            undecomposed = [u for u, x in zip(variables, images)
                            if cluster_monomial_decomposition(x, tfrag) is None]
            definitive = frag.closed and not undecomposed
            return PropertyFVerdict(not undecomposed, definitive,
                                    "cluster monomial decomposition" if definitive else _label(False),
                                    len(variables), "", undecomposed)
    return PropertyFVerdict(True, False, "Laurent positivity in the initial target cluster",
                            len(variables))


def cluster_monomial_decomposition(f, fragment, degree=None):
    """Write f as a nonnegative combination of (cluster monomial) * (frozen monomial).

    Candidates are the cluster monomials of total degree <= ``degree``
    over the clusters of a closed ``fragment``, times frozen monomials
    below f's frozen degrees.  Returns {(cluster monomial, frozen
    exponents): coefficient} or None.
    """
    import itertools

    import sympy

    a = f.alphabet
    r = a.r
    if f.is_zero():
        return {}
    if not is_positive(f):
        return None
    if degree is None:
        degree = max(sum(abs(x) for x in e[:r]) for e in f.terms) + 1
    qmax = f.max_exponents()[r:]
    monomials = {}
    for cluster in fragment.clusters():
        for exps in itertools.product(range(degree + 1), repeat=len(cluster)):
            if sum(exps) > degree:
                continue
            m = a.one()
            for x, k in zip(cluster, exps):
                if k:
                    m = m * x ** k
            monomials.setdefault(m.key(), m)
    candidates = []
    for m in monomials.values():
        for q in itertools.product(*[range(x + 1) for x in qmax]):
            candidates.append((m, q, m.shift([0] * r + list(q))))
    support = sorted({e for _, _, c in candidates for e in c.terms} | set(f.terms))
    index = {e: n for n, e in enumerate(support)}
    M = sympy.zeros(len(support), len(candidates))
    for j, (_, _, c) in enumerate(candidates):
        for e, v in c.terms.items():
            M[index[e], j] = v
    b = sympy.zeros(len(support), 1)
    for e, v in f.terms.items():
        b[index[e], 0] = v
    try:
        sol, params = M.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    out = {}
    for j, (m, q, _) in enumerate(candidates):
        v = sol[j, 0]
        if v != 0:
            if v < 0 or not v.is_integer:
                return None
            out[(m, q)] = int(v)
    return out


# universal coefficients

def g_vectors(B, budget=DEFAULT_BUDGET):
    """g-vectors of the cluster variables of S(B^T \\\\ I_r), in discovery order.

    Every Laurent monomial of a cluster variable must have the same
    degree under deg x_i = e_i, deg y_j = -(column j of B^T).
    """
    return _g_vector_data(B, budget)[0]


def _g_vector_data(B, budget):
    B = [list(row) for row in (B.principal() if isinstance(B, ExtendedMutationMatrix) else B)]
    r = len(B)
    Bt = [[B[j][i] for j in range(r)] for i in range(r)]
    if not is_finite_type(Bt, budget):
        raise NotFiniteType("B is not of finite type")
    I = [[int(i == j) for j in range(r)] for i in range(r)]
    alphabet = Alphabet(["x%d" % (i + 1) for i in range(r)], ["y%d" % (i + 1) for i in range(r)])
    root = Seed.root(ExtendedMutationMatrix.stack(Bt, I), alphabet)
    frag = explore(root, budget=budget)
    out = {}
    for x in frag.cluster_variables():
        degrees = set()
        for e in x.terms:
            # column j of B^T is row j of B
            degrees.add(tuple(e[i] - sum(e[r + j] * B[j][i] for j in range(r)) for i in range(r)))
        if len(degrees) != 1:
            raise NotHomogeneous("%s is not homogeneous: degrees %r" % (x, sorted(degrees)))
        out[x] = degrees.pop()
    return out, frag


def positive_basis_rows(rho, rows, limit=None):
    """Nonnegative integer E with E rows = rho and E [rows]_+ = [rho]_+.

    Depth-first search with the dominance prune on both the positive and
    the negative parts.  Returns up to ``limit`` solutions (all of them
    by default).
    """
    n = len(rows)
    r = len(rho)
    plus = [[pos(x) for x in row] for row in rows]
    minus = [[pos(-x) for x in row] for row in rows]
    found = []
    # coordinates a suffix of rows can still reach
    reach_p = [[False] * r for _ in range(n + 1)]
    reach_m = [[False] * r for _ in range(n + 1)]
    for idx in range(n - 1, -1, -1):
        for c in range(r):
            reach_p[idx][c] = reach_p[idx + 1][c] or plus[idx][c] > 0
            reach_m[idx][c] = reach_m[idx + 1][c] or minus[idx][c] > 0

    def rec(idx, rp, rm, chosen):
        if limit is not None and len(found) >= limit:
            return
        if idx == n:
            if not any(rp) and not any(rm):
                found.append(list(chosen))
            return
        if any(rp[c] and not reach_p[idx][c] for c in range(r)) or any(
                rm[c] and not reach_m[idx][c] for c in range(r)):
            return
        caps = [rp[c] // plus[idx][c] for c in range(r) if plus[idx][c]]
        caps += [rm[c] // minus[idx][c] for c in range(r) if minus[idx][c]]
        top = min(caps) if caps else 0
        for k in range(top, -1, -1):
            chosen.append(k)
            rec(idx + 1, [rp[c] - k * plus[idx][c] for c in range(r)],
                [rm[c] - k * minus[idx][c] for c in range(r)], chosen)
            chosen.pop()

    rec(0, [pos(x) for x in rho], [pos(-x) for x in rho], [])
    return found


def _cluster_supports(variables, frag):
    where = {x: n for n, x in enumerate(variables)}
    return [frozenset(where[x] for x in c) for c in frag.clusters()]


def solve_E_row(rho, Puniv, clusters):
    """The unique E_rho supported on a single cluster.

    The two equations alone need not pin E_rho down: in type A2 the
    g-vector (1, -1) is also e_1 + (-e_2).  Requiring the support to be
    compatible (contained in one cluster, i.e. one cone of the g-vector
    fan) selects the decomposition of the positive basis.
    """
    sols = [e for e in positive_basis_rows(rho, Puniv)
            if any({n for n, k in enumerate(e) if k} <= c for c in clusters)]
    if not sols:
        raise NoSolution("no nonnegative E_rho for rho = %r" % (list(rho),))
    if len(sols) > 1:
        raise NoSolution("E_rho for rho = %r is not unique" % (list(rho),))
    return sols[0]


class UniversalCoefficientData:
    def __init__(self, B, P, variables, Puniv, E, hom):
        self.B = B
        self.P = P
        self.variables = variables
        self.Puniv = Puniv
        self.E = E
        self.hom = hom

    def to_json(self):
        return {"B": self.B, "P": self.P, "g_vector_variables": [str(x) for x in self.variables],
                "Puniv": self.Puniv, "E": self.E}


def universal_specialization(B, P, budget=DEFAULT_BUDGET):
    """Universal coefficient specialization A(B \\\\ P^univ) -> A(B \\\\ P)."""
    B = [list(row) for row in B]
    P = [list(row) for row in P]
    r = len(B)
    if any(len(row) != r for row in P):
        raise MorphismError("P must have %d columns" % r)
    gv, frag = _g_vector_data(B, budget)
    variables = list(gv)
    Puniv = [list(gv[x]) for x in variables]
    clusters = _cluster_supports(variables, frag)
    E = [solve_E_row(rho, Puniv, clusters) for rho in P]
    if any(x < 0 for row in E for x in row):
        raise NoSolution("negative entry in E")
    source = Seed.root(ExtendedMutationMatrix.stack(B, Puniv),
                       Alphabet.standard(r, len(Puniv), "u", "q"))
    target = Seed.root(ExtendedMutationMatrix.stack(B, P), Alphabet.standard(r, len(P)))
    hom = quasi_hom(QuasiHomSpec(source, target, R=None, E=E))
    return UniversalCoefficientData(B, P, variables, Puniv, E, hom)


# pullback

def pullback_frieze(hom, frieze, verdict=None, budget=DEFAULT_BUDGET):
    """The frieze h o psi, recorded on the source initial extended cluster."""
    from .frieze import Frieze, FriezeError, check_frieze

    if verdict is not None and not verdict.passed:
        raise MorphismError("pullback needs a homomorphism with Property F")
    values = []
    for x in hom.images:
        v = x.evaluate(frieze.values)
        if v.denominator != 1 or v <= 0:
            raise FriezeError("image %s takes the value %s" % (x, v))
        values.append(int(v))
    pulled = Frieze(values, hom.source.r)
    frag = _explore_partial(hom.source, budget)
    bad = check_frieze(frag.cluster_variables(), pulled)
    if bad:
        raise FriezeError("pullback is not a frieze: %r" % (bad[:3],))
    return pulled
