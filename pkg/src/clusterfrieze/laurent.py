"""Exact sparse Laurent polynomials over the integers.

A polynomial lives in an ``Alphabet`` of r mutable variables followed by
l frozen variables.  Terms are stored as a dict mapping exponent tuples
to nonzero Python ints, so coefficients never overflow.
"""

import heapq
import re
from fractions import Fraction


class LaurentError(Exception):
    pass


class ContextMismatch(LaurentError):
    pass


class InexactDivision(LaurentError):
    pass


class DivisionByZero(LaurentError):
    pass


class NonPositiveCoefficients(LaurentError):
    pass


class PoleAtPoint(LaurentError):
    pass


class Alphabet:
    """Ordered variable names, the first ``r`` mutable and the rest frozen."""

    def __init__(self, mutable, frozen=()):
        self.mutable = tuple(mutable)
        self.frozen = tuple(frozen)
        self.names = self.mutable + self.frozen
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names in %r" % (self.names,))
        self.r = len(self.mutable)
        self.l = len(self.frozen)
        self.n = self.r + self.l

    @classmethod
    def standard(cls, r, l=0, mutable_prefix="u", frozen_prefix="p"):
        return cls(["%s%d" % (mutable_prefix, i + 1) for i in range(r)],
                   ["%s%d" % (frozen_prefix, j + 1) for j in range(l)])

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names and self.r == other.r

    def __hash__(self):
        return hash((self.names, self.r))

    def __repr__(self):
        return "Alphabet(%r, %r)" % (self.mutable, self.frozen)

    def zero(self):
        return LaurentPolynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        return LaurentPolynomial(self, {(0,) * self.n: c} if c else {})

    def monomial(self, exps, coeff=1):
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.n:
            raise ValueError("exponent vector has length %d, expected %d" % (len(exps), self.n))
        return LaurentPolynomial(self, {exps: coeff} if coeff else {})

    def var(self, i):
        """0-based generator: indices < r are mutable, the rest frozen."""
        e = [0] * self.n
        e[i] = 1
        return self.monomial(e)

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def index(self, name):
        return self.names.index(name)

    def to_json(self):
        return {"mutable": list(self.mutable), "frozen": list(self.frozen)}

    @classmethod
    def from_json(cls, data):
        return cls(data["mutable"], data.get("frozen", ()))


def _grlex(e):
    return (sum(e), e)


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial.

    Equality is equality of term maps, which is canonical because zero
    coefficients are never stored.
    """

    __slots__ = ("alphabet", "terms", "_hash")

    def __init__(self, alphabet, terms):
        self.alphabet = alphabet
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # structure

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        """Terms in descending graded-lex order of exponents."""
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def key(self):
        """Hashable canonical key, also usable to sort polynomials."""
        return tuple(sorted(self.terms.items()))

    def min_exponents(self):
        es = list(self.terms)
        return tuple(min(col) for col in zip(*es))

    def max_exponents(self):
        es = list(self.terms)
        return tuple(max(col) for col in zip(*es))

    def _check(self, other):
        if not isinstance(other, LaurentPolynomial):
            if isinstance(other, int):
                return self.alphabet.const(other)
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise ContextMismatch("%r vs %r" % (self.alphabet, other.alphabet))
        return other

    # ring operations

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.alphabet.const(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.alphabet, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.alphabet, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.alphabet, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise InexactDivision("negative power of a non-monomial")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise InexactDivision("negative power of a monomial with coefficient %d" % c)
            return LaurentPolynomial(self.alphabet, {tuple(-a * -k for a in e): c ** -k})
        result = self.alphabet.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exps):
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPolynomial(
            self.alphabet,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def __truediv__(self, other):
        return exact_div(self, other)

    # evaluation and substitution

    def evaluate(self, point):
        return evaluate(self, point)

    def substitute(self, images, target):
        """Apply the ring map sending generator k to ``images[k]``.

        ``images`` are LaurentPolynomials over ``target``.  Negative
        exponents are handled by a final exact division, so the result is
        defined whenever the image is again a Laurent polynomial.
        """
        if len(images) != self.alphabet.n:
            raise ValueError("need %d images, got %d" % (self.alphabet.n, len(images)))
        powers = [dict() for _ in images]

        def power(k, a):
            if a not in powers[k]:
                powers[k][a] = images[k] ** a
            return powers[k][a]

        if self.is_zero():
            return target.zero()
        lo = self.min_exponents()
        denominator = target.one()
        for k, a in enumerate(lo):
            if a < 0:
                denominator = denominator * power(k, -a)
        numerator = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for k, a in enumerate(e):
                a -= min(lo[k], 0)
                if a:
                    term = term * power(k, a)
            numerator = numerator + term
        return exact_div(numerator, denominator)

    def rename(self, target, positions):
        """Re-index into ``target``; old generator k goes to ``positions[k]``."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * target.n
            for k, a in enumerate(e):
                if a:
                    ne[positions[k]] += a
            out[tuple(ne)] = c
        return LaurentPolynomial(target, out)

    # printing and serialization

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.alphabet.names
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, a in zip(names, e):
                if a == 1:
                    factors.append(name)
                elif a:
                    factors.append("%s^%d" % (name, a))
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%d*%s" % (abs(c), mono)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "LaurentPolynomial(%s)" % self

    def to_json(self):
        return {"vars": list(self.alphabet.names),
                "r": self.alphabet.r,
                "terms": [{"e": list(e), "c": str(c)} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data, alphabet=None):
        if alphabet is None:
            names = data["vars"]
            r = data.get("r", len(names))
            alphabet = Alphabet(names[:r], names[r:])
        elif list(alphabet.names) != list(data["vars"]):
            raise ContextMismatch("serialized variables %r do not match %r" % (data["vars"], alphabet))
        terms = {}
        for t in data["terms"]:
            e = tuple(int(a) for a in t["e"])
            if len(e) != alphabet.n:
                raise ValueError("bad exponent length in %r" % (t,))
            terms[e] = terms.get(e, 0) + int(t["c"])
        return cls(alphabet, terms)


def parse(text, alphabet):
    """Parse a flat sum such as ``"u1^2*u2^-1 - 3*p1 + 2"``.

    No parentheses; each term is an optional integer times ``name^k`` factors.
    """
    text = text.replace(" ", "").replace("**", "^")
    if not text:
        raise ValueError("empty polynomial string")
    # split on + and - that are not part of an exponent
    pieces = re.split(r"(?<!\^)(?=[+-])", text)
    result = alphabet.zero()
    for piece in pieces:
        if not piece:
            continue
        sign = 1
        if piece[0] in "+-":
            sign = -1 if piece[0] == "-" else 1
            piece = piece[1:]
        coeff = sign
        exps = [0] * alphabet.n
        for factor in piece.split("*"):
            if not factor:
                raise ValueError("malformed term %r" % piece)
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in alphabet.names:
                raise ValueError("unknown variable %r" % name)
            exps[alphabet.index(name)] += int(power) if power else 1
        result = result + alphabet.monomial(exps, coeff)
    return result


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def exact_div(num, den):
    """Return q with q*den == num, or raise InexactDivision.

    The monomial part of ``den`` is divided out first; the remaining
    divisor has no monomial factor, so a Laurent quotient exists iff the
    polynomial long division of a shifted numerator is exact.
    """
    if num.alphabet != den.alphabet:
        raise ContextMismatch("%r vs %r" % (num.alphabet, den.alphabet))
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    alphabet = num.alphabet
    if num.is_zero():
        return alphabet.zero()
    gcd = den.min_exponents()
    d = den.shift([-a for a in gcd])
    if d.is_monomial():
        (e, c), = d.terms.items()
        out = {}
        for ne, nc in num.terms.items():
            if nc % c:
                raise InexactDivision("coefficient %d not divisible by %d" % (nc, c))
            out[tuple(a - b for a, b in zip(ne, gcd))] = nc // c
        return LaurentPolynomial(alphabet, out)

    low = num.min_exponents()
    rem = dict(num.shift([-a for a in low]).terms)
    lead_e, lead_c = max(d.terms.items(), key=lambda t: _grlex(t[0]))
    dterms = list(d.terms.items())
    heap = [(-sum(e), tuple(-a for a in e)) for e in rem]
    heapq.heapify(heap)
    quotient = {}
    while heap:
        _, neg = heapq.heappop(heap)
        e = tuple(-a for a in neg)
        c = rem.get(e)
        if not c:
            continue
        qe = tuple(a - b for a, b in zip(e, lead_e))
        if min(qe) < 0 or c % lead_c:
            raise InexactDivision("nonzero remainder dividing %s by %s" % (num, den))
        qc = c // lead_c
        quotient[qe] = qc
        for de, dc in dterms:
            te = tuple(a + b for a, b in zip(qe, de))
            v = rem.get(te, 0) - qc * dc
            if v:
                if te not in rem:
                    heapq.heappush(heap, (-sum(te), tuple(-a for a in te)))
                rem[te] = v
            else:
                rem.pop(te, None)
    shift = [a - b for a, b in zip(low, gcd)]
    return LaurentPolynomial(alphabet, quotient).shift(shift)


def tropicalize(x):
    """Componentwise minimum of frozen exponents, as a tuple of length l."""
    if x.is_zero():
        raise NonPositiveCoefficients("the zero polynomial has no tropical value")
    if any(c <= 0 for c in x.terms.values()):
        raise NonPositiveCoefficients("%s has a non-positive coefficient" % x)
    r = x.alphabet.r
    return tuple(x.min_exponents()[r:])


def is_positive(x):
    """True iff all coefficients are positive and no frozen variable has a negative exponent."""
    r = x.alphabet.r
    for e, c in x.terms.items():
        if c <= 0 or any(a < 0 for a in e[r:]):
            return False
    return True


def evaluate(x, point):
    """Exact value at ``point`` (length r+l), as a Fraction."""
    if len(point) != x.alphabet.n:
        raise ValueError("point has %d coordinates, expected %d" % (len(point), x.alphabet.n))
    point = [Fraction(v) for v in point]
    total = Fraction(0)
    for e, c in x.terms.items():
        value = Fraction(c)
        for v, a in zip(point, e):
            if a < 0 and v == 0:
                raise PoleAtPoint("%s has a pole at %r" % (x, point))
            if a:
                value *= v ** a
        total += value
    return total
