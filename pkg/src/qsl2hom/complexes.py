"""Twisted Hochschild chains and evaluable cochains.

Chains live in C_n(A, sigma_A) = A^(tensor n+1) with the left module
action twisted by an automorphism sigma.  The boundary is the usual
alternating face sum; its outer faces see the twist:

    b_0 merges a_0 a_1,   b_n produces sigma(a_n) a_0.

Cochains are lazily evaluable expression trees (the algebra is
infinite-dimensional, so there is no matrix form): derivation leaves
extend their generator values through the twisted Leibniz rule,
twisted-central and automorphism-difference leaves are degree 0 and 1,
and cup nodes compose twists and concatenate argument slots.
"""

from .scalars import Scalar
from .algebra import AlgebraElement, Automorphism, UNIT_WORD, GENERATOR_WORDS, word_mul
from .hopf import TensorElement


class Chain:
    """Element of C_n(A, sigma_A): degree n, twist, arity-(n+1) body."""

    __slots__ = ("degree", "twist", "body")

    def __init__(self, degree, twist, body=None):
        if twist.kind != "sigma":
            raise ValueError("chain twists are sigma-type automorphisms")
        self.degree = degree
        self.twist = twist
        self.body = body if body is not None else TensorElement(degree + 1, twist.lam.__class__)
        if self.body.arity != degree + 1:
            raise ValueError("chain body arity must be degree + 1")

    @property
    def field(self):
        return self.body.field

    def is_zero(self):
        return self.body.is_zero()

    def _like(self, body, degree=None):
        return Chain(self.degree if degree is None else degree, self.twist, body)

    def __add__(self, other):
        self._check(other)
        return self._like(self.body + other.body)

    def __sub__(self, other):
        self._check(other)
        return self._like(self.body - other.body)

    def __neg__(self):
        return self._like(-self.body)

    def scale(self, coeff):
        return self._like(self.body.scale(coeff))

    def _check(self, other):
        if self.degree != other.degree or self.twist != other.twist:
            raise ValueError("chain degree/twist mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, Chain)
            and self.degree == other.degree
            and self.twist == other.twist
            and self.body == other.body
        )

    def __hash__(self):
        return hash((self.degree, self.twist, self.body))

    def multidegrees(self):
        """Set of total (i, j-k) bidegrees over the support (b preserves them)."""
        out = set()
        for ws in self.body.terms:
            s0 = sum(w[0] for w in ws)
            s1 = sum(w[1] - w[2] for w in ws)
            out.add((s0, s1))
        return out

    def __str__(self):
        return "[deg %d, twist %s] %s" % (self.degree, self.twist, self.body)

    __repr__ = __str__


def chain_from_element(x, twist):
    """Degree-0 chain from an algebra element."""
    body = TensorElement(1, x.field)
    for w, c in x.terms.items():
        body._add_term((w,), c)
    return Chain(0, twist, body)


def degree0_element(ch):
    if ch.degree != 0:
        raise ValueError("not a degree-0 chain")
    out = {}
    for (w,), c in ch.body.terms.items():
        out[w] = c
    return AlgebraElement(ch.field, out)


def face(ch, i):
    """The i-th face map b_i, 0 <= i <= n."""
    n = ch.degree
    if not 0 <= i <= n:
        raise IndexError("face index out of range")
    if n == 0:
        raise ValueError("faces need degree >= 1")
    field = ch.field
    out = TensorElement(n, field)
    if i < n:
        out = ch.body.leg_mul(i, i + 1)
    else:
        tw = ch.twist
        for ws, c in ch.body.terms.items():
            last, f = tw.apply_word(ws[n])
            for w, g in word_mul(field, last, ws[0]).items():
                out._add_term((w,) + ws[1:n], c * f * g)
    return Chain(n - 1, ch.twist, out)


def degeneracy(ch, i):
    """The i-th degeneracy s_i inserts the unit after position i."""
    n = ch.degree
    if not 0 <= i <= n:
        raise IndexError("degeneracy index out of range")
    out = TensorElement(n + 2, ch.field)
    for ws, c in ch.body.terms.items():
        out._add_term(ws[: i + 1] + (UNIT_WORD,) + ws[i + 1:], c)
    return Chain(n + 1, ch.twist, out)


def boundary(ch):
    """b = sum_{i=0}^n (-1)^i b_i; drops degree by one, b o b = 0."""
    n = ch.degree
    if n == 0:
        raise ValueError("boundary needs degree >= 1")
    out = face(ch, 0)
    for i in range(1, n + 1):
        term = face(ch, i)
        out = out - term if i % 2 else out + term
    return out


def boundary_prime(ch):
    """b' = sum_{i=0}^{n-1} (-1)^i b_i (the last, twisted face omitted)."""
    n = ch.degree
    if n == 0:
        raise ValueError("boundary' needs degree >= 1")
    out = face(ch, 0)
    for i in range(1, n):
        term = face(ch, i)
        out = out - term if i % 2 else out + term
    return out


def normalize(ch):
    """Project to the normalised complex: kill unit factors in slots >= 1."""
    out = TensorElement(ch.degree + 1, ch.field)
    for ws, c in ch.body.terms.items():
        if all(w != UNIT_WORD for w in ws[1:]):
            out._add_term(ws, c)
    return Chain(ch.degree, ch.twist, out)


def is_normalized(ch):
    return all(
        w != UNIT_WORD for ws in ch.body.terms for w in ws[1:]
    )


# ---------------------------------------------------------------------------
# cochains


class Cochain:
    """Base: an evaluable algebra-valued twisted cochain."""

    degree = 0
    twist = None

    def eval_words(self, words):
        raise NotImplementedError

    def __call__(self, *args):
        """Evaluate at a tuple of AlgebraElements (multilinear)."""
        if len(args) != self.degree:
            raise ValueError(
                "cochain of degree %d called with %d arguments" % (self.degree, len(args))
            )
        if not args:
            return self.eval_words(())
        field = args[0].field
        out = AlgebraElement(field)
        def rec(pos, words, coeff):
            nonlocal out
            if pos == len(args):
                out = out + self.eval_words(tuple(words)).scale(coeff)
                return
            for w, c in args[pos].terms.items():
                rec(pos + 1, words + [w], coeff * c)
        rec(0, [], field.one())
        return out

    def cup(self, other):
        from .products import cup
        return cup(self, other)


class Derivation(Cochain):
    """Twisted derivation given by its values on the four generators.

    The twisted Leibniz rule d(xy) = twist(x) d(y) + d(x) y extends the
    values to all of A; the extension is exact, computed word by word.
    """

    degree = 1

    def __init__(self, values, twist, name=None):
        self.values = {g: values[g] for g in "abcd"}
        self.twist = twist
        self.name = name
        self._word_cache = {}

    def eval_word(self, w):
        cached = self._word_cache.get(w)
        if cached is not None:
            return cached
        field = next(iter(self.values.values())).field
        if w == UNIT_WORD:
            out = AlgebraElement(field)
        else:
            i, j, k = w
            if i > 0:
                g, rest = "a", (i - 1, j, k)
            elif i < 0:
                g, rest = "d", (i + 1, j, k)
            elif j > 0:
                g, rest = "b", (i, j - 1, k)
            else:
                g, rest = "c", (i, j, k - 1)
            rest_el = AlgebraElement.from_word(rest, field=field)
            gen_el = AlgebraElement.generator(g, field)
            out = self.values[g] * rest_el + self.twist(gen_el) * self.eval_word(rest)
        self._word_cache[w] = out
        return out

    def eval_words(self, words):
        return self.eval_word(words[0])

    def __str__(self):
        return self.name or "derivation(%s)" % ", ".join(
            "%s->%s" % (g, self.values[g]) for g in "abcd"
        )

    __repr__ = __str__


class CentralElement(Cochain):
    """Degree-0 cochain: a (declared) twisted-central element of A."""

    degree = 0

    def __init__(self, element, twist):
        self.element = element
        self.twist = twist

    def eval_words(self, words):
        return self.element

    def __str__(self):
        return "[%s]" % self.element

    __repr__ = __str__


class AutomorphismDifference(Cochain):
    """sigma - id: an inner sigma-twisted derivation (commutator with 1)."""

    degree = 1

    def __init__(self, aut):
        self.aut = aut
        self.twist = aut

    def eval_words(self, words):
        w = words[0]
        field = self.aut.lam.__class__
        x = AlgebraElement.from_word(w, field=field)
        return self.aut(x) - x

    def __str__(self):
        return "(%s - id)" % self.aut

    __repr__ = __str__


class Cup(Cochain):
    """Cup node: twists compose (right after left), slots concatenate.

    (f cup g)(a_1..a_{m+n}) = g.twist(f(a_1..a_m)) g(a_{m+1}..a_{m+n}).
    """

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.degree = left.degree + right.degree
        self.twist = right.twist.compose(left.twist)

    def eval_words(self, words):
        m = self.left.degree
        lv = self.left.eval_words(words[:m])
        rv = self.right.eval_words(words[m:])
        return self.right.twist(lv) * rv

    def __str__(self):
        return "(%s cup %s)" % (self.left, self.right)

    __repr__ = __str__


def hochschild_coboundary_eval(f, args):
    """(b f)(a_1,...,a_{n+1}) for an algebra-valued cochain f.

    Bimodule convention: left action twisted by f.twist, right action
    untwisted.  Vanishes identically iff f is a cocycle.
    """
    n = f.degree
    if len(args) != n + 1:
        raise ValueError("coboundary evaluation needs degree+1 arguments")
    out = f.twist(args[0]) * f(*args[1:])
    sign = -1
    for j in range(n):
        out = out + f(*(args[:j] + (args[j] * args[j + 1],) + args[j + 2:])).scale(
            out.field.from_int(sign)
        )
        sign = -sign
    out = out + (f(*args[:n]) * args[n]).scale(out.field.from_int(sign))
    return out


# ---------------------------------------------------------------------------
# scalar-valued cochains (trace outermost)


class TraceFunctional:
    """Scalar-valued cochain: a twisted trace composed with cap by `inner`.

    Evaluates as phi(a_0,...,a_n) = coeff * trace(inner.twist(a_0) *
    inner(a_1,...,a_n)); as a functional it lives on chains whose twist
    is inner.twist^(-1) o trace.twist.
    """

    def __init__(self, trace, inner, coeff=None):
        self.trace = trace
        self.inner = inner
        self.coeff = coeff
        self.degree = inner.degree

    @property
    def chain_twist(self):
        return self.inner.twist.inverse().compose(self.trace.twist)

    def eval_words(self, words):
        field = self.trace.field
        a0 = AlgebraElement.from_word(words[0], field=field)
        inner_val = self.inner.eval_words(words[1:])
        val = self.trace(self.inner.twist(a0) * inner_val)
        if self.coeff is not None:
            val = val * self.coeff
        return val

    def __call__(self, *args):
        if len(args) != self.degree + 1:
            raise ValueError(
                "functional of degree %d takes %d arguments"
                % (self.degree, self.degree + 1)
            )
        field = args[0].field
        out = field.zero()
        def rec(pos, words, coeff):
            nonlocal out
            if pos == len(args):
                out = out + self.eval_words(tuple(words)) * coeff
                return
            for w, c in args[pos].terms.items():
                rec(pos + 1, words + [w], coeff * c)
        rec(0, [], field.one())
        return out

    def components(self):
        return [self]

    def __add__(self, other):
        return FunctionalSum(self.components() + other.components())

    def __str__(self):
        c = "" if self.coeff is None else "%s * " % self.coeff
        return "%s%s o cap(%s)" % (c, self.trace, self.inner)

    __repr__ = __str__


class FunctionalSum:
    """Sum of trace functionals of equal degree and chain twist."""

    def __init__(self, parts):
        self.parts = list(parts)
        self.degree = parts[0].degree
        for p in parts:
            if p.degree != self.degree or p.chain_twist != parts[0].chain_twist:
                raise ValueError("functional sum needs equal degree and chain twist")

    @property
    def chain_twist(self):
        return self.parts[0].chain_twist

    def eval_words(self, words):
        out = self.parts[0].eval_words(words)
        for p in self.parts[1:]:
            out = out + p.eval_words(words)
        return out

    def __call__(self, *args):
        out = self.parts[0](*args)
        for p in self.parts[1:]:
            out = out + p(*args)
        return out

    def components(self):
        return list(self.parts)

    def __add__(self, other):
        return FunctionalSum(self.components() + other.components())

    def __str__(self):
        return " + ".join(str(p) for p in self.parts)

    __repr__ = __str__


def functional_coboundary(phi, args):
    """(b phi)(a_0,...,a_{n+1}): precompose the functional with the chain
    boundary in the twist phi.chain_twist."""
    n = phi.degree
    if len(args) != n + 2:
        raise ValueError("functional coboundary needs degree+2 arguments")
    body = TensorElement.from_factors(list(args))
    ch = Chain(n + 1, phi.chain_twist, body)
    bch = boundary(ch)
    out = args[0].field.zero()
    for ws, c in bch.body.terms.items():
        out = out + phi.eval_words(ws) * c
    return out


def evaluate_functional_on_chain(phi, ch):
    """Apply a scalar-valued cochain to an equal-degree chain, term by term."""
    if ch.degree != phi.degree:
        raise ValueError("degree mismatch between functional and chain")
    out = ch.field.zero()
    for ws, c in ch.body.terms.items():
        out = out + phi.eval_words(ws) * c
    return out
