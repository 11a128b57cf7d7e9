"""The quantised coordinate ring of SL(2) in its PBW basis.

Basis words are triples (i, j, k): a^i b^j c^k for i >= 0 and
d^(-i) b^j c^k for i < 0.  Multiplication rewrites products into this
basis using the defining relations

    ab = qba,  ac = qca,  bc = cb,  bd = qdb,  cd = qdc,
    ad - qbc = 1,  da - q^(-1) bc = 1.

Elements are sparse scalar combinations of basis words; the scalar
field is pluggable (symbolic Q(v) or a numeric specialisation).
"""

from functools import cache

from .scalars import Scalar

GENERATOR_WORDS = {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1), "d": (-1, 0, 0)}
UNIT_WORD = (0, 0, 0)


def word_length(w):
    i, j, k = w
    return abs(i) + j + k


def word_multidegree(w):
    """The Z^2-degree (i, j - k); additive under multiplication."""
    i, j, k = w
    return (i, j - k)


def word_str(w):
    i, j, k = w
    parts = []
    if i > 0:
        parts.append("a" if i == 1 else "a^%d" % i)
    elif i < 0:
        parts.append("d" if i == -1 else "d^%d" % (-i))
    if j:
        parts.append("b" if j == 1 else "b^%d" % j)
    if k:
        parts.append("c" if k == 1 else "c^%d" % k)
    return "*".join(parts) if parts else "1"


@cache
def _mixed_power(field, p, r, a_first):
    """PBW expansion of a^p d^r (a_first) or d^p a^r (not a_first), p, r >= 0.

    Collisions expand through ad = 1 + q bc and da = 1 + q^(-1) bc; the
    result is a dict over basis words.
    """
    if r == 0:
        return {(p if a_first else -p, 0, 0): field.one()}
    if p == 0:
        return {(-r if a_first else r, 0, 0): field.one()}
    base = _mixed_power(field, p - 1, r - 1, a_first)
    shift = field.q_power(2 * r - 1) if a_first else field.q_power(1 - 2 * r)
    out = dict(base)
    for (m, s, t), c in base.items():
        w = (m, s + 1, t + 1)
        add = c * shift
        if w in out:
            tot = out[w] + add
            if tot.is_zero():
                del out[w]
            else:
                out[w] = tot
        else:
            out[w] = add
    return out


def word_mul(field, w1, w2):
    """Product of two basis words as a dict word -> coefficient."""
    i1, j1, k1 = w1
    i2, j2, k2 = w2
    coeff = field.q_power(-i2 * (j1 + k1)) if i2 and (j1 + k1) else field.one()
    J, K = j1 + j2, k1 + k2
    if i1 == 0 or i2 == 0 or (i1 > 0) == (i2 > 0):
        return {(i1 + i2, J, K): coeff}
    if i1 > 0:
        mixed = _mixed_power(field, i1, -i2, True)
    else:
        mixed = _mixed_power(field, -i1, i2, False)
    return {(m, J + s, K + t): coeff * c for (m, s, t), c in mixed.items()}


class AlgebraElement:
    """Finite scalar combination of PBW basis words (immutable by use)."""

    __slots__ = ("field", "terms")

    def __init__(self, field=Scalar, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    self.terms[w] = c

    @classmethod
    def from_word(cls, w, coeff=None, field=Scalar):
        coeff = field.one() if coeff is None else coeff
        return cls(field, {w: coeff})

    @classmethod
    def unit(cls, field=Scalar):
        return cls.from_word(UNIT_WORD, field=field)

    @classmethod
    def generator(cls, name, field=Scalar):
        return cls.from_word(GENERATOR_WORDS[name], field=field)

    @classmethod
    def from_scalar(cls, coeff, field=Scalar):
        return cls(field, {UNIT_WORD: coeff})

    def is_zero(self):
        return not self.terms

    def coefficient(self, w):
        return self.terms.get(w, self.field.zero())

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            if w in out:
                t = out[w] + c
                if t.is_zero():
                    del out[w]
                else:
                    out[w] = t
            else:
                out[w] = c
        r = AlgebraElement.__new__(AlgebraElement)
        r.field, r.terms = self.field, out
        return r

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        r = AlgebraElement.__new__(AlgebraElement)
        r.field = self.field
        r.terms = {w: -c for w, c in self.terms.items()}
        return r

    def scale(self, coeff):
        if coeff.is_zero():
            return AlgebraElement(self.field)
        r = AlgebraElement.__new__(AlgebraElement)
        r.field = self.field
        r.terms = {w: c * coeff for w, c in self.terms.items()}
        return r

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        field = self.field
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c12 = c1 * c2
                for w, c in word_mul(field, w1, w2).items():
                    prev = out.get(w)
                    t = c12 * c if prev is None else prev + c12 * c
                    if t.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = t
        r = AlgebraElement.__new__(AlgebraElement)
        r.field, r.terms = field, out
        return r

    def __pow__(self, n):
        out = AlgebraElement.unit(self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def counit(self):
        """epsilon: a, d -> 1 and b, c -> 0 on generators (an algebra map)."""
        eps = self.field.zero()
        for (i, j, k), c in self.terms.items():
            if j == 0 and k == 0:
                eps = eps + c
        return eps

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0])

    def support_bounds(self):
        """Componentwise bounds (max |i|, max j, max k) over the support."""
        mi = mj = mk = 0
        for i, j, k in self.terms:
            mi, mj, mk = max(mi, abs(i)), max(mj, j), max(mk, k)
        return mi, mj, mk

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            ws = word_str(w)
            cs = str(c)
            if ws == "1":
                body = cs
            elif cs == "1":
                body = ws
            elif cs == "-1":
                body = "-" + ws
            else:
                if ("+" in cs or " - " in cs) and not (cs.startswith("(") and cs.endswith(")")):
                    cs = "(%s)" % cs
                body = "%s * %s" % (cs, ws)
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(" - " + body[1:])
            else:
                parts.append(" + " + body)
        return "".join(parts)

    def __repr__(self):
        return "AlgebraElement(%s)" % str(self)


class Automorphism:
    """sigma_{lam,mu} or tau_{lam,mu}; every automorphism has this form.

    sigma: a, b, c, d -> lam*a, mu*b, mu^(-1)*c, lam^(-1)*d
    tau:   a, b, c, d -> lam*a, mu^(-1)*c, mu*b, lam^(-1)*d
    """

    __slots__ = ("kind", "lam", "mu")

    def __init__(self, kind, lam, mu):
        if kind not in ("sigma", "tau"):
            raise ValueError("automorphism kind must be sigma or tau")
        if lam.is_zero() or mu.is_zero():
            raise ValueError("automorphism parameters must be nonzero")
        self.kind = kind
        self.lam = lam
        self.mu = mu

    @classmethod
    def sigma(cls, lam, mu):
        return cls("sigma", lam, mu)

    @classmethod
    def tau(cls, lam, mu):
        return cls("tau", lam, mu)

    @classmethod
    def sigma_q(cls, nlam, nmu, field=Scalar):
        """sigma_{q^nlam, q^nmu} for integer exponents."""
        return cls("sigma", field.q_power(nlam), field.q_power(nmu))

    @classmethod
    def identity(cls, field=Scalar):
        return cls("sigma", field.one(), field.one())

    def is_identity(self):
        return self.kind == "sigma" and self.lam.is_one() and self.mu.is_one()

    def word_factor(self, w):
        """Scalar by which the automorphism rescales basis word w.

        For tau the word also swaps its b- and c-exponents.
        """
        i, j, k = w
        f = self.lam ** i
        e = (j - k) if self.kind == "sigma" else (k - j)
        if e:
            f = f * self.mu ** e
        return f

    def apply_word(self, w):
        i, j, k = w
        target = w if self.kind == "sigma" else (i, k, j)
        return target, self.word_factor(w)

    def __call__(self, x):
        out = {}
        for w, c in x.terms.items():
            tw, f = self.apply_word(w)
            prev = out.get(tw)
            t = c * f if prev is None else prev + c * f
            if t.is_zero():
                out.pop(tw, None)
            else:
                out[tw] = t
        r = AlgebraElement.__new__(AlgebraElement)
        r.field, r.terms = x.field, out
        return r

    def compose(self, other):
        """self after other."""
        lam = self.lam * other.lam
        if self.kind == "sigma":
            mu = self.mu * other.mu
            kind = other.kind
        else:
            mu = self.mu / other.mu
            kind = "tau" if other.kind == "sigma" else "sigma"
        return Automorphism(kind, lam, mu)

    def inverse(self):
        if self.kind == "sigma":
            return Automorphism("sigma", self.lam.inv(), self.mu.inv())
        return Automorphism("tau", self.lam.inv(), self.mu)

    def __eq__(self, other):
        return (
            isinstance(other, Automorphism)
            and self.kind == other.kind
            and self.lam == other.lam
            and self.mu == other.mu
        )

    def __hash__(self):
        return hash((self.kind, self.lam, self.mu))

    def __str__(self):
        return "%s(%s,%s)" % (self.kind, self.lam, self.mu)

    __repr__ = __str__


def generators(field=Scalar):
    return tuple(AlgebraElement.generator(g, field) for g in "abcd")


def twisted_commutator(x, gen_name, aut):
    """x * g - aut(g) * x for a generator g; equals the boundary of x (x) g."""
    g = AlgebraElement.generator(gen_name, x.field)
    return x * g - aut(g) * x


def twico_closed_form(w, gen_name, lam, mu, field=Scalar):
    """The closed form of the twisted commutator e_{i,j,k} g - sigma(g) e_{i,j,k}.

    Matches the four displayed formulas, one per generator; the a and d
    cases acquire an extra (j+1, k+1)-shifted word when the powers collide.
    """
    i, j, k = w
    out = {}

    def put(word, c):
        if not c.is_zero():
            out[word] = out.get(word, field.zero()) + c
            if out[word].is_zero():
                del out[word]

    if gen_name == "a":
        put((i + 1, j, k), field.q_power(-j - k) - lam)
        if i < 0:
            put((i + 1, j + 1, k + 1), field.q_power(-j - k - 1) - lam * field.q_power(-1 - 2 * i))
    elif gen_name == "b":
        put((i, j + 1, k), field.one() - mu * field.q_power(-i))
    elif gen_name == "c":
        put((i, j, k + 1), field.one() - mu.inv() * field.q_power(-i))
    elif gen_name == "d":
        put((i - 1, j, k), field.q_power(j + k) - lam.inv())
        if i > 0:
            put((i - 1, j + 1, k + 1), field.q_power(j + k + 1) - lam.inv() * field.q_power(1 - 2 * i))
    else:
        raise ValueError("unknown generator %r" % gen_name)
    return AlgebraElement(field, out)


def defining_relations(field=Scalar):
    """The seven defining relations as elements that must vanish."""
    a, b, c, d = generators(field)
    q = AlgebraElement.from_scalar(field.q_power(1), field)
    qi = AlgebraElement.from_scalar(field.q_power(-1), field)
    one = AlgebraElement.unit(field)
    return [
        a * b - q * b * a,
        a * c - q * c * a,
        b * c - c * b,
        b * d - q * d * b,
        c * d - q * d * c,
        a * d - q * b * c - one,
        d * a - qi * b * c - one,
    ]
