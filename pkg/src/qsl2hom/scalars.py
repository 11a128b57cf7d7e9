"""Exact arithmetic in the coefficient field Q(v), with q = v^2.

Scalars are quotients of integer polynomials in v, kept in a canonical
reduced form so that structural equality coincides with field equality.
Working over Q(v) rather than Q(q) makes the half-integer power
q^(1/2) = v representable, which the universal r-form needs.
"""

from fractions import Fraction
from functools import cache

# ---------------------------------------------------------------------------
# integer polynomial helpers (dense tuples, index = degree in v)


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _pscale(a, k):
    if k == 0:
        return ()
    return tuple(x * k for x in a)


def _content(a):
    g = 0
    for x in a:
        g = _igcd(g, x)
        if g == 1:
            return 1
    return g


def _igcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _pdivmod(a, b):
    """Polynomial division over Q; returns (quot, rem) with Fraction coeffs."""
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = Fraction(b[-1])
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        f = a[-1] / lb
        q[k] = f
        for i, y in enumerate(b):
            a[i + k] -= f * y
        a.pop()
    return q, a


def _pgcd(a, b):
    """gcd in Z[v] via primitive part / content splitting (no modular tricks)."""
    a, b = _trim(a), _trim(b)
    if not a:
        return _ppositive(b)
    if not b:
        return _ppositive(a)
    ca, cb = _content(a), _content(b)
    pa = tuple(x // ca for x in a)
    pb = tuple(x // cb for x in b)
    # Euclid on primitive parts, clearing denominators at each step.
    while pb:
        _, r = _pdivmod(pa, pb)
        r = _trim(r)
        if r:
            den = 1
            for x in r:
                den = den * x.denominator // _igcd(den, x.denominator)
            r = _trim([int(x * den) for x in r])
            cr = _content(r)
            r = tuple(x // cr for x in r)
        pa, pb = pb, r
    g = _pscale(pa, _igcd(ca, cb))
    return _ppositive(g)


def _ppositive(a):
    return _pneg(a) if a and a[-1] < 0 else a


def _poly_str(c, var):
    """Render an integer polynomial; exponents follow the given variable.

    var is ('v', 1) or ('q', 2): with q every stored v-exponent is halved.
    """
    name, step = var
    parts = []
    for d in range(len(c) - 1, -1, -1):
        x = c[d]
        if not x:
            continue
        e = d // step
        if e == 0:
            mono = None
        elif e == 1:
            mono = name
        else:
            mono = "%s^%d" % (name, e)
        if mono is None:
            term = str(abs(x))
        elif abs(x) == 1:
            term = mono
        else:
            term = "%d*%s" % (abs(x), mono)
        if not parts:
            parts.append(term if x > 0 else "-" + term)
        else:
            parts.append((" + " if x > 0 else " - ") + term)
    return "".join(parts) if parts else "0"


class Scalar:
    """Element of Q(v) in canonical form.

    Invariants: den != 0; gcd(num, den) = 1 in Z[v]; den has positive
    leading coefficient; zero is (0, 1).  Integer content common to num
    and den is cancelled, so e.g. 1/2 is stored as num=1, den=2.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            return
        g = _pgcd(num, den)
        if g != (1,):
            qn, _ = _pdivmod(num, g)
            qd, _ = _pdivmod(den, g)
            num = _trim([int(x) for x in qn])
            den = _trim([int(x) for x in qd])
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        self.num, self.den = num, den

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def from_int(cls, n):
        return cls((n,))

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls((f.numerator,), (f.denominator,))

    @classmethod
    def v_power(cls, n):
        """v^n for any integer n."""
        if n >= 0:
            return cls((0,) * n + (1,))
        return cls((1,), (0,) * (-n) + (1,))

    @classmethod
    def q_power(cls, n):
        """q^n = v^(2n)."""
        return cls.v_power(2 * n)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    def as_q_monomial(self):
        """Return n if self == q^n for an integer n, else None."""
        if len([x for x in self.num if x]) != 1 or len([x for x in self.den if x]) != 1:
            return None
        if self.num[-1] != 1 or self.den[-1] != 1:
            return None
        d = len(self.num) - len(self.den)
        return d // 2 if d % 2 == 0 else None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(
            _padd(_pmul(self.num, other.den), _pneg(_pmul(other.num, self.den))),
            _pmul(self.den, other.den),
        )

    def __neg__(self):
        s = Scalar.__new__(Scalar)
        s.num, s.den = _pneg(self.num), self.den
        return s

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inv()

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inversion of zero scalar")
        return Scalar(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- equality / hashing -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation and printing --------------------------------------------

    def eval_at(self, v0):
        """Exact value at v = v0 (a Fraction); raises on a pole."""
        v0 = Fraction(v0)
        num = sum(x * v0**d for d, x in enumerate(self.num))
        den = sum(x * v0**d for d, x in enumerate(self.den))
        if den == 0:
            raise ZeroDivisionError("pole of scalar at v = %s" % v0)
        return num / den

    def _only_even(self):
        return all(
            x == 0
            for c in (self.num, self.den)
            for d, x in enumerate(c)
            if d % 2 == 1
        )

    def __str__(self):
        var = ("q", 2) if self._only_even() else ("v", 1)
        # pure monomial numerators over monomial denominators print as powers
        mono = self._monomial_str(var)
        if mono is not None:
            return mono
        ns = _poly_str(self.num, var)
        if self.den == (1,):
            return ns
        ds = _poly_str(self.den, var)
        if "+" in ns or " - " in ns or ns.startswith("-"):
            ns = "(%s)" % ns
        if "+" in ds or " - " in ds or "*" in ds:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)

    def _monomial_str(self, var):
        name, step = var
        nnz = [(d, x) for d, x in enumerate(self.num) if x]
        dnz = [(d, x) for d, x in enumerate(self.den) if x]
        if len(nnz) != 1 or len(dnz) != 1:
            return None
        (dn, xn), (dd, xd) = nnz[0], dnz[0]
        if xd != 1:
            return None
        e = (dn - dd) // step
        if e == 0:
            return str(xn)
        p = name if e == 1 else "%s^%d" % (name, e)
        if xn == 1:
            return p
        if xn == -1:
            return "-" + p
        return "%d*%s" % (xn, p)

    def __repr__(self):
        return "Scalar(%s)" % str(self)


_ZERO = Scalar(())
_ONE = Scalar((1,))


@cache
def numeric_field(v0):
    """A drop-in scalar class computing in Q with v specialised to v0.

    Used as the secondary numeric oracle: identities proved exactly in
    Q(v) are re-validated with v evaluated at a rational point.
    """
    v0 = Fraction(v0)

    class NumericScalar:
        __slots__ = ("val",)
        V0 = v0

        def __init__(self, val):
            self.val = Fraction(val)

        @classmethod
        def zero(cls):
            return cls(0)

        @classmethod
        def one(cls):
            return cls(1)

        @classmethod
        def from_int(cls, n):
            return cls(n)

        @classmethod
        def from_fraction(cls, f):
            return cls(f)

        @classmethod
        def v_power(cls, n):
            return cls(cls.V0**n)

        @classmethod
        def q_power(cls, n):
            return cls(cls.V0 ** (2 * n))

        def is_zero(self):
            return self.val == 0

        def is_one(self):
            return self.val == 1

        def __add__(self, other):
            return NumericScalar(self.val + other.val)

        def __sub__(self, other):
            return NumericScalar(self.val - other.val)

        def __neg__(self):
            return NumericScalar(-self.val)

        def __mul__(self, other):
            return NumericScalar(self.val * other.val)

        def __truediv__(self, other):
            return self * other.inv()

        def inv(self):
            if self.val == 0:
                raise ZeroDivisionError("inversion of zero scalar")
            return NumericScalar(1 / self.val)

        def __pow__(self, n):
            return NumericScalar(self.val**n)

        def __eq__(self, other):
            return isinstance(other, NumericScalar) and self.val == other.val

        def __hash__(self):
            return hash(self.val)

        def __str__(self):
            return str(self.val)

        __repr__ = __str__

    NumericScalar.__name__ = "NumericScalar_v%s" % str(v0).replace("/", "_")
    return NumericScalar


def specialize(x, v0):
    """Map a symbolic Scalar into the numeric field at v = v0."""
    return numeric_field(v0)(x.eval_at(v0))
