"""Cup and cap products with their twist bookkeeping.

Cup composes twists right-after-left and evaluates by

    (f cup g)(a_1..a_{m+n}) = g.twist(f(a_1..a_m)) g(a_{m+1}..),

cap acts on chains by partial evaluation,

    (a_0 (x) ... (x) a_n) cap f = f.twist(a_0) f(a_1..a_m) (x) a_{m+1}..,

landing in twist f.twist o chain.twist.  The two are compatible on the
nose: (ch cap f) cap g == ch cap (f cup g) as chains, not merely in
homology, which the tests pin down.
"""

from .algebra import AlgebraElement, word_mul
from .complexes import (
    Chain,
    CentralElement,
    Cup,
    TraceFunctional,
    FunctionalSum,
    TensorElement,
)


def cup(f, g):
    """Cup product of two algebra-valued cochains."""
    return Cup(f, g)


def cup_all(*fs):
    out = fs[0]
    for f in fs[1:]:
        out = Cup(out, f)
    return out


def cap(ch, f):
    """Cap product ch cap f; degree drops by deg f, twists compose."""
    m = f.degree
    n = ch.degree
    if m > n:
        raise ValueError("cap needs deg(cochain) <= deg(chain)")
    field = ch.field
    new_twist = f.twist.compose(ch.twist)
    out = TensorElement(n - m + 1, field)
    if isinstance(f, CentralElement):
        # (spaetzle): cap with a twisted-central element is left multiplication
        for ws, c in ch.body.terms.items():
            for zw, zc in f.element.terms.items():
                for w, g in word_mul(field, zw, ws[0]).items():
                    out._add_term((w,) + ws[1:], c * zc * g)
        return Chain(n, new_twist, out)
    for ws, c in ch.body.terms.items():
        head, hf = f.twist.apply_word(ws[0])
        val = f.eval_words(ws[1 : m + 1])
        if val.is_zero():
            continue
        for vw, vc in val.terms.items():
            for w, g in word_mul(field, head, vw).items():
                out._add_term((w,) + ws[m + 1 :], c * hf * vc * g)
    return Chain(n - m, new_twist, out)


def pair(functional, ch):
    """Scalar pairing of a trace-carrying cochain with an equal-degree chain.

    The chain twist must match the functional's twisted-dual placement
    (inner.twist^(-1) o trace.twist); a mismatch is reported rather than
    silently reinterpreted.
    """
    if not isinstance(functional, (TraceFunctional, FunctionalSum)):
        raise TypeError("pair needs a scalar-valued (trace) cochain")
    if functional.degree != ch.degree:
        raise ValueError(
            "pairing degree mismatch: functional %d vs chain %d"
            % (functional.degree, ch.degree)
        )
    if functional.chain_twist != ch.twist:
        raise ValueError(
            "pairing twist mismatch: functional pairs with %s, chain has %s"
            % (functional.chain_twist, ch.twist)
        )
    out = ch.field.zero()
    for ws, c in ch.body.terms.items():
        out = out + functional.eval_words(ws) * c
    return out
