"""Finite-truncation exact linear algebra over Q(v).

Witness searches happen inside a truncation box: a finite window of
PBW words and normalised tensor tuples, optionally restricted to one
(i, j-k) multidegree slice (the boundary preserves the slice, so the
restriction never loses witnesses).  Row windows of boundary matrices
are computed as the exact union of the image supports, so no image
term is silently dropped.

Every witness is re-verified by direct boundary evaluation, outside
the matrix path.  A no_witness_in_box verdict is evidence relative to
the box, never a proof of nontriviality.
"""

from dataclasses import dataclass, field as dc_field

from .scalars import Scalar
from .algebra import AlgebraElement, UNIT_WORD, word_length, word_multidegree
from .complexes import Chain, TensorElement, boundary, normalize


@dataclass(frozen=True)
class TruncationBox:
    """Word window |i| <= max_abs_i, j <= max_j, k <= max_k.

    max_length caps the summed word length of a tuple; 0 means no cap.
    Keeping it close to the target's length keeps enumerations small.
    """

    max_abs_i: int
    max_j: int
    max_k: int
    max_length: int = 0

    def words(self):
        out = []
        for i in range(-self.max_abs_i, self.max_abs_i + 1):
            for j in range(self.max_j + 1):
                for k in range(self.max_k + 1):
                    out.append((i, j, k))
        out.sort()
        return out

    def contains_word(self, w):
        i, j, k = w
        return abs(i) <= self.max_abs_i and 0 <= j <= self.max_j and 0 <= k <= self.max_k


def enumerate_tuples(box, degree, multidegree=None):
    """Normalised degree-`degree` tuples in the box, in deterministic order.

    Positions >= 1 exclude the unit word (normalised complex).
    """
    words = box.words()
    nonunit = [w for w in words if w != UNIT_WORD]
    slots = [words] + [nonunit] * degree
    out = []

    def rec(pos, acc, mi, mjk, used):
        if pos == len(slots):
            if multidegree is None or (mi, mjk) == multidegree:
                out.append(tuple(acc))
            return
        for w in slots[pos]:
            ln = word_length(w)
            if box.max_length and used + ln > box.max_length:
                continue
            di, djk = word_multidegree(w)
            acc.append(w)
            rec(pos + 1, acc, mi + di, mjk + djk, used + ln)
            acc.pop()

    rec(0, [], 0, 0, 0)
    return out


def row_clear(row, rhs_val, field):
    """Fraction-free style growth control: multiply a row through by its
    distinct entry denominators (exactness is unaffected)."""
    if field is not Scalar:
        return row, rhs_val
    dens = {v.den for v in row.values() if v.den != (1,)}
    if rhs_val.den != (1,):
        dens.add(rhs_val.den)
    if not dens:
        return row, rhs_val
    mult = field.one()
    for d in dens:
        mult = mult * Scalar(d)
    return {c: v * mult for c, v in row.items()}, rhs_val * mult


def solve_linear(rows, rhs, field=Scalar, pivot_heuristic=True):
    """Solve A x = rhs exactly over the field; None if unsolvable.

    rows: list of dicts col -> scalar.  Gauss-Jordan elimination with a
    fixpoint pivot sweep; free variables are set to zero.  The pivot
    choice prefers structurally simple entries (least combined
    numerator/denominator size) but any choice yields the same verdict.
    """
    rows = [dict(r) for r in rows]
    vec = list(rhs)
    n = len(rows)
    pivot_of_col = {}
    used = set()

    def complexity(v):
        if hasattr(v, "num"):
            return len(v.num) + len(v.den)
        return 1

    changed = True
    while changed:
        changed = False
        cols = sorted({c for ri in range(n) if ri not in used for c in rows[ri]})
        for col in cols:
            if col in pivot_of_col:
                continue
            best = None
            for ri in range(n):
                if ri in used:
                    continue
                v = rows[ri].get(col)
                if v is None or v.is_zero():
                    continue
                if not pivot_heuristic:
                    best = ri
                    break
                if best is None or complexity(v) < complexity(rows[best][col]):
                    best = ri
            if best is None:
                continue
            changed = True
            used.add(best)
            pivot_of_col[col] = best
            inv = rows[best][col].inv()
            rows[best] = {c: v * inv for c, v in rows[best].items()}
            vec[best] = vec[best] * inv
            prow = rows[best]
            for ri in range(n):
                if ri == best:
                    continue
                f = rows[ri].get(col)
                if f is None or f.is_zero():
                    continue
                tgt = rows[ri]
                for c, v in prow.items():
                    cur = tgt.get(c)
                    t = -(f * v) if cur is None else cur - f * v
                    if t.is_zero():
                        tgt.pop(c, None)
                    else:
                        tgt[c] = t
                vec[ri] = vec[ri] - f * vec[best]
                if field is Scalar and ri not in used:
                    rows[ri], vec[ri] = row_clear(rows[ri], vec[ri], field)
    for ri in range(n):
        if ri not in used and not vec[ri].is_zero():
            return None
    sol = {}
    for col, ri in pivot_of_col.items():
        if not vec[ri].is_zero():
            sol[col] = vec[ri]
    return sol


def boundary_matrix(degree, twist, box, field=Scalar, multidegree=None):
    """Normalised-boundary matrix on the box's degree-`degree` tuples.

    Returns (rows, cols, row_index): rows as dicts col -> scalar, cols
    the tuple list, row_index mapping image tuples to row numbers.  The
    row window is the computed union of all column-image supports.
    """
    cols = enumerate_tuples(box, degree, multidegree)
    row_index = {}
    rows = []
    for ci, ws in enumerate(cols):
        body = TensorElement(degree + 1, field)
        body._add_term(ws, field.one())
        img = normalize(boundary(Chain(degree, twist, body)))
        for t, v in img.body.terms.items():
            ri = row_index.get(t)
            if ri is None:
                ri = row_index[t] = len(rows)
                rows.append({})
            rows[ri][ci] = rows[ri].get(ci, field.zero()) + v
    for r in rows:
        for c in [c for c, v in r.items() if v.is_zero()]:
            del r[c]
    return rows, cols, row_index


def support_closure(rows, seed_rows):
    """Rows/columns reachable from the seed rows through shared support.

    Restricting a linear solve to the closure is lossless: any global
    solution restricts to one on the closure (columns outside it have
    images disjoint from every closure row), and unsolvability on the
    closure implies global unsolvability.
    """
    col_rows = {}
    for ri, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(ri)
    seen_rows = set(seed_rows)
    seen_cols = set()
    frontier = list(seen_rows)
    while frontier:
        new_cols = set()
        for ri in frontier:
            for c in rows[ri]:
                if c not in seen_cols:
                    seen_cols.add(c)
                    new_cols.add(c)
        frontier = []
        for c in new_cols:
            for ri in col_rows.get(c, ()):
                if ri not in seen_rows:
                    seen_rows.add(ri)
                    frontier.append(ri)
    return seen_rows, seen_cols


@dataclass
class SolveReport:
    status: str
    witness: object = None
    box: TruncationBox = None
    detail: dict = dc_field(default_factory=dict)

    @property
    def found(self):
        return self.status == "witness_found"


def solve_boundary(target, box, field=None, pivot_heuristic=True):
    """Find w inside the box with normalised boundary(w) = target.

    The found witness is re-verified by direct boundary evaluation; the
    negative verdict is box-relative evidence only.
    """
    field = field if field is not None else target.field
    if target.is_zero():
        zero = Chain(target.degree + 1, target.twist,
                     TensorElement(target.degree + 2, field))
        return SolveReport("witness_found", zero, box)
    mds = target.multidegrees()
    md = next(iter(mds)) if len(mds) == 1 else None
    rows, cols, row_index = boundary_matrix(
        target.degree + 1, target.twist, box, field, md)
    for t in target.body.terms:
        if t not in row_index:
            return SolveReport("no_witness_in_box", None, box,
                               {"reason": "target support outside image window"})
    rhs = [field.zero()] * len(rows)
    for t, v in target.body.terms.items():
        rhs[row_index[t]] = v
    keep_rows, _ = support_closure(rows, [row_index[t] for t in target.body.terms])
    rows = [rows[ri] for ri in range(len(rows)) if ri in keep_rows]
    rhs = [rhs[ri] for ri in range(len(rhs)) if ri in keep_rows]
    sol = solve_linear(rows, rhs, field, pivot_heuristic)
    if sol is None:
        return SolveReport("no_witness_in_box", None, box)
    body = TensorElement(target.degree + 2, field)
    for ci, val in sol.items():
        body._add_term(cols[ci], val)
    witness = Chain(target.degree + 1, target.twist, body)
    if not (normalize(boundary(witness)) - target).is_zero():
        return SolveReport("no_witness_in_box", None, box,
                           {"reason": "unverifiable witness"})
    return SolveReport("witness_found", witness, box)


def express_in_classes(target, classes, box, field=None):
    """Write target = sum c_k * classes[k] + boundary(w) inside the box.

    Returns (coeffs, witness) or None.  This is the homology-coordinate
    workhorse: since every listed class chain is multihomogeneous and
    the boundary preserves multidegree, restricting candidates to the
    target's multidegree slice is lossless.
    """
    field = field if field is not None else target.field
    deg, tw = target.degree, target.twist
    mds = set(target.multidegrees())
    relevant = []
    for z in classes:
        if z.degree != deg or z.twist != tw:
            raise ValueError("class chains must match target degree and twist")
        if not mds or (z.multidegrees() & mds) or not z.multidegrees():
            relevant.append(z)
    md = next(iter(mds)) if len(mds) == 1 else None
    rows, cols, row_index = boundary_matrix(deg + 1, tw, box, field, md)
    ncols = len(cols)
    extra_rows = {}

    def row_of(t):
        ri = row_index.get(t)
        if ri is not None:
            return ri
        if t not in extra_rows:
            extra_rows[t] = len(rows)
            rows.append({})
            rhs.append(field.zero())
        return extra_rows[t]

    rhs = [field.zero()] * len(rows)
    seeds = set()
    for zi, z in enumerate(relevant):
        for t, v in z.body.terms.items():
            ri = row_of(t)
            rows[ri][ncols + zi] = v
            seeds.add(ri)
    for t, v in target.body.terms.items():
        ri = row_of(t)
        rhs[ri] = v
        seeds.add(ri)
    keep_rows, _ = support_closure(rows, seeds)
    rows = [rows[ri] for ri in range(len(rows)) if ri in keep_rows]
    rhs = [rhs[ri] for ri in range(len(rhs)) if ri in keep_rows]
    sol = solve_linear(rows, rhs, field)
    if sol is None:
        return None
    coeffs = {}
    body = TensorElement(deg + 2, field)
    for ci, val in sol.items():
        if ci < ncols:
            body._add_term(cols[ci], val)
        else:
            coeffs[ci - ncols] = val
    witness = Chain(deg + 1, tw, body)
    combo = Chain(deg, tw, TensorElement(deg + 1, field))
    out_coeffs = []
    pos = 0
    for z in classes:
        if pos < len(relevant) and z is relevant[pos]:
            c = coeffs.get(pos, field.zero())
            out_coeffs.append(c)
            combo = combo + z.scale(c)
            pos += 1
        else:
            out_coeffs.append(field.zero())
    if not (normalize(boundary(witness)) + combo - target).is_zero():
        return None
    return out_coeffs, witness


def independent_mod_boundaries(cycles, box, field=None):
    """('independent', None) or ('dependency_witness', (coeffs, w)).

    Decides whether some nonzero combination of the cycles bounds
    inside the box; verdicts are box-relative evidence.
    """
    if not cycles:
        return ("independent", None)
    field = field if field is not None else cycles[0].field
    for zi in range(len(cycles)):
        others = cycles[:zi]
        res = express_in_classes(cycles[zi], others, box, field)
        if res is not None:
            coeffs, w = res
            full = [(-c) for c in coeffs[:zi]] + [field.one()] + [field.zero()] * (len(cycles) - zi - 1)
            return ("dependency_witness", (full, w))
    return ("independent", None)


def inner_witness(f, box, field=Scalar):
    """Find m in the box with f(x) = twist(x) m - m x on all generators.

    Certifies a degree-1 cochain as inner; the witness is re-verified
    on the four generators before reporting success.
    """
    tw = f.twist
    gens = "abcd"
    words = box.words()
    targets = {g: f(AlgebraElement.generator(g, field)) for g in gens}
    row_index = {}
    rows = []
    rhs = []

    def row_of(key):
        ri = row_index.get(key)
        if ri is None:
            ri = row_index[key] = len(rows)
            rows.append({})
            rhs.append(field.zero())
        return ri

    for ci, w in enumerate(words):
        m = AlgebraElement.from_word(w, field=field)
        for g in gens:
            x = AlgebraElement.generator(g, field)
            img = tw(x) * m - m * x
            for ww, v in img.terms.items():
                ri = row_of((g, ww))
                rows[ri][ci] = rows[ri].get(ci, field.zero()) + v
    for g in gens:
        for ww, v in targets[g].terms.items():
            rhs[row_of((g, ww))] = v
    sol = solve_linear(rows, rhs, field)
    if sol is None:
        return SolveReport("no_witness_in_box", None, box)
    m = AlgebraElement(field, {words[ci]: v for ci, v in sol.items()})
    for g in gens:
        x = AlgebraElement.generator(g, field)
        if not (tw(x) * m - m * x - targets[g]).is_zero():
            return SolveReport("no_witness_in_box", None, box,
                               {"reason": "unverified witness"})
    return SolveReport("witness_found", m, box)
