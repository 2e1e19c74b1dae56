"""Finite-dimensional graded algebras as structure constants.

An algebra is a basis b_0..b_{n-1} with integer degrees, sparse structure
constants c[i][j] (the product b_i * b_j), a unit vector and, when known, a
complete set of primitive orthogonal idempotents.  Quiver presentations are
compiled down to this form; everything downstream (modules, stable
categories, tilting) only sees structure constants.
"""

from random import Random

from sympy import GF as sympy_GF
from sympy import Poly, Rational, symbols

from .errors import (
    NonHomogeneousRelation,
    NonSplitSemisimpleQuotient,
    UnknownFamily,
    UnsupportedCharacteristic,
    VerificationFailed,
)
from .linalg import Echelon, span_basis, vec_add_scaled, vec_scale

EXCEEDS_BOUND = "exceeds bound"


class GradedAlgebra:
    """A finite-dimensional graded algebra given by structure constants.

    mult[i][j] is the sparse coefficient vector of b_i * b_j.  Construction
    validates associativity, the unit laws, multiplicativity of the grading
    and (when given) the idempotent axioms, all exactly and exhaustively.
    """

    def __init__(self, field, degrees, mult, unit, idempotents=None, labels=None,
                 generators=None, radical_hint=None):
        self.field = field
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        self.mult = mult
        self.unit = dict(unit)
        self.idempotents = [dict(e) for e in idempotents] if idempotents is not None else None
        self.labels = list(labels) if labels is not None else None
        self.generators = [dict(g) for g in generators] if generators is not None else None
        self.radical_hint = [dict(v) for v in radical_hint] if radical_hint is not None else None
        self._radical = None
        self._primitive = None
        self._opposite = None
        self._cache = {}
        self._validate()

    # -- basic structure -------------------------------------------------

    def basis_vec(self, i):
        return {i: self.field.one()}

    def product(self, v, w):
        f = self.field
        out = {}
        for i, ci in v.items():
            row = self.mult[i]
            for j, cj in w.items():
                cell = row[j]
                if cell:
                    out = vec_add_scaled(f, out, cell, f.mul(ci, cj))
        return out

    def component_indices(self, d):
        return [i for i, deg in enumerate(self.degrees) if deg == d]

    @property
    def degree_support(self):
        return sorted(set(self.degrees))

    def is_nonnegatively_graded(self):
        return all(d >= 0 for d in self.degrees)

    def is_trivially_graded(self):
        return all(d == 0 for d in self.degrees)

    def is_commutative(self):
        return all(self.mult[i][j] == self.mult[j][i]
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def label_of(self, i):
        return self.labels[i] if self.labels else f"b{i}"

    def __repr__(self):
        return f"GradedAlgebra(dim={self.dim}, field={self.field!r})"

    # -- validation --------------------------------------------------------

    def _validate(self):
        f = self.field
        n = self.dim
        if len(self.mult) != n or any(len(row) != n for row in self.mult):
            raise ValueError("structure constant table has wrong shape")
        if n == 0:
            if self.unit:
                raise ValueError("zero algebra cannot have a nonzero unit")
            return
        # grading: nonzero c[i][j][k] forces degree(k) = degree(i) + degree(j)
        for i in range(n):
            for j in range(n):
                for k, c in self.mult[i][j].items():
                    if f.is_zero(c):
                        raise ValueError("structure constants must omit zeros")
                    if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                        raise ValueError(
                            f"grading violated: b{i}*b{j} hits degree {self.degrees[k]}"
                        )
        # unit laws
        for k in range(n):
            e = self.basis_vec(k)
            if self.product(self.unit, e) != e or self.product(e, self.unit) != e:
                raise ValueError("unit laws fail")
        # associativity on every basis triple
        for i in range(n):
            for j in range(n):
                w = self.mult[i][j]
                for k in range(n):
                    lhs = {}
                    for m, c in w.items():
                        lhs = vec_add_scaled(f, lhs, self.mult[m][k], c)
                    rhs = {}
                    for m, c in self.mult[j][k].items():
                        rhs = vec_add_scaled(f, rhs, self.mult[i][m], c)
                    if lhs != rhs:
                        raise ValueError(f"associativity fails at triple ({i},{j},{k})")
        if self.idempotents is not None:
            self._validate_idempotents()

    def _validate_idempotents(self):
        f = self.field
        total = {}
        for r, e in enumerate(self.idempotents):
            for i in e:
                if self.degrees[i] != 0:
                    raise ValueError("idempotents must be concentrated in degree 0")
            if self.product(e, e) != e:
                raise ValueError(f"idempotent {r} is not idempotent")
            total = vec_add_scaled(f, total, e, f.one())
        for r, e in enumerate(self.idempotents):
            for s, e2 in enumerate(self.idempotents):
                if r != s and self.product(e, e2):
                    raise ValueError(f"idempotents {r},{s} are not orthogonal")
        if total != self.unit:
            raise ValueError("idempotents do not sum to the unit")


def same_algebra(a, b):
    return a is b or (
        a.field == b.field and a.degrees == b.degrees
        and a.unit == b.unit and a.mult == b.mult
    )


def zero_algebra(field):
    return GradedAlgebra(field, [], [], {})


# ---------------------------------------------------------------------------
# quiver presentations
# ---------------------------------------------------------------------------

class QuiverPresentation:
    """A quiver with homogeneous relations and a verified nilpotency bound.

    Arrows are (name, source, target, degree >= 0).  A relation is a list of
    (coefficient, word) terms where a word is a tuple of arrow names written
    right-to-left: ("b", "a") is the path "apply a, then b".  All terms of a
    relation must be composable words with a common source and target and a
    common degree.
    """

    def __init__(self, vertices, arrows, relations, nilpotency_bound):
        self.vertices = list(vertices)
        self.arrows = [tuple(a) for a in arrows]
        self.relations = [list(r) for r in relations]
        self.nilpotency_bound = int(nilpotency_bound)
        if self.nilpotency_bound < 1:
            raise ValueError("nilpotency_bound must be positive")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        for name, src, tgt, deg in self.arrows:
            if src not in vset or tgt not in vset:
                raise ValueError(f"arrow {name} uses unknown vertices")
            if deg < 0:
                raise ValueError(f"arrow {name} has negative degree")
        self._arrow_by_name = {a[0]: a for a in self.arrows}
        for rel in self.relations:
            self._check_relation(rel)

    def _word_data(self, word):
        """(source, target, degree) of a right-to-left word; raises if not composable."""
        if not word:
            raise NonHomogeneousRelation("empty word in relation")
        arrows = [self._arrow_by_name.get(n) for n in word]
        if any(a is None for a in arrows):
            raise ValueError(f"unknown arrow in word {word}")
        for late, early in zip(arrows, arrows[1:]):
            if late[1] != early[2]:
                raise NonHomogeneousRelation(f"word {word} is not composable")
        return arrows[-1][1], arrows[0][2], sum(a[3] for a in arrows)

    def _check_relation(self, rel):
        if not rel:
            raise NonHomogeneousRelation("empty relation")
        data = [self._word_data(tuple(word)) for _, word in rel]
        if len({d[0] for d in data}) > 1 or len({d[1] for d in data}) > 1:
            raise NonHomogeneousRelation("relation terms have differing endpoints")
        if len({d[2] for d in data}) > 1:
            raise NonHomogeneousRelation("relation terms have differing degrees")


def compile_quiver(pres, field):
    """Compile a quiver presentation to a structure-constant algebra.

    Paths of length < L (L = nilpotency_bound) modulo the relation ideal form
    the basis; the ideal is spanned by all left/right path multiples of the
    relations up to length L, reduced by exact elimination.  Afterwards every
    path of length exactly L must reduce to zero, otherwise the bound is too
    small and VerificationFailed is raised.  For relations whose terms all
    have the same path length this verification is exact; mixed-length
    relations are reduced in the length-truncated model, which can mask an
    undersized bound.
    """
    L = pres.nilpotency_bound
    arrows = pres.arrows
    arr_idx = {a[0]: i for i, a in enumerate(arrows)}
    by_source = {}
    for i, (name, src, tgt, deg) in enumerate(arrows):
        by_source.setdefault(src, []).append(i)

    # enumerate paths of length <= L; a path is (source_vertex, arrow index
    # tuple in application order)
    paths = [(v, ()) for v in pres.vertices]
    frontier = list(paths)
    for _ in range(L):
        nxt = []
        for src, word in frontier:
            end = arrows[word[-1]][2] if word else src
            for ai in by_source.get(end, []):
                nxt.append((src, word + (ai,)))
        paths.extend(nxt)
        frontier = nxt

    def path_len(p):
        return len(p[1])

    def path_target(p):
        return arrows[p[1][-1]][2] if p[1] else p[0]

    def path_degree(p):
        return sum(arrows[ai][3] for ai in p[1])

    # longer paths get smaller indices so elimination pivots prefer them and
    # the surviving basis stays on short paths
    order = sorted(paths, key=lambda p: (-path_len(p), p[0], p[1]))
    index = {p: i for i, p in enumerate(order)}

    by_target = {}
    by_source_map = {}
    for p in paths:
        by_target.setdefault(path_target(p), []).append(p)
        by_source_map.setdefault(p[0], []).append(p)

    ideal = Echelon(field)
    for rel in pres.relations:
        terms = []
        for coeff, word in rel:
            app = tuple(arr_idx[n] for n in reversed(tuple(word)))
            terms.append((field.coerce(coeff), app))
        src, tgt, _ = pres._word_data(tuple(rel[0][1]))
        min_len = min(len(app) for _, app in terms)
        for p in by_target.get(src, []):
            if path_len(p) + min_len > L:
                continue
            for q in by_source_map.get(tgt, []):
                if path_len(p) + min_len + path_len(q) > L:
                    continue
                vec = {}
                for coeff, app in terms:
                    word = p[1] + app + q[1]
                    if len(word) > L:
                        continue  # truncated away; see docstring
                    vec = vec_add_scaled(field, vec, {index[(p[0], word)]: field.one()}, coeff)
                if vec:
                    ideal.insert(vec)

    # verification: every path of length exactly L lies in the ideal span
    for p in paths:
        if path_len(p) == L and ideal.reduce({index[p]: field.one()}):
            raise VerificationFailed(
                f"path of length {L} survives reduction; nilpotency_bound too small"
            )

    pivots = set(ideal.rows)
    basis_paths = [p for p in order if path_len(p) < L and index[p] not in pivots]
    basis_paths.sort(key=lambda p: (path_len(p), p[0], p[1]))
    loc = {index[p]: i for i, p in enumerate(basis_paths)}

    def reduce_to_coords(vec):
        out = {}
        for gi, c in ideal.reduce(vec).items():
            out[loc[gi]] = c
        return out

    def class_of_path(p):
        if path_len(p) >= L:
            return {}
        return reduce_to_coords({index[p]: field.one()})

    n = len(basis_paths)
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for i, pi in enumerate(basis_paths):
        for j, pj in enumerate(basis_paths):
            # b_i * b_j is "pj then pi": concat pj's word with pi's word
            if path_target(pj) != (pi[0]):
                continue
            word = pj[1] + pi[1]
            if len(word) >= L + 1:
                continue
            key = (pj[0], word)
            if len(word) == L:
                mult[i][j] = {}
            else:
                mult[i][j] = reduce_to_coords({index[key]: field.one()})

    degrees = [path_degree(p) for p in basis_paths]

    def fmt(p):
        if not p[1]:
            return f"e_{p[0]}"
        return "*".join(arrows[ai][0] for ai in reversed(p[1]))

    labels = [fmt(p) for p in basis_paths]
    trivial = {p[0]: i for i, p in enumerate(basis_paths) if not p[1]}
    idempotents = [{trivial[v]: field.one()} for v in pres.vertices]
    unit = {}
    for e in idempotents:
        unit = vec_add_scaled(field, unit, e, field.one())

    gens = [dict(e) for e in idempotents]
    for ai, (name, src, tgt, deg) in enumerate(arrows):
        gens.append(reduce_to_coords({index[(src, (ai,))]: field.one()}))

    arrow_span = []
    for p in basis_paths:
        if path_len(p) >= 1:
            arrow_span.append(class_of_path(p))
    # classes of non-basis positive-length paths are combinations of these,
    # so the span above is the whole arrow ideal
    radical_hint = span_basis(field, arrow_span)

    return GradedAlgebra(field, degrees, mult, unit, idempotents=idempotents,
                         labels=labels, generators=gens, radical_hint=radical_hint)


# ---------------------------------------------------------------------------
# builtin families
# ---------------------------------------------------------------------------

def builtin(family, parameter, field):
    """Compiled algebra for one of the builtin families, idempotents included.

    Families: truncated_polynomial (k[x]/x^N, x in degree 1), preprojective_A
    (type A preprojective algebra, doubled arrows in degree 1) and exterior
    (exterior algebra on n degree-1 generators).
    """
    n = int(parameter)
    if n < 1:
        raise ValueError("parameter must be >= 1")
    if family == "truncated_polynomial":
        pres = QuiverPresentation(
            ["v"], [("x", "v", "v", 1)], [[(1, ("x",) * n)]], n if n > 1 else 1
        )
        return compile_quiver(pres, field)
    if family == "exterior":
        arrows = [(f"x{i}", "v", "v", 1) for i in range(1, n + 1)]
        rels = [[(1, (f"x{i}", f"x{i}"))] for i in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                rels.append([(1, (f"x{i}", f"x{j}")), (1, (f"x{j}", f"x{i}"))])
        pres = QuiverPresentation(["v"], arrows, rels, n + 1)
        return compile_quiver(pres, field)
    if family == "preprojective_A":
        vertices = [str(i) for i in range(1, n + 1)]
        arrows = []
        for i in range(1, n):
            arrows.append((f"a{i}", str(i), str(i + 1), 0))
            arrows.append((f"b{i}", str(i + 1), str(i), 1))
        rels = []
        if n >= 2:
            rels.append([(1, ("b1", "a1"))])
            rels.append([(1, (f"a{n-1}", f"b{n-1}"))])
        for i in range(1, n - 1):
            rels.append([(1, (f"b{i+1}", f"a{i+1}")), (-1, (f"a{i}", f"b{i}"))])
        pres = QuiverPresentation(vertices, arrows, rels, 2 * n if n >= 2 else 1)
        return compile_quiver(pres, field)
    raise UnknownFamily(f"unknown builtin family {family!r}")


def sup_degree(a):
    """Largest degree with a nonzero component."""
    if a.dim == 0:
        raise ValueError("sup_degree of the zero algebra")
    return max(a.degrees)


# ---------------------------------------------------------------------------
# radical
# ---------------------------------------------------------------------------

class RadicalData:
    """Radical basis, dims of its nonzero powers, and the nilpotency index."""

    def __init__(self, basis, series_dims, nilpotency):
        self.basis = basis
        self.series_dims = series_dims
        self.nilpotency = nilpotency


def _trace_form_radical(a):
    f = a.field
    traces = [f.zero()] * a.dim
    for m in range(a.dim):
        t = f.zero()
        for j in range(a.dim):
            c = a.mult[m][j].get(j)
            if c is not None:
                t = f.add(t, c)
        traces[m] = t
    rows = []
    for i in range(a.dim):
        row = {}
        for j in range(a.dim):
            s = f.zero()
            for m, c in a.mult[i][j].items():
                s = f.add(s, f.mul(c, traces[m]))
            if not f.is_zero(s):
                row[j] = s
        rows.append(row)
    from .linalg import sparse_kernel

    return span_basis(f, sparse_kernel(f, rows, a.dim))


def jacobson_radical(a):
    """Radical basis plus power series dims and nilpotency.

    Uses the supplied arrow-ideal span for quiver-compiled algebras and the
    trace form kernel otherwise; the latter is valid in characteristic 0 or
    when p exceeds the algebra dimension.
    """
    if a._radical is not None:
        return a._radical
    f = a.field
    if a.dim == 0:
        a._radical = RadicalData([], [], 0)
        return a._radical
    char_ok = f.char == 0 or f.char > a.dim
    if a.radical_hint is not None:
        basis = span_basis(f, a.radical_hint)
        if char_ok:
            trace_basis = _trace_form_radical(a)
            if trace_basis != basis:
                raise VerificationFailed("arrow-ideal radical disagrees with trace form")
    elif char_ok:
        basis = _trace_form_radical(a)
    else:
        raise UnsupportedCharacteristic(
            f"characteristic {f.char} <= dim {a.dim} and no quiver origin"
        )
    # the radical must be a two-sided ideal
    ech = Echelon(f)
    ech.extend(basis)
    for i in range(a.dim):
        e = a.basis_vec(i)
        for r in basis:
            if not ech.contains(a.product(e, r)) or not ech.contains(a.product(r, e)):
                raise VerificationFailed("radical candidate is not an ideal")
    series = []
    power = basis
    while power:
        series.append(len(power))
        if len(series) > a.dim:
            raise VerificationFailed("radical is not nilpotent")
        nxt = Echelon(f)
        for u in power:
            for r in basis:
                nxt.insert(a.product(u, r))
        power = nxt.basis()
    if series != sorted(series, reverse=True) or len(set(series)) != len(series):
        raise VerificationFailed("radical series dims are not strictly decreasing")
    a._radical = RadicalData(basis, series, len(series) + 1 if series else 1)
    return a._radical


# ---------------------------------------------------------------------------
# quotients, subalgebras, generators, center
# ---------------------------------------------------------------------------

class QuotientAlgebra:
    """A/I for a homogeneous ideal span, with projection and a linear section."""

    def __init__(self, parent, ideal_vectors):
        f = parent.field
        self.parent = parent
        self.ech = Echelon(f)
        self.ech.extend(ideal_vectors)
        pivots = set(self.ech.rows)
        self.kept = [i for i in range(parent.dim) if i not in pivots]
        self.pos = {g: i for i, g in enumerate(self.kept)}
        degrees = [parent.degrees[g] for g in self.kept]
        n = len(self.kept)
        mult = [[None] * n for _ in range(n)]
        for i, gi in enumerate(self.kept):
            for j, gj in enumerate(self.kept):
                mult[i][j] = self.project(parent.product(parent.basis_vec(gi),
                                                          parent.basis_vec(gj)))
        unit = self.project(parent.unit)
        labels = [parent.label_of(g) for g in self.kept] if parent.labels else None
        self.algebra = GradedAlgebra(f, degrees, mult, unit, labels=labels)

    def project(self, vec):
        res = self.ech.reduce(vec)
        return {self.pos[g]: c for g, c in res.items()}

    def lift(self, qvec):
        return {self.kept[i]: c for i, c in qvec.items()}


class Subalgebra:
    """The span of given vectors as an algebra in its own right.

    The span must be closed under multiplication and contain the given unit.
    Degrees are inherited; each basis vector must be homogeneous.
    """

    def __init__(self, parent, vectors, unit_vec):
        f = parent.field
        self.parent = parent
        self.ech = Echelon(f, tagged=False)
        for v in vectors:
            self.ech.insert(v)
        basis = self.ech.basis()
        self.basis_vectors = basis
        self.coords = Echelon(f, tagged=True)
        for b in basis:
            self.coords.insert(b)
        degrees = []
        for b in basis:
            degs = {parent.degrees[i] for i in b}
            if len(degs) != 1:
                raise ValueError("subalgebra basis vector is not homogeneous")
            degrees.append(degs.pop())
        n = len(basis)
        mult = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                prod = parent.product(basis[i], basis[j])
                coeffs = self.coords.express(prod)
                if coeffs is None:
                    raise ValueError("span is not closed under multiplication")
                mult[i][j] = coeffs
        unit = self.coords.express(unit_vec)
        if unit is None:
            raise ValueError("unit does not lie in the span")
        self.algebra = GradedAlgebra(f, degrees, mult, unit)

    def to_parent(self, vec):
        f = self.parent.field
        out = {}
        for i, c in vec.items():
            out = vec_add_scaled(f, out, self.basis_vectors[i], c)
        return out

    def from_parent(self, vec):
        return self.coords.express(vec)


def generating_vectors(a):
    """A small unital generating set (cached); prefers declared generators."""
    if "gens" in a._cache:
        return a._cache["gens"]
    if a.generators is not None:
        a._cache["gens"] = a.generators
        return a.generators
    f = a.field
    ech = Echelon(f)
    ech.insert(a.unit)
    gens = []

    def close():
        changed = True
        while changed:
            changed = False
            rows = ech.basis()
            for x in rows:
                for y in rows:
                    if ech.insert(a.product(x, y)):
                        changed = True

    order = sorted(range(a.dim), key=lambda i: (a.degrees[i], i))
    for i in order:
        v = a.basis_vec(i)
        if not ech.contains(v):
            gens.append(v)
            ech.insert(v)
            close()
        if ech.dim == a.dim:
            break
    a._cache["gens"] = gens
    return gens


def center_basis(a):
    """Basis of the center, via commutation with a generating set."""
    if "center" in a._cache:
        return a._cache["center"]
    f = a.field
    rows = {}
    for g in generating_vectors(a):
        diffs = []
        for m in range(a.dim):
            bm = a.basis_vec(m)
            d = vec_add_scaled(f, a.product(bm, g), a.product(g, bm), f.neg(f.one()))
            diffs.append(d)
        for k in set().union(*[set(d) for d in diffs]) if diffs else set():
            row = {}
            for m, d in enumerate(diffs):
                c = d.get(k)
                if c is not None:
                    row[m] = c
            rows[(id(g), k)] = row
    from .linalg import sparse_kernel

    basis = span_basis(f, sparse_kernel(f, list(rows.values()), a.dim))
    a._cache["center"] = basis
    return basis


# ---------------------------------------------------------------------------
# minimal polynomials and primitive idempotents
# ---------------------------------------------------------------------------

def minimal_polynomial(a, z):
    """Monic minimal polynomial of z in a, low-to-high coefficient list."""
    return minimal_polynomial_in_span(a, z, a.unit)


def _poly_to_sympy(field, coeffs):
    x = symbols("x")
    if field.char == 0:
        data = [Rational(c.numerator, c.denominator) for c in reversed(coeffs)]
        return Poly(data, x, domain="QQ"), x
    data = [int(c) for c in reversed(coeffs)]
    return Poly(data, x, domain=sympy_GF(field.char)), x


def factor_linear_roots(field, coeffs):
    """Distinct roots with multiplicities, plus a flag for nonlinear factors."""
    roots = []
    nonlinear = False
    for cs, mult in _sympy_factors(field, coeffs):
        if len(cs) == 2:
            roots.append((field.div(field.neg(cs[0]), cs[1]), mult))
        elif len(cs) > 2:
            nonlinear = True
    return roots, nonlinear


def _poly_eval(a, coeffs, z, unit):
    """Evaluate a polynomial at z inside a, with the given unit as z^0."""
    f = a.field
    out = {}
    power = dict(unit)
    for c in coeffs:
        if not f.is_zero(c):
            out = vec_add_scaled(f, out, power, c)
        power = a.product(power, z)
    return out


def _poly_mul(field, p, q):
    out = [field.zero()] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    while len(out) > 1 and field.is_zero(out[-1]):
        out.pop()
    return out


def _poly_divmod(field, p, q):
    p = list(p)
    dq = len(q) - 1
    inv = field.inv(q[-1])
    quo = [field.zero()] * max(len(p) - dq, 1)
    while len(p) - 1 >= dq and any(not field.is_zero(c) for c in p):
        shift = len(p) - 1 - dq
        c = field.mul(p[-1], inv)
        quo[shift] = c
        for i, qc in enumerate(q):
            p[shift + i] = field.sub(p[shift + i], field.mul(c, qc))
        while len(p) > 1 and field.is_zero(p[-1]):
            p.pop()
    while len(p) > 1 and field.is_zero(p[-1]):
        p.pop()
    return quo, p


def _poly_xgcd(field, p, q):
    """(g, s, t) with s p + t q = g, g monic."""
    r0, r1 = list(p), list(q)
    s0, s1 = [field.one()], [field.zero()]
    t0, t1 = [field.zero()], [field.one()]
    while any(not field.is_zero(c) for c in r1):
        quo, rem = _poly_divmod(field, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(field, s0, _poly_mul(field, quo, s1))
        t0, t1 = t1, _poly_sub(field, t0, _poly_mul(field, quo, t1))
    lead = r0[-1]
    inv = field.inv(lead)
    scale = lambda poly: [field.mul(c, inv) for c in poly]
    return scale(r0), scale(s0), scale(t0)


def _poly_sub(field, p, q):
    n = max(len(p), len(q))
    out = [field.zero()] * n
    for i, c in enumerate(p):
        out[i] = c
    for i, c in enumerate(q):
        out[i] = field.sub(out[i], c)
    while len(out) > 1 and field.is_zero(out[-1]):
        out.pop()
    return out


def _sympy_factors(field, coeffs):
    poly, _ = _poly_to_sympy(field, coeffs)
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        cs = list(reversed(fac.all_coeffs()))
        if field.char == 0:
            from fractions import Fraction

            cs = [field.coerce(Fraction(str(c))) for c in cs]
        else:
            cs = [field.from_int(int(c)) for c in cs]
        out.append((cs, mult))
    return out


def _random_element(field, basis, rng):
    f = field
    out = {}
    for b in basis:
        c = f.from_int(rng.randrange(0, 7))
        out = vec_add_scaled(f, out, b, c)
    return out


def central_primitive_idempotents(s_alg, seed=0):
    """Central primitive idempotents of a semisimple algebra over its field.

    Factors minimal polynomials of deterministic pseudo-random central
    elements and splits by Lagrange interpolation, recursing on the pieces.
    A nonlinear irreducible factor proves the center is not split and raises
    NonSplitSemisimpleQuotient.
    """
    f = s_alg.field
    rng = Random(seed)
    if s_alg.dim == 0:
        return []
    center = center_basis(s_alg)

    def split_commutative(unit, basis):
        if len(basis) == 1:
            return [dict(unit)]
        candidates = list(basis) + [_random_element(f, basis, rng) for _ in range(12)]
        for z in candidates:
            z = s_alg.product(s_alg.product(unit, z), unit)
            mp = minimal_polynomial_in_span(s_alg, z, unit)
            roots, nonlinear = factor_linear_roots(f, mp)
            if nonlinear:
                raise NonSplitSemisimpleQuotient(
                    "central minimal polynomial has a nonlinear factor"
                )
            if any(m > 1 for _, m in roots):
                raise NonSplitSemisimpleQuotient(
                    "central minimal polynomial is not squarefree"
                )
            if len(roots) <= 1:
                continue
            pieces = []
            for lam, _ in roots:
                eps = dict(unit)
                for mu, _ in roots:
                    if mu == lam:
                        continue
                    shifted = vec_add_scaled(f, s_alg.product(eps, z), eps, f.neg(mu))
                    eps = vec_scale(f, shifted, f.inv(f.sub(lam, mu)))
                new_basis = span_basis(f, [s_alg.product(eps, b) for b in basis])
                pieces.extend(split_commutative(eps, new_basis))
            return pieces
        raise NonSplitSemisimpleQuotient("no splitting central element found")

    return split_commutative(s_alg.unit, center)


def semisimple_block_dims(a, seed=0):
    """Sorted dimensions of the central blocks of A/rad."""
    if a.dim == 0:
        return []
    f = a.field
    quo = QuotientAlgebra(a, jacobson_radical(a).basis)
    s_alg = quo.algebra
    dims = []
    for eps in central_primitive_idempotents(s_alg, seed):
        block = span_basis(
            f,
            [s_alg.product(eps, s_alg.product(s_alg.basis_vec(i), eps))
             for i in range(s_alg.dim)],
        )
        dims.append(len(block))
    return sorted(dims)


def _split_semisimple(s_alg, seed):
    """Complete orthogonal primitive idempotents of a split semisimple algebra."""
    central = central_primitive_idempotents(s_alg, seed)
    rng = Random(seed + 1)
    out = []
    for eps in central:
        out.extend(_split_block(s_alg, eps, rng))
    return out


def minimal_polynomial_in_span(a, z, unit):
    """Minimal polynomial of z with the given idempotent as z^0."""
    f = a.field
    ech = Echelon(f, tagged=True)
    powers = [dict(unit)]
    while True:
        if not ech.insert(powers[-1]):
            coeffs = ech.express(powers[-1]) or {}
            deg = len(powers) - 1
            out = [f.zero()] * (deg + 1)
            for i, c in coeffs.items():
                out[i] = f.neg(c)
            out[deg] = f.one()
            return out
        powers.append(a.product(powers[-1], z))


def _split_block(s_alg, unit, rng, depth=0):
    """Primitive idempotents below a central idempotent of a simple block."""
    f = s_alg.field
    corner_vecs = span_basis(
        f,
        [
            s_alg.product(unit, s_alg.product(s_alg.basis_vec(i), unit))
            for i in range(s_alg.dim)
        ],
    )
    if len(corner_vecs) == 1:
        return [dict(unit)]
    if depth > s_alg.dim:
        raise NonSplitSemisimpleQuotient("block splitting recursion exhausted")
    candidates = list(corner_vecs) + [_random_element(f, corner_vecs, rng) for _ in range(24)]
    for z in candidates:
        mp = minimal_polynomial_in_span(s_alg, z, unit)
        factors = _sympy_factors(f, mp)
        factors = [(c, m) for c, m in factors if len(c) > 1]
        if len(factors) >= 2:
            fpow = factors[0][0]
            for _ in range(factors[0][1] - 1):
                fpow = _poly_mul(f, fpow, factors[0][0])
            rest = [f.one()]
            rest_list = []
            for cs, m in factors[1:]:
                for _ in range(m):
                    rest = _poly_mul(f, rest, cs)
            g, s, t = _poly_xgcd(f, fpow, rest)
            # t * rest = 1 mod fpow: e = (t*rest)(z) is the idempotent
            # projecting onto the fpow-kernel part
            e = _poly_eval(s_alg, _poly_mul(f, t, rest), z, unit)
            if e and e != unit and s_alg.product(e, e) == e:
                comp = vec_add_scaled(f, dict(unit), e, f.neg(f.one()))
                return _split_block(s_alg, e, rng, depth + 1) + _split_block(
                    s_alg, comp, rng, depth + 1
                )
        elif len(factors) == 1 and factors[0][1] >= 2:
            cs, m = factors[0]
            fz = _poly_eval(s_alg, cs, z, unit)
            w = dict(unit)
            for _ in range(m - 1):
                w = s_alg.product(w, fz)
            if not w:
                continue
            e = _idempotent_from_left_ideal(s_alg, unit, w)
            if e is not None and e and e != unit:
                comp = vec_add_scaled(f, dict(unit), e, f.neg(f.one()))
                return _split_block(s_alg, e, rng, depth + 1) + _split_block(
                    s_alg, comp, rng, depth + 1
                )
    raise NonSplitSemisimpleQuotient("cannot split a matrix block over this field")


def _idempotent_from_left_ideal(s_alg, unit, w):
    """Idempotent generator of the left ideal (corner)·w, if solvable.

    In a semisimple corner every left ideal is generated by an idempotent e,
    found by solving x*e = x for all x in the ideal with e in the ideal.
    """
    f = s_alg.field
    ideal = span_basis(
        f,
        [s_alg.product(s_alg.product(unit, s_alg.basis_vec(i)), w) for i in range(s_alg.dim)]
        + [w],
    )
    if not ideal:
        return None

    def key(r, k):
        return r * s_alg.dim + k

    col_vecs = []
    for gen in ideal:
        col = {}
        for r_idx, x in enumerate(ideal):
            for k, c in s_alg.product(x, gen).items():
                col[key(r_idx, k)] = c
        col_vecs.append(col)
    target = {}
    for r_idx, x in enumerate(ideal):
        for k, c in x.items():
            target[key(r_idx, k)] = c
    ech = Echelon(f, tagged=True)
    for col in col_vecs:
        ech.insert(col)
    coeffs = ech.express(target)
    if coeffs is None:
        return None
    e = {}
    for i, c in coeffs.items():
        e = vec_add_scaled(f, e, ideal[i], c)
    if s_alg.product(e, e) != e:
        return None
    return e


def primitive_idempotents(a, seed=0):
    """Complete orthogonal primitive idempotent set (declared or computed).

    For algebras without declared idempotents: decompose A/rad, lift through
    the radical by the Newton iteration e <- 3e^2 - 2e^3, keeping
    orthogonality by working below the complement of what is already lifted.
    """
    if a.idempotents is not None:
        return a.idempotents
    if a._primitive is not None:
        return a._primitive
    f = a.field
    if a.dim == 0:
        a._primitive = []
        return a._primitive
    if not a.is_trivially_graded():
        part = degree_zero_part(a)
        prim0 = primitive_idempotents(part.algebra, seed=seed)
        a._primitive = [part.embed(e) for e in prim0]
        return a._primitive
    rad = jacobson_radical(a)
    quo = QuotientAlgebra(a, rad.basis)
    prim_s = _split_semisimple(quo.algebra, seed)
    nilp = rad.nilpotency

    lifted = []
    remaining_unit = dict(a.unit)
    for ebar in prim_s:
        x = quo.lift(ebar)
        x = a.product(a.product(remaining_unit, x), remaining_unit)
        e = _newton_lift(a, x, nilp)
        lifted.append(e)
        remaining_unit = vec_add_scaled(f, remaining_unit, e, f.neg(f.one()))
    if remaining_unit:
        raise NonSplitSemisimpleQuotient("lifted idempotents do not sum to the unit")
    # primitivity: e (A/rad) e must be one-dimensional
    for e in lifted:
        ebar = quo.project(e)
        corner = span_basis(
            f,
            [
                quo.algebra.product(ebar, quo.algebra.product(quo.algebra.basis_vec(i), ebar))
                for i in range(quo.algebra.dim)
            ],
        )
        if len(corner) != 1:
            raise NonSplitSemisimpleQuotient("lifted idempotent is not primitive")
    a._primitive = lifted
    return a._primitive


def _newton_lift(a, x, nilpotency):
    f = a.field
    e = x
    for _ in range(max(4, nilpotency.bit_length() + 2)):
        sq = a.product(e, e)
        if sq == e:
            return e
        cube = a.product(sq, e)
        e = vec_add_scaled(f, vec_scale(f, sq, f.from_int(3)), cube, f.from_int(-2))
    if a.product(e, e) != e:
        raise NonSplitSemisimpleQuotient("idempotent lifting did not converge")
    return e


# ---------------------------------------------------------------------------
# degree-zero part, opposite, global dimension
# ---------------------------------------------------------------------------

class DegreeZeroPart:
    """The degree-0 subalgebra, with index maps into the parent."""

    def __init__(self, parent):
        f = parent.field
        self.parent = parent
        self.kept = parent.component_indices(0)
        pos = {g: i for i, g in enumerate(self.kept)}
        n = len(self.kept)
        mult = [[None] * n for _ in range(n)]
        for i, gi in enumerate(self.kept):
            for j, gj in enumerate(self.kept):
                prod = parent.product(parent.basis_vec(gi), parent.basis_vec(gj))
                mult[i][j] = {pos[k]: c for k, c in prod.items()}
        restrict = lambda vec: {pos[k]: c for k, c in vec.items()}
        unit = restrict(parent.unit)
        idem = None
        if parent.idempotents is not None:
            idem = [restrict(e) for e in parent.idempotents]
        hint = None
        if parent.radical_hint is not None:
            hint = [restrict(v) for v in parent.radical_hint
                    if all(parent.degrees[k] == 0 for k in v)]
        labels = [parent.label_of(g) for g in self.kept] if parent.labels else None
        self.algebra = GradedAlgebra(f, [0] * n, mult, unit, idempotents=idem,
                                     labels=labels, radical_hint=hint)

    def embed(self, vec):
        return {self.kept[i]: c for i, c in vec.items()}

    def restrict(self, vec):
        pos = {g: i for i, g in enumerate(self.kept)}
        return {pos[k]: c for k, c in vec.items()}


def degree_zero_part(a):
    if "deg0" not in a._cache:
        a._cache["deg0"] = DegreeZeroPart(a)
    return a._cache["deg0"]


def opposite(a):
    """The opposite algebra (multiplication reversed), memoized both ways."""
    if a._opposite is not None:
        return a._opposite
    mult = [[a.mult[j][i] for j in range(a.dim)] for i in range(a.dim)]
    rad = a._radical.basis if a._radical is not None else a.radical_hint
    op = GradedAlgebra(a.field, a.degrees, mult, a.unit, idempotents=a.idempotents,
                       labels=a.labels, generators=a.generators, radical_hint=rad)
    a._opposite = op
    op._opposite = a
    return op


def global_dimension_bounded(a, bound):
    """Max projective dimension of the simple modules, truncated at bound.

    Returns an int, or the string sentinel EXCEEDS_BOUND when some simple has
    no projective resolution of length <= bound.
    """
    from . import modules as gm

    if a.dim == 0:
        return 0
    count = len(primitive_idempotents(a))
    worst = 0
    for i in range(1, count + 1):
        m = gm.simple(a, i)
        pd = None
        for step in range(bound + 1):
            if gm.is_projective(m):
                pd = step
                break
            m = gm.syzygy_of(m)
        if pd is None:
            return EXCEEDS_BOUND
        worst = max(worst, pd)
    return worst
