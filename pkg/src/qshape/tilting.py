"""The canonical tilting module of the stable graded module category, its
stable endomorphism algebra, per-family reference algebras and
isomorphism-evidence fingerprints.

For a non-negatively graded self-injective algebra with a degree-0 part of
finite global dimension, the tilting module is the direct sum of the
degree-<=0 truncations of the shifted regular modules, one summand per
positive degree below the top.  Fingerprint agreement of the computed
endomorphism algebra with a reference is evidence for an isomorphism, not a
proof: only invariants are compared.
"""

from itertools import permutations

from .algebra import (
    GradedAlgebra,
    QuiverPresentation,
    center_basis,
    compile_quiver,
    degree_zero_part,
    global_dimension_bounded,
    jacobson_radical,
    primitive_idempotents,
    semisimple_block_dims,
    sup_degree,
    zero_algebra,
    EXCEEDS_BOUND,
)
from .errors import HypothesisViolated, NonSplitSemisimpleQuotient
from .linalg import sparse_matmul, span_basis
from .modules import (
    GradedMap,
    QuotientModule,
    direct_sum,
    hom_graded,
    identity_map,
    is_self_injective,
    projective,
    regular,
    shift,
    truncate_le,
    zero_module,
)
from .stable import StableEnd


DEFAULT_GLDIM_BOUND = 10


def check_hypotheses(a, gldim_bound=DEFAULT_GLDIM_BOUND):
    """Verdicts for the three standing hypotheses on the input algebra."""
    nonneg = a.is_nonnegatively_graded()
    selfinj = is_self_injective(a) if nonneg else False
    gldim = None
    if a.dim:
        gldim = global_dimension_bounded(degree_zero_part(a).algebra, gldim_bound)
    else:
        gldim = 0
    return {
        "non_negative_grading": nonneg,
        "self_injective": selfinj,
        "degree_zero_global_dimension": gldim,
        "finite_global_dimension": gldim != EXCEEDS_BOUND,
    }


def require_hypotheses(a, gldim_bound=DEFAULT_GLDIM_BOUND):
    verdicts = check_hypotheses(a, gldim_bound)
    for key in ("non_negative_grading", "self_injective", "finite_global_dimension"):
        if not verdicts[key]:
            raise HypothesisViolated(key)
    return verdicts


class TiltingData:
    """Summands, their direct sum, and the block projectors inside End."""

    def __init__(self, algebra, summands, module, inclusions, projections):
        self.algebra = algebra
        self.summands = summands
        self.module = module
        self.inclusions = inclusions
        self.projections = projections
        self.ell = len(summands)

    def block_projectors(self):
        """Endomorphisms of the sum projecting onto each summand."""
        f = self.algebra.field
        out = []
        for inc, prj in zip(self.inclusions, self.projections):
            rows = sparse_matmul(f, prj.matrix, inc.matrix)
            out.append(GradedMap(self.module, self.module, rows, check=False))
        return out


def tilting_module(a, gldim_bound=DEFAULT_GLDIM_BOUND):
    """Direct sum of the degree-<=0 truncations of the first ell shifts.

    All three standing hypotheses are verified first; violations raise
    HypothesisViolated.  A top degree of zero yields the zero module.
    """
    require_hypotheses(a, gldim_bound)
    ell = sup_degree(a) if a.dim else 0
    summands = []
    for i in range(ell):
        t, _ = truncate_le(shift(regular(a), i), 0)
        summands.append(t)
    if not summands:
        z = zero_module(a)
        return TiltingData(a, [], z, [], [])
    module, incs, prjs = direct_sum(summands)
    return TiltingData(a, summands, module, incs, prjs)


class GammaData:
    """Stable endomorphism algebra of the tilting module, with block data."""

    def __init__(self, a, gldim_bound=DEFAULT_GLDIM_BOUND):
        f = a.field
        self.tilting = tilting_module(a, gldim_bound)
        self.stable_end = StableEnd(self.tilting.module)
        self.algebra = self.stable_end.algebra
        self.block_idempotents = [
            self.stable_end.class_of_matrix(p.matrix)
            for p in self.tilting.block_projectors()
        ]
        self._validate_blocks()

    def _validate_blocks(self):
        g = self.algebra
        f = g.field
        from .linalg import vec_add_scaled

        total = {}
        for i, e in enumerate(self.block_idempotents):
            if g.product(e, e) != e:
                raise ValueError("block class is not idempotent")
            total = vec_add_scaled(f, total, e, f.one())
            for j, e2 in enumerate(self.block_idempotents):
                if i != j and g.product(e, e2):
                    raise ValueError("block classes are not orthogonal")
        if total != g.unit:
            raise ValueError("block classes do not sum to the unit")


def tilting_endomorphism_algebra(a, gldim_bound=DEFAULT_GLDIM_BOUND):
    """GammaData for the input algebra (hypotheses verified)."""
    return GammaData(a, gldim_bound)


# ---------------------------------------------------------------------------
# reference algebras
# ---------------------------------------------------------------------------

def reference_upper_triangular(m, field):
    """Upper triangular m x m matrices, as the linear A_m path algebra."""
    if m < 0:
        raise ValueError("size must be >= 0")
    if m == 0:
        return zero_algebra(field)
    vertices = [str(i) for i in range(1, m + 1)]
    arrows = [(f"a{i}", str(i), str(i + 1), 0) for i in range(1, m)]
    pres = QuiverPresentation(vertices, arrows, [], max(m, 1))
    return compile_quiver(pres, field)


def _interval_modules(a, m):
    """All indecomposables of the linear A_m path algebra, as quotients of
    the projectives: for c <= i, kill the source-j slices with j < c (the
    right action of e_j picks out the paths starting at vertex j)."""
    out = []
    for i in range(1, m + 1):
        p = projective(a, i)
        for c in range(1, i + 1):
            kill = []
            for j in range(1, c):
                for row in p.action_of(a.idempotents[j - 1]):
                    if row:
                        kill.append(row)
            out.append(QuotientModule(p, kill).module)
    return out


def end_algebra(m):
    """Plain (non-stable) endomorphism algebra of a module."""
    f = m.algebra.field
    if m.is_zero():
        return zero_algebra(f)
    hom = hom_graded(m, m)
    dim = hom.dim
    mult = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            composed = sparse_matmul(f, hom.basis[i].matrix, hom.basis[j].matrix)
            mult[i][j] = hom.express(composed)
    unit = hom.express(identity_map(m).matrix)
    return GradedAlgebra(f, [0] * dim, mult, unit)


def reference_auslander_linear(m, field):
    """Endomorphism algebra of the sum of all interval modules over linear A_m."""
    if m < 1:
        raise ValueError("parameter must be >= 1")
    a = reference_upper_triangular(m, field)
    intervals = _interval_modules(a, m)
    total, _, _ = direct_sum(intervals)
    return end_algebra(total)


def reference_subcategory_algebra(a):
    """Convolution algebra on objects 0..ell-1 with morphisms the graded slices.

    Basis elements are triples (i, j, b) with 0 <= i <= j < ell and b a basis
    index of the degree-(j-i) component; products multiply matrix-style
    through the algebra.
    """
    f = a.field
    if not a.is_nonnegatively_graded():
        raise HypothesisViolated("non_negative_grading")
    ell = sup_degree(a)
    if ell < 1:
        raise ValueError("needs top degree >= 1")
    basis = []
    for i in range(ell):
        for j in range(i, ell):
            for b in a.component_indices(j - i):
                basis.append((i, j, b))
    index = {t: k for k, t in enumerate(basis)}
    n = len(basis)
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for k1, (i, j, b) in enumerate(basis):
        for k2, (i2, j2, b2) in enumerate(basis):
            if j != i2:
                continue
            prod = a.mult[b][b2]
            mult[k1][k2] = {index[(i, j2, c)]: v for c, v in prod.items()}
    unit = {}
    for i in range(ell):
        for c, v in a.unit.items():
            unit[index[(i, i, c)]] = v
    idems = []
    for i in range(ell):
        for e in primitive_idempotents(a):
            idems.append({index[(i, i, c)]: v for c, v in e.items()})
    labels = [f"E{i}{j}*{a.label_of(b)}" for (i, j, b) in basis]
    return GradedAlgebra(f, [0] * n, mult, unit, idempotents=idems, labels=labels)


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------

def cartan_matrix(a, seed=0):
    """C[u][v] = dim e_u A e_v over the primitive idempotents."""
    f = a.field
    idems = primitive_idempotents(a, seed=seed)
    n = len(idems)
    out = []
    for eu in idems:
        row = []
        for ev in idems:
            spans = [a.product(eu, a.product(a.basis_vec(m), ev)) for m in range(a.dim)]
            row.append(len(span_basis(f, spans)))
        out.append(tuple(row))
    return tuple(out)


def canonical_matrix(mat):
    """Lexicographic minimum over simultaneous row/column permutations."""
    n = len(mat)
    if n > 7:
        rows = sorted(range(n), key=lambda r: (sorted(mat[r]), mat[r]))
        return tuple(tuple(mat[r][c] for c in rows) for r in rows)
    best = None
    for p in permutations(range(n)):
        cand = tuple(tuple(mat[p[r]][p[c]] for c in range(n)) for r in range(n))
        if best is None or cand < best:
            best = cand
    return best


class AlgebraFingerprint:
    """Deterministic isomorphism-evidence invariants of an algebra."""

    FIELDS = (
        "dim",
        "radical_series",
        "nilpotency",
        "center_dim",
        "num_simples",
        "block_dims",
        "commutative",
        "cartan",
    )

    def __init__(self, dim, radical_series, nilpotency, center_dim, num_simples,
                 block_dims, commutative, cartan):
        self.dim = dim
        self.radical_series = radical_series
        self.nilpotency = nilpotency
        self.center_dim = center_dim
        self.num_simples = num_simples
        self.block_dims = block_dims
        self.commutative = commutative
        self.cartan = cartan

    def as_dict(self):
        d = {k: getattr(self, k) for k in self.FIELDS}
        d["cartan"] = [list(r) for r in d["cartan"]] if d["cartan"] is not None else None
        return d


def fingerprint(a, seed=0):
    rad = jacobson_radical(a)
    try:
        blocks = semisimple_block_dims(a, seed)
        num_simples = len(blocks)
    except NonSplitSemisimpleQuotient:
        blocks = None
        num_simples = None
    try:
        cartan = canonical_matrix(cartan_matrix(a, seed)) if a.dim else ()
    except NonSplitSemisimpleQuotient:
        cartan = None
    return AlgebraFingerprint(
        dim=a.dim,
        radical_series=list(rad.series_dims),
        nilpotency=rad.nilpotency,
        center_dim=len(center_basis(a)) if a.dim else 0,
        num_simples=num_simples,
        block_dims=blocks,
        commutative=a.is_commutative(),
        cartan=cartan,
    )


class CompareVerdict:
    def __init__(self, status, mismatch_field=None):
        self.status = status  # "match" | "mismatch" | "inconclusive"
        self.mismatch_field = mismatch_field

    def __repr__(self):
        if self.status == "mismatch":
            return f"mismatch({self.mismatch_field})"
        return self.status

    def as_dict(self):
        return {"status": self.status, "mismatch_field": self.mismatch_field}


def compare(a, b, seed=0):
    """Invariant-by-invariant comparison; never asserts isomorphism.

    mismatch(field) on the first disagreeing invariant; inconclusive when a
    skippable invariant (Cartan data, block data) is unavailable on either
    side and everything else agrees.
    """
    fa = a if isinstance(a, AlgebraFingerprint) else fingerprint(a, seed)
    fb = b if isinstance(b, AlgebraFingerprint) else fingerprint(b, seed)
    skipped = False
    for field in AlgebraFingerprint.FIELDS:
        va, vb = getattr(fa, field), getattr(fb, field)
        if va is None or vb is None:
            skipped = True
            continue
        if va != vb:
            return CompareVerdict("mismatch", field)
    return CompareVerdict("inconclusive" if skipped else "match")
