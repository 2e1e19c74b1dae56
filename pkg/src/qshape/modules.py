"""Finite-dimensional graded right modules over structure-constant algebras.

A module stores one sparse action matrix per algebra basis element, in the
row convention: (m . b) has coordinate row  m_row @ action[b].  All
constructions (submodules, quotients, sums, shifts, truncations, covers,
envelopes) produce explicit bases with homogeneous coordinates, so equality
of submodules and membership tests are canonical.

Hom spaces are solved through projective presentations: a degree-0 map out
of M is a choice of images for the generators of M (one slice of N per
cover summand) that kills the kernel of the cover.  The brute-force
commutant solver lives in the test suite as an independent oracle.
"""

from .algebra import (
    jacobson_radical,
    opposite,
    primitive_idempotents,
    same_algebra,
)
from .errors import NotNonNegativelyGraded, NotSelfInjective
from .linalg import (
    Echelon,
    apply_row,
    sparse_kernel,
    sparse_matmul,
    span_basis,
    vec_add_scaled,
)


class GradedModule:
    """A graded right module: basis degrees plus one action matrix per
    algebra basis element."""

    def __init__(self, algebra, degrees, action, check=True):
        self.algebra = algebra
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        self.action = action  # list (over algebra basis) of row-matrices
        self._cache = {}
        if check:
            self._validate()

    def act(self, vec, alg_vec):
        """vec . (algebra element), both as sparse coordinate vectors."""
        f = self.algebra.field
        out = {}
        for b, c in alg_vec.items():
            out = vec_add_scaled(f, out, apply_row(f, vec, self.action[b]), c)
        return out

    def action_of(self, alg_vec):
        """Row-matrix of the right action of an algebra element."""
        f = self.algebra.field
        rows = [dict() for _ in range(self.dim)]
        for b, c in alg_vec.items():
            for r, row in enumerate(self.action[b]):
                rows[r] = vec_add_scaled(f, rows[r], row, c)
        return rows

    def component_indices(self, d):
        return [i for i, deg in enumerate(self.degrees) if deg == d]

    def degree_support(self):
        return sorted(set(self.degrees))

    def is_zero(self):
        return self.dim == 0

    def _validate(self):
        from .algebra import generating_vectors

        a = self.algebra
        f = a.field
        if len(self.action) != a.dim:
            raise ValueError("need one action matrix per algebra basis element")
        for b in range(a.dim):
            mat = self.action[b]
            if len(mat) != self.dim:
                raise ValueError("action matrix has wrong shape")
            for r, row in enumerate(mat):
                for s, c in row.items():
                    if f.is_zero(c):
                        raise ValueError("action matrices must omit zeros")
                    if self.degrees[s] != self.degrees[r] + a.degrees[b]:
                        raise ValueError("action violates the grading")
        if self.dim == 0 or a.dim == 0:
            return
        ident = [{r: f.one()} for r in range(self.dim)]
        if self.action_of(a.unit) != ident:
            raise ValueError("unit does not act as the identity")
        # multiplicativity: act(b_i * g) = act(b_i) act(g) for a generating
        # set g; with linearity this extends to all products
        for g in generating_vectors(a):
            ag = self.action_of(g)
            for i in range(a.dim):
                prod = a.product(a.basis_vec(i), g)
                if self.action_of(prod) != sparse_matmul(f, self.action[i], ag):
                    raise ValueError("action is not compatible with multiplication")

    def __repr__(self):
        return f"GradedModule(dim={self.dim}, degrees={sorted(set(self.degrees))})"


def zero_module(algebra):
    return GradedModule(algebra, [], [[] for _ in range(algebra.dim)], check=False)


def module_equal(m, n):
    return (
        same_algebra(m.algebra, n.algebra)
        and m.degrees == n.degrees
        and m.action == n.action
    )


class GradedMap:
    """A degree-preserving module map, stored as a row-convention matrix."""

    def __init__(self, source, target, matrix, check=True):
        self.source = source
        self.target = target
        self.matrix = matrix  # len = source.dim, sparse rows over target coords
        if check:
            self._validate()

    def _validate(self):
        from .algebra import generating_vectors

        if not same_algebra(self.source.algebra, self.target.algebra):
            raise ValueError("map between modules over different algebras")
        f = self.source.algebra.field
        if len(self.matrix) != self.source.dim:
            raise ValueError("map matrix has wrong shape")
        for r, row in enumerate(self.matrix):
            for s, c in row.items():
                if self.source.degrees[r] != self.target.degrees[s]:
                    raise ValueError("map does not preserve degrees")
        for g in generating_vectors(self.source.algebra):
            lhs = sparse_matmul(f, self.source.action_of(g), self.matrix)
            rhs = sparse_matmul(f, self.matrix, self.target.action_of(g))
            if lhs != rhs:
                raise ValueError("map does not commute with the action")

    def apply(self, vec):
        return apply_row(self.source.algebra.field, vec, self.matrix)

    def then(self, other):
        """Composite: self followed by other."""
        if self.target is not other.source and not module_equal(self.target, other.source):
            raise ValueError("maps are not composable")
        f = self.source.algebra.field
        return GradedMap(self.source, other.target,
                         sparse_matmul(f, self.matrix, other.matrix), check=False)

    def rank(self):
        ech = Echelon(self.source.algebra.field)
        ech.extend(self.matrix)
        return ech.dim

    def is_injective(self):
        return self.rank() == self.source.dim

    def is_surjective(self):
        return self.rank() == self.target.dim

    def is_isomorphism(self):
        return self.source.dim == self.target.dim and self.rank() == self.source.dim


def identity_map(m):
    f = m.algebra.field
    return GradedMap(m, m, [{r: f.one()} for r in range(m.dim)], check=False)


def zero_map(m, n):
    return GradedMap(m, n, [dict() for _ in range(m.dim)], check=False)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def regular(a):
    """The algebra acting on itself on the right."""
    if "regular" not in a._cache:
        action = [[a.mult[i][j] for i in range(a.dim)] for j in range(a.dim)]
        a._cache["regular"] = GradedModule(a, a.degrees, action, check=False)
    return a._cache["regular"]


def idempotent_vectors(a):
    if a.idempotents is not None:
        return a.idempotents
    return primitive_idempotents(a)


class Submodule:
    """A span of homogeneous vectors, as a module plus the inclusion map."""

    def __init__(self, parent, vectors):
        f = parent.algebra.field
        self.parent = parent
        by_deg = {}
        for v in vectors:
            if not v:
                continue
            degs = {parent.degrees[i] for i in v}
            if len(degs) != 1:
                raise ValueError("submodule spanning vectors must be homogeneous")
            by_deg.setdefault(degs.pop(), []).append(v)
        coords = Echelon(f, tagged=True)
        basis = []
        for d in sorted(by_deg):
            ech = Echelon(f)
            for v in by_deg[d]:
                ech.insert(v)
            basis.extend(ech.basis())
        for b in basis:
            coords.insert(b)
        self.basis_vectors = basis
        self.coords = coords
        degrees = [parent.degrees[min(b)] for b in basis]
        action = []
        for bidx in range(parent.algebra.dim):
            mat = []
            for b in basis:
                img = apply_row(f, b, parent.action[bidx])
                expr = coords.express(img)
                if expr is None:
                    raise ValueError("span is not closed under the action")
                mat.append(expr)
            action.append(mat)
        self.module = GradedModule(parent.algebra, degrees, action, check=False)
        self.inclusion = GradedMap(self.module, parent, [dict(b) for b in basis], check=False)

    def coords_of(self, vec):
        return self.coords.express(vec)


class QuotientModule:
    """Parent modulo a homogeneous submodule span, with the projection."""

    def __init__(self, parent, vectors):
        f = parent.algebra.field
        self.parent = parent
        self.ech = Echelon(f)
        for v in vectors:
            if v:
                degs = {parent.degrees[i] for i in v}
                if len(degs) != 1:
                    raise ValueError("quotient span vectors must be homogeneous")
            self.ech.insert(v)
        pivots = set(self.ech.rows)
        self.kept = [i for i in range(parent.dim) if i not in pivots]
        self.pos = {g: i for i, g in enumerate(self.kept)}
        degrees = [parent.degrees[g] for g in self.kept]
        action = []
        for bidx in range(parent.algebra.dim):
            mat = []
            for g in self.kept:
                img = apply_row(f, {g: f.one()}, parent.action[bidx])
                mat.append(self.project(img))
            action.append(mat)
        self.module = GradedModule(parent.algebra, degrees, action, check=False)
        proj_rows = [self.project({m: f.one()}) for m in range(parent.dim)]
        self.projection = GradedMap(parent, self.module, proj_rows, check=False)

    def project(self, vec):
        red = self.ech.reduce(vec)
        return {self.pos[g]: c for g, c in red.items()}


def direct_sum(summands):
    """(module, inclusions, projections) of a finite direct sum."""
    if not summands:
        raise ValueError("direct_sum needs at least one summand")
    a = summands[0].algebra
    f = a.field
    for m in summands[1:]:
        if not same_algebra(a, m.algebra):
            raise ValueError("summands live over different algebras")
    offsets = []
    total = 0
    for m in summands:
        offsets.append(total)
        total += m.dim
    degrees = [d for m in summands for d in m.degrees]
    action = []
    for bidx in range(a.dim):
        mat = [dict() for _ in range(total)]
        for m, off in zip(summands, offsets):
            for r, row in enumerate(m.action[bidx]):
                mat[off + r] = {off + s: c for s, c in row.items()}
        action.append(mat)
    result = GradedModule(a, degrees, action, check=False)
    inclusions = []
    projections = []
    for m, off in zip(summands, offsets):
        inc = [{off + r: f.one()} for r in range(m.dim)]
        prj = [dict() for _ in range(total)]
        for r in range(m.dim):
            prj[off + r] = {r: f.one()}
        inclusions.append(GradedMap(m, result, inc, check=False))
        projections.append(GradedMap(result, m, prj, check=False))
    return result, inclusions, projections


def shift(m, j):
    """Regrading: the new degree-d component is the old degree-(d+j) one."""
    if j == 0:
        return m
    return GradedModule(m.algebra, [d - j for d in m.degrees], m.action, check=False)


def truncate_ge(m, n):
    """The submodule of components in degrees >= n, with its inclusion."""
    if not m.algebra.is_nonnegatively_graded():
        raise NotNonNegativelyGraded("truncation needs a non-negatively graded algebra")
    one = m.algebra.field.one()
    sub = Submodule(m, [{i: one} for i in range(m.dim) if m.degrees[i] >= n])
    return sub.module, sub.inclusion


def truncate_le(m, n):
    """The quotient by components in degrees > n, with its projection."""
    if not m.algebra.is_nonnegatively_graded():
        raise NotNonNegativelyGraded("truncation needs a non-negatively graded algebra")
    one = m.algebra.field.one()
    quo = QuotientModule(m, [{i: one} for i in range(m.dim) if m.degrees[i] > n])
    return quo.module, quo.projection


def radical_submodule_span(m):
    """Spanning vectors of M . rad(algebra)."""
    f = m.algebra.field
    rad = jacobson_radical(m.algebra)
    out = []
    for r in rad.basis:
        mat = m.action_of(r)
        for row in mat:
            if row:
                out.append(row)
    return out


def top(m):
    """(T, projection): the semisimple quotient M / M.rad."""
    quo = QuotientModule(m, radical_submodule_span(m))
    return quo.module, quo.projection


def socle(m):
    """(S, inclusion): the annihilator of the radical inside M."""
    f = m.algebra.field
    rad = jacobson_radical(m.algebra)
    rows = {}
    for ridx, r in enumerate(rad.basis):
        mat = m.action_of(r)
        for s in range(m.dim):
            row = {}
            for mm in range(m.dim):
                c = mat[mm].get(s)
                if c is not None:
                    row[mm] = c
            if row:
                rows[(ridx, s)] = row
    basis = sparse_kernel(f, list(rows.values()), m.dim)
    sub = Submodule(m, basis)
    return sub.module, sub.inclusion


def projective(a, i):
    """The i-th indecomposable projective e_i . Lambda (i is 1-based)."""
    idems = idempotent_vectors(a)
    if not 1 <= i <= len(idems):
        raise IndexError(f"idempotent index {i} out of range 1..{len(idems)}")
    key = ("projective", i)
    if key not in a._cache:
        f = a.field
        reg = regular(a)
        e = idems[i - 1]
        spanning = [reg.act(e, a.basis_vec(j)) for j in range(a.dim)]
        sub = Submodule(reg, spanning)
        a._cache[key] = sub
    return a._cache[key].module


def projective_inclusion(a, i):
    projective(a, i)
    return a._cache[("projective", i)].inclusion


def simple(a, i):
    """The i-th graded simple: top of projective(a, i), in degree 0."""
    key = ("simple", i)
    if key not in a._cache:
        t, _ = top(projective(a, i))
        if any(d != 0 for d in t.degrees):
            raise ValueError("simple module is not concentrated in degree 0")
        a._cache[key] = t
    return a._cache[key]


# ---------------------------------------------------------------------------
# projective covers and presentations
# ---------------------------------------------------------------------------

class CoverSummand:
    """One summand e_i . Lambda(-d) of a cover, with its generator in degree d."""

    def __init__(self, a, idem_index, gen_degree):
        self.idem_index = idem_index
        self.gen_degree = gen_degree
        base = projective(a, idem_index)
        self.inclusion_rows = projective_inclusion(a, idem_index).matrix
        self.module = shift(base, -gen_degree)

    def algebra_coords(self, vec):
        """View a summand element as an element of the algebra."""
        f = self.module.algebra.field
        out = {}
        for r, c in vec.items():
            out = vec_add_scaled(f, out, self.inclusion_rows[r], c)
        return out


class ProjectiveCover:
    """Minimal projective cover of a module, with kernel and a section.

    Multiplicities come from the idempotent slices of the top; minimality
    (kernel inside P.rad) is asserted, which also guards against non-basic
    degenerate inputs.
    """

    def __init__(self, m):
        a = m.algebra
        f = a.field
        idems = idempotent_vectors(a)
        t, pi = top(m)

        self.generators = []   # lifted generators in M coords
        self.summands = []     # CoverSummand
        for d in t.degree_support():
            m_deg_idx = [i for i in range(m.dim) if m.degrees[i] == d]
            lift_ech = Echelon(f, tagged=True)
            for i in m_deg_idx:
                lift_ech.insert(pi.apply({i: f.one()}))
            for e_idx, e in enumerate(idems, start=1):
                slice_rows = []
                proj_mat = t.action_of(e)
                for i in range(t.dim):
                    if t.degrees[i] != d:
                        continue
                    img = apply_row(f, {i: f.one()}, proj_mat)
                    if img:
                        slice_rows.append(img)
                for v in span_basis(f, slice_rows):
                    coeffs = lift_ech.express(v)
                    if coeffs is None:
                        raise ValueError("top slice does not lift")
                    lift = {}
                    for pos, c in coeffs.items():
                        lift = vec_add_scaled(f, lift, {m_deg_idx[pos]: f.one()}, c)
                    gen = m.act(lift, e)
                    self.generators.append(gen)
                    self.summands.append(CoverSummand(a, e_idx, d))

        if self.summands:
            mods = [s.module for s in self.summands]
            self.module, self.inclusions, self.projections = direct_sum(mods)
        else:
            self.module = zero_module(a)
            self.inclusions = []
            self.projections = []

        # epi rows: a summand basis element u (an algebra element in e_i.Lambda)
        # maps to generator . u
        rows = []
        for s, gen, inc in zip(self.summands, self.generators, self.inclusions):
            for r in range(s.module.dim):
                u = s.algebra_coords({r: f.one()})
                rows.append(m.act(gen, u))
        if not self.summands:
            rows = []
        self.epi = GradedMap(self.module, m, rows, check=False)

        rank_ech = Echelon(f, tagged=True)
        for row in rows:
            rank_ech.insert(row)
        if rank_ech.dim != m.dim:
            raise ValueError("cover candidate is not surjective")

        # kernel of the epi, as homogeneous vectors in P coordinates
        sys_rows = {}
        for ridx, row in enumerate(rows):
            for s, c in row.items():
                sys_rows.setdefault(s, {})[ridx] = c
        self.kernel_basis = sparse_kernel(f, list(sys_rows.values()), self.module.dim)

        # section: for each basis vector of M a preimage under the epi
        self.section_rows = []
        for i in range(m.dim):
            coeffs = rank_ech.express({i: f.one()})
            sec = {}
            for ridx, c in (coeffs or {}).items():
                sec = vec_add_scaled(f, sec, {ridx: f.one()}, c)
            self.section_rows.append(sec)

        # minimality: kernel inside P . rad
        prad = Echelon(f)
        for v in radical_submodule_span(self.module):
            prad.insert(v)
        for k in self.kernel_basis:
            if not prad.contains(k):
                raise ValueError("cover is not minimal (kernel escapes P.rad)")

        self.target = m


def projective_cover(m):
    """(P, epi) with P a minimal projective cover of m."""
    cov = cover_of(m)
    return cov.module, cov.epi


def cover_of(m):
    if "cover" not in m._cache:
        m._cache["cover"] = ProjectiveCover(m)
    return m._cache["cover"]


def is_projective(m):
    """Projectivity via the cover: minimal epi is injective iff dims agree."""
    if "is_projective" not in m._cache:
        m._cache["is_projective"] = cover_of(m).module.dim == m.dim
    return m._cache["is_projective"]


def syzygy_of(m):
    """Kernel of the minimal cover epi, as a module."""
    if "syzygy" not in m._cache:
        cov = cover_of(m)
        sub = Submodule(cov.module, cov.kernel_basis)
        m._cache["syzygy"] = sub.module
    return m._cache["syzygy"]


# ---------------------------------------------------------------------------
# hom spaces
# ---------------------------------------------------------------------------

class HomSpace:
    """Basis of degree-0 module maps M -> N.

    Internally a map is coordinatized by the images of M's cover generators:
    for a summand with idempotent i and generator degree d, the image lives
    in the slice (N_d).e_i.  The basis is materialized as GradedMaps and the
    coordinate system is kept for quotient and composition bookkeeping.
    """

    def __init__(self, source, target):
        if not same_algebra(source.algebra, target.algebra):
            raise ValueError("hom between modules over different algebras")
        a = source.algebra
        f = a.field
        self.source = source
        self.target = target
        cov = cover_of(source)
        idems = idempotent_vectors(a)

        # slice bases: for each summand, a basis of (N_d).e_i
        self.slices = []
        offsets = []
        total = 0
        for s in cov.summands:
            e = idems[s.idem_index - 1]
            mat = target.action_of(e)
            rows = []
            for i in range(target.dim):
                if target.degrees[i] != s.gen_degree:
                    continue
                img = apply_row(f, {i: f.one()}, mat)
                if img:
                    rows.append(img)
            basis = span_basis(f, rows)
            ech = Echelon(f, tagged=True)
            for b in basis:
                ech.insert(b)
            self.slices.append((basis, ech))
            offsets.append(total)
            total += len(basis)
        self.offsets = offsets
        self.coord_dim = total
        self._cov = cov

        # constraints: for each kernel vector sum_t x_t . u_t = 0
        sys_rows = {}
        for kidx, k in enumerate(cov.kernel_basis):
            blocks = []
            for t, (s, prj) in enumerate(zip(cov.summands, cov.projections)):
                blk = prj.apply(k)
                if blk:
                    blocks.append((t, s.algebra_coords(blk)))
            for t, u in blocks:
                basis, _ = self.slices[t]
                for sidx, bvec in enumerate(basis):
                    w = target.act(bvec, u)
                    for coord, c in w.items():
                        key = (kidx, coord)
                        row = sys_rows.setdefault(key, {})
                        var = offsets[t] + sidx
                        row[var] = f.add(row.get(var, f.zero()), c)
        sys_rows = {k: {v: c for v, c in row.items() if not f.is_zero(c)}
                    for k, row in sys_rows.items()}
        sols = sparse_kernel(f, [r for r in sys_rows.values() if r], total)

        self.basis_coords = sols
        self.basis = [self._materialize(c) for c in sols]
        self._basis_ech = Echelon(f, tagged=True)
        for c in sols:
            self._basis_ech.insert(c)

    @property
    def dim(self):
        return len(self.basis)

    def _images_from_coords(self, coords):
        f = self.source.algebra.field
        images = []
        for t, (basis, _) in enumerate(self.slices):
            x = {}
            for sidx, bvec in enumerate(basis):
                c = coords.get(self.offsets[t] + sidx)
                if c is not None:
                    x = vec_add_scaled(f, x, bvec, c)
            images.append(x)
        return images

    def _materialize(self, coords):
        cov = self._cov
        f = self.source.algebra.field
        images = self._images_from_coords(coords)
        rows = []
        for i in range(self.source.dim):
            sec = cov.section_rows[i]
            out = {}
            for t, prj in enumerate(cov.projections):
                blk = prj.apply(sec)
                if not blk:
                    continue
                u = cov.summands[t].algebra_coords(blk)
                out = vec_add_scaled(f, out, self.target.act(images[t], u), f.one())
            rows.append(out)
        return GradedMap(self.source, self.target, rows, check=False)

    def coords_of_matrix(self, matrix_rows):
        """Slice coordinates of a map given by its matrix."""
        f = self.source.algebra.field
        coords = {}
        for t, (gen, (basis, ech)) in enumerate(zip(self._cov.generators, self.slices)):
            img = apply_row(f, gen, matrix_rows)
            expr = ech.express(img)
            if expr is None:
                raise ValueError("matrix image leaves the idempotent slice")
            for pos, c in expr.items():
                coords[self.offsets[t] + pos] = c
        return coords

    def coords_of(self, gmap):
        return self.coords_of_matrix(gmap.matrix)

    def express(self, gmap_or_matrix):
        """Coefficients of a map over this basis, or None if outside."""
        rows = gmap_or_matrix.matrix if isinstance(gmap_or_matrix, GradedMap) else gmap_or_matrix
        return self._basis_ech.express(self.coords_of_matrix(rows))


def hom_graded(m, n):
    return HomSpace(m, n)


def hom_enriched(m, n):
    """Shift-degree -> HomSpace over the finite window where it can be nonzero."""
    if m.is_zero() or n.is_zero():
        return {}
    lo = min(n.degrees) - max(m.degrees)
    hi = max(n.degrees) - min(m.degrees)
    return {i: hom_graded(m, shift(n, i)) for i in range(lo, hi + 1)}


# ---------------------------------------------------------------------------
# duality, self-injectivity, envelopes
# ---------------------------------------------------------------------------

def dual_module(m):
    """The k-dual as a right module over the opposite algebra; degrees negate."""
    a = m.algebra
    op = opposite(a)
    f = a.field
    action = []
    for b in range(a.dim):
        mat = m.action[b]
        rows = [dict() for _ in range(m.dim)]
        for r, row in enumerate(mat):
            for s, c in row.items():
                rows[s][r] = c
        action.append(rows)
    return GradedModule(op, [-d for d in m.degrees], action, check=False)


def dual_map(gmap):
    """Dual of a map: transpose matrix between the dual modules."""
    f = gmap.source.algebra.field
    src = dual_module(gmap.target)
    tgt = dual_module(gmap.source)
    rows = [dict() for _ in range(src.dim)]
    for r, row in enumerate(gmap.matrix):
        for s, c in row.items():
            rows[s][r] = c
    return GradedMap(src, tgt, rows, check=False)


def dual_of_regular(a):
    """The dual of the algebra as a graded right module over itself.

    (f . b)(x) = f(b x); the degree-i piece is the dual of the degree-(-i)
    component.
    """
    if "dual_regular" not in a._cache:
        f = a.field
        action = []
        for b in range(a.dim):
            rows = []
            for i in range(a.dim):
                row = {}
                for j in range(a.dim):
                    c = a.mult[b][j].get(i)
                    if c is not None:
                        row[j] = c
                rows.append(row)
            action.append(rows)
        a._cache["dual_regular"] = GradedModule(a, [-d for d in a.degrees], action)
    return a._cache["dual_regular"]


def is_self_injective(a):
    """The regular module is injective iff its dual is projective."""
    if "self_injective" not in a._cache:
        if a.dim == 0:
            a._cache["self_injective"] = True
        else:
            a._cache["self_injective"] = is_projective(dual_of_regular(a))
    return a._cache["self_injective"]


def injective_envelope(m):
    """(I, mono) with I minimal injective over a self-injective algebra.

    I is the dual of the projective cover of the dual module over the
    opposite algebra; minimality is certified by the socle lying inside the
    image.
    """
    a = m.algebra
    if not is_self_injective(a):
        raise NotSelfInjective("injective envelopes need a self-injective algebra")
    f = a.field
    md = dual_module(m)
    cov = cover_of(md)
    mono = dual_map(cov.epi)  # dual(M dual) -> dual(P); source equals m in coordinates
    env = mono.target
    mono = GradedMap(m, env, mono.matrix, check=False)
    if not mono.is_injective():
        raise ValueError("envelope embedding is not injective")
    soc, soc_inc = socle(env)
    img = Echelon(f)
    img.extend(mono.matrix)
    for row in soc_inc.matrix:
        if not img.contains(row):
            raise ValueError("envelope is not minimal (socle escapes the image)")
    return env, mono


def cosyzygy_of(m):
    """Cokernel of the minimal injective envelope."""
    if "cosyzygy" not in m._cache:
        env, mono = injective_envelope(m)
        quo = QuotientModule(env, mono.matrix)
        m._cache["cosyzygy"] = quo.module
    return m._cache["cosyzygy"]


# ---------------------------------------------------------------------------
# isomorphism search
# ---------------------------------------------------------------------------

def find_isomorphism(m, n, seed=0, tries=200):
    """A module isomorphism m -> n, or None if the search fails.

    Searches the hom space for an invertible element: basis maps first, then
    seeded pseudo-random combinations, then an exhaustive {-1,0,1} sweep for
    hom dimension <= 6.  A returned map is a certified isomorphism; None is
    only evidence of absence.
    """
    from itertools import product as iproduct
    from random import Random

    if m.dim != n.dim or sorted(m.degrees) != sorted(n.degrees):
        return None
    if m.dim == 0:
        return zero_map(m, n)
    hom = hom_graded(m, n)
    if hom.dim == 0:
        return None
    f = m.algebra.field

    def try_coeffs(coeffs):
        rows = [dict() for _ in range(m.dim)]
        for c, h in zip(coeffs, hom.basis):
            if f.is_zero(c):
                continue
            for r, row in enumerate(h.matrix):
                rows[r] = vec_add_scaled(f, rows[r], row, c)
        cand = GradedMap(m, n, rows, check=False)
        return cand if cand.is_isomorphism() else None

    for h in hom.basis:
        if h.is_isomorphism():
            return h
    rng = Random(seed)
    for _ in range(tries):
        coeffs = [f.from_int(rng.randrange(-m.dim - 1, m.dim + 2)) for _ in range(hom.dim)]
        got = try_coeffs(coeffs)
        if got is not None:
            return got
    if hom.dim <= 6:
        for pat in iproduct((-1, 0, 1), repeat=hom.dim):
            got = try_coeffs([f.from_int(c) for c in pat])
            if got is not None:
                return got
    return None
