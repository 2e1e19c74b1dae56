"""The graded stable category: homs modulo projectives, (co)syzygies,
stable Ext tables and stable endomorphism algebras.

Maps factoring through an arbitrary projective are computed as maps
factoring through the projective cover of the target: any factorization
M -> P -> N lifts along the cover because P is projective and the cover is
surjective, so the factoring subspace is one image computation.
"""

from .algebra import GradedAlgebra
from .errors import NotSelfInjective
from .linalg import Echelon, sparse_matmul, vec_add_scaled
from .modules import (
    cosyzygy_of,
    cover_of,
    hom_graded,
    identity_map,
    is_self_injective,
    same_algebra,
    syzygy_of,
)


def factor_through_projectives(m, n):
    """Basis of the subspace of hom(m, n) of maps factoring through a projective.

    Returned as (hom_space, coefficient_vectors) where the vectors are over
    hom_space.basis.
    """
    hom = hom_graded(m, n)
    f = m.algebra.field
    cov = cover_of(n)
    ech = Echelon(f)
    coeffs = []
    if not n.is_zero() and not m.is_zero():
        lifted = hom_graded(m, cov.module)
        for h in lifted.basis:
            composed = sparse_matmul(f, h.matrix, cov.epi.matrix)
            c = hom.express(composed)
            if c is None:
                raise ValueError("factoring map escaped the hom space")
            if ech.insert(c):
                coeffs.append(c)
    return hom, ech.basis()


class StableHomSpace:
    """hom(m, n) together with the factoring subspace and representatives.

    Coefficients live over hom.basis; representatives are the standard
    coefficient vectors at the non-pivot positions of the echelonized
    factoring subspace, so dim representatives + dim factoring = total dim.
    """

    def __init__(self, m, n):
        if not same_algebra(m.algebra, n.algebra):
            raise ValueError("stable hom needs a common algebra")
        f = m.algebra.field
        self.source = m
        self.target = n
        self.hom, self.factoring_coeffs = factor_through_projectives(m, n)
        self.total_dim = self.hom.dim
        self._fact_ech = Echelon(f)
        for c in self.factoring_coeffs:
            self._fact_ech.insert(c)
        pivots = set(self._fact_ech.rows)
        self.rep_positions = [q for q in range(self.total_dim) if q not in pivots]
        self.representative_coeffs = [{q: f.one()} for q in self.rep_positions]

    @property
    def dim(self):
        return len(self.rep_positions)

    def representative_maps(self):
        f = self.source.algebra.field
        out = []
        for c in self.representative_coeffs:
            rows = [dict() for _ in range(self.source.dim)]
            for q, coeff in c.items():
                for r, row in enumerate(self.hom.basis[q].matrix):
                    rows[r] = vec_add_scaled(f, rows[r], row, coeff)
            out.append(rows)
        return out

    def class_coords_of_matrix(self, matrix_rows):
        """Coordinates of the stable class of a map, over the representatives."""
        c = self.hom.express(matrix_rows)
        if c is None:
            raise ValueError("matrix is not a module map in this hom space")
        residual = self._fact_ech.reduce(c)
        pos = {q: i for i, q in enumerate(self.rep_positions)}
        return {pos[q]: x for q, x in residual.items()}


def stable_hom(m, n):
    return StableHomSpace(m, n)


def syzygy(m):
    """Minimal syzygy: kernel of the projective cover epi."""
    return syzygy_of(m)


def cosyzygy(m):
    """Minimal cosyzygy: cokernel of the injective envelope (self-injective only)."""
    if not is_self_injective(m.algebra):
        raise NotSelfInjective("cosyzygies need a self-injective algebra")
    return cosyzygy_of(m)


def stable_ext_table(m, n, k):
    """dim of stable hom from the i-th (co)syzygy of m to n, for |i| <= k.

    Positive indices use iterated syzygies of the first argument, negative
    ones iterated cosyzygies (the inverse loop functor on the first
    argument).
    """
    if k < 1:
        raise ValueError("window size must be >= 1")
    if not is_self_injective(m.algebra):
        raise NotSelfInjective("stable Ext tables need a self-injective algebra")
    table = {0: stable_hom(m, n).dim}
    x = m
    for i in range(1, k + 1):
        x = syzygy_of(x)
        table[i] = stable_hom(x, n).dim
    y = m
    for i in range(1, k + 1):
        y = cosyzygy_of(y)
        table[-i] = stable_hom(y, n).dim
    return table


class StableEnd:
    """The stable endomorphism algebra of a module, with class coordinates.

    Multiplication is "first map then second map" (matrix product in the
    row convention).  The unit is the class of the identity.
    """

    def __init__(self, m):
        f = m.algebra.field
        self.module = m
        self.stable = stable_hom(m, m)
        reps = self.stable.representative_maps()
        dim = len(reps)
        mult = [[None] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(dim):
                composed = sparse_matmul(f, reps[i], reps[j])
                mult[i][j] = self.stable.class_coords_of_matrix(composed)
        if m.is_zero() or dim == 0:
            self.algebra = GradedAlgebra(f, [], [], {})
        else:
            unit = self.stable.class_coords_of_matrix(identity_map(m).matrix)
            self.algebra = GradedAlgebra(f, [0] * dim, mult, unit)

    def class_of_matrix(self, rows):
        return self.stable.class_coords_of_matrix(rows)


def stable_end_algebra(m):
    """The stable endomorphism algebra as a trivially graded algebra."""
    return StableEnd(m).algebra
