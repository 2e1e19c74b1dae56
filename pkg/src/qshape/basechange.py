"""Base change along k -> A for a finite-dimensional coefficient algebra A.

The tensor algebra carries the grading of the left factor (the right factor
must be trivially graded), extension of scalars and restriction move
modules across, and the hom-dimension identity
dim hom(M (x) A, N (x) A) = dim hom(M, N) * dim A is checked on explicit
witnesses.  Membership in the class of base-changed modules with projective
restriction reduces to a projectivity test over the left factor.
"""

from .algebra import GradedAlgebra, generating_vectors
from .errors import NotSelfInjective
from .fields import check_same_field
from .modules import GradedModule, hom_graded, is_projective, is_self_injective
from .tilting import tilting_endomorphism_algebra


def ungrade(a):
    """The same algebra regraded to live entirely in degree 0."""
    return GradedAlgebra(a.field, [0] * a.dim, a.mult, a.unit,
                         idempotents=a.idempotents, labels=a.labels,
                         generators=a.generators, radical_hint=a.radical_hint)


class TensorAlgebra:
    """Lambda (x) A with basis pairs, graded by the left factor."""

    def __init__(self, left, right):
        check_same_field(left.field, right.field)
        if not right.is_trivially_graded():
            raise ValueError("coefficient algebra must be trivially graded; see ungrade()")
        f = left.field
        self.left = left
        self.right = right
        nl, nr = left.dim, right.dim
        self.dim = nl * nr

        def idx(i, al):
            return i * nr + al

        self.idx = idx
        degrees = [left.degrees[i] for i in range(nl) for _ in range(nr)]
        mult = [[None] * self.dim for _ in range(self.dim)]
        for i in range(nl):
            for al in range(nr):
                row_out = mult[idx(i, al)]
                for j in range(nl):
                    cx = left.mult[i][j]
                    for be in range(nr):
                        cy = right.mult[al][be]
                        cell = {}
                        for k, c1 in cx.items():
                            for ga, c2 in cy.items():
                                cell[idx(k, ga)] = f.mul(c1, c2)
                        row_out[idx(j, be)] = cell
        unit = self.pair_vec(left.unit, right.unit)
        idems = None
        if left.idempotents is not None and right.idempotents is not None:
            idems = [self.pair_vec(e, g) for e in left.idempotents
                     for g in right.idempotents]
        labels = None
        if left.labels and right.labels:
            labels = [f"{left.label_of(i)}(x){right.label_of(al)}"
                      for i in range(nl) for al in range(nr)]
        gens = [self.pair_vec(g, right.unit) for g in generating_vectors(left)]
        gens += [self.pair_vec(left.unit, g) for g in generating_vectors(right)]
        self.product = GradedAlgebra(f, degrees, mult, unit, idempotents=idems,
                                     labels=labels, generators=gens)

    def pair_vec(self, xvec, yvec):
        f = self.left.field
        out = {}
        for i, c1 in xvec.items():
            for al, c2 in yvec.items():
                out[self.idx(i, al)] = f.mul(c1, c2)
        return out


def tensor_algebra(left, right):
    return TensorAlgebra(left, right)


def i_star(m, tensor):
    """Extension of scalars: basis pairs (module basis, coefficient basis)."""
    lam, a = tensor.left, tensor.right
    f = lam.field
    nr = a.dim
    dim = m.dim * nr

    def midx(r, al):
        return r * nr + al

    degrees = [m.degrees[r] for r in range(m.dim) for _ in range(nr)]
    action = []
    for i in range(lam.dim):
        for al in range(nr):
            mat = [dict() for _ in range(dim)]
            for r in range(m.dim):
                base = m.action[i][r]
                for be in range(nr):
                    cell = mat[midx(r, be)]
                    cy = a.mult[be][al]
                    for s, c1 in base.items():
                        for ga, c2 in cy.items():
                            cell[midx(s, ga)] = f.mul(c1, c2)
            action.append(mat)
    return GradedModule(tensor.product, degrees, action, check=False)


def i_lower(mp, tensor):
    """Restriction along b -> b (x) 1: same space, action of the left factor."""
    lam = tensor.left
    action = []
    for b in range(lam.dim):
        vec = tensor.pair_vec(lam.basis_vec(b), tensor.right.unit)
        action.append(mp.action_of(vec))
    return GradedModule(lam, mp.degrees, action, check=False)


def base_change_hom_check(m, n, tensor):
    """{lhs_dim, rhs_dim, pass}: graded hom after base change vs. hom times dim A."""
    lhs = hom_graded(i_star(m, tensor), i_star(n, tensor)).dim
    rhs = hom_graded(m, n).dim * tensor.right.dim
    return {"lhs_dim": lhs, "rhs_dim": rhs, "pass": lhs == rhs}


def has_projective_restriction(mp, tensor):
    """Whether the restriction of a base-changed module is projective.

    This is the membership test for the class of modules acyclic for the
    base-changed theory; it needs a self-injective left factor.
    """
    if not is_self_injective(tensor.left):
        raise NotSelfInjective("projective-restriction test needs a self-injective base")
    return is_projective(i_lower(mp, tensor))


def gamma_tensor(lam, coefficient, gldim_bound=10):
    """The stable endomorphism algebra of the tilting module, tensored with A."""
    gamma = tilting_endomorphism_algebra(lam, gldim_bound)
    if gamma.algebra.dim == 0 or coefficient.dim == 0:
        from .algebra import zero_algebra

        return zero_algebra(lam.field)
    return TensorAlgebra(gamma.algebra, coefficient).product
