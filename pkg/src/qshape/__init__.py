"""Exact tooling for graded self-injective algebras: tilting modules over
the stable graded module category, stable endomorphism algebras, windows of
the shifted-projective category, and base change, all over the rationals or
a prime field."""

__version__ = "0.1.0"

from .algebra import (
    EXCEEDS_BOUND,
    GradedAlgebra,
    QuiverPresentation,
    RadicalData,
    builtin,
    compile_quiver,
    degree_zero_part,
    global_dimension_bounded,
    jacobson_radical,
    opposite,
    primitive_idempotents,
    sup_degree,
    zero_algebra,
)
from .basechange import (
    base_change_hom_check,
    gamma_tensor,
    has_projective_restriction,
    i_lower,
    i_star,
    tensor_algebra,
    ungrade,
)
from .fields import FieldSpec, QQ
from .linalg import Matrix, kernel_basis, rref, subspace_ops
from .modules import (
    GradedMap,
    GradedModule,
    HomSpace,
    dual_module,
    dual_of_regular,
    find_isomorphism,
    hom_enriched,
    hom_graded,
    injective_envelope,
    is_projective,
    is_self_injective,
    projective,
    projective_cover,
    regular,
    shift,
    simple,
    socle,
    top,
    truncate_ge,
    truncate_le,
    zero_module,
)
from .stable import (
    StableHomSpace,
    cosyzygy,
    factor_through_projectives,
    stable_end_algebra,
    stable_ext_table,
    stable_hom,
    syzygy,
)
from .tilting import (
    AlgebraFingerprint,
    TiltingData,
    cartan_matrix,
    check_hypotheses,
    compare,
    end_algebra,
    fingerprint,
    reference_auslander_linear,
    reference_subcategory_algebra,
    reference_upper_triangular,
    tilting_endomorphism_algebra,
    tilting_module,
)
from .window import QWindow, build_window, check_window_properties, serre_of_object
