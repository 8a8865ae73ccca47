"""latkit: exact arithmetic for integral lattices, their discriminant forms,
involutions, binary quadratic forms, and cohomological transform matrices.

Everything computes over Python integers and fractions; no floating point
anywhere.
"""

from .binary_forms import (
    BinaryForm,
    canonical_class_form,
    equivalent,
    fm_partner_count,
    from_gram,
    gauss_cycle,
    reduce_definite,
    represents,
    square_roots_of_unity,
)
from .definite import (
    IsometryResult,
    definite_isomorphic,
    has_minus_two_class,
    short_vectors,
    theta_prefix,
)
from .f2 import (
    F2QuadraticSpace,
    classify_2d_subspaces,
    element_counts,
    from_discriminant,
    grassmannian_count,
)
from .finite_forms import (
    FiniteQuadraticForm,
    forms_isomorphic,
    has_z2_cubed_summand,
    min_generators,
    two_elementary_invariants,
)
from .fm import (
    FMParameters,
    fm_matrix,
    fm_matrix_inverse,
    orientation_slice_report,
    slice_gram,
    twist_matrix,
    verify_skew_functional,
)
from .genus import (
    e8_saturated_uniqueness,
    primitive_embedding_criterion,
    stably_equivalent,
    unique_in_genus_criterion,
)
from .involutions import (
    InvolutionInvariants,
    InvolutiveLattice,
    eigenlattices,
    enriques_exists_embedding,
    enriques_exists_singular,
    e8_rows_in_overlattice,
    nikulin_invariant_overlattice,
    nikulin_triple,
    quotient_maps,
    quotient_source_lattice,
    quotient_target_lattice,
    skew_pair_certificate,
)
from .lattices import (
    Lattice,
    Sublattice,
    direct_sum,
    discriminant_form,
    is_saturated,
    lattice_from_json,
    lattice_to_json,
    orthogonal_complement,
    overlattice_from_isotropic,
    rescale,
    saturation,
    standard_lattice,
)
from .matrices import (
    Matrix,
    det_and_inverse,
    invariant_factors,
    kernel_basis,
    signature,
    smith_normal_form,
)

__version__ = "0.1.0"
