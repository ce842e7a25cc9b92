"""Exact lattice computations for wall divisors of Nikulin-type orbifolds."""

from .errors import (
    InfeasibleInvariants,
    InternalMismatch,
    InvariantMismatch,
    NonIntegral,
    NoUSquare,
    NotNegativeDefinite,
    OmegaOnWall,
    PreconditionError,
    WallkitError,
    ZeroNorm,
)
from .lattice import (
    DiscElement,
    DiscriminantGroup,
    GramLattice,
    LatticeVector,
    direct_sum,
    disc_residue,
    discriminant_group,
    divisibility,
    is_primitive,
    make_standard,
    norm,
    pairing,
    primitive_part,
    project_block,
    rescale,
    short_vectors,
)
from .isometry import (
    Isometry,
    apply,
    compose,
    e8_simple_root_reflections,
    eichler_normalize,
    eichler_transvection,
    induced_disc_action,
    inverse,
    orbits,
    reflection,
)
from .nikulin import (
    hat_div1_predicate,
    symplectic_involution_criterion,
    twist_ray_to_hat,
    twist_ray_to_lambda,
)
from .classify import (
    OrbitClass,
    classify_hat,
    classify_lambda,
    invariants_hat,
    known_monodromy_reflection,
    same_known_orbit,
)
from .walls import (
    PicardEmbedding,
    WallReport,
    is_wall,
    k3_family_walls,
    kahler_side_test,
    orthocomplement_square_scan,
    walls_in_picard,
)
from .case_studies import (
    VerificationReport,
    verify_elliptic,
    verify_generic,
    verify_involution_obstruction,
    verify_one_curve,
    verify_two_curves,
)

__version__ = "0.1.0"
