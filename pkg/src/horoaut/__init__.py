"""Connected automorphism groups of toric bundles over rational homogeneous
spaces, from combinatorial input: Dynkin data, a parabolic marking, a smooth
complete fan for the fiber, and a lattice embedding.

The whole pipeline is exact integer arithmetic; there are no floats and no
tolerances anywhere.
"""

from .errors import (
    BadFaceStructure,
    DimensionMismatch,
    EmbeddingNotCharacterOfP,
    EmbeddingNotInjective,
    FanError,
    HoroautError,
    InvalidMarking,
    InvalidRank,
    NotACharacterOfP,
    NotComplete,
    NotDominant,
    NotPrimitiveRay,
    NotSmooth,
    PreconditionViolated,
    SchemaError,
)
from .fan import (
    DemazureRoot,
    Fan,
    ToricAutReport,
    classify_roots,
    demazure_roots,
    demazure_roots_bruteforce,
    projective_space_fan,
    safe_oracle_radius,
    toric_aut_report,
    validate_fan,
)
from .rootsystem import (
    AMPLE,
    NEF_NOT_AMPLE,
    NOT_NEF,
    Coroot,
    ParabolicMarking,
    RootSystemSpec,
    RootSystemTables,
    Weight,
    anticanonical_character,
    aut_dim_homogeneous,
    build_root_system,
    coroot_pairing,
    is_dominant,
    line_bundle_positivity,
    weyl_dim,
)
from .horospherical import (
    AutReport,
    BRoot,
    Extendability,
    HorosphericalDatum,
    SEMISIMPLE,
    UNIPOTENT,
    aut_report,
    b_plus_roots,
    extendable_fiber_roots,
    torus_datum,
    validate_datum,
)
from .bundles import (
    BundleReport,
    BundleSpec,
    CERTIFIED,
    CERTIFIED_FANO,
    CERTIFIED_NOT_FANO,
    NOT_APPLICABLE,
    PairRoot,
    UNKNOWN,
    base_fano_index,
    bundle_report,
    bundle_roots,
    fano_certificate,
    k_unstability_certificate,
    picard_rank_one_rule,
    to_horospherical_datum,
)

__version__ = "0.1.0"
