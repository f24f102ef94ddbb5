"""Exact arithmetic for base change of GL(n) parameters.

Local-field invariants and transition functions, extended quotients of
tori by symmetric groups, the tempered duals of GL(1) and GL(2) as
circle unions, and the induced integer matrices on topological
K-theory.  Everything is exact (rationals and Gaussian rationals); a
CLI exposes the computations for batch use.
"""

from .gaussian import GaussianRational
from .localfield import (
    ExtensionData,
    LocalFieldData,
    MismatchedTower,
    NotInPsiImage,
    PiecewiseLinearFn,
    RamificationClass,
    RamificationFiltration,
    UnsupportedExtension,
    classify,
    compose_tower,
    conductor_transport,
    norm_level_image,
    phi,
    psi,
    unit_quotient_order,
)
from .laurent import InvariantLaurentPoly, LaurentPoly
from .extquot import (
    ExtendedQuotient,
    OrbitComponent,
    TorusPoint,
    base_change_point,
    extended_quotient,
    fixed_component,
    partitions_of,
    pullback_invariant,
    satake_bc,
    steinberg_curve_bc,
)
from .finiteness import FinitenessCertificate, WindowTooSmall, finiteness_certificate
from .gl1 import (
    Arc,
    CharacterLabel,
    FormalWeilDegree,
    Gl1BaseChange,
    TemperedDualGL1,
    UnramifiedQuasicharacter,
    arc_preimage,
    bc_gl1,
    bc_unramified_quasichar,
    circle_map,
    include_weil,
    properness_check,
)
from .gl2 import (
    AdmissiblePair,
    CuspidalCircle,
    EvenDegree,
    Gl2BaseChange,
    NotUnramified,
    OutOfScope,
    UnitCharacter,
    ValidationReport,
    bc_gl2,
    compositum_invariants,
    validate_admissible,
)
from .ktheory import (
    CircleSpace,
    InsufficientSamples,
    KGroup,
    KMorphism,
    ProperCircleMap,
    circle_degree_oracle,
    compose_maps,
    induced_map,
    k_groups,
    reduce_symmetric_component,
)

__version__ = "0.1.0"
