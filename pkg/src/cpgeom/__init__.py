"""Octant-torus geometry of complex projective space.

CP^n is pictured as a family of flat fiber tori over the positive octant of
a round sphere.  The library computes the Fubini-Study geometry in these
coordinates for the two-qubit state space CP^3 and the spin-1 space CP^2:
flat charts of the octant, entanglement submanifolds, local-unitary orbit
geometry, the symplectic structure and Haar-sampling statistics.
"""

from .errors import (
    CPGeomError,
    DegeneratePair,
    DimensionMismatch,
    EdgePoint,
    EmptySample,
    InvalidRadius,
    InvalidSigma,
    MissingPhase,
    NotMaxEntangled,
    OutOfRange,
    OutsideChart,
    ZeroVector,
)
from .states import (
    EPS_EDGE,
    EPS_NORM,
    EPS_ZERO,
    MetricMatrix,
    OctantTorusCoords,
    ProjectiveState,
    TangentVector,
    fs_distance,
    fs_metric_bilinear,
    fs_metric_homogeneous,
    from_octant_torus,
    normalize_and_gauge,
    octant_torus_metric,
    to_octant_torus,
    wrap_angle,
)
from .charts import (
    ChartKind,
    ChartPoint,
    GreatCircleArc,
    TorusShape,
    collinearity_residual,
    fibonacci_sphere,
    gnomonic_metric,
    gnomonic_project,
    gnomonic_unproject,
    numeric_pullback,
    octant_frame,
    stereographic_project,
    stereographic_unproject,
    torus_shape,
    trace_great_circle,
)
from .entanglement import (
    ReducedDensity,
    SchmidtData,
    apply_local_unitaries,
    as_coefficient_matrix,
    closest_separable,
    collapse_direction,
    collapse_sphere,
    from_coefficient_matrix,
    is_max_entangled,
    is_separable,
    max_entangled_coordinate_residuals,
    partial_trace_A,
    product_state,
    schmidt_decompose,
    separability_coordinate_residuals,
)
from .submanifolds import (
    EulerOctantCoords,
    PhaseRelation,
    Spin1Seed,
    SurfaceSample,
    constant_sigma_region,
    distance_sphere,
    max_entangled_amplitudes,
    max_entangled_set,
    mub_bases,
    separable_surface,
    spin1_orbit,
    spin1_state,
)
from .orbits import (
    OrbitCoords,
    euler_su2,
    extrinsic_curvature_trace,
    orbit_density,
    orbit_embed,
    orbit_embed_u3,
    orbit_metric,
    orbit_volume,
    schmidt_cdf,
    schmidt_pdf,
)
from .symplectic import (
    TwoFormMatrix,
    closedness_residual,
    lagrangian_residual,
    liouville_volume_density,
    omega_bilinear,
    omega_octant,
    omega_orbit,
    pfaffian,
)
from .sampling import SampleBatch, haar_state, ks_statistic, random_su2, sample_batch
from .simplex import (
    mixing_line,
    round_distance,
    schmidt_simplex_check,
    schmidt_state,
    simplex_to_gnomonic,
)

__version__ = "0.1.0"
