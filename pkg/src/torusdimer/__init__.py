"""Exact homology, Kasteleyn operators and Newton polygons of perfect
matchings on bipartite toroidal graphs."""

from .circulant import (
    BRUTE_FORCE_LIMIT,
    CirculantDigraph,
    HamiltonicityResult,
    LatticeBasis,
    build_lattice_path,
    circuit_lattice,
    is_hamiltonian,
    path_to_circuit,
    visible_in_lattice,
    visible_in_z2,
)
from .errors import (
    BadParameters,
    BruteForceTooLarge,
    Disconnected,
    InconsistentHeights,
    InvalidMatching,
    MissingRotation,
    NoMatchings,
    NoPatternFound,
    NotCellular,
    NotClosed,
    NotInLattice,
    NotVisible,
    OutsideTriangle,
    PreconditionViolated,
    RepeatedVertex,
    SigningInconsistent,
    SigningMismatch,
    SingularMatrix,
    TorusDimerError,
    Unbalanced,
    VerificationFailure,
    ZeroHomology,
)
from .families import (
    REFERENCE_PERIOD,
    REFERENCE_TRIPLE,
    BnrGraph,
    ConventionMapReport,
    HoneycombQuotient,
    LozengeReport,
    RealizationTriangle,
    bnr_full_support,
    build_bnr,
    build_honeycomb,
    constant_height_changes,
    convention_map_report,
    lozenge_convex_combination_check,
    realize_height_change,
)
from .kasteleyn import (
    EVALUATION_POINTS,
    FourEvalReport,
    LaurentPoly2,
    audit_signing,
    count_from_four_evaluations,
    determinant_bareiss,
    determinant_leibniz,
    kasteleyn_polynomial,
    kasteleyn_signing,
    operator_matrix,
)
from .matchings import (
    Circuit,
    DivideReport,
    HeightField,
    Matching,
    TransitionCycles,
    check_divide_structure,
    enumerate_matchings,
    height_change,
    height_function,
    homology_exponent,
    reduce_to_single_circuit,
    rot90,
    tilde_height_change,
    transition_cycles,
    uncovered_vertex_certificate,
    validate_matching,
)
from .newton import (
    NewtonReport,
    boundary_point_count,
    convex_hull,
    full_support_report,
    lattice_points,
    polygon_area2,
)
from .torus_graph import (
    Edge,
    FaceSet,
    PlanarPatch,
    RotationSystem,
    TorusGraph,
    ValidationReport,
    apply_gauge,
    compute_faces,
    lift_block,
    require_valid,
    torus_graph,
    validate_graph,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
