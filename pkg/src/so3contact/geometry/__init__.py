"""Numerical differential geometry on the sphere and Brieskorn examples."""

from .forms import (
    ALPHA_MINUS,
    ALPHA_PLUS,
    BrieskornForm,
    ContactForm,
    DegenerateFrameError,
    SphereForm,
    coefficients,
    contact_check,
    contact_three_form,
    cross_section_coordinate,
    eval_form,
    exterior_derivative_matrix,
    form_volume,
    moment_map,
    moment_map_defn,
    orbit_generator_sign,
    variety_of,
)
from .lie import BASIS, LieAlgElement, X, X_MATRIX, Y, Y_MATRIX, Z, Z_MATRIX, bracket, rodrigues
from .loops import (
    ChartError,
    LoopClosureError,
    PhaseStepError,
    brieskorn_boundary_tracks,
    brieskorn_marked_curve,
    brieskorn_section,
    brieskorn_section_boundary,
    dehn_euler_of_example,
    dehn_euler_of_sphere,
    loop_to_class,
    section_orientation_sign,
    sphere_boundary_tracks,
    sphere_marked_curve,
    sphere_section,
    sphere_section_boundary,
    unwrap_track,
)
from .strata import (
    BranchTrackingError,
    StabilizerClass,
    StabilizerIndeterminate,
    in_cross_section,
    singular_component_type,
    sphere_component_type,
    stabilizer_class,
)
from .varieties import (
    AmbientPoint,
    Brieskorn,
    ProjectionError,
    Sphere,
    Variety,
    constraint_gradients,
    constraints,
    from_real,
    group_action,
    infinitesimal_generator,
    project_to_variety,
    random_tangent,
    sample_point,
    tangent_frame,
    tangent_residual,
    to_complex,
    to_real,
)

__all__ = [name for name in dir() if not name.startswith("_")]
