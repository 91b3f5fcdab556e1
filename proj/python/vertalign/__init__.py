"""Road vertical alignment with exact earthwork areas.

Thin Python layer over the C++ core: planar norms and their proximity
operators, spline areas, problem I/O and generation, and the CycIP and
Douglas-Rachford solvers.
"""

from ._vertalign import (
    Algorithm,
    AlignmentProblem,
    AreaPart,
    CostBreakdown,
    GeneratorParams,
    PlanarNorm,
    ProfileRun,
    ReflectionConvention,
    SolverConfig,
    SolverReport,
    dual_norm,
    exact_cost,
    feasibility_residual,
    generate_problem,
    load_problem,
    mass_diagram,
    norm,
    performance_profile,
    project_dual_ball,
    prox_abs_signed_area,
    prox_area,
    prox_area_conjugate,
    prox_planar_norm,
    prox_planar_norm_conjugate,
    save_problem,
    saving_ratio,
    signed_total_area,
    solve,
    spline_eval,
    stadium_gradient,
    total_area,
    weights,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
