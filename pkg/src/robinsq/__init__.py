"""robinsq: spectral geometry of the Robin Laplacian on the square.

The package covers the full pipeline for the square of side ``pi`` with
Robin parameter ``h``: one-dimensional Robin branches, the labelled 2D
spectrum, certified nodal-domain counting through two-parameter families
of eigenfunctions, their critical angles and critical points, and a
Courant-sharp verdict engine that stacks analytic elimination rules over
the certified numerics.
"""

from .courant import (
    CourantVerdict,
    ScanResult,
    courant_scan,
    folding_bound,
    global_bound_threshold,
    leydold_bound,
    pleijel_check,
    pp_rule,
    sturm_zero_range,
    transition_table_02,
    transition_table_03,
    uniform_chain_infeasible,
)
from .critical import (
    BoundaryCriticalPoint,
    boundary_critical_points,
    critical_theta_02,
    critical_theta_03,
    critical_thetas,
    interior_critical_points,
)
from .errors import (
    CertificationError,
    CompletenessError,
    ContradictionError,
    SolverFailure,
)
from .labeling import BACKEND, available_backends, label_components
from .nodal import (
    NodalCountResult,
    ThetaFamily,
    boundary_zeros,
    canonical_theta,
    count_nodal_domains,
    theta_symmetry_check,
)
from .robin1d import AlphaBranch, eval_u, eval_u_derivative, solve_alpha, solve_beta
from .spectrum import (
    EigenLevel,
    SpectrumTable,
    build_spectrum,
    counting_function,
    find_crossing,
    lambda_pair,
    weyl_sandwich_check,
)

__version__ = "1.0.0"

__all__ = [
    "AlphaBranch",
    "BACKEND",
    "BoundaryCriticalPoint",
    "CertificationError",
    "CompletenessError",
    "ContradictionError",
    "CourantVerdict",
    "EigenLevel",
    "NodalCountResult",
    "ScanResult",
    "SolverFailure",
    "SpectrumTable",
    "ThetaFamily",
    "available_backends",
    "boundary_critical_points",
    "boundary_zeros",
    "build_spectrum",
    "canonical_theta",
    "counting_function",
    "count_nodal_domains",
    "courant_scan",
    "critical_theta_02",
    "critical_theta_03",
    "critical_thetas",
    "eval_u",
    "eval_u_derivative",
    "find_crossing",
    "folding_bound",
    "global_bound_threshold",
    "interior_critical_points",
    "label_components",
    "lambda_pair",
    "leydold_bound",
    "pleijel_check",
    "pp_rule",
    "solve_alpha",
    "solve_beta",
    "sturm_zero_range",
    "theta_symmetry_check",
    "transition_table_02",
    "transition_table_03",
    "uniform_chain_infeasible",
    "weyl_sandwich_check",
    "__version__",
]
