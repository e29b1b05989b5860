"""Numerical checkers for Bellman-PDE-generated isoperimetric inequalities.

The package evaluates candidate Bellman functions on box domains, checks the
pointwise PDE systems (modified-concavity and its kernel-projected variant),
builds the associated semigroup flows, and verifies the resulting integral
inequalities at desk scale.  Everything is grid/quadrature evidence, never a
proof.
"""

__version__ = "0.1.0"

from .matrixkit import (
    ColumnSystem,
    Projection,
    SymMatrix,
    is_nsd,
    kernel_projection,
    minors_vanish,
    modified_hessian,
    schur_product,
    sherman_morrison,
)
from .profiles import ProfileFunction, exp_profile, std_normal
from .catalog import (
    BellmanCandidate,
    Box,
    SurfaceCandidate,
    borell_B,
    ehrhard_B,
    graph_candidate,
    p_mean,
    phi_composition_H,
    power_product,
)
from .reporting import CheckReport, CsvTable, GridSpec
from .pdecheck import (
    bartha_violation,
    check_first_type,
    check_second_type,
    construct_C_for_b,
    glavnoe_check,
    hyper_region,
    hyper_region_pq,
    logdev_check,
    reduced_H_condition,
    trace_condition,
)
from .flows import (
    ComposedV,
    GeneralFlow,
    QuadratureRule,
    SpecialFlow,
    compose_V,
    flow_pde_residual,
    gradient_identity_check,
    heat_flow_general,
    heat_flow_special,
    ou_semigroup,
)
from .intervals import IntervalUnion
from .verify import (
    TestFunction,
    borell_stability_verify,
    brunn_minkowski_1d,
    ehrhard_pl_verify,
    energy_monotonicity,
    gaussian_isoperimetry_check,
    hill_evolution,
    hypercontractivity_verify,
    tensorization_check,
    verify_gmc,
)
from .dbar import (
    BesselJ,
    DbarSolution,
    HodographMaps,
    bessel_eval,
    dbar_residual,
    elliptic_reduction_check,
    hodograph_maps,
    hodograph_system_residual,
    mn_from_dbar,
    monge_ampere_residual,
    parabolic_reduction_check,
)
from .generalrank import (
    BlockSystem,
    block_modified_hessian,
    gpde1_equivalence,
    second_type_general,
)
