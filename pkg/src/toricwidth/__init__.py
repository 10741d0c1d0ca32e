"""Exact toolkit for Delzant polytopes: charts, monomial embeddings, and
Gromov-width upper bounds."""

from .charts import (
    ChartData,
    MonomialMapData,
    chart_for_cone,
    kernel_param,
    monomial_eval,
    phi_sigma,
    psi_sigma,
    transition_map,
)
from .embedding import (
    MonomialEmbedding,
    kodaira_eval,
    sections_by_conditions,
    sections_by_polytope,
    twist_exponents,
)
from .fan import (
    COMPLETE,
    INCOMPLETE,
    UNVERIFIED,
    Fan,
    SupportFunction,
    completeness,
    is_complete,
    is_smooth,
    is_strictly_convex,
    normal_fan,
    polytope_from_support,
    support_function,
)
from .lattice import det, inverse_unimodular, is_z_basis, solve_rational
from .numeric import (
    ToricPotential,
    fs_diastasis,
    potential_partial,
    psi_map,
    pullback_check,
    radial_quantity,
    sup_along_path,
)
from .polytope import (
    AffineLatticeMap,
    EmptyPolytopeError,
    HalfspacePolytope,
    NotDelzantError,
    UnboundedPolytopeError,
    Vertex,
    enumerate_vertices,
    is_delzant,
    lattice_points,
    normalize_at_vertex,
    scale,
)
from .width import (
    FanoCertificate,
    WidthReport,
    cylinder_bound,
    fano_check,
    lu_gamma,
    lu_lambda,
    verify_fano_certificate,
    width_report,
)

__version__ = "0.1.0"
