"""Exact PSD zero forcing, propagation time and product throttling on small graphs."""

from .errors import (
    DisconnectedError,
    EdgeError,
    Graph6Error,
    ParameterError,
    PreconditionError,
    PSDThrottleError,
    SizeLimitError,
    UndefinedParameterError,
    UsageError,
)
from .graph import (
    INF,
    Graph,
    MetricTable,
    cartesian_product,
    complement,
    delete_edge,
    disjoint_union,
    empty_graph,
    generate,
    independence_number,
    k_radius,
    metrics,
    petersen_graph,
    project_to_factor,
    subdivide_edge,
)
from .graph6 import decode as from_graph6, encode as to_graph6
from .psd import ForcingForest, PropagationTrace, forcing_forest, propagate, prop_time, psd_round
from .throttling import (
    ThrottlingWitness,
    oracle_all,
    pt_k,
    search_record,
    th_star,
    th_sum,
    th_times,
    witness_relations,
    z_plus,
)
from .families import FamilyRecord, cycle_floor_lemmas, family_values, th_times_cycle
from .bounds import BoundReport, bound_report, operation_bound_checks, product_bound_checks
from .cops import GameValue, capt_k, capture_time, cop_number, solve_game, th_times_cops

__version__ = "0.1.0"
