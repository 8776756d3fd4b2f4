"""Exact toolkit for r-unavoidable simplicial complexes.

Computes partition numbers and unavoidability predicates with witnesses,
decides linear and weighted-hypergraph realizability by exact rational LPs,
generates the standard example families, and emits machine-checkable
non-embeddability certificates.
"""

__version__ = "0.1.0"

from .bitsets import MAX_GROUND_SET, as_mask, elements, full_mask
from .complexes import (
    Measure,
    ScxFormatError,
    SimplicialComplex,
    VOID,
    alexander_dual,
    as_fraction,
    contains_face,
    delete_facet,
    dump_scx,
    format_scx,
    from_facets,
    is_self_dual,
    join,
    load_scx,
    parse_scx,
    sublevel_complex,
)
from .errors import BudgetExceededError
from .partitions import (
    PackingWitness,
    PartitionWitness,
    hypergraph_partition_number,
    is_minimally_r_unavoidable,
    is_r_unavoidable,
    is_rs_unavoidable,
    max_disjoint_min_nonfaces,
    partition_number,
    partition_number_oracle,
)
from .realize import (
    GeometricMeasure,
    LpVerdict,
    WeightedHypergraph,
    geometric_measure,
    is_linearly_realizable,
    linear_subcomplex_witness,
    measure_from_json,
    measure_to_json,
    pi_upper_bound,
    prune_zero_weights,
    selfdual_wh_realization,
    superadditive_sublevel,
    weights_from_json,
    weights_to_json,
    wh_measure,
    wh_realization_check,
)
from .generators import (
    GraphProperty,
    contains_clique,
    deleted_join_faces,
    edge_table,
    is_admissible,
    points,
    ramsey_complex,
    random_selfdual,
    skeleton,
    weighted_majority_complex,
)
from .certify import (
    Certificate,
    FactorCheck,
    PrimePower,
    certify_join_nonembeddable,
    certify_single_nonembeddable,
    index_bound_deleted_join,
    index_bound_deleted_product,
    prime_power,
)

__all__ = [
    "MAX_GROUND_SET",
    "VOID",
    "BudgetExceededError",
    "Certificate",
    "FactorCheck",
    "GeometricMeasure",
    "GraphProperty",
    "LpVerdict",
    "Measure",
    "PackingWitness",
    "PartitionWitness",
    "PrimePower",
    "ScxFormatError",
    "SimplicialComplex",
    "WeightedHypergraph",
    "alexander_dual",
    "as_fraction",
    "as_mask",
    "certify_join_nonembeddable",
    "certify_single_nonembeddable",
    "contains_clique",
    "contains_face",
    "delete_facet",
    "deleted_join_faces",
    "dump_scx",
    "edge_table",
    "elements",
    "format_scx",
    "from_facets",
    "full_mask",
    "geometric_measure",
    "hypergraph_partition_number",
    "index_bound_deleted_join",
    "index_bound_deleted_product",
    "is_admissible",
    "is_linearly_realizable",
    "is_minimally_r_unavoidable",
    "is_r_unavoidable",
    "is_rs_unavoidable",
    "is_self_dual",
    "join",
    "linear_subcomplex_witness",
    "load_scx",
    "max_disjoint_min_nonfaces",
    "measure_from_json",
    "measure_to_json",
    "parse_scx",
    "partition_number",
    "partition_number_oracle",
    "pi_upper_bound",
    "points",
    "prime_power",
    "prune_zero_weights",
    "ramsey_complex",
    "random_selfdual",
    "selfdual_wh_realization",
    "skeleton",
    "sublevel_complex",
    "superadditive_sublevel",
    "weighted_majority_complex",
    "weights_from_json",
    "weights_to_json",
    "wh_measure",
    "wh_realization_check",
]
