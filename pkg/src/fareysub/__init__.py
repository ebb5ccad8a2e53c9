"""Farey sequences, the subsequence F(B(2m), m) and their neighbor formulas."""

from .boolean import (
    HalfTag,
    MapId,
    apply_map,
    consecutive_runs,
    dual_fbm,
    fbm_half,
    fbm_member,
    fbm_oracle,
    fbm_pred,
    fbm_succ,
    special_neighbors_fbm,
)
from .classic import (
    NeighborReport,
    dual_fm,
    farey_oracle,
    farey_stream,
    pred_fm,
    special_neighbors_fm,
    succ_fm,
)
from .committee import (
    CentralArrangement,
    classify_pattern,
    is_committee,
    load_arrangement,
    positive_side_count,
    ratio_collection,
)
from .gf import BivarPoly, UnivarPoly, coprime_count, coprime_powersum, gf_lower, gf_upper
from .numeric import (
    FareyError,
    Fraction,
    compare,
    extended_gcd,
    mediant,
    mobius,
    reduce,
    solve_congruence,
)

__version__ = "0.1.0"
