"""h-fold sumsets, threshold sumsets (hA)^(t) and their fringe structure.

Sets passed to these functions must already be normalized (minimum 0, gcd 1);
use ``normalize`` to reduce an arbitrary finite set first.
"""

from ._core import (
    HFoldError,
    check_duality,
    check_inclusion_lemma,
    check_interval_lemma,
    construct_witnesses,
    dual_fringes,
    dual_set,
    empirical_onset,
    extract_fringes,
    frobenius_number,
    frobenius_sequence,
    normalize,
    predict_sumset,
    rep_counts,
    rep_counts_oracle,
    structure_json,
    threshold_bounds,
    threshold_sumset,
    verify_structure,
)

__all__ = [
    "HFoldError",
    "check_duality",
    "check_inclusion_lemma",
    "check_interval_lemma",
    "construct_witnesses",
    "dual_fringes",
    "dual_set",
    "empirical_onset",
    "extract_fringes",
    "frobenius_number",
    "frobenius_sequence",
    "normalize",
    "predict_sumset",
    "rep_counts",
    "rep_counts_oracle",
    "structure_json",
    "threshold_bounds",
    "threshold_sumset",
    "verify_structure",
]
