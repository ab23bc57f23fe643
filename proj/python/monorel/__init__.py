"""Calculus of monotone linear relations on finite-dimensional Euclidean spaces.

The heavy lifting lives in the compiled extension ``monorel._monorel``;
this package re-exports its public surface.
"""

from ._monorel import (  # noqa: F401
    AffineSet,
    LinearRelation,
    MaximalityReport,
    MintyForm,
    NamedExample,
    Profile,
    Subspace,
    Tolerance,
    convexity_identity_check,
    conjugate_F,
    coupling_form,
    eval_F,
    eval_F_translated,
    example_by_name,
    from_minty,
    gap_probe_points,
    gossez_truncated,
    is_minty_full,
    is_monotone,
    is_skew,
    is_symmetric,
    maximal_extension,
    maximality_report,
    monotonically_related,
    ni_certificate,
    normal_cone_subspace,
    q_eval,
    r2_example,
    random_relation,
    recompose_check,
    regularization_gap,
    relation_from_json,
    relation_to_json,
    run_battery_json,
    skew_part,
    subdiff_qbar,
    symmetric_part,
    to_minty,
    truncated_shift,
    zero_cone,
)

__all__ = [name for name in dir() if not name.startswith("_")]
