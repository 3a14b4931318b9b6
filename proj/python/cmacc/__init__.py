"""Multi-access coded caching from non-half-sum disjoint packings.

Exact quantities come back as ``int`` and ``fractions.Fraction``.
"""

from ._core import (
    PackingFamily,
    PdaArray,
    brute_force,
    build_pda,
    closed_form,
    construct_family,
    derive_trace,
    eval_cw,
    eval_hkd,
    eval_mr,
    eval_rk1,
    eval_spe,
    eval_sr2,
    eval_wcwl,
    our_points,
    pda_params,
    read_packing,
    read_pda,
    run_cli,
    scheme_params,
    simulate,
    verify_cma,
    verify_l_continuity,
    verify_nhsdp,
    verify_pda,
)

__all__ = [name for name in dir() if not name.startswith("_")]
