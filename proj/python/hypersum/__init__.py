"""Exact and numeric verification of hypergeometric summation identities.

Exact values travel as canonical ``p/q`` strings; verification results are
dicts with ``identity_id``, ``params``, ``lhs``, ``rhs``, ``status``,
``error_kind`` and ``elapsed_micros`` keys.
"""

from hypersum._core import (  # noqa: F401
    HypersumError,
    a_inner,
    b_closed,
    binomial_matrix_self_inverse,
    binomial_transform_check,
    chu_vandermonde_step,
    eq2_consistency,
    eq3_lhs,
    eq3_rhs,
    eq6_lhs,
    eq6_rhs,
    gamma,
    pfaff_saalschutz,
    pochhammer,
    q_limit_check,
    rat_add,
    rat_mul,
    ratio_check,
    s_closed,
    s_closed_alt,
    s_direct,
    verify_bailey,
    verify_eq1,
    verify_eq3_point,
    verify_eq3_symbolic,
    verify_eq5_chain,
    verify_eq6,
    verify_prop2,
    watson_rhs,
    watson_series,
)

__all__ = [name for name in dir() if not name.startswith("_")]
