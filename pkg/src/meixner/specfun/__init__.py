"""Special functions: Airy functions, the origin function D and auxiliary functions."""
from .airy import AiryQuad, airy, airy_complex, airy_mp, connection_check
from .auxiliary import (
    AuxValues,
    L_estimate,
    NodeGrid,
    aux_values,
    big_l,
    e_function,
    e_tilde,
    g_tilde,
    g_tilde_prime,
    h_log,
    h_tilde_log,
    v_function,
    v_prime,
    w_log,
)
from .dfunc import d_function

__all__ = [
    "AiryQuad", "airy", "airy_complex", "airy_mp", "connection_check",
    "d_function",
    "AuxValues", "NodeGrid", "aux_values", "v_function", "v_prime", "w_log", "h_log",
    "h_tilde_log", "e_function", "e_tilde", "g_tilde_prime", "g_tilde", "big_l", "L_estimate",
]
