"""Exact positive isomorphisms between spaces of continuous functions on countable ordinal intervals."""

from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Cmp,
    Ordinal,
    arith,
    compare,
    digits_base,
    divmod_base,
    format_ordinal,
    from_digits,
    fundamental_sequence,
    gamma,
    left_subtract,
    omega_pow,
    ordinal,
    parse,
    set_depth_cap,
)
from .catalog import DistanceBound, distance_bounds
from .families import build_c0_c, build_omega2_family, build_power_beta_iso, build_power_iso, build_Tk
from .operators import op_norm
from .topology import cb_derivative, classify, height
from .verify import verify_operator
from .weights import numeric_min_C, optimal_lambda

__version__ = "0.1.0"
