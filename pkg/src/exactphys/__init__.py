"""Integer-coded physical models with exact rational queries.

The package is organized in layers: `codes` holds the integer
encodings, `exactnum` the exact rational and interval arithmetic,
`topology`/`oracles` the effective-topology machinery, `models` the
model algebra, `catalog` the built-in models, and `kreisel` the
interval-arithmetic prediction bridge.  `cli` exposes all of it on the
command line.
"""

from .codes import (
    beta,
    bits_decode,
    bits_encode,
    interval_code,
    interval_decode,
    pair,
    rho,
    rho_inv,
    tuple_decode,
    tuple_encode,
    unpair,
    zeta,
    zeta_inv,
)
from .exactnum import (
    CIRCLE360,
    LINE,
    DecimalGridInterval,
    RatInterval,
    decimal_interval,
    frac_angle,
    interval_contains,
    interval_subset,
    parse_interval,
    parse_rational,
    rat_floor,
    wrap360,
)
from .topology import (
    BasicRep,
    EffectiveTopology,
    Fuel,
    Verdict,
    basic_rep_closed,
    basic_rep_open,
    effective_product,
    predicted_states,
    topology_circle360,
    topology_decimal_intervals,
    topology_rational_intervals,
)
from .oracles import (
    Oracle,
    check_nested_prefix,
    complete_oracle,
    convert_oracle,
    decimal_oracle_from_digits,
    nested_oracle,
    standard_decimal_oracle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
