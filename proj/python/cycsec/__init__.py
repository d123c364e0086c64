"""SEC separation engine for cycle problems."""

from ._cycsec import (
    FractionalPoint,
    cut_value,
    generate_cuts,
    generate_synthetic,
    oracle_enumerate,
    oracle_pairwise,
    parse_instance,
    run_strategy,
    sec_slack,
    separate,
    validate_point,
    write_instance,
)

__all__ = [
    "FractionalPoint",
    "cut_value",
    "generate_cuts",
    "generate_synthetic",
    "oracle_enumerate",
    "oracle_pairwise",
    "parse_instance",
    "run_strategy",
    "sec_slack",
    "separate",
    "validate_point",
    "write_instance",
]
