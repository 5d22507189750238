"""Exact engine for conjugacy-class products in alternating groups.

Character values of Sym(n) and Alt(n) in exact arithmetic, class-product
membership through character sums, covering numbers, and the associated
verification sweeps, cross-checked against a brute-force permutation
oracle at small n.
"""

from .alt_group import (
    AltClass,
    NormalSet,
    class_size,
    delta,
    delta_bound_report,
    enumerate_alt_classes,
    inverse_class,
    is_even_type,
    is_exceptional,
    largest_class,
    long_cycle_classes,
    parse_class,
    parse_class_or_union,
)
from .characters import (
    AltChar,
    QuadValue,
    alt_char_for,
    alt_degree,
    alt_irreducibles,
    alt_value,
    character_table,
    degree,
    l_cycle_value,
    mn_value,
    parse_char,
)
from .errors import CapabilityError, ConsistencyError, UsageError
from .partitions import (
    Partition,
    conjugate,
    diagonal_hook_partition,
    enumerate_partitions,
    find_l_hook,
    hook_lengths,
    is_self_adjoint,
    parse_partition,
    remove_border_strips,
)
from .product_engine import (
    FrobeniusResult,
    check_dvir_rodgers,
    contains,
    covering_number,
    dvir_rodgers_applies,
    frobenius_sum,
    long_cycle_product_checks,
    power_covers,
    product_set,
    verify_four_class_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "AltChar",
    "AltClass",
    "CapabilityError",
    "ConsistencyError",
    "FrobeniusResult",
    "NormalSet",
    "Partition",
    "QuadValue",
    "UsageError",
    "alt_char_for",
    "alt_degree",
    "alt_irreducibles",
    "alt_value",
    "character_table",
    "check_dvir_rodgers",
    "class_size",
    "conjugate",
    "contains",
    "covering_number",
    "degree",
    "delta",
    "delta_bound_report",
    "diagonal_hook_partition",
    "dvir_rodgers_applies",
    "enumerate_alt_classes",
    "enumerate_partitions",
    "find_l_hook",
    "frobenius_sum",
    "hook_lengths",
    "inverse_class",
    "is_even_type",
    "is_exceptional",
    "is_self_adjoint",
    "l_cycle_value",
    "largest_class",
    "long_cycle_product_checks",
    "long_cycle_classes",
    "mn_value",
    "parse_char",
    "parse_class",
    "parse_class_or_union",
    "parse_partition",
    "power_covers",
    "product_set",
    "remove_border_strips",
    "verify_four_class_theorem",
]
