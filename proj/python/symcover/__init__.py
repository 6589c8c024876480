"""Covering numbers of characters of symmetric groups.

Partitions are tuples of positive integers in weakly decreasing order. Lists
of partitions, and the keys of decomposition dictionaries, follow the
canonical order in which (n) comes first and (1, ..., 1) last.
"""

from ._core import (
    CacheError,
    InvalidArgument,
    NotACharacter,
    TableError,
    character_table,
    character_value,
    conjugate,
    covering,
    dihedral_table_json,
    generic_covering,
    kronecker,
    partition_count,
    partitions_of,
    power,
    power_support,
    verify_brauer,
    verify_non_rectangle,
    verify_rectangle,
    verify_semigroup,
    verify_table1,
    verify_theorem1,
    verify_theta_move,
)

__all__ = [
    "CacheError",
    "InvalidArgument",
    "NotACharacter",
    "TableError",
    "character_table",
    "character_value",
    "conjugate",
    "covering",
    "dihedral_table_json",
    "generic_covering",
    "kronecker",
    "partition_count",
    "partitions_of",
    "power",
    "power_support",
    "verify_brauer",
    "verify_non_rectangle",
    "verify_rectangle",
    "verify_semigroup",
    "verify_table1",
    "verify_theorem1",
    "verify_theta_move",
]
