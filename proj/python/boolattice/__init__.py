"""Exact overgroup-lattice computations in finite symmetric and alternating groups.

The heavy lifting lives in the compiled extension `boolattice._core`; this
package re-exports its public surface.
"""

from ._core import (  # noqa: F401
    GroupError,
    Group,
    IntervalLattice,
    Perm,
    constructed_partition_interval,
    constructed_product_interval,
    coset_generation_count,
    coset_representatives,
    enumerate_interval,
    even_part,
    group_from_json,
    induced_pair_action,
    intersect,
    is_maximal_subgroup,
    join,
    lattice_from_json,
    lattice_to_dot,
    list_cases,
    partition_atom_index,
    partition_chain,
    partition_stabilizer,
    product_atom_index,
    product_chain,
    product_structure_stabilizer,
    registry_group,
    run_case,
    structural_lemma_audit,
    subset_stabilizer,
    verify_theorem_bound,
)

__all__ = [
    "GroupError",
    "Group",
    "IntervalLattice",
    "Perm",
    "constructed_partition_interval",
    "constructed_product_interval",
    "coset_generation_count",
    "coset_representatives",
    "enumerate_interval",
    "even_part",
    "group_from_json",
    "induced_pair_action",
    "intersect",
    "is_maximal_subgroup",
    "join",
    "lattice_from_json",
    "lattice_to_dot",
    "list_cases",
    "partition_atom_index",
    "partition_chain",
    "partition_stabilizer",
    "product_atom_index",
    "product_chain",
    "product_structure_stabilizer",
    "registry_group",
    "run_case",
    "structural_lemma_audit",
    "subset_stabilizer",
    "verify_theorem_bound",
]
