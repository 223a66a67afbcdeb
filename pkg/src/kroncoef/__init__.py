"""Exact Kronecker and reduced Kronecker coefficients of symmetric groups,
computed through the partition algebra and cross-checked against character
theory, together with the underlying set-partition diagram calculus."""

from .diagram_algebra import (
    AlgebraElement,
    SetPartitionDiagram,
    StandardModule,
    compose,
    crossing_profile,
    dim_standard,
    generator_e,
    generator_s,
    propagating_count,
    restrict_multiplicity,
    standard_module,
)
from .kronecker import (
    FormulaRangeError,
    SweepBounds,
    kron_hook,
    kron_two_row,
    kron_via_blocks,
    kron_via_dagger,
    kron_via_oracle,
    reduced_kron,
    reduced_kron_via_lr,
    stability_bound,
)
from .lr import lr_coeff, lr_coeff3
from .partitions import (
    BlockChain,
    PaddedPartition,
    Partition,
    block_chain,
    conjugate,
    content_last,
    dagger,
    is_n_pair,
    pad,
    partitions_of,
    partitions_up_to,
)
from .sym_characters import (
    CharacterTable,
    SpechtModel,
    character,
    character_table,
    class_size,
    induction_mult,
    kron_oracle,
    specht_dim,
    specht_model,
)

__version__ = "0.1.0"
