"""
towertk - Tower Toolkit

Exact computations with towers of algebras: induction and restriction of
explicit modules, Grothendieck-group structure constants, and checkers for
the conditions that make G0 and K0 a dual pair of graded Hopf algebras.
"""

__version__ = "0.1.0"

# Errors and configuration
from .errors import (
    TowerError,
    CombinatoricsError,
    DegreeOverflowError,
    StructureError,
    ModuleError,
    DecompositionError,
    InconclusiveError,
    UsageError,
)
from .config import EngineConfig, get_config, set_config

# Combinatorics
from .combinatorics import (
    Permutation,
    Composition,
    Partition,
    Word,
    alpha,
    omega,
    conjugate,
    mirror,
    compositions,
    partitions,
    permutations,
    descent_class,
    direct_sum,
    shuffle,
    shuffle_split,
    min_coset_reps,
    weak_order_leq,
)

# Algebras and modules
from .algebra import AlgebraPresentation, TensorAlgebra, EmbeddingMap, tensor_algebra
from .modules import ModuleRep, dim_hom, hom_space, regular_module, left_ideal_module

# Hopf data
from .hopf import (
    GrothendieckVector,
    GradedHopfData,
    PairingMatrix,
    antipode,
    check_antipode,
    check_bialgebra,
    check_duality,
    check_AsAs,
    dual_hopf_data,
)

# Towers
from .tower import (
    Tower,
    induce,
    restrict,
    check_conditions12,
    check_condition3,
    check_condition5,
    check_pairing,
    pairing_dim_hom,
    pairing_matrix,
    load_tower,
    tower_names,
)
from .symmetric import SymmetricTower, ClassFunction, character_table, frobenius_ch
from .hecke import HeckeTower, HeckeElement, eta, nu, module_isomorphic
from .z2 import Z2Tower, TSWord, z2_condition5_witness

# Reports
from .report import CheckReport, ReportWriter
from .golden import check_golden

# CLI
from .cli import main as cli_main

__all__ = [
    "__version__",

    # Errors and configuration
    "TowerError",
    "CombinatoricsError",
    "DegreeOverflowError",
    "StructureError",
    "ModuleError",
    "DecompositionError",
    "InconclusiveError",
    "UsageError",
    "EngineConfig",
    "get_config",
    "set_config",

    # Combinatorics
    "Permutation",
    "Composition",
    "Partition",
    "Word",
    "alpha",
    "omega",
    "conjugate",
    "mirror",
    "compositions",
    "partitions",
    "permutations",
    "descent_class",
    "direct_sum",
    "shuffle",
    "shuffle_split",
    "min_coset_reps",
    "weak_order_leq",

    # Algebras and modules
    "AlgebraPresentation",
    "TensorAlgebra",
    "EmbeddingMap",
    "tensor_algebra",
    "ModuleRep",
    "dim_hom",
    "hom_space",
    "regular_module",
    "left_ideal_module",

    # Hopf data
    "GrothendieckVector",
    "GradedHopfData",
    "PairingMatrix",
    "antipode",
    "check_antipode",
    "check_bialgebra",
    "check_duality",
    "check_AsAs",
    "dual_hopf_data",

    # Towers
    "Tower",
    "induce",
    "restrict",
    "check_conditions12",
    "check_condition3",
    "check_condition5",
    "check_pairing",
    "pairing_dim_hom",
    "pairing_matrix",
    "load_tower",
    "tower_names",
    "SymmetricTower",
    "ClassFunction",
    "character_table",
    "frobenius_ch",
    "HeckeTower",
    "HeckeElement",
    "eta",
    "nu",
    "module_isomorphic",
    "Z2Tower",
    "TSWord",
    "z2_condition5_witness",

    # Reports
    "CheckReport",
    "ReportWriter",
    "check_golden",

    # CLI
    "cli_main",
]
