"""Exact augmented racks over finite-dimensional Hopf algebras and their Yang-Baxter operators."""

from caryb.constructions import (
    DEFAULT_CAP,
    CapExceeded,
    adjoint_rack,
    double_rack,
    heap_rack,
    power_rack,
    trivial_rack,
)
from caryb.groups import GroupTable, builtin, cyclic, dihedral, symmetric
from caryb.hopf import (
    HopfAlgebra,
    check_antipode_twist,
    check_hopf,
    check_hopf_axioms,
    function_algebra,
    group_algebra,
    is_cocommutative,
    is_involutory,
)
from caryb.linalg import UNIT, BasedSpace, LinMap, Vector, apply, compose, identity, tensor, transposition
from caryb.modcoalg import (
    AugmentedRack,
    ModuleCoalgebra,
    check_action_compatibility,
    check_augmentation,
    check_coalgebra_morphism,
    check_module_coalgebra,
    check_rack_homomorphism,
    make_augmented_rack,
)
from caryb.report import CertificationError, Check, Report
from caryb.scalars import GF, QQ
from caryb.ybe import (
    braiding,
    check_braiding_decomposition,
    check_hexagons,
    check_sd_comult_compatibility,
    check_self_distributive,
    check_ybe,
    r_inverse,
    r_matrix,
    sd_map,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentedRack",
    "BasedSpace",
    "CapExceeded",
    "CertificationError",
    "Check",
    "DEFAULT_CAP",
    "GF",
    "GroupTable",
    "HopfAlgebra",
    "LinMap",
    "ModuleCoalgebra",
    "QQ",
    "Report",
    "UNIT",
    "Vector",
    "adjoint_rack",
    "apply",
    "braiding",
    "builtin",
    "check_action_compatibility",
    "check_antipode_twist",
    "check_augmentation",
    "check_braiding_decomposition",
    "check_coalgebra_morphism",
    "check_hexagons",
    "check_hopf",
    "check_hopf_axioms",
    "check_module_coalgebra",
    "check_rack_homomorphism",
    "check_sd_comult_compatibility",
    "check_self_distributive",
    "check_ybe",
    "compose",
    "cyclic",
    "dihedral",
    "double_rack",
    "function_algebra",
    "group_algebra",
    "heap_rack",
    "identity",
    "is_cocommutative",
    "is_involutory",
    "make_augmented_rack",
    "power_rack",
    "r_inverse",
    "r_matrix",
    "sd_map",
    "symmetric",
    "tensor",
    "transposition",
    "trivial_rack",
]
