"""Exact character-level tools for Galois-Jacobi sums and unramified characteristics."""
from .cyclo import Cyclotomic, cyc_add, cyc_inv, cyc_mul, galois_act, sign_of_real
from .errors import (
    DomainError,
    GalJacobiError,
    IndeterminateSignError,
    InputError,
    InternalConsistencyError,
    InvalidAutomorphismError,
    PrecisionExhaustedError,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    conjugacy,
    group_cyclic,
    group_dihedral,
    group_direct_product,
    group_metacyclic,
    group_quaternion,
    is_normal,
    quotient,
    subgroup_generated,
)
from .chartab import (
    CharacterTable,
    ClassFunction,
    adams,
    char_table,
    det_char,
    frobenius_schur,
    induce,
    inflate,
    inner_product,
    restrict,
    symplectic_chars,
)
from .center import (
    CentralElement,
    central_induce,
    from_group_algebra,
    is_rational_equivariant,
    is_symplectic_positive,
    twist_endo,
)
from .localext import (
    LocalExtensionData,
    closed_form_twisted_y,
    different_valuation,
    equivariant_y,
    freeness_congruence,
    is_weakly_ramified,
    sqrt_inv_different,
    twisted_y,
    unramified_characteristic,
    unramified_part,
)
from .gauss import (
    FiniteFieldData,
    TameAbelianLocalDatum,
    equivariant_J2,
    equivariant_tau,
    finite_field,
    gauss_sum,
    modified_tau,
    tame_tau,
)
from .globalext import (
    UNKNOWN,
    GlobalExtensionData,
    PlaceRecord,
    assemble_global_J2,
    equivariant_symplectic_J,
    global_twisted_y,
    global_y,
    symplectic_sign,
)

__version__ = "0.1.0"
