"""Finite monoid tables, precartesian analysis of their maps, total
monoids of lax actions, cleavages, parametrized automorphisms, and the
degree-two cohomology that classifies commutative-kernel extensions."""

from .automorphism import AutTriple, aut_A, brute_force_aut, compute_C, rho
from .catalog import entries_of_kind, load_catalog, standard_catalog, write_catalog
from .cleavage import (
    Cleavage,
    canonical_cleavage,
    cleavage_change,
    cleavage_from_kappa,
    enumerate_cleavages,
    extract_action,
    extract_lax_hom,
    matches_up_to_unit_twist,
    pointed_unit_maps,
    reconstruct,
    transport,
    transport_tau,
)
from .cohomology import (
    Cocycle1,
    Cocycle2,
    CocycleClass,
    ExtensionRecord,
    NModule,
    aut_subgroups,
    c1_group,
    c2_group,
    coboundary_shift,
    cohomologous,
    congruent,
    enumerate_cocycles,
    extension_from_cocycle,
    extension_module,
    h2,
    lambda1,
    lambda2,
    trivial_cocycle,
    trivial_module,
    twist_automorphism,
    verify_exact_sequences,
    verify_h2_bijection,
    verify_round_trip,
    z1_cocycles,
    z1_iso,
)
from .errors import (
    BadIdentity,
    ComposabilityError,
    InvalidCocycle,
    NotAHomomorphism,
    NotAnAction,
    NotAssociative,
    NotCartesian,
    NotPrefibration,
    NotRegular,
    NotRegularSchreier,
    ShapeError,
    SizeLimit,
    ToolkitError,
    VerificationError,
)
from .fibration import (
    CartesianReport,
    analyze,
    check_closure_lemmas,
    compose_check,
    is_cartesian,
    is_cartesian_morphism,
    is_precartesian,
)
from .generate import (
    cyclic_group,
    cyclic_monoid,
    full_transformation,
    generate,
    klein_four,
    quaternion_group,
    truncated_addition,
)
from .groth import GrothMonoid, groth, groth_on_cell, groth_on_hom, groth_projection_report
from .laxaction import (
    LaxAction,
    LaxHom,
    TwoCell,
    compose_lax_homs,
    identity_lax_hom,
    strictify,
    trivial_action,
    validate_lax,
    validate_two_cell,
    vertical_composite,
)
from .monoid import (
    FiniteMonoid,
    MonoidHom,
    Submonoid,
    automorphism_group,
    compose,
    find_isomorphism,
    identity_hom,
    kernel,
    make_hom,
    make_monoid,
    opposite,
    product_monoid,
    pullback,
    set_size_limit,
    trivial_hom,
    units,
)
from .suite import SCOPES, run_suite
from .verdict import Verdict, all_pass, first_failure

__version__ = "0.1.0"
