"""Crystallographic arrangements and their Cartan schemes, in exact arithmetic."""

from .arrangement import (
    Chamber,
    ChamberGraph,
    RootSet,
    chamber_basis,
    enumerate_chambers,
    seed_chamber,
    validate_root_set,
    walls_of_chamber,
)
from .axioms import (
    AxiomReport,
    arrangement_equivalence,
    check_additive,
    check_crystallographic,
    positive_system,
)
from .cartan_scheme import (
    CartanScheme,
    VerificationReport,
    arrangement_from_object,
    build_scheme,
    is_connected,
    is_simply_connected,
    scheme_equivalence,
    verify_root_system,
    verify_scheme_axioms,
)
from .catalog import negative_examples, weyl_roots
from .exact_geometry import dual_basis, is_integer_vector, solve_linear

__version__ = "0.1.0"
