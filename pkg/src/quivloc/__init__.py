"""Exact combinatorics of localization for Nakajima quiver varieties."""

from .errors import (
    BudgetExceededError,
    InputError,
    InternalConsistencyError,
    NonGenericStabilityError,
    NotFlatError,
    QuivlocError,
    UnsupportedQuiverError,
)
from .localization import (
    Confidence,
    LocalizationOracle,
    Verdict,
    abelian_localization,
    derived_localization,
    finite_homological_dimension,
    gamma_exact,
    is_singular_parameter,
    o_regular,
    slice_transfer_check,
)
from .moment import FlatnessReport, RepType, is_flat, is_irreducible_dim, leaves_on_wall, minimal_leaf
from .presets import preset, preset_names
from .quiver import (
    Quiver,
    QuiverClass,
    Root,
    RootKind,
    cartan_matrix,
    cartan_pair,
    classify,
    delta,
    is_root,
    level,
    positive_roots_upto,
    tits_form,
)
from .slices import SliceData, rank1_slice, slice_quiver
from .walls import (
    HyperplaneFamily,
    Wall,
    classical_walls,
    dominant_instance,
    is_generic_stability,
    relevant_walls,
    singular_hyperplanes,
    verify_star,
)
from .weights import FramedWeight, dominant_conjugate, dominantize, is_dominant, is_weight, max_shift

__version__ = "0.1.0"
