"""Exact computations around Breuil-Mezard cycle coefficients for split groups."""

from .asymptotics import (
    antisym_difference,
    degree_estimate,
    difference_element,
    difference_norm_sequence,
    exact_antisym_identity,
)
from .charring import (
    CharacterElement,
    antisymmetrize,
    dilate,
    kostant_multiplicity,
    kostant_partition,
    l1_norm,
    weyl_character,
    weyl_dimension,
)
from .coefficients import (
    BoundViolation,
    CycleCoefficients,
    HodgeType,
    NoTwistingElement,
    bm_coefficients,
    check_bounds,
    cycle_dimension,
    dimension_bookkeeping,
    enumerate_dominant_below,
    parse_weight,
    schubert_dimension,
)
from .fields import GF, QQ
from .grlattice import EConfig, adjoint_slope_check, flag_to_lattice, in_nabla, relative_position, wedge_condition
from .rootdata import (
    RootDatum,
    build_root_datum,
    dominance_leq,
    dominance_predicates,
    p_map,
    twisting_element,
)
from .series import PrecisionError, Series, SeriesMatrix
from .tensor import multi_tensor_decompose, product_decompose, straighten

__version__ = "0.1.0"
