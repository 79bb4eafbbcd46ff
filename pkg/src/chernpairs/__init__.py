"""Chern classes of globally generated rank two bundles on the projective plane.

The integer side decides which pairs ``(c1, c2)`` occur; the point-set side
computes the linear-algebra invariants (Hilbert functions, numerical
characters, Cayley-Bacharach, global generation, complete intersections)
used to check the ingredients on explicit examples.
"""

from .chern import (
    EMBEDDING_CHERN_PAIRS,
    Case,
    ChernPair,
    Classification,
    ExistenceRecipe,
    Path,
    bidegrees,
    classify,
    effective_set,
    embedding_bidegrees,
    euler_chi,
    existence_recipe,
    g_dual,
    gap_set,
    is_admissible,
    le_potier_gg_moduli_nonempty,
    plane_genus,
    window_t,
)
from .generators import CollinearPlus, Generic, OnCurve, gen_points
from .globalgen import GGVerdict, is_gg
from .intervals import IntervalList
from .liaison import (
    check_cb_residuel_instance,
    check_exist_gaps_instance,
    check_trou_instance,
    ci_residual,
    make_transverse_ci,
)
from .linalg import FieldSpec, Matrix, kernel_basis, mat_rank
from .luroth import luroth_contains, luroth_gaps
from .pointfile import load_point_set, parse_point_set
from .points import (
    CurveForm,
    NumericalCharacter,
    PointSet,
    character_gap_indices,
    character_is_connected,
    evaluation_matrix,
    h0_ideal,
    h1_ideal,
    hilbert,
    is_cb,
    monomial_basis,
    numerical_character,
    sigma,
)

__version__ = "0.1.0"
