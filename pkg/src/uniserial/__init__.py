"""Uniserial categories: tubes, big tubes and their perpendicular reductions."""

from .errors import *  # noqa: F401,F403
from .fields import Field
from .paths import PathWitness, anchored_lift, anchored_order, anchored_sort, endo_simple_between, path_within_two
from .perpendicular import PerpPresentation, hom_via_window, perp
from .proalgebra import (
    InjectiveRay,
    PathCoalgebra,
    SeriesMatrixAlgebra,
    coalgebra_dual_check,
    comodule_coaction,
    inj_matrix_algebra,
    path_coalgebra,
    ray_compose,
    ray_hom,
)
from .series import TruncatedSeries
from .site import CoverPoint, Site, big_tube, line, tube
from .transport import Transport, rotation, shift_transport
from .tube import (
    ArData,
    HomSpace,
    IntervalObject,
    Morphism,
    SubobjectChain,
    ar_sequence,
    compose,
    ext_dim,
    has_epi,
    has_mono,
    hom_dim,
    hom_space,
    irreducibles_in,
    irreducibles_out,
    is_subobject,
    make_object,
    simple,
    subobject_chain,
    tau,
    tau_inv,
)

__version__ = "0.1.0"
