"""Categories, cofunctors and lenses enriched in a distributive monoidal base.

Structures are plain immutable data; ``check_*`` functions report, diagram
by diagram, whether the data obeys its laws.
"""
from .bases import (
    INF, FamBase, FinSetBase, FinVecBase, TropicalBase, make_fam, make_finset, make_finvec,
    make_tropical, make_wset,
)
from .bases.linear import free_linearization
from .cofun import (
    CofunctorTransformation, EnrichedCofunctor, check_cofunctor, check_cofunctor_transformation,
    compose_cofunctors, identity_cofunctor, identity_cofunctor_transformation,
    vcompose_cofunctor_transformations, whisker_left, whisker_right,
)
from .doublecat import (
    Cell, CompatibleSquare, EnrichedLens, cell_from_cofunctor_transformation, cell_from_functor_transformation,
    check_cell, check_compatible_square, check_lens, check_submetry, check_wset_strengthening, compose_lenses,
    embed_square, hcompose_cells, hpaste_squares, identity_cell_h, identity_cell_v, identity_lens,
    identity_square_h, identity_square_v, lens_to_square, vcompose_cells, vpaste_squares,
)
from .encat import (
    EnrichedCategory, EnrichedFunctor, FunctorTransformation, check_category, check_functor,
    check_functor_transformation, cograph_map, compose_functors, hcompose_functor_transformations,
    identity_functor, identity_transformation, vcompose_functor_transformations,
)
from .errors import (
    BaseMismatchError, BoundaryError, EnumerationBoundError, LawError, StructuralError, VcofError,
)
from .report import DiagramResult, Report
from .vbase import (
    Coproduct, MonoidalBase, copair, coproduct, distribute_left, distribute_right, distribute_sums,
    flatten, sum_map, undistribute_left, undistribute_right,
)

__version__ = "0.1.0"
