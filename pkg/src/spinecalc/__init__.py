"""Braid groups of star graphs via the one-dimensional k-spine D_k(S_n)."""

from .basis import (
    FreeWord,
    GeneratorSet,
    SpanningTree,
    basis,
    build_tree,
    loop_to_word,
    rank_formula,
)
from .embedding import EmbeddingMap, compatible_tree, embed, verify_monomorphism
from .retraction import HomotopyPath, RetractionTarget, homotopy, project_loop, retract, retract_target
from .spine import (
    SpineEdge,
    SpineGraph,
    SpinePoint,
    SpineVertex,
    VertexKind,
    build_spine,
    euler_characteristic,
    realize,
    snap,
    vertex_degree,
)
from .star import (
    CENTER,
    Configuration,
    NotRegularError,
    SpineError,
    StarParams,
    StarPoint,
    arm_set,
    hausdorff_distance,
    is_chain,
    is_regular,
    point_distance,
)

__version__ = "0.1.0"
