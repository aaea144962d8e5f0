"""Interaction-aware 2D grid layout and rendering for ML feature sets."""

from .exceptions import ValidationError
from .model import (
    FeatureRecord,
    FeatureTable,
    GridPos,
    Weights,
    build_table,
    normalize_importance,
)
from .interaction import (
    CooccurrenceCounts,
    InteractionMatrix,
    ValueMatrix,
    cooccurrence_interaction,
    load_interaction,
    pearson_interaction,
    zero_interaction,
)
from .layout import (
    Layout,
    LayoutConfig,
    LayoutResult,
    LossTerms,
    candidate_cells,
    candidate_radius,
    compute_layout,
    full_loss,
    greedy_place,
    loss_terms,
    postprocess,
)
from .overlay import (
    DEFAULT_OVERLAY_COLORS,
    FeatureSubset,
    OverlaySpec,
    area_perimeter,
    resolve_styles,
    trace_contours,
)
from .render import (
    DEFAULT_PALETTE,
    RenderConfig,
    RenderDocument,
    assign_colors,
    build_document,
    cell_fill,
    render,
    render_json,
    render_svg,
)
from .estimator import GridLayoutEstimator

__version__ = "0.1.0"

__all__ = [
    "CooccurrenceCounts",
    "DEFAULT_OVERLAY_COLORS",
    "DEFAULT_PALETTE",
    "FeatureRecord",
    "FeatureSubset",
    "FeatureTable",
    "GridLayoutEstimator",
    "GridPos",
    "InteractionMatrix",
    "Layout",
    "LayoutConfig",
    "LayoutResult",
    "LossTerms",
    "OverlaySpec",
    "RenderConfig",
    "RenderDocument",
    "ValidationError",
    "ValueMatrix",
    "Weights",
    "area_perimeter",
    "assign_colors",
    "build_document",
    "build_table",
    "candidate_cells",
    "candidate_radius",
    "cell_fill",
    "compute_layout",
    "cooccurrence_interaction",
    "full_loss",
    "greedy_place",
    "load_interaction",
    "loss_terms",
    "normalize_importance",
    "pearson_interaction",
    "postprocess",
    "render",
    "render_json",
    "render_svg",
    "resolve_styles",
    "trace_contours",
    "zero_interaction",
]
