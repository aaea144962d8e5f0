"""Command-line entry point: files in, grid layout + SVG/JSON out.

Exit codes: 0 success, 1 I/O error, 2 validation error.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, replace
from pathlib import Path

from .exceptions import ValidationError
from .interaction import cooccurrence_interaction, pearson_interaction, zero_interaction
from .io import (
    parse_features,
    read_cooccurrence,
    read_interaction_matrix,
    read_subset,
    read_value_matrix,
)
from .layout import LayoutConfig, compute_layout
from .model import Weights
from .overlay import resolve_styles
from .render import RenderConfig, render

INTERACTION_MODES = ("pearson", "cooccurrence", "matrix", "none")


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation, fully resolved."""

    features_path: str
    interaction_mode: str = "none"
    interaction_path: str | None = None
    weights: Weights = Weights()
    passes: int = 3
    window_size: int = 4
    radius: int | None = None
    highlight_paths: tuple[str, ...] = ()
    highlight_colors: tuple[str, ...] = ()
    annotation: str | None = None
    out_svg: str = "layout.svg"
    out_json: str = "layout.json"
    cell_px: int = 28

    def __post_init__(self) -> None:
        if self.interaction_mode not in INTERACTION_MODES:
            raise ValidationError(
                f"interaction mode must be one of {', '.join(INTERACTION_MODES)}, "
                f"got {self.interaction_mode!r}"
            )
        if self.interaction_mode != "none" and not self.interaction_path:
            raise ValidationError(
                f"--interaction {self.interaction_mode} requires --interaction-file"
            )
        if self.interaction_mode == "none" and self.interaction_path:
            raise ValidationError("--interaction-file given but --interaction is 'none'")
        if len(self.highlight_paths) > 2:
            raise ValidationError(
                f"at most 2 --highlight subsets are supported, got {len(self.highlight_paths)}"
            )
        if len(self.highlight_colors) > len(self.highlight_paths):
            raise ValidationError("more --highlight-color values than --highlight subsets")


def _build_interaction(config: RunConfig, table):
    mode = config.interaction_mode
    if mode == "none":
        return zero_interaction(len(table))
    if mode == "pearson":
        return pearson_interaction(read_value_matrix(config.interaction_path, table))
    if mode == "cooccurrence":
        return cooccurrence_interaction(read_cooccurrence(config.interaction_path, table))
    return read_interaction_matrix(config.interaction_path, table)


def run(config: RunConfig) -> int:
    """Execute one layout run and write the SVG and JSON outputs."""
    start = time.perf_counter()
    table = parse_features(config.features_path)
    interactions = _build_interaction(config, table)
    layout_config = LayoutConfig(
        weights=config.weights,
        candidate_radius_override=config.radius,
        postprocess_passes=config.passes,
        window_size=config.window_size,
    )
    result = compute_layout(table, interactions, layout_config)
    overlays = []
    if config.highlight_paths:
        subsets = []
        for k, subset_path in enumerate(config.highlight_paths):
            subset = read_subset(subset_path)
            if k < len(config.highlight_colors):
                subset = replace(subset, requested_color=config.highlight_colors[k])
            subsets.append(subset)
        overlays = resolve_styles(subsets, result.layout, table)
    render_config = RenderConfig(cell_px=config.cell_px, annotation=config.annotation)
    svg_text, json_text = render(result.layout, table, overlays, render_config, result.terms)
    Path(config.out_svg).write_text(svg_text, encoding="utf-8")
    Path(config.out_json).write_text(json_text, encoding="utf-8")
    elapsed = time.perf_counter() - start
    terms = result.terms
    print(
        f"n={len(table)} radius={result.layout.candidate_radius} "
        f"loss={terms.total:.9g} (main={terms.main:.9g} r_center={terms.center:.9g} "
        f"r_seq={terms.seq:.9g}) passes={result.passes_run} time={elapsed:.2f}s"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="featgrid",
        description="Place ML features on a 2D grid by interaction-aware "
        "optimization and render the result as SVG + JSON.",
    )
    parser.add_argument("--features", required=True, help="feature CSV or JSON file")
    parser.add_argument(
        "--interaction", default="none", choices=INTERACTION_MODES,
        help="how to derive pairwise interactions (default: none)",
    )
    parser.add_argument(
        "--interaction-file",
        help="values CSV (pearson), triplet CSV (cooccurrence) or matrix CSV (matrix)",
    )
    parser.add_argument("--w1", type=float, default=0.05, help="center-pull weight")
    parser.add_argument("--w2", type=float, default=0.02, help="rank-sequence weight")
    parser.add_argument("--passes", type=int, default=3, help="refinement passes (default 3)")
    parser.add_argument("--window", type=int, default=4, help="refinement window size, 2-6")
    parser.add_argument("--radius", type=int, default=None, help="override candidate box radius")
    parser.add_argument(
        "--highlight", action="append", default=[], metavar="SUBSET_FILE",
        help="subset file to overlay; repeat for a second subset (max 2)",
    )
    parser.add_argument(
        "--highlight-color", action="append", default=[], metavar="COLOR",
        help="override a subset color, in --highlight order",
    )
    parser.add_argument("--annotate", default=None, help="text drawn at the top right")
    parser.add_argument("--out-svg", default="layout.svg", help="output SVG path")
    parser.add_argument("--out-json", default="layout.json", help="output JSON path")
    parser.add_argument("--cell-px", type=int, default=28, help="cell size in pixels")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            features_path=args.features,
            interaction_mode=args.interaction,
            interaction_path=args.interaction_file,
            weights=Weights(args.w1, args.w2),
            passes=args.passes,
            window_size=args.window,
            radius=args.radius,
            highlight_paths=tuple(args.highlight),
            highlight_colors=tuple(args.highlight_color),
            annotation=args.annotate,
            out_svg=args.out_svg,
            out_json=args.out_json,
            cell_px=args.cell_px,
        )
        return run(config)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
