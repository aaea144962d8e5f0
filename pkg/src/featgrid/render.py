"""Deterministic SVG and JSON rendering of a layout.

Output is byte-stable: fixed attribute order, fixed number formatting, no
locale or platform dependence. Hover tooltips are embedded as SVG <title>
elements so plain viewers show feature details without the browser app.
"""

from __future__ import annotations

import json
import warnings
from collections import Counter
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .exceptions import ValidationError
from .layout import Layout, LossTerms
from .model import FeatureTable, normalize_importance, round_half_away
from .overlay import OverlaySpec

DEFAULT_PALETTE = (
    "#4477AA", "#EE6677", "#228833", "#CCBB44", "#66CCEE", "#AA3377",
    "#EE8866", "#44BB99", "#BBCC33", "#99DDFF", "#882255", "#BBBBBB",
)

_MARGIN = 16
_LEGEND_GAP = 24
_SWATCH = 14

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RenderConfig:
    """Visual knobs; defaults draw 28 px squares with 2 px gaps."""

    cell_px: int = 28
    gap_px: int = 2
    palette: tuple[str, ...] = DEFAULT_PALETTE
    annotation: str | None = None
    font_family: str = "Helvetica, Arial, sans-serif"
    label_font_px: int = 11
    legend_font_px: int = 13
    annotation_font_px: int = 14

    def __post_init__(self) -> None:
        if not self.palette:
            raise ValidationError("palette must not be empty")
        if self.gap_px < 0 or self.cell_px <= self.gap_px:
            raise ValidationError(
                f"need cell_px > gap_px >= 0, got cell_px={self.cell_px}, gap_px={self.gap_px}"
            )


@dataclass(frozen=True)
class CellSpec:
    name: str
    type_tag: str
    importance: float
    rank: int
    x: int
    y: int
    saturation: int
    fill: str
    stats: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class LegendEntry:
    type_tag: str
    color: str
    count: int


@dataclass(frozen=True)
class RenderDocument:
    """Fully resolved visual model, ready for SVG or JSON serialization."""

    cells: tuple[CellSpec, ...]
    legend: tuple[LegendEntry, ...]
    overlays: tuple[OverlaySpec, ...]
    annotation: str | None
    loss: LossTerms | None


def assign_colors(table: FeatureTable, palette: tuple[str, ...] = DEFAULT_PALETTE) -> dict[str, str]:
    """Map type tags to palette colors: most common type first, names break ties."""
    if not palette:
        raise ValidationError("palette must not be empty")
    counts = Counter(rec.type_tag for rec in table)
    ordered = sorted(counts, key=lambda tag: (-counts[tag], tag))
    if len(ordered) > len(palette):
        warnings.warn(
            f"{len(ordered)} feature types exceed the {len(palette)}-color palette; "
            "colors will repeat",
            stacklevel=2,
        )
    return {tag: palette[k % len(palette)] for k, tag in enumerate(ordered)}


def cell_fill(base_color: str, saturation: int) -> str:
    """Interpolate per channel from white (saturation 0) to the base color (255)."""
    r, g, b = _parse_hex(base_color)
    return "#{:02X}{:02X}{:02X}".format(
        _mix(r, saturation), _mix(g, saturation), _mix(b, saturation)
    )


def _mix(channel: int, saturation: int) -> int:
    return round_half_away(255.0 - (255.0 - channel) * saturation / 255.0)


def _parse_hex(color: str) -> tuple[int, int, int]:
    if len(color) != 7 or not color.startswith("#"):
        raise ValidationError(f"expected #RRGGBB color, got {color!r}")
    try:
        return int(color[1:3], 16), int(color[3:5], 16), int(color[5:7], 16)
    except ValueError:
        raise ValidationError(f"expected #RRGGBB color, got {color!r}") from None


def build_document(
    layout: Layout,
    table: FeatureTable,
    overlays: tuple[OverlaySpec, ...] | list[OverlaySpec] = (),
    config: RenderConfig | None = None,
    loss: LossTerms | None = None,
) -> RenderDocument:
    """Resolve colors, saturations and legend counts into a render model."""
    config = config if config is not None else RenderConfig()
    if len(layout) != len(table):
        raise ValidationError(
            f"layout has {len(layout)} positions but the table has {len(table)} features"
        )
    if len(table) == 0:
        raise ValidationError("cannot render an empty feature table")
    colors = assign_colors(table, config.palette)
    saturations = normalize_importance(table)
    cells = tuple(
        CellSpec(
            name=rec.name,
            type_tag=rec.type_tag,
            importance=rec.importance,
            rank=i + 1,
            x=int(layout.coords[i, 0]),
            y=int(layout.coords[i, 1]),
            saturation=saturations[i],
            fill=cell_fill(colors[rec.type_tag], saturations[i]),
            stats=rec.stats,
        )
        for i, rec in enumerate(table)
    )
    counts = Counter(rec.type_tag for rec in table)
    legend = tuple(
        LegendEntry(tag, colors[tag], counts[tag])
        for tag in sorted(counts, key=lambda tag: (-counts[tag], tag))
    )
    return RenderDocument(cells, legend, tuple(overlays), config.annotation, loss)


def _fmt(value: float) -> str:
    """Pixel coordinate formatting: integers bare, halves with one decimal."""
    if value == int(value):
        return str(int(value))
    return f"{value:.1f}"


def render_svg(doc: RenderDocument, config: RenderConfig | None = None) -> str:
    config = config if config is not None else RenderConfig()
    cell = config.cell_px
    gap = config.gap_px
    pitch = cell + gap
    min_x = min(c.x for c in doc.cells)
    max_x = max(c.x for c in doc.cells)
    min_y = min(c.y for c in doc.cells)
    max_y = max(c.y for c in doc.cells)
    grid_w = (max_x - min_x + 1) * pitch - gap
    grid_h = (max_y - min_y + 1) * pitch - gap
    top = _MARGIN + (config.annotation_font_px + 8 if doc.annotation else 0)
    ox, oy = _MARGIN, top

    legend_row = config.legend_font_px + 7
    legend_texts = [f"{e.type_tag} ({e.count})" for e in doc.legend]
    text_w = max((len(t) for t in legend_texts), default=0)
    legend_w = _SWATCH + 8 + round_half_away(text_w * config.legend_font_px * 0.62)
    legend_x = ox + grid_w + _LEGEND_GAP
    width = legend_x + legend_w + _MARGIN
    height = oy + max(grid_h, len(doc.legend) * legend_row) + _MARGIN

    def cell_px_pos(x: int, y: int) -> tuple[float, float]:
        return ox + (x - min_x) * pitch, oy + (y - min_y) * pitch

    def corner_px(vx: int, vy: int) -> tuple[float, float]:
        return (
            ox + (vx - min_x) * pitch - gap / 2.0,
            oy + (vy - min_y) * pitch - gap / 2.0,
        )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#FFFFFF"/>',
    ]
    for spec in doc.cells:
        px, py = cell_px_pos(spec.x, spec.y)
        title = escape(spec.name)
        for key, value in spec.stats:
            title += f"&#10;{escape(key)}: {escape(value)}"
        lines.append(f'<g class="cell" data-name="{escape(spec.name, {chr(34): "&quot;"})}">')
        lines.append(f"<title>{title}</title>")
        lines.append(
            f'<rect x="{_fmt(px)}" y="{_fmt(py)}" width="{cell}" height="{cell}" '
            f'fill="{spec.fill}"/>'
        )
        lines.append(
            f'<text x="{_fmt(px + cell / 2.0)}" y="{_fmt(py + cell / 2.0)}" '
            f'text-anchor="middle" dominant-baseline="central" '
            f'font-family="{config.font_family}" font-size="{config.label_font_px}" '
            f'fill="#111111">{spec.rank}</text>'
        )
        lines.append("</g>")
    for overlay in doc.overlays:
        if overlay.style == "contour":
            parts = []
            for loop in overlay.polygons:
                coords = [corner_px(vx, vy) for vx, vy in loop]
                parts.append(
                    "M " + " L ".join(f"{_fmt(px)} {_fmt(py)}" for px, py in coords) + " Z"
                )
            lines.append(
                f'<path d="{" ".join(parts)}" fill="none" stroke="{overlay.color}" '
                f'stroke-width="3" stroke-linejoin="miter"/>'
            )
        else:
            radius = _fmt(cell * 0.16)
            for cx, cy in overlay.cells:
                px, py = cell_px_pos(cx, cy)
                lines.append(
                    f'<circle cx="{_fmt(px + cell / 2.0)}" cy="{_fmt(py + cell / 2.0)}" '
                    f'r="{radius}" fill="{overlay.color}" stroke="#555555" '
                    f'stroke-width="0.8"/>'
                )
    for k, entry in enumerate(doc.legend):
        row_y = oy + k * legend_row
        lines.append(
            f'<rect x="{legend_x}" y="{row_y}" width="{_SWATCH}" height="{_SWATCH}" '
            f'fill="{entry.color}" stroke="#999999" stroke-width="0.5"/>'
        )
        lines.append(
            f'<text x="{legend_x + _SWATCH + 8}" y="{row_y + _SWATCH - 3}" '
            f'font-family="{config.font_family}" font-size="{config.legend_font_px}" '
            f'fill="#111111">{escape(legend_texts[k])}</text>'
        )
    if doc.annotation:
        lines.append(
            f'<text x="{width - _MARGIN}" y="{_MARGIN + config.annotation_font_px - 4}" '
            f'text-anchor="end" font-family="{config.font_family}" '
            f'font-size="{config.annotation_font_px}" fill="#111111">'
            f"{escape(doc.annotation)}</text>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_json(doc: RenderDocument) -> str:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "features": [
            {
                "name": c.name,
                "type": c.type_tag,
                "importance": c.importance,
                "rank": c.rank,
                "x": c.x,
                "y": c.y,
                "saturation": c.saturation,
                "fill": c.fill,
                "stats": dict(c.stats),
            }
            for c in doc.cells
        ],
        "legend": [
            {"type": e.type_tag, "color": e.color, "count": e.count} for e in doc.legend
        ],
        "overlays": [
            {
                "label": o.subset.label,
                "style": o.style,
                "color": o.color,
                "cells": [[cx, cy] for cx, cy in o.cells],
                "polygons": [[[vx, vy] for vx, vy in loop] for loop in o.polygons],
            }
            for o in doc.overlays
        ],
        "annotation": doc.annotation,
        "loss": None
        if doc.loss is None
        else {
            "total": doc.loss.total,
            "main": doc.loss.main,
            "r_center": doc.loss.center,
            "r_seq": doc.loss.seq,
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def render(
    layout: Layout,
    table: FeatureTable,
    overlays: tuple[OverlaySpec, ...] | list[OverlaySpec] = (),
    config: RenderConfig | None = None,
    loss: LossTerms | None = None,
) -> tuple[str, str]:
    """Render a layout to (SVG text, layout JSON text)."""
    config = config if config is not None else RenderConfig()
    doc = build_document(layout, table, overlays, config, loss)
    return render_svg(doc, config), render_json(doc)
