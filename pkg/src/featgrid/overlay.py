"""Subset overlays: contour-vs-dots styling and cell-union boundary tracing.

When two subsets compete for attention, the more compact one (higher
area/perimeter ratio) keeps its contour and the other falls back to
per-cell dots, which stay readable even when the subset is scattered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import ValidationError
from .layout import Layout
from .model import FeatureTable, GridPos

DEFAULT_OVERLAY_COLORS = ("#FFD700", "#FFFFFF")

Vertex = tuple[int, int]


@dataclass(frozen=True)
class FeatureSubset:
    """A named set of feature names to highlight."""

    label: str
    members: frozenset[str]
    requested_color: str | None = None

    def __post_init__(self) -> None:
        if not self.label:
            raise ValidationError("subset label must be non-empty")
        if not self.members:
            raise ValidationError(f"subset {self.label!r} has no members")


@dataclass(frozen=True)
class OverlaySpec:
    """A subset resolved against a layout: style, color, cells, contours."""

    subset: FeatureSubset
    style: str  # "contour" | "dots"
    color: str
    cells: tuple[GridPos, ...]
    polygons: tuple[tuple[Vertex, ...], ...] = ()


def area_perimeter(cells: Iterable[GridPos | tuple[int, int]]) -> tuple[int, int]:
    """Cell count and exposed unit-edge count of the rasterized union."""
    cellset = {(int(x), int(y)) for x, y in cells}
    if not cellset:
        raise ValidationError("cell set must not be empty")
    perimeter = sum(
        1
        for x, y in cellset
        for dx, dy in ((0, -1), (1, 0), (0, 1), (-1, 0))
        if (x + dx, y + dy) not in cellset
    )
    return len(cellset), perimeter


def _groups(cellset: set[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """4-connected components; diagonal-touching cells stay separate."""
    remaining = set(cellset)
    groups = []
    while remaining:
        seed = min(remaining, key=lambda c: (c[1], c[0]))
        stack = [seed]
        remaining.discard(seed)
        group = []
        while stack:
            x, y = stack.pop()
            group.append((x, y))
            for nb in ((x, y - 1), (x + 1, y), (x, y + 1), (x - 1, y)):
                if nb in remaining:
                    remaining.discard(nb)
                    stack.append(nb)
        groups.append(group)
    return groups


def _canonical_loop(chain: list[Vertex]) -> list[Vertex]:
    """Merge collinear vertices and rotate so the minimal (y, x) vertex leads."""
    n = len(chain)
    corners = []
    for k in range(n):
        prev, cur, nxt = chain[k - 1], chain[k], chain[(k + 1) % n]
        if (cur[0] - prev[0], cur[1] - prev[1]) != (nxt[0] - cur[0], nxt[1] - cur[1]):
            corners.append(cur)
    start = min(range(len(corners)), key=lambda k: (corners[k][1], corners[k][0]))
    return corners[start:] + corners[:start]


def trace_contours(cells: Iterable[GridPos | tuple[int, int]]) -> list[list[Vertex]]:
    """Boundary loops of the union of unit squares, at grid-corner coordinates.

    Cell (x, y) spans corners (x, y)..(x+1, y+1). Boundary edges are directed
    so the interior stays on the walker's right: outer loops come out
    clockwise in screen coordinates (y down) and hole loops counter-clockwise.
    Where two cells of one group touch only at a corner, the walk turns left,
    which keeps each loop simple. Loops are emitted in ascending order of
    their minimal (y, x) vertex and start at that vertex.
    """
    cellset = {(int(x), int(y)) for x, y in cells}
    if not cellset:
        raise ValidationError("cell set must not be empty")
    loops: list[list[Vertex]] = []
    for group in _groups(cellset):
        edges: dict[Vertex, list[Vertex]] = {}
        for x, y in group:
            if (x, y - 1) not in cellset:
                edges.setdefault((x, y), []).append((x + 1, y))
            if (x + 1, y) not in cellset:
                edges.setdefault((x + 1, y), []).append((x + 1, y + 1))
            if (x, y + 1) not in cellset:
                edges.setdefault((x + 1, y + 1), []).append((x, y + 1))
            if (x - 1, y) not in cellset:
                edges.setdefault((x, y + 1), []).append((x, y))
        unused = {(u, v) for u, ends in edges.items() for v in ends}
        while unused:
            u0, v0 = min(unused, key=lambda e: (e[0][1], e[0][0], e[1][1], e[1][0]))
            chain = [u0]
            u, v = u0, v0
            while True:
                unused.discard((u, v))
                if v == u0:
                    break
                chain.append(v)
                outs = [w for w in edges[v] if (v, w) in unused]
                if len(outs) == 1:
                    nxt = outs[0]
                else:
                    # corner pinch: turn left to keep the loop simple
                    d = (v[0] - u[0], v[1] - u[1])
                    nxt = (v[0] + d[1], v[1] - d[0])
                    if nxt not in outs:
                        raise RuntimeError("contour tracing hit an inconsistent pinch vertex")
                u, v = v, nxt
            loops.append(_canonical_loop(chain))
    loops.sort(key=lambda loop: (loop[0][1], loop[0][0]))
    return loops


def resolve_styles(
    subsets: Sequence[FeatureSubset],
    layout: Layout,
    table: FeatureTable,
) -> list[OverlaySpec]:
    """Assign contour/dots styles to one or two subsets.

    A lone subset always gets a contour. With two, the higher area/perimeter
    ratio wins the contour (compared exactly in integer arithmetic); on a tie
    the first-listed subset wins. Colors default to yellow then white unless
    the subset requests one.
    """
    subsets = list(subsets)
    if not 1 <= len(subsets) <= 2:
        raise ValidationError(f"expected 1 or 2 subsets, got {len(subsets)}")
    if len(layout) != len(table):
        raise ValidationError(
            f"layout has {len(layout)} positions but the table has {len(table)} features"
        )
    index = table.index_by_name
    subset_cells: list[list[GridPos]] = []
    for subset in subsets:
        cells = []
        for name in sorted(subset.members):
            if name not in index:
                raise ValidationError(f"subset {subset.label!r}: unknown feature {name!r}")
            x, y = layout.coords[index[name]]
            cells.append(GridPos(int(x), int(y)))
        cells.sort(key=lambda c: (c.y, c.x))
        subset_cells.append(cells)
    if len(subsets) == 1:
        styles = ["contour"]
    else:
        area_a, per_a = area_perimeter(subset_cells[0])
        area_b, per_b = area_perimeter(subset_cells[1])
        # area_a/per_a >= area_b/per_b, cross-multiplied to avoid float ties
        if area_a * per_b >= area_b * per_a:
            styles = ["contour", "dots"]
        else:
            styles = ["dots", "contour"]
    specs = []
    for k, (subset, cells, style) in enumerate(zip(subsets, subset_cells, styles)):
        color = subset.requested_color or DEFAULT_OVERLAY_COLORS[k]
        if style == "contour":
            polygons = tuple(tuple(loop) for loop in trace_contours(cells))
        else:
            polygons = ()
        specs.append(OverlaySpec(subset, style, color, tuple(cells), polygons))
    return specs
