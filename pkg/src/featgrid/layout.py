"""Grid placement engine: loss evaluation, greedy placement, local-search refinement.

Placement minimizes a quadratic loss over distinct integer cells:

    sum_i I_i * sum_{j<i} G_ij * |p_i - p_j|^2        (interaction pull)
  + w1 * sum_i I_i * |p_i|^2                          (center pull)
  + w2 * sum_{i>=1} I_i * |p_i - p_{i-1}|^2           (rank-sequence pull)

Exact minimization is intractable, so features are placed one at a time in
rank order: each takes the unoccupied candidate cell minimizing a per-feature
proxy cost (the same three pulls, restricted to already-placed features and
with the importance factor dropped).  A windowed exhaustive-permutation pass
then refines the layout without ever increasing the loss.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ValidationError
from .interaction import InteractionMatrix
from .model import FeatureTable, GridPos, Weights

# Relative margin a permutation must clear to count as a strict improvement;
# keeps refinement monotone under floating-point re-summation and invariant
# under positive rescaling of all importances.
_IMPROVE_RTOL = 1e-12


@dataclass(frozen=True)
class LayoutConfig:
    """Knobs for greedy placement and the refinement pass."""

    weights: Weights = Weights()
    candidate_radius_override: int | None = None
    postprocess_passes: int = 3
    window_size: int = 4

    def __post_init__(self) -> None:
        if self.postprocess_passes < 0:
            raise ValidationError("postprocess_passes must be >= 0")
        # 6! = 720 permutations is the largest window worth exhausting
        if not 2 <= self.window_size <= 6:
            raise ValidationError(f"window_size must be in [2, 6], got {self.window_size}")
        if self.candidate_radius_override is not None and self.candidate_radius_override < 0:
            raise ValidationError("candidate_radius_override must be >= 0")


@dataclass(frozen=True)
class Layout:
    """Distinct grid cells, one per feature, aligned with table rank order."""

    coords: np.ndarray
    candidate_radius: int

    def __post_init__(self) -> None:
        coords = np.asarray(self.coords, dtype=np.int64)
        if coords.ndim != 2 or coords.shape[1] != 2:
            raise ValidationError(f"layout coords must have shape (n, 2), got {coords.shape}")
        if len(np.unique(coords, axis=0)) != len(coords):
            raise ValidationError("layout positions must be pairwise distinct")
        if len(coords) and int(np.abs(coords).max()) > self.candidate_radius:
            raise ValidationError(
                f"layout positions exceed candidate radius {self.candidate_radius}"
            )
        coords = np.ascontiguousarray(coords)
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def positions(self) -> tuple[GridPos, ...]:
        return tuple(GridPos(int(x), int(y)) for x, y in self.coords)


@dataclass(frozen=True)
class LossTerms:
    """Loss breakdown; center and seq already carry their weights."""

    main: float
    center: float
    seq: float

    @property
    def total(self) -> float:
        return self.main + self.center + self.seq


@dataclass(frozen=True)
class LayoutResult:
    """A refined layout plus diagnostics for reporting."""

    layout: Layout
    terms: LossTerms
    passes_run: int


def candidate_radius(n_features: int) -> int:
    """Smallest Chebyshev radius whose cell box holds at least 4x the features.

    The per-step continuous minimizer is a convex combination of the origin
    and already-placed cells, so the discrete argmin never drifts far; the 4x
    slack leaves head room around the occupied region.
    """
    if n_features < 1:
        raise ValidationError("need at least one feature")
    side = math.isqrt(4 * n_features - 1) + 1  # ceil(sqrt(4n))
    if side % 2 == 0:
        side += 1
    return (side - 1) // 2


def candidate_cells(radius: int) -> np.ndarray:
    """All cells with max(|x|, |y|) <= radius, ordered by (y, x) ascending.

    The ordering doubles as the tie-break rule: the first cell attaining the
    minimum cost wins.
    """
    r = np.arange(-radius, radius + 1, dtype=np.int64)
    xs, ys = np.meshgrid(r, r)
    return np.column_stack([xs.ravel(), ys.ravel()])


def _check_sizes(table: FeatureTable, interactions: InteractionMatrix, layout: Layout) -> None:
    if interactions.n != len(table):
        raise ValidationError(
            f"interaction matrix is {interactions.n}x{interactions.n} "
            f"but the table has {len(table)} features"
        )
    if len(layout) != len(table):
        raise ValidationError(
            f"layout has {len(layout)} positions but the table has {len(table)} features"
        )


def loss_terms(
    table: FeatureTable,
    interactions: InteractionMatrix,
    layout: Layout,
    weights: Weights | None = None,
) -> LossTerms:
    """Evaluate the placement loss, split into its three terms."""
    weights = weights if weights is not None else Weights()
    _check_sizes(table, interactions, layout)
    n = len(table)
    if n == 0:
        return LossTerms(0.0, 0.0, 0.0)
    imp = table.importance
    pos = layout.coords.astype(float)
    dx = pos[:, 0:1] - pos[:, 0:1].T
    dy = pos[:, 1:2] - pos[:, 1:2].T
    d2 = dx * dx + dy * dy
    pair = np.tril(interactions.values * d2, -1)
    main = float(imp @ pair.sum(axis=1))
    sq = (pos * pos).sum(axis=1)
    center = weights.w1 * float(imp @ sq)
    if n > 1:
        step = ((pos[1:] - pos[:-1]) ** 2).sum(axis=1)
        seq = weights.w2 * float(imp[1:] @ step)
    else:
        seq = 0.0
    return LossTerms(main, center, seq)


def full_loss(
    table: FeatureTable,
    interactions: InteractionMatrix,
    layout: Layout,
    weights: Weights | None = None,
) -> float:
    """Total placement loss of a layout."""
    return loss_terms(table, interactions, layout, weights).total


def _proxy_costs(
    g_row: np.ndarray,
    placed: np.ndarray,
    placed_sq: np.ndarray,
    cells: np.ndarray,
    cells_sq: np.ndarray,
    weights: Weights,
) -> np.ndarray:
    """Proxy cost of every candidate cell in O(1) per cell.

    The interaction pull expands as

        sum_j g_j |q - p_j|^2
            = (sum_j g_j) |q|^2  -  2 q . (sum_j g_j p_j)  +  sum_j g_j |p_j|^2

    so the per-step aggregates cost O(#placed) once and each candidate O(1).
    """
    cost = weights.w1 * cells_sq
    if len(placed):
        g_total = float(g_row.sum())
        g_moment = g_row @ placed
        g_norm = float(g_row @ placed_sq)
        cost += g_total * cells_sq - 2.0 * (cells @ g_moment) + g_norm
        prev = placed[-1]
        cost += weights.w2 * (cells_sq - 2.0 * (cells @ prev) + float(placed_sq[-1]))
    return cost


def greedy_place(
    table: FeatureTable,
    interactions: InteractionMatrix,
    config: LayoutConfig | None = None,
) -> Layout:
    """Place features one by one, each at the cheapest unoccupied cell.

    Candidates are scanned in (y, x) order, so equal costs resolve to the
    smallest y, then smallest x. The importance scores influence only the
    rank order, never the per-step cost, which makes the layout invariant
    under positive rescaling of all importances.
    """
    config = config if config is not None else LayoutConfig()
    n = len(table)
    if n == 0:
        raise ValidationError("cannot place an empty feature table")
    if interactions.n != n:
        raise ValidationError(
            f"interaction matrix is {interactions.n}x{interactions.n} "
            f"but the table has {n} features"
        )
    if config.candidate_radius_override is not None:
        radius = config.candidate_radius_override
    else:
        radius = candidate_radius(n)
    cells = candidate_cells(radius)
    if len(cells) < n:
        raise ValidationError(
            f"candidate box of radius {radius} has {len(cells)} cells; "
            f"cannot hold {n} features"
        )
    cells_f = cells.astype(float)
    cells_sq = (cells_f * cells_f).sum(axis=1)
    g = interactions.values
    taken = np.zeros(len(cells), dtype=bool)
    coords = np.zeros((n, 2), dtype=np.int64)
    coords_f = np.zeros((n, 2))
    placed_sq = np.zeros(n)
    for i in range(n):
        cost = _proxy_costs(
            g[i, :i], coords_f[:i], placed_sq[:i], cells_f, cells_sq, config.weights
        )
        cost[taken] = np.inf
        best = int(np.argmin(cost))
        coords[i] = cells[best]
        coords_f[i] = cells_f[best]
        placed_sq[i] = cells_sq[best]
        taken[best] = True
    return Layout(coords, radius)


def _window_members(coords: np.ndarray, i: int, size: int, ranks: np.ndarray) -> list[int]:
    """Feature i plus its nearest placed features; distance ties go to lower rank."""
    diff = coords - coords[i]
    d2 = (diff * diff).sum(axis=1)  # exact integer distances
    order = np.lexsort((ranks, d2))
    members = [i]
    for j in order:
        if j != i:
            members.append(int(j))
            if len(members) == size:
                break
    members.sort()
    return members


def _refine_window(
    window: list[int],
    coords: np.ndarray,
    imp: np.ndarray,
    g: np.ndarray,
    w1: float,
    w2: float,
) -> bool:
    """Exhaustively permute the window's features over the window's cells.

    All loss terms touching the window are folded into a per-(feature, slot)
    table plus slot-pair couplings, so each permutation evaluates in O(k^2)
    rather than a full loss recomputation. Adopts the best permutation only
    when it beats the current assignment beyond _IMPROVE_RTOL.
    """
    n = len(coords)
    k = len(window)
    slots = coords[window].astype(float)
    slot_sq = (slots * slots).sum(axis=1)
    pairwise = slots[:, None, :] - slots[None, :, :]
    slot_d2 = (pairwise * pairwise).sum(axis=2)
    inside = np.zeros(n, dtype=bool)
    inside[window] = True
    coords_f = coords.astype(float)
    all_sq = (coords_f * coords_f).sum(axis=1)
    ranks = np.arange(n)

    # single-feature terms: interactions with outside features, center pull,
    # and sequence pulls whose other endpoint sits outside the window
    table = np.empty((k, k))
    for a, f in enumerate(window):
        coeff = g[f] * np.where(ranks > f, imp, imp[f])
        coeff[inside] = 0.0
        c_total = float(coeff.sum())
        c_moment = coeff @ coords_f
        c_norm = float(coeff @ all_sq)
        row = c_total * slot_sq - 2.0 * (slots @ c_moment) + c_norm
        row += w1 * float(imp[f]) * slot_sq
        if f >= 1 and not inside[f - 1]:
            prev = coords_f[f - 1]
            row += w2 * float(imp[f]) * (slot_sq - 2.0 * (slots @ prev) + float(all_sq[f - 1]))
        if f + 1 < n and not inside[f + 1]:
            nxt = coords_f[f + 1]
            row += w2 * float(imp[f + 1]) * (slot_sq - 2.0 * (slots @ nxt) + float(all_sq[f + 1]))
        table[a] = row

    # couplings between two window features
    pair_terms: list[tuple[int, int, float]] = []
    for b in range(k):
        fb = window[b]
        for a in range(b):
            c = float(imp[fb]) * float(g[fb, window[a]])
            if c:
                pair_terms.append((b, a, c))
        if fb >= 1 and inside[fb - 1]:
            pair_terms.append((b, window.index(fb - 1), w2 * float(imp[fb])))

    table_rows = table.tolist()
    d2_rows = slot_d2.tolist()

    def assignment_value(perm: tuple[int, ...]) -> float:
        value = 0.0
        for a in range(k):
            value += table_rows[a][perm[a]]
        for b, a, c in pair_terms:
            value += c * d2_rows[perm[b]][perm[a]]
        return value

    identity = tuple(range(k))
    current = assignment_value(identity)
    best_value = current * (1.0 - _IMPROVE_RTOL)
    best_perm = None
    for perm in itertools.permutations(range(k)):
        if perm == identity:
            continue
        value = assignment_value(perm)
        if value < best_value:
            best_value = value
            best_perm = perm
    if best_perm is None:
        return False
    coords[window] = coords[window][list(best_perm)]
    return True


def _postprocess_impl(
    table: FeatureTable,
    interactions: InteractionMatrix,
    layout: Layout,
    config: LayoutConfig,
) -> tuple[Layout, int]:
    _check_sizes(table, interactions, layout)
    n = len(table)
    if n < 2 or config.postprocess_passes == 0:
        return layout, 0
    coords = np.array(layout.coords)
    imp = table.importance
    g = interactions.values
    w1, w2 = config.weights.w1, config.weights.w2
    size = min(config.window_size, n)
    ranks = np.arange(n)
    passes_run = 0
    for _ in range(config.postprocess_passes):
        passes_run += 1
        changed = False
        for i in range(n):
            window = _window_members(coords, i, size, ranks)
            if _refine_window(window, coords, imp, g, w1, w2):
                changed = True
        if not changed:
            break
    return Layout(coords, layout.candidate_radius), passes_run


def postprocess(
    table: FeatureTable,
    interactions: InteractionMatrix,
    layout: Layout,
    config: LayoutConfig | None = None,
) -> Layout:
    """Refine a layout by exhaustive permutation over small windows.

    Each pass visits features in rank order; a feature's window is itself
    plus its window_size - 1 nearest placed features. Passes stop early once
    a full sweep makes no change. The loss never increases.
    """
    config = config if config is not None else LayoutConfig()
    refined, _ = _postprocess_impl(table, interactions, layout, config)
    return refined


def compute_layout(
    table: FeatureTable,
    interactions: InteractionMatrix,
    config: LayoutConfig | None = None,
) -> LayoutResult:
    """Greedy placement followed by refinement, with loss diagnostics."""
    config = config if config is not None else LayoutConfig()
    placed = greedy_place(table, interactions, config)
    refined, passes_run = _postprocess_impl(table, interactions, placed, config)
    terms = loss_terms(table, interactions, refined, config.weights)
    return LayoutResult(refined, terms, passes_run)
