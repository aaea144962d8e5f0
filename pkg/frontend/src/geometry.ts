/** Overlay geometry, mirroring the engine's rules exactly so viewer-side
 *  styling matches what the CLI would render for the same subsets. */

export type Cell = [number, number];
export type Vertex = [number, number];

export const DEFAULT_OVERLAY_COLORS = ['#FFD700', '#FFFFFF'];

export interface SubsetInput {
    label: string;
    members: Set<string>;
    requestedColor?: string;
}

export interface ResolvedOverlay {
    label: string;
    style: 'contour' | 'dots';
    color: string;
    cells: Cell[];
    polygons: Vertex[][];
}

const key = (x: number, y: number) => `${x},${y}`;

/** Cell count and exposed unit-edge count of the rasterized union. */
export function areaPerimeter(cells: Cell[]): [number, number] {
    const cellset = new Set(cells.map(([x, y]) => key(x, y)));
    if (cellset.size === 0) {
        throw new Error('cell set must not be empty');
    }
    let perimeter = 0;
    for (const entry of cellset) {
        const [x, y] = entry.split(',').map(Number);
        for (const [dx, dy] of [[0, -1], [1, 0], [0, 1], [-1, 0]] as const) {
            if (!cellset.has(key(x + dx, y + dy))) perimeter += 1;
        }
    }
    return [cellset.size, perimeter];
}

function groups(cellset: Set<string>): Cell[][] {
    const remaining = new Set(cellset);
    const result: Cell[][] = [];
    while (remaining.size > 0) {
        let seed: Cell | null = null;
        for (const entry of remaining) {
            const [x, y] = entry.split(',').map(Number);
            if (seed === null || y < seed[1] || (y === seed[1] && x < seed[0])) {
                seed = [x, y];
            }
        }
        const stack: Cell[] = [seed!];
        remaining.delete(key(seed![0], seed![1]));
        const group: Cell[] = [];
        while (stack.length > 0) {
            const [x, y] = stack.pop()!;
            group.push([x, y]);
            for (const [nx, ny] of [[x, y - 1], [x + 1, y], [x, y + 1], [x - 1, y]] as Cell[]) {
                if (remaining.has(key(nx, ny))) {
                    remaining.delete(key(nx, ny));
                    stack.push([nx, ny]);
                }
            }
        }
        result.push(group);
    }
    return result;
}

function canonicalLoop(chain: Vertex[]): Vertex[] {
    const n = chain.length;
    const corners: Vertex[] = [];
    for (let k = 0; k < n; k += 1) {
        const prev = chain[(k + n - 1) % n];
        const cur = chain[k];
        const next = chain[(k + 1) % n];
        if (cur[0] - prev[0] !== next[0] - cur[0] || cur[1] - prev[1] !== next[1] - cur[1]) {
            corners.push(cur);
        }
    }
    let start = 0;
    for (let k = 1; k < corners.length; k += 1) {
        if (
            corners[k][1] < corners[start][1] ||
            (corners[k][1] === corners[start][1] && corners[k][0] < corners[start][0])
        ) {
            start = k;
        }
    }
    return corners.slice(start).concat(corners.slice(0, start));
}

/** Boundary loops of the union of unit squares, at grid-corner coordinates.
 *  Same conventions as the engine: outer loops clockwise on screen (y down),
 *  holes counter-clockwise, left turns at corner pinches, loops sorted by
 *  their minimal (y, x) vertex and starting there. */
export function traceContours(cells: Cell[]): Vertex[][] {
    const cellset = new Set(cells.map(([x, y]) => key(x, y)));
    if (cellset.size === 0) {
        throw new Error('cell set must not be empty');
    }
    const loops: Vertex[][] = [];
    for (const group of groups(cellset)) {
        const edges: [Vertex, Vertex][] = [];
        for (const [x, y] of group) {
            if (!cellset.has(key(x, y - 1))) edges.push([[x, y], [x + 1, y]]);
            if (!cellset.has(key(x + 1, y))) edges.push([[x + 1, y], [x + 1, y + 1]]);
            if (!cellset.has(key(x, y + 1))) edges.push([[x + 1, y + 1], [x, y + 1]]);
            if (!cellset.has(key(x - 1, y))) edges.push([[x, y + 1], [x, y]]);
        }
        edges.sort((a, b) =>
            a[0][1] - b[0][1] || a[0][0] - b[0][0] || a[1][1] - b[1][1] || a[1][0] - b[1][0],
        );
        const edgeKey = (u: Vertex, v: Vertex) => `${u[0]},${u[1]}|${v[0]},${v[1]}`;
        const outgoing = new Map<string, Vertex[]>();
        for (const [u, v] of edges) {
            const entry = outgoing.get(key(u[0], u[1]));
            if (entry) entry.push(v);
            else outgoing.set(key(u[0], u[1]), [v]);
        }
        const unused = new Set(edges.map(([u, v]) => edgeKey(u, v)));
        for (const [startU, startV] of edges) {
            if (!unused.has(edgeKey(startU, startV))) continue;
            const chain: Vertex[] = [startU];
            let u = startU;
            let v = startV;
            for (;;) {
                unused.delete(edgeKey(u, v));
                if (v[0] === startU[0] && v[1] === startU[1]) break;
                chain.push(v);
                const candidates = (outgoing.get(key(v[0], v[1])) ?? []).filter((w) =>
                    unused.has(edgeKey(v, w)),
                );
                let next: Vertex;
                if (candidates.length === 1) {
                    next = candidates[0];
                } else {
                    // corner pinch: turn left to keep the loop simple
                    const d: Vertex = [v[0] - u[0], v[1] - u[1]];
                    next = [v[0] + d[1], v[1] - d[0]];
                    if (!candidates.some((w) => w[0] === next[0] && w[1] === next[1])) {
                        throw new Error('contour tracing hit an inconsistent pinch vertex');
                    }
                }
                u = v;
                v = next;
            }
            loops.push(canonicalLoop(chain));
        }
    }
    loops.sort((a, b) => a[0][1] - b[0][1] || a[0][0] - b[0][0]);
    return loops;
}

/** Contour vs dots for one or two subsets: the higher area/perimeter ratio
 *  keeps the contour (ties favor the first subset), colors default to
 *  yellow then white. Mirrors the engine's resolve_styles. */
export function resolveStyles(
    subsets: SubsetInput[],
    positionsByName: Map<string, Cell>,
): ResolvedOverlay[] {
    if (subsets.length < 1 || subsets.length > 2) {
        throw new Error(`expected 1 or 2 subsets, got ${subsets.length}`);
    }
    const subsetCells: Cell[][] = subsets.map((subset) => {
        const cells: Cell[] = [];
        for (const name of [...subset.members].sort()) {
            const pos = positionsByName.get(name);
            if (!pos) {
                throw new Error(`subset "${subset.label}": unknown feature "${name}"`);
            }
            cells.push([pos[0], pos[1]]);
        }
        cells.sort((a, b) => a[1] - b[1] || a[0] - b[0]);
        return cells;
    });
    let styles: ('contour' | 'dots')[];
    if (subsets.length === 1) {
        styles = ['contour'];
    } else {
        const [areaA, perA] = areaPerimeter(subsetCells[0]);
        const [areaB, perB] = areaPerimeter(subsetCells[1]);
        styles = areaA * perB >= areaB * perA ? ['contour', 'dots'] : ['dots', 'contour'];
    }
    return subsets.map((subset, k) => ({
        label: subset.label,
        style: styles[k],
        color: subset.requestedColor ?? DEFAULT_OVERLAY_COLORS[k],
        cells: subsetCells[k],
        polygons: styles[k] === 'contour' ? traceContours(subsetCells[k]) : [],
    }));
}
