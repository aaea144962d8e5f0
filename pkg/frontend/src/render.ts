/** SVG DOM construction. Positions, fills and ranks come verbatim from the
 *  layout JSON; this module never recomputes the layout. */

import type { LayoutDocument, OverlayEntry } from './types.js';
import type { ResolvedOverlay } from './geometry.js';

export const CELL_PX = 28;
export const GAP_PX = 2;
export const PITCH = CELL_PX + GAP_PX;
export const MARGIN = 16;

const SVG_NS = 'http://www.w3.org/2000/svg';

export interface GridHandlers {
    onCellClick?: (name: string, event: MouseEvent) => void;
    onCellLeave?: (name: string) => void;
}

interface GridGeometry {
    minX: number;
    minY: number;
}

function geometry(doc: LayoutDocument): GridGeometry {
    return {
        minX: Math.min(...doc.features.map((f) => f.x)),
        minY: Math.min(...doc.features.map((f) => f.y)),
    };
}

export function cellOrigin(doc: LayoutDocument, x: number, y: number): [number, number] {
    const { minX, minY } = geometry(doc);
    return [MARGIN + (x - minX) * PITCH, MARGIN + (y - minY) * PITCH];
}

function el<K extends keyof SVGElementTagNameMap>(
    tag: K,
    attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
    const node = document.createElementNS(SVG_NS, tag);
    for (const [name, value] of Object.entries(attrs)) {
        node.setAttribute(name, value);
    }
    return node;
}

function overlayNodes(
    doc: LayoutDocument,
    overlay: Pick<OverlayEntry, 'style' | 'color' | 'cells' | 'polygons'>,
): SVGElement[] {
    const nodes: SVGElement[] = [];
    if (overlay.style === 'contour') {
        const parts = overlay.polygons.map(
            (loop) =>
                'M ' +
                loop
                    .map(([vx, vy]) => {
                        const [px, py] = cellOrigin(doc, vx, vy);
                        return `${px - GAP_PX / 2} ${py - GAP_PX / 2}`;
                    })
                    .join(' L ') +
                ' Z',
        );
        nodes.push(
            el('path', {
                d: parts.join(' '),
                fill: 'none',
                stroke: overlay.color,
                'stroke-width': '3',
            }),
        );
    } else {
        for (const [cx, cy] of overlay.cells) {
            const [px, py] = cellOrigin(doc, cx, cy);
            nodes.push(
                el('circle', {
                    cx: String(px + CELL_PX / 2),
                    cy: String(py + CELL_PX / 2),
                    r: String(CELL_PX * 0.16),
                    fill: overlay.color,
                    stroke: '#555555',
                    'stroke-width': '0.8',
                }),
            );
        }
    }
    return nodes;
}

/** Build the grid SVG for a loaded document and mount it into container. */
export function renderGrid(
    doc: LayoutDocument,
    container: HTMLElement,
    handlers: GridHandlers = {},
): SVGSVGElement {
    const maxX = Math.max(...doc.features.map((f) => f.x));
    const maxY = Math.max(...doc.features.map((f) => f.y));
    const { minX, minY } = geometry(doc);
    const width = MARGIN * 2 + (maxX - minX + 1) * PITCH - GAP_PX;
    const height = MARGIN * 2 + (maxY - minY + 1) * PITCH - GAP_PX;
    const svg = el('svg', {
        width: String(width),
        height: String(height),
        viewBox: `0 0 ${width} ${height}`,
        class: 'feature-grid',
    });
    for (const feature of doc.features) {
        const [px, py] = cellOrigin(doc, feature.x, feature.y);
        const group = el('g', { class: 'cell' });
        group.dataset.name = feature.name;
        const rect = el('rect', {
            x: String(px),
            y: String(py),
            width: String(CELL_PX),
            height: String(CELL_PX),
            fill: feature.fill,
        });
        const label = el('text', {
            x: String(px + CELL_PX / 2),
            y: String(py + CELL_PX / 2),
            'text-anchor': 'middle',
            'dominant-baseline': 'central',
            'font-size': '11',
        });
        label.textContent = String(feature.rank);
        group.append(rect, label);
        if (handlers.onCellClick) {
            group.addEventListener('click', (event) =>
                handlers.onCellClick!(feature.name, event as MouseEvent),
            );
        }
        if (handlers.onCellLeave) {
            group.addEventListener('mouseleave', () => handlers.onCellLeave!(feature.name));
        }
        svg.append(group);
    }
    const baked = el('g', { class: 'baked-overlays' });
    for (const overlay of doc.overlays) {
        for (const node of overlayNodes(doc, overlay)) baked.append(node);
    }
    svg.append(baked);
    svg.append(el('g', { class: 'live-overlays' }));
    container.replaceChildren(svg);
    return svg;
}

/** Redraw the live overlays (manual selection and imported subsets). */
export function renderLiveOverlays(
    doc: LayoutDocument,
    svg: SVGSVGElement,
    overlays: ResolvedOverlay[],
): void {
    const layer = svg.querySelector('g.live-overlays');
    if (!layer) return;
    layer.replaceChildren();
    for (const overlay of overlays) {
        for (const node of overlayNodes(doc, overlay)) layer.append(node);
    }
}

/** Outline one square (list-panel linkage); clears any previous focus. */
export function focusCell(svg: SVGSVGElement, name: string): void {
    for (const node of svg.querySelectorAll('g.cell.focused')) {
        node.classList.remove('focused');
    }
    const quoted = name.replace(/["\\]/g, '\\$&');
    const target = svg.querySelector(`g.cell[data-name="${quoted}"]`);
    if (target) {
        target.classList.add('focused');
        (target as SVGGElement & { scrollIntoView?: (o: object) => void }).scrollIntoView?.({
            block: 'nearest',
            inline: 'nearest',
        });
    }
}
