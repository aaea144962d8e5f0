import { describe, expect, it } from 'vitest';
import { readFileSync } from 'node:fs';
import { fileURLToPath } from 'node:url';

import { areaPerimeter, resolveStyles, traceContours, type Cell } from '../src/geometry.js';
import type { LayoutDocument, SubsetFile } from '../src/types.js';

const fixture = (name: string) =>
    readFileSync(fileURLToPath(new URL(`./fixtures/${name}`, import.meta.url)), 'utf-8');

const layout = JSON.parse(fixture('layout.json')) as LayoutDocument;
const top10 = JSON.parse(fixture('top10.json')) as SubsetFile;
const handpick = JSON.parse(fixture('handpick.json')) as SubsetFile;

const positions = new Map<string, Cell>(layout.features.map((f) => [f.name, [f.x, f.y]]));

describe('areaPerimeter', () => {
    it('matches the engine on the reference shapes', () => {
        expect(areaPerimeter([[0, 0], [1, 0], [0, 1], [1, 1]])).toEqual([4, 8]);
        expect(areaPerimeter([[0, 0], [1, 0], [2, 0], [3, 0]])).toEqual([4, 10]);
        expect(areaPerimeter([[0, 0]])).toEqual([1, 4]);
    });

    it('rejects empty sets', () => {
        expect(() => areaPerimeter([])).toThrow();
    });
});

describe('traceContours', () => {
    it('traces a unit square clockwise from its top-left corner', () => {
        expect(traceContours([[0, 0]])).toEqual([[[0, 0], [1, 0], [1, 1], [0, 1]]]);
    });

    it('merges collinear vertices', () => {
        expect(traceContours([[0, 0], [1, 0]])).toEqual([[[0, 0], [2, 0], [2, 1], [0, 1]]]);
    });

    it('keeps diagonal cells in separate loops', () => {
        expect(traceContours([[0, 0], [1, 1]])).toEqual([
            [[0, 0], [1, 0], [1, 1], [0, 1]],
            [[1, 1], [2, 1], [2, 2], [1, 2]],
        ]);
    });

    it('emits hole loops', () => {
        const ring: Cell[] = [];
        for (let x = 0; x < 3; x += 1) {
            for (let y = 0; y < 3; y += 1) {
                if (x !== 1 || y !== 1) ring.push([x, y]);
            }
        }
        const loops = traceContours(ring);
        expect(loops).toHaveLength(2);
        expect(loops[1]).toEqual([[1, 1], [1, 2], [2, 2], [2, 1]]);
    });

    it('keeps loop edge lengths equal to the perimeter on random sets', () => {
        let seed = 12345;
        const rand = () => {
            seed = (seed * 1103515245 + 12345) & 0x7fffffff;
            return seed / 0x7fffffff;
        };
        for (let round = 0; round < 50; round += 1) {
            const cells: Cell[] = [];
            const seen = new Set<string>();
            const count = 1 + Math.floor(rand() * 25);
            while (cells.length < count) {
                const x = Math.floor(rand() * 8) - 4;
                const y = Math.floor(rand() * 8) - 4;
                if (!seen.has(`${x},${y}`)) {
                    seen.add(`${x},${y}`);
                    cells.push([x, y]);
                }
            }
            const [, perimeter] = areaPerimeter(cells);
            let total = 0;
            for (const loop of traceContours(cells)) {
                for (let k = 0; k < loop.length; k += 1) {
                    const [x1, y1] = loop[k];
                    const [x2, y2] = loop[(k + 1) % loop.length];
                    total += Math.abs(x2 - x1) + Math.abs(y2 - y1);
                }
            }
            expect(total).toBe(perimeter);
        }
    });
});

describe('resolveStyles parity with the engine', () => {
    it('reproduces the golden overlays exactly', () => {
        const resolved = resolveStyles(
            [
                { label: top10.label, members: new Set(top10.features) },
                { label: handpick.label, members: new Set(handpick.features) },
            ],
            positions,
        );
        expect(resolved).toHaveLength(layout.overlays.length);
        for (let k = 0; k < resolved.length; k += 1) {
            const engine = layout.overlays[k];
            expect(resolved[k].label).toBe(engine.label);
            expect(resolved[k].style).toBe(engine.style);
            expect(resolved[k].color).toBe(engine.color);
            expect(resolved[k].cells).toEqual(engine.cells);
            expect(resolved[k].polygons).toEqual(engine.polygons);
        }
    });

    it('gives a single subset a contour', () => {
        const [only] = resolveStyles(
            [{ label: 'solo', members: new Set(top10.features) }],
            positions,
        );
        expect(only.style).toBe('contour');
        expect(only.polygons.length).toBeGreaterThan(0);
    });

    it('names unknown features in errors', () => {
        expect(() =>
            resolveStyles([{ label: 'bad', members: new Set(['ghost']) }], positions),
        ).toThrow(/ghost/);
    });

    it('rejects more than two subsets', () => {
        const one = { label: 'a', members: new Set(['ctr_7d']) };
        expect(() => resolveStyles([one, one, one], positions)).toThrow();
    });
});
