// @vitest-environment jsdom
/** Integration of the page wiring in main.ts: real events against the page skeleton. */
import { beforeAll, describe, expect, it, vi } from 'vitest';
import { readFileSync } from 'node:fs';
import { join } from 'node:path';

const layoutText = readFileSync(join(process.cwd(), 'tests/fixtures/layout.json'), 'utf-8');

beforeAll(async () => {
    document.body.innerHTML = `
      <div class="controls">
        <input type="file" id="layout-file">
        <input type="file" id="subset-file">
        <button id="export-btn" disabled>Export selection</button>
      </div>
      <div id="status"></div>
      <section id="grid"></section>
      <aside id="list"></aside>
    `;
    await import('../src/main.js');
});

describe('page wiring', () => {
    it('starts with the export button disabled and hinting at selection', () => {
        const button = document.getElementById('export-btn') as HTMLButtonElement;
        expect(button.disabled).toBe(true);
        expect(button.title.toLowerCase()).toContain('select');
    });

    it('loads a layout file and renders grid plus list', async () => {
        const input = document.getElementById('layout-file') as HTMLInputElement;
        const file = new File([layoutText], 'layout.json', { type: 'application/json' });
        Object.defineProperty(input, 'files', { value: [file], configurable: true });
        input.dispatchEvent(new Event('change'));
        await vi.waitFor(() => {
            expect(document.querySelectorAll('#grid g.cell').length).toBe(20);
        });
        expect(document.querySelectorAll('#list tbody tr').length).toBe(20);
        expect(document.getElementById('status')!.textContent).toContain('20 features');
    });

    it('plain click pops up feature info; mouse-leave hides it', () => {
        const cell = document.querySelector('#grid g.cell[data-name="user_age"]')!;
        cell.dispatchEvent(new MouseEvent('click', { bubbles: true }));
        const popup = document.querySelector('.feature-popup') as HTMLDivElement;
        expect(popup.style.display).toBe('block');
        expect(popup.textContent).toContain('user_age');
        cell.dispatchEvent(new MouseEvent('mouseleave'));
        expect(popup.style.display).toBe('none');
    });

    it('shift-click selects, draws the overlay, and enables export', () => {
        const cell = document.querySelector('#grid g.cell[data-name="ctr_7d"]')!;
        cell.dispatchEvent(new MouseEvent('click', { bubbles: true, shiftKey: true }));
        const button = document.getElementById('export-btn') as HTMLButtonElement;
        expect(button.disabled).toBe(false);
        expect(document.querySelectorAll('#grid g.live-overlays path').length).toBe(1);
        expect(document.getElementById('status')!.textContent).toContain(
            'manual selection: contour (1 cells)',
        );
        cell.dispatchEvent(new MouseEvent('click', { bubbles: true, shiftKey: true }));
        expect(button.disabled).toBe(true);
        expect(document.querySelectorAll('#grid g.live-overlays *').length).toBe(0);
    });
});
