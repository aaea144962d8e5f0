/** Page wiring: file loading, event handlers, live overlay refresh. */

import { parseLayoutDocument, parseSubsetFile } from './types.js';
import type { LayoutDocument } from './types.js';
import {
    addImportedSubset,
    closePopup,
    createState,
    exportSelection,
    loadDocument,
    openPopup,
    toggleSelection,
    type SortKey,
} from './state.js';
import { resolveStyles, type Cell, type SubsetInput } from './geometry.js';
import { focusCell, renderGrid, renderLiveOverlays } from './render.js';
import { renderListPanel } from './listpanel.js';
import { buildPopup, hidePopup, showPopup } from './popup.js';

const state = createState();
let svg: SVGSVGElement | null = null;
const popup = buildPopup();

const gridHost = document.getElementById('grid')!;
const listHost = document.getElementById('list')!;
const statusLine = document.getElementById('status')!;
const layoutInput = document.getElementById('layout-file') as HTMLInputElement;
const subsetInput = document.getElementById('subset-file') as HTMLInputElement;
const exportButton = document.getElementById('export-btn') as HTMLButtonElement;

function positionsByName(doc: LayoutDocument): Map<string, Cell> {
    return new Map(doc.features.map((f) => [f.name, [f.x, f.y] as Cell]));
}

function liveSubsets(): SubsetInput[] {
    const subsets: SubsetInput[] = [];
    if (state.selection.size > 0) {
        subsets.push({ label: 'manual selection', members: new Set(state.selection) });
    }
    for (const imported of state.importedSubsets) {
        subsets.push({ label: imported.label, members: new Set(imported.features) });
    }
    return subsets.slice(0, 2);
}

function refreshOverlays(): void {
    if (!state.doc || !svg) return;
    const subsets = liveSubsets();
    try {
        const resolved = subsets.length > 0 ? resolveStyles(subsets, positionsByName(state.doc)) : [];
        renderLiveOverlays(state.doc, svg, resolved);
        statusLine.textContent = resolved
            .map((o) => `${o.label}: ${o.style} (${o.cells.length} cells)`)
            .join(' | ');
    } catch (err) {
        statusLine.textContent = String(err);
    }
}

function refreshExportButton(): void {
    const empty = state.selection.size === 0;
    exportButton.disabled = empty;
    exportButton.title = empty
        ? 'Shift-click grid squares to build a selection first'
        : `Export ${state.selection.size} selected features`;
}

function handleCellClick(name: string, event: MouseEvent): void {
    if (!state.doc) return;
    if (event.shiftKey) {
        toggleSelection(state, name);
        refreshOverlays();
        refreshExportButton();
        return;
    }
    openPopup(state, name);
    const feature = state.doc.features.find((f) => f.name === name);
    if (feature) {
        showPopup(popup, feature, { x: event.clientX, y: event.clientY });
    }
}

function handleCellLeave(): void {
    closePopup(state);
    hidePopup(popup);
}

function renderAll(): void {
    if (!state.doc) return;
    svg = renderGrid(state.doc, gridHost, {
        onCellClick: handleCellClick,
        onCellLeave: handleCellLeave,
    });
    renderListPanel(state.doc, listHost, state.sortKey, handleSort, handleRowClick);
    refreshOverlays();
    refreshExportButton();
}

function handleSort(key: SortKey): void {
    state.sortKey = key;
    if (state.doc) {
        renderListPanel(state.doc, listHost, state.sortKey, handleSort, handleRowClick);
    }
}

function handleRowClick(name: string): void {
    if (svg) focusCell(svg, name);
}

layoutInput.addEventListener('change', async () => {
    const file = layoutInput.files?.[0];
    if (!file) return;
    try {
        loadDocument(state, parseLayoutDocument(await file.text()));
        hidePopup(popup);
        renderAll();
        statusLine.textContent = `loaded ${state.doc!.features.length} features`;
    } catch (err) {
        statusLine.textContent = String(err);
    }
});

subsetInput.addEventListener('change', async () => {
    const file = subsetInput.files?.[0];
    if (!file || !state.doc) return;
    try {
        const label = file.name.replace(/\.[^.]*$/, '');
        addImportedSubset(state, parseSubsetFile(await file.text(), label));
        refreshOverlays();
    } catch (err) {
        statusLine.textContent = String(err);
    }
    subsetInput.value = '';
});

exportButton.addEventListener('click', () => {
    if (state.selection.size === 0) return;
    const subset = exportSelection(state);
    const blob = new Blob([JSON.stringify(subset, null, 2) + '\n'], {
        type: 'application/json',
    });
    const link = document.createElement('a');
    link.href = URL.createObjectURL(blob);
    link.download = 'selection.json';
    link.click();
    URL.revokeObjectURL(link.href);
});

refreshExportButton();
