/** Sortable feature list; clicking a row highlights its grid square. */

import type { LayoutDocument } from './types.js';
import { sortedFeatures, type SortKey } from './state.js';

const COLUMNS: [SortKey, string][] = [
    ['rank', 'Rank'],
    ['name', 'Name'],
    ['type', 'Type'],
    ['importance', 'Importance'],
];

export function renderListPanel(
    doc: LayoutDocument,
    container: HTMLElement,
    sortKey: SortKey,
    onSort: (key: SortKey) => void,
    onRowClick: (name: string) => void,
): void {
    const table = document.createElement('table');
    table.className = 'feature-list';
    const head = table.createTHead().insertRow();
    for (const [key, title] of COLUMNS) {
        const cell = document.createElement('th');
        cell.textContent = sortKey === key ? `${title} ▾` : title;
        cell.dataset.sort = key;
        cell.addEventListener('click', () => onSort(key));
        head.appendChild(cell);
    }
    const body = table.createTBody();
    for (const feature of sortedFeatures(doc, sortKey)) {
        const row = body.insertRow();
        row.dataset.name = feature.name;
        row.insertCell().textContent = String(feature.rank);
        row.insertCell().textContent = feature.name;
        row.insertCell().textContent = feature.type;
        row.insertCell().textContent = String(feature.importance);
        row.addEventListener('click', () => onRowClick(feature.name));
    }
    container.replaceChildren(table);
}
