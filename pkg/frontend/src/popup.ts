/** Feature info pop-up: opens on click, hides when the mouse leaves the square. */

import type { FeatureEntry } from './types.js';

export function buildPopup(): HTMLDivElement {
    const popup = document.createElement('div');
    popup.className = 'feature-popup';
    popup.style.display = 'none';
    document.body.appendChild(popup);
    return popup;
}

export function showPopup(
    popup: HTMLDivElement,
    feature: FeatureEntry,
    anchor?: { x: number; y: number },
): void {
    const rows: [string, string][] = [
        ['type', feature.type],
        ['importance', String(feature.importance)],
        ['rank', String(feature.rank)],
        ...Object.entries(feature.stats),
    ];
    popup.replaceChildren();
    const title = document.createElement('div');
    title.className = 'popup-title';
    title.textContent = feature.name;
    popup.appendChild(title);
    for (const [key, value] of rows) {
        const row = document.createElement('div');
        row.className = 'popup-row';
        row.textContent = `${key}: ${value}`;
        popup.appendChild(row);
    }
    if (anchor) {
        popup.style.left = `${anchor.x + 14}px`;
        popup.style.top = `${anchor.y + 6}px`;
    }
    popup.style.display = 'block';
}

export function hidePopup(popup: HTMLDivElement): void {
    popup.style.display = 'none';
}

export function popupVisible(popup: HTMLDivElement): boolean {
    return popup.style.display !== 'none';
}
