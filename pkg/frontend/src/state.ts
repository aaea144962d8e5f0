/** Viewer state and its pure transitions; DOM code lives elsewhere. */

import type { FeatureEntry, LayoutDocument, SubsetFile } from './types.js';

export type SortKey = 'rank' | 'name' | 'type' | 'importance';

export interface ViewerState {
    doc: LayoutDocument | null;
    selection: Set<string>;
    popupFeature: string | null;
    sortKey: SortKey;
    importedSubsets: SubsetFile[];
}

export function createState(): ViewerState {
    return {
        doc: null,
        selection: new Set(),
        popupFeature: null,
        sortKey: 'rank',
        importedSubsets: [],
    };
}

export function loadDocument(state: ViewerState, doc: LayoutDocument): void {
    state.doc = doc;
    state.selection.clear();
    state.popupFeature = null;
    state.importedSubsets = [];
}

function hasFeature(state: ViewerState, name: string): boolean {
    return state.doc !== null && state.doc.features.some((f) => f.name === name);
}

/** Add or remove a feature from the manual selection. */
export function toggleSelection(state: ViewerState, name: string): void {
    if (!hasFeature(state, name)) return;
    if (state.selection.has(name)) {
        state.selection.delete(name);
    } else {
        state.selection.add(name);
    }
}

/** At most one pop-up is visible; opening replaces any previous one. */
export function openPopup(state: ViewerState, name: string): void {
    state.popupFeature = hasFeature(state, name) ? name : null;
}

export function closePopup(state: ViewerState): void {
    state.popupFeature = null;
}

/** Register an imported subset; a third import replaces the oldest one. */
export function addImportedSubset(state: ViewerState, subset: SubsetFile): void {
    state.importedSubsets.push(subset);
    while (state.importedSubsets.length > 2) {
        state.importedSubsets.shift();
    }
}

export function sortedFeatures(doc: LayoutDocument, sortKey: SortKey): FeatureEntry[] {
    const features = [...doc.features];
    switch (sortKey) {
        case 'name':
            features.sort((a, b) => (a.name < b.name ? -1 : a.name > b.name ? 1 : 0));
            break;
        case 'type':
            features.sort((a, b) =>
                a.type < b.type ? -1 : a.type > b.type ? 1 : a.rank - b.rank,
            );
            break;
        case 'importance':
            features.sort((a, b) => b.importance - a.importance || a.rank - b.rank);
            break;
        default:
            features.sort((a, b) => a.rank - b.rank);
    }
    return features;
}

/** Selection in the subset-file format the CLI accepts, in rank order. */
export function exportSelection(state: ViewerState): SubsetFile {
    if (state.doc === null || state.selection.size === 0) {
        throw new Error('nothing selected to export');
    }
    const names = state.doc.features
        .filter((f) => state.selection.has(f.name))
        .sort((a, b) => a.rank - b.rank)
        .map((f) => f.name);
    return { label: 'manual selection', features: names };
}
