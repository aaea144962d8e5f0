/** Layout JSON document, schema_version 1 (produced by the featgrid CLI). */

export interface FeatureEntry {
    name: string;
    type: string;
    importance: number;
    rank: number;
    x: number;
    y: number;
    saturation: number;
    fill: string;
    stats: Record<string, string>;
}

export interface LegendEntry {
    type: string;
    color: string;
    count: number;
}

export interface OverlayEntry {
    label: string;
    style: 'contour' | 'dots';
    color: string;
    cells: [number, number][];
    polygons: [number, number][][];
}

export interface LossBlock {
    total: number;
    main: number;
    r_center: number;
    r_seq: number;
}

export interface LayoutDocument {
    schema_version: number;
    features: FeatureEntry[];
    legend: LegendEntry[];
    overlays: OverlayEntry[];
    annotation: string | null;
    loss: LossBlock | null;
}

/** Subset file format accepted by the CLI's --highlight flag. */
export interface SubsetFile {
    label: string;
    features: string[];
}

export function parseLayoutDocument(text: string): LayoutDocument {
    const doc = JSON.parse(text) as LayoutDocument;
    if (doc.schema_version !== 1) {
        throw new Error(`unsupported layout schema_version: ${doc.schema_version}`);
    }
    if (!Array.isArray(doc.features) || doc.features.length === 0) {
        throw new Error('layout document has no features');
    }
    return doc;
}

/** Parse a subset file: {label, features}, a bare array, or one name per line. */
export function parseSubsetFile(text: string, fallbackLabel: string): SubsetFile {
    const trimmed = text.trim();
    if (trimmed.startsWith('{') || trimmed.startsWith('[')) {
        const data = JSON.parse(trimmed);
        if (Array.isArray(data)) {
            return { label: fallbackLabel, features: data.map(String) };
        }
        if (data && Array.isArray(data.features)) {
            return { label: String(data.label ?? fallbackLabel), features: data.features.map(String) };
        }
        throw new Error('subset file needs a "features" array');
    }
    const names = trimmed
        .split(/[\n,]/)
        .map((s) => s.trim())
        .filter((s) => s.length > 0 && s.toLowerCase() !== 'name');
    if (names.length === 0) {
        throw new Error('subset file contains no feature names');
    }
    return { label: fallbackLabel, features: names };
}
