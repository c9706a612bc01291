/* tslint:disable */
/* eslint-disable */

export class MeshView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly h: number;
    readonly minQuality: number;
    /**
     * `min(q1, q2)` per triangle.
     */
    readonly quality: Float64Array;
    readonly triangles: Uint32Array;
    readonly vertices: Float64Array;
}

export class SolutionView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly mesh: MeshView;
    readonly pressure: Float64Array;
    /**
     * Error report as JSON.
     */
    readonly report: string;
    /**
     * Linear part of the velocity at the vertices, `ux0, uy0, ux1, ...`.
     */
    readonly velocity: Float64Array;
}

export function generateMesh(problem_id: number, h0: number): MeshView;

export function rates(problem_id: number, h0s: Float64Array): string;

export function solve(problem_id: number, h0: number): SolutionView;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_meshview_free: (a: number, b: number) => void;
    readonly __wbg_solutionview_free: (a: number, b: number) => void;
    readonly generateMesh: (a: number, b: number) => [number, number, number];
    readonly meshview_h: (a: number) => number;
    readonly meshview_minQuality: (a: number) => number;
    readonly meshview_quality: (a: number) => [number, number];
    readonly meshview_triangles: (a: number) => [number, number];
    readonly meshview_vertices: (a: number) => [number, number];
    readonly rates: (a: number, b: number, c: number) => [number, number, number, number];
    readonly solutionview_mesh: (a: number) => number;
    readonly solutionview_pressure: (a: number) => [number, number];
    readonly solutionview_report: (a: number) => [number, number];
    readonly solutionview_velocity: (a: number) => [number, number];
    readonly solve: (a: number, b: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
