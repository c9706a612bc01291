/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_meshview_free: (a: number, b: number) => void;
export const __wbg_solutionview_free: (a: number, b: number) => void;
export const generateMesh: (a: number, b: number) => [number, number, number];
export const meshview_h: (a: number) => number;
export const meshview_minQuality: (a: number) => number;
export const meshview_quality: (a: number) => [number, number];
export const meshview_triangles: (a: number) => [number, number];
export const meshview_vertices: (a: number) => [number, number];
export const rates: (a: number, b: number, c: number) => [number, number, number, number];
export const solutionview_mesh: (a: number) => number;
export const solutionview_pressure: (a: number) => [number, number];
export const solutionview_report: (a: number) => [number, number];
export const solutionview_velocity: (a: number) => [number, number];
export const solve: (a: number, b: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
