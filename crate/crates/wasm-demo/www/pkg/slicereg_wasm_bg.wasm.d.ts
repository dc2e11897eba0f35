/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const corpus_bohr_radius: (a: bigint, b: bigint, c: number, d: number) => number;
export const corpus_coefficients: (a: bigint, b: bigint, c: number, d: number) => [number, number];
export const slice_modulus_grid: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
export const witness_majorant_curve: (a: number, b: number, c: number) => [number, number];
export const witness_summary: (a: number, b: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
