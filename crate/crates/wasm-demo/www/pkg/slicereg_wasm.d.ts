/* tslint:disable */
/* eslint-disable */

/**
 * Bohr radius of corpus function `index`.
 */
export function corpus_bohr_radius(seed: bigint, index: bigint, generator_name: string): number;

/**
 * Coefficients of corpus function `index` as a flat `[w, x, y, z, ...]`
 * array. `generator` is `"g1"`, `"g2"` or anything else to alternate.
 */
export function corpus_coefficients(seed: bigint, index: bigint, generator_name: string): Float64Array;

/**
 * `|f(x + y I)|` on a `size x size` grid over `[-1, 1]^2` of the slice of
 * `I = (ix, iy, iz)`, row-major with `y` decreasing. Points outside the
 * unit disk are NaN. Returns an empty array on malformed input.
 */
export function slice_modulus_grid(coeffs: Float64Array, ix: number, iy: number, iz: number, size: number): Float64Array;

/**
 * `c (1 + r (1 - a)/(1 - r a))` at `points` radii evenly spaced on `[0, 1]`.
 */
export function witness_majorant_curve(a: number, c: number, points: number): Float64Array;

/**
 * JSON summary of `phi_c` for the sliders: sup on the ball, majorant at
 * 1/3 and the radius where the majorant reaches 1.
 */
export function witness_summary(a: number, c: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly corpus_bohr_radius: (a: bigint, b: bigint, c: number, d: number) => number;
    readonly corpus_coefficients: (a: bigint, b: bigint, c: number, d: number) => [number, number];
    readonly slice_modulus_grid: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly witness_majorant_curve: (a: number, b: number, c: number) => [number, number];
    readonly witness_summary: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
