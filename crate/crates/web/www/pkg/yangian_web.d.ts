/* tslint:disable */
/* eslint-disable */

/**
 * Eigenvalue of the quantum determinant on the highest vector of `L(λ)`.
 */
export function capelli_json(lambda: string, n: number): string;

/**
 * Skew diagram, `ν`, highest weight, Drinfeld polynomials and `ζ` word.
 * `m = 0` means "length of μ".
 */
export function drinfeld_json(lambda: string, mu: string, n: number, m: number): string;

/**
 * PBW normal form of a word in `U(gl(rank))`.
 */
export function normal_order_json(word: string, rank: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly capelli_json: (a: number, b: number, c: number) => [number, number];
    readonly drinfeld_json: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly normal_order_json: (a: number, b: number, c: number) => [number, number];
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
