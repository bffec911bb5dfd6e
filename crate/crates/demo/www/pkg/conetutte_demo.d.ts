/* tslint:disable */
/* eslint-disable */

/**
 * `T(1,y)`, `f`, `g_v` and `h_v` for a graph given in edge-list text.
 */
export function cone_polynomials(edge_list: string, vertex: number): string;

/**
 * Hasse diagram of the shift poset on `n`-vertex trees, with `f(T)` and an
 * edge list for each node.
 */
export function poset_view(n: number): string;

/**
 * Every shift site of node `index` in the `n`-vertex poset, with the image
 * tree and both sides of the factorization of `f(T) - f(T')`.
 */
export function shift_sites_view(n: number, index: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly cone_polynomials: (a: number, b: number, c: number) => [number, number];
    readonly poset_view: (a: number) => [number, number];
    readonly shift_sites_view: (a: number, b: number) => [number, number];
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
