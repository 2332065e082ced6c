/* tslint:disable */
/* eslint-disable */

/**
 * Path structure of a graph with a partition: path-bipartiteness, joined
 * pairs, path-completeness, the component quotient, and a witness metric
 * when one exists.
 */
export function analyze(graph_json: string, partition_json: string): string;

/**
 * A be-path from `a ∈ A` to `b ∈ B`, or `{"path": null}` when the pair is not joined.
 */
export function be_path(graph_json: string, partition_json: string, a: string, b: string): string;

/**
 * A certificate that the graph is path-proximinal. `kind` is `metric`
 * (any graph without isolated vertices) or `ultrametric` (perfect matchings).
 */
export function certify(graph_json: string, kind: string): string;

/**
 * The truncated complex-lattice space with its threshold graph.
 */
export function truncation(n: number, m: number, k: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze: (a: number, b: number, c: number, d: number) => [number, number];
    readonly be_path: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number];
    readonly certify: (a: number, b: number, c: number, d: number) => [number, number];
    readonly truncation: (a: number, b: number, c: number) => [number, number];
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
