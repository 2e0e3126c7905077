/* tslint:disable */
/* eslint-disable */

export class Explorer {
    free(): void;
    [Symbol.dispose](): void;
    commit(edge: number, x: number): string;
    curve(edge: number, lo: number, hi: number, samples: number): string;
    static generate(n: number, extra_edges: number, unstable: number, seed: bigint): Explorer;
    graphText(): string;
    layout(): string;
    constructor(graph_text: string);
    plans(): string;
    select(edge: number, x: number): string;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_explorer_free: (a: number, b: number) => void;
    readonly explorer_commit: (a: number, b: number, c: number) => [number, number, number, number];
    readonly explorer_curve: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly explorer_generate: (a: number, b: number, c: number, d: bigint) => [number, number, number];
    readonly explorer_graphText: (a: number) => [number, number];
    readonly explorer_layout: (a: number) => [number, number];
    readonly explorer_new: (a: number, b: number) => [number, number, number];
    readonly explorer_plans: (a: number) => [number, number];
    readonly explorer_select: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
