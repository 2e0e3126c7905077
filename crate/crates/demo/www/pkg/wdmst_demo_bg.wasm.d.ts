/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_explorer_free: (a: number, b: number) => void;
export const explorer_commit: (a: number, b: number, c: number) => [number, number, number, number];
export const explorer_curve: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const explorer_generate: (a: number, b: number, c: number, d: bigint) => [number, number, number];
export const explorer_graphText: (a: number) => [number, number];
export const explorer_layout: (a: number) => [number, number];
export const explorer_new: (a: number, b: number) => [number, number, number];
export const explorer_plans: (a: number) => [number, number];
export const explorer_select: (a: number, b: number, c: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
