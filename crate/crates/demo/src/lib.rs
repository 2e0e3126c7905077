//! wasm-bindgen bindings for the browser explorer in `www/`.

mod explorer;

pub use explorer::Explorer;

use wasm_bindgen::prelude::*;

#[wasm_bindgen(js_name = Explorer)]
pub struct JsExplorer(Explorer);

#[wasm_bindgen(js_class = Explorer)]
impl JsExplorer {
    #[wasm_bindgen(constructor)]
    pub fn new(graph_text: &str) -> Result<JsExplorer, JsError> {
        Explorer::from_text(graph_text).map(JsExplorer).map_err(|e| JsError::new(&e))
    }

    pub fn generate(n: usize, extra_edges: usize, unstable: usize, seed: u64) -> Result<JsExplorer, JsError> {
        Explorer::generated(n, extra_edges, unstable, seed)
            .map(JsExplorer)
            .map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen(js_name = graphText)]
    pub fn graph_text(&self) -> String {
        self.0.graph_text()
    }

    #[wasm_bindgen(js_name = plans)]
    pub fn plans_json(&self) -> String {
        self.0.plans_json()
    }

    #[wasm_bindgen(js_name = select)]
    pub fn select_json(&self, edge: usize, x: f64) -> Result<String, JsError> {
        self.0.select_json(edge, x).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen(js_name = curve)]
    pub fn curve_json(&self, edge: usize, lo: f64, hi: f64, samples: usize) -> Result<String, JsError> {
        self.0.curve_json(edge, lo, hi, samples).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen(js_name = commit)]
    pub fn commit_json(&mut self, edge: usize, x: f64) -> Result<String, JsError> {
        self.0.commit_json(edge, x).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen(js_name = layout)]
    pub fn layout_json(&self) -> String {
        self.0.layout_json()
    }
}
