//! Browser bindings. Each export takes a ring expression and returns JSON;
//! errors come back as strings.

use nilclean::catalog::Catalog;
use nilclean::classes::ElementClassification;
use nilclean::classifier::cross_check;
use nilclean::decompose::{find_decomposition, Shape};
use nilclean::expr::parse_ring_expr;
use nilclean::ring::RingBuilder;
use nilclean::RingTable;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Rings larger than this are refused in the browser.
pub const WEB_ORDER_CAP: usize = 128;

fn build(expr: &str) -> Result<RingTable, String> {
    let ast = parse_ring_expr(expr).map_err(|e| e.to_string())?;
    ast.build(&RingBuilder::with_cap(WEB_ORDER_CAP), &Catalog::builtin())
        .map_err(|e| e.to_string())
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

pub fn classify_json(expr: &str) -> Result<String, String> {
    Ok(json(&cross_check(&build(expr)?)))
}

pub fn decompose_json(expr: &str, index: usize, shape: &str) -> Result<String, String> {
    let r = build(expr)?;
    let shape: Shape = shape.parse().map_err(|e: nilclean::Error| e.to_string())?;
    let a = r.element(index).map_err(|e| e.to_string())?;
    Ok(json(&find_decomposition(&r, a, &shape)))
}

#[derive(Serialize)]
struct Tables<'a> {
    label: &'a str,
    order: usize,
    zero: usize,
    one: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    classes: &'a ElementClassification,
}

pub fn tables_json(expr: &str) -> Result<String, String> {
    let r = build(expr)?;
    Ok(json(&Tables {
        label: r.label(),
        order: r.order(),
        zero: r.zero().0,
        one: r.one().0,
        add: r.add_table(),
        mul: r.mul_table(),
        classes: r.classification(),
    }))
}

#[wasm_bindgen]
pub fn classify(expr: &str) -> Result<String, JsValue> {
    classify_json(expr).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn decompose(expr: &str, index: usize, shape: &str) -> Result<String, JsValue> {
    decompose_json(expr, index, shape).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn tables(expr: &str) -> Result<String, JsValue> {
    tables_json(expr).map_err(|e| JsValue::from_str(&e))
}
