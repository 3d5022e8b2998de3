//! Browser bindings for the fusion-path demo page.
//!
//! Every export takes plain numbers and returns a JSON string, so the page
//! needs nothing beyond the wasm-bindgen loader: no generated classes, no
//! shared memory views. The `*_impl` functions hold the logic and are plain
//! Rust (testable on any target); the exports only convert errors to JS.

use wasm_bindgen::prelude::*;

use coinv::characters::{character, character_left};
use coinv::paths::{enumerate_cpaths, enumerate_vpaths};
use coinv::verlinde::verlinde_numbers;
use serde_json::{json, Value};

/// Paths beyond this count are reported but not listed.
const LIST_CAP: usize = 512;

/// Dimension row of the `N`-th fusion power at level `k`: the number of
/// paths of each weight `l = 0..=k`, plus the row total.
#[wasm_bindgen]
pub fn verlinde_json(k: i32, n: u32) -> Result<String, JsValue> {
    verlinde_impl(k, n).map_err(JsValue::from)
}

/// Enumerate one path family. `family` is `"c"` (inequality paths, pairs
/// `a;b`) or `"v"` (weight paths, pairs `alpha;beta`). Listing stops at
/// [`LIST_CAP`] paths; the count is always exact.
#[wasm_bindgen]
pub fn paths_json(k: i32, l: i32, n: u32, family: &str) -> Result<String, JsValue> {
    paths_impl(k, l, n, family).map_err(JsValue::from)
}

/// Character of the path set in the three grading variables, optionally
/// refined by the left selector `i` (pass `i < 0` for the full character).
/// Returns both the term list and a display string.
#[wasm_bindgen]
pub fn char_json(k: i32, l: i32, n: u32, i: i32) -> Result<String, JsValue> {
    char_impl(k, l, n, i).map_err(JsValue::from)
}

fn verlinde_impl(k: i32, n: u32) -> Result<String, String> {
    let dims = verlinde_numbers(k as i64, n).map_err(|e| e.to_string())?;
    let total: num_bigint::BigInt = dims.iter().sum();
    let strs: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    Ok(json!({ "k": k, "N": n, "dims": strs, "total": total.to_string() }).to_string())
}

fn paths_impl(k: i32, l: i32, n: u32, family: &str) -> Result<String, String> {
    let (k, l, n) = (k as i64, l as i64, n as usize);
    let rows: Vec<Value> = match family {
        "c" => enumerate_cpaths(k, l, n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|p| json!({ "a": p.a, "b": p.b }))
            .collect(),
        "v" => enumerate_vpaths(k, l, n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|p| json!({ "alpha": p.alpha, "beta": p.beta }))
            .collect(),
        other => return Err(format!("unknown family `{other}` (use c or v)")),
    };
    let count = rows.len();
    let truncated = count > LIST_CAP;
    let listed: Vec<Value> = rows.into_iter().take(LIST_CAP).collect();
    Ok(json!({
        "k": k, "l": l, "N": n, "family": family,
        "count": count, "truncated": truncated, "paths": listed,
    })
    .to_string())
}

fn char_impl(k: i32, l: i32, n: u32, i: i32) -> Result<String, String> {
    let (k, l, n) = (k as i64, l as i64, n as usize);
    let p = if i < 0 {
        character(k, l, n).map_err(|e| e.to_string())?
    } else {
        let mut parts = character_left(k, l, n).map_err(|e| e.to_string())?;
        if i as usize >= parts.len() {
            return Err(format!("selector {i} outside 0..={l}"));
        }
        parts.swap_remove(i as usize)
    };
    let terms: Vec<Value> = p
        .terms()
        .map(|(&(q, z1, z2), c)| json!({ "q": q, "z1": z1, "z2": z2, "c": c.to_string() }))
        .collect();
    Ok(json!({
        "k": k, "l": l, "N": n,
        "selector": if i < 0 { Value::Null } else { json!(i) },
        "pretty": p.to_string(), "terms": terms,
    })
    .to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verlinde_payload_shape() {
        let v: serde_json::Value = serde_json::from_str(&verlinde_impl(1, 4).unwrap()).unwrap();
        assert_eq!(v["dims"], serde_json::json!(["8", "8"]));
        assert_eq!(v["total"], "16");
    }

    #[test]
    fn paths_payload_counts() {
        let v: serde_json::Value =
            serde_json::from_str(&paths_impl(1, 0, 3, "c").unwrap()).unwrap();
        assert_eq!(v["count"], 4);
        assert_eq!(v["paths"].as_array().unwrap().len(), 4);
        assert_eq!(v["truncated"], false);
    }

    #[test]
    fn char_payload_pretty() {
        let v: serde_json::Value = serde_json::from_str(&char_impl(1, 0, 2, -1).unwrap()).unwrap();
        assert_eq!(v["pretty"], "1 + q*z2");
    }

    #[test]
    fn selector_refinement_splits_the_character() {
        let full: serde_json::Value =
            serde_json::from_str(&char_impl(2, 1, 3, -1).unwrap()).unwrap();
        let mut terms = 0;
        for i in 0..=1 {
            let part: serde_json::Value =
                serde_json::from_str(&char_impl(2, 1, 3, i).unwrap()).unwrap();
            terms += part["terms"].as_array().unwrap().len();
        }
        assert!(terms >= full["terms"].as_array().unwrap().len());
    }

    #[test]
    fn bad_family_is_an_error() {
        assert!(paths_impl(1, 0, 2, "x").is_err());
    }
}
