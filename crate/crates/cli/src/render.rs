//! JSON and LaTeX rendering of CLI results.

use serde_json::{json, Value};

use mnrules_core::expansion::FormalExpansion;
use mnrules_core::{LaurentPoly, Partition};

/// Full JSON document for a plain (single-basis) expansion.
pub fn expansion_doc(
    rule: &str,
    mu: &Partition,
    r: u32,
    n: usize,
    m: usize,
    e: &FormalExpansion,
) -> String {
    let doc = json!({
        "rule": rule,
        "n": n,
        "m": m,
        "r": r,
        "mu": mu.parts(),
        "terms": e.to_json(),
        "mixed_terms": Value::Array(vec![]),
    });
    serde_json::to_string_pretty(&doc).unwrap()
}

/// x exponents are stored in doubled units; print them halved, keeping
/// half-integers as "k/2".
fn halved(k: i64) -> String {
    if k % 2 == 0 {
        (k / 2).to_string()
    } else {
        format!("{k}/2")
    }
}

pub fn poly_json(poly: &LaurentPoly) -> Value {
    let nx = poly.num_x();
    let terms: Vec<Value> = poly
        .sorted_terms()
        .into_iter()
        .map(|(exps, coeff)| {
            let xs: Vec<String> = exps[..nx].iter().map(|&k| halved(k)).collect();
            let ys: Vec<i64> = exps[nx..].to_vec();
            json!({
                "x_exponents": xs,
                "y_exponents": ys,
                "coeff": coeff.to_string(),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn poly_json_pretty(poly: &LaurentPoly) -> String {
    serde_json::to_string_pretty(&poly_json(poly)).unwrap()
}

pub fn poly_latex(poly: &LaurentPoly) -> String {
    use num::{One, Signed};
    let nx = poly.num_x();
    let terms = poly.sorted_terms();
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (exps, coeff)) in terms.iter().enumerate() {
        let mut body = String::new();
        for (j, &k) in exps[..nx].iter().enumerate() {
            if k == 0 {
                continue;
            }
            if k == 2 {
                body.push_str(&format!("x_{{{}}} ", j + 1));
            } else {
                body.push_str(&format!("x_{{{}}}^{{{}}} ", j + 1, halved(k)));
            }
        }
        for (j, &k) in exps[nx..].iter().enumerate() {
            if k == 0 {
                continue;
            }
            if k == 1 {
                body.push_str(&format!("y_{{{}}} ", j + 1));
            } else {
                body.push_str(&format!("y_{{{}}}^{{{}}} ", j + 1, k));
            }
        }
        let body = body.trim_end();
        let mag = coeff.abs();
        let sign = if coeff.is_negative() {
            if i == 0 { "-" } else { " - " }
        } else if i == 0 {
            ""
        } else {
            " + "
        };
        out.push_str(sign);
        if !mag.is_one() || body.is_empty() {
            if mag.denom().is_one() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom()));
            }
            if !body.is_empty() {
                out.push_str(" \\, ");
            }
        }
        out.push_str(body);
    }
    out
}
