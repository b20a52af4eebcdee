//! Golden corpus: regenerates the worked examples shipped in golden/ and
//! checks them for drift.

use std::path::PathBuf;
use std::process::ExitCode;

use serde_json::{json, Value};

use mnrules_core::expansion::{
    classical_mn, even_orthogonal_mn, odd_orthogonal_mn, orthosymplectic_mn, symplectic_mn,
};
use mnrules_core::oracle::{orthosymplectic_char, symplectic_char};
use mnrules_core::partition::{mu_q, Staircase, StaircaseKind};
use mnrules_core::Partition;

use crate::render::{expansion_doc, poly_json};
use crate::{EXIT_FAILURE, EXIT_USAGE};

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

/// The corpus contents, regenerated from scratch on every invocation.
fn artifacts() -> Vec<(&'static str, String)> {
    let p = |parts: &[u32]| Partition::new(parts.to_vec());
    let mut out = Vec::new();

    out.push((
        "classical-product.json",
        expansion_doc("classical", &p(&[3, 1]), 4, 6, 0, &classical_mn(&p(&[3, 1]), 4, 6)) + "\n",
    ));
    out.push((
        "sp-product.json",
        expansion_doc("sp", &p(&[4, 3, 1]), 6, 3, 0, &symplectic_mn(&p(&[4, 3, 1]), 6, 3)) + "\n",
    ));
    out.push((
        "oo-product.json",
        expansion_doc("oo", &p(&[2, 1]), 2, 3, 0, &odd_orthogonal_mn(&p(&[2, 1]), 2, 3)) + "\n",
    ));
    out.push((
        "oe-product.json",
        expansion_doc("oe", &p(&[2, 1]), 3, 3, 0, &even_orthogonal_mn(&p(&[2, 1]), 3, 3)) + "\n",
    ));

    let stair = Staircase::new(StaircaseKind::Symplectic, 4);
    let (replaced, pos) = mu_q(&p(&[3, 2, 1]), &stair, 9, 3).expect("no tie");
    out.push((
        "staircase-replacement.json",
        pretty(&json!({
            "staircase": "sp",
            "mu": [3, 2, 1],
            "n": 4,
            "r": 9,
            "q": 3,
            "replaced": replaced.parts(),
            "position": pos,
        })),
    ));

    out.push((
        "spo-product.json",
        pretty(&orthosymplectic_mn(&p(&[2, 2]), 3, 2, 2).to_json()),
    ));
    out.push((
        "spo-self-replacement.json",
        pretty(&orthosymplectic_mn(&p(&[1]), 3, 2, 1).to_json()),
    ));

    out.push((
        "characters.json",
        pretty(&json!({
            "symplectic": {
                "lambda": [1, 1],
                "n": 2,
                "text": format!("{}", symplectic_char(&p(&[1, 1]), 2)),
                "terms": poly_json(&symplectic_char(&p(&[1, 1]), 2)),
            },
            "orthosymplectic": {
                "lambda": [1, 1],
                "n": 2,
                "m": 1,
                "text": format!("{}", orthosymplectic_char(&p(&[1, 1]), 2, 1)),
                "terms": poly_json(&orthosymplectic_char(&p(&[1, 1]), 2, 1)),
            },
        })),
    ));

    out
}

fn resolve_dir(out: Option<PathBuf>) -> PathBuf {
    out.or_else(|| std::env::var_os("MNRULES_GOLDEN_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("golden"))
}

fn print_diff(name: &str, expected: &str, actual: &str) {
    println!("--- {name} (on disk)");
    println!("+++ {name} (regenerated)");
    let old: Vec<&str> = expected.lines().collect();
    let new: Vec<&str> = actual.lines().collect();
    let max = old.len().max(new.len());
    for i in 0..max {
        let a = old.get(i).copied().unwrap_or("<missing>");
        let b = new.get(i).copied().unwrap_or("<missing>");
        if a != b {
            println!("@@ line {} @@", i + 1);
            println!("-{a}");
            println!("+{b}");
        }
    }
}

pub fn cmd_golden(mode: &str, out: Option<PathBuf>) -> ExitCode {
    let dir = resolve_dir(out);
    match mode {
        "write" => {
            if let Err(e) = std::fs::create_dir_all(&dir) {
                eprintln!("error: cannot create {}: {e}", dir.display());
                return ExitCode::from(EXIT_FAILURE);
            }
            for (name, content) in artifacts() {
                let path = dir.join(name);
                if let Err(e) = std::fs::write(&path, content) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_FAILURE);
                }
                println!("wrote {}", path.display());
            }
            ExitCode::SUCCESS
        }
        "check" => {
            let mut drift = false;
            for (name, content) in artifacts() {
                let path = dir.join(name);
                match std::fs::read_to_string(&path) {
                    Ok(on_disk) if on_disk == content => {
                        println!("ok {}", path.display());
                    }
                    Ok(on_disk) => {
                        drift = true;
                        println!("DRIFT {}", path.display());
                        print_diff(name, &on_disk, &content);
                    }
                    Err(e) => {
                        drift = true;
                        println!("MISSING {} ({e})", path.display());
                    }
                }
            }
            if drift {
                ExitCode::from(EXIT_FAILURE)
            } else {
                ExitCode::SUCCESS
            }
        }
        other => {
            eprintln!("error: golden mode must be write or check, got {other:?}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
