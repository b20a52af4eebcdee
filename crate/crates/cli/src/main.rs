//! Command-line front end: compute rule expansions, evaluate character
//! oracles, run the verification sweep, and maintain the golden corpus.
//!
//! Exit codes: 0 success, 1 identity or golden failure, 2 usage error,
//! 3 internal inconsistency (dual oracle routes disagree).

mod golden;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use mnrules_core::expansion::{
    classical_mn, even_orthogonal_mn, hook_mn, odd_orthogonal_mn, orthosymplectic_mn, pieri_e,
    pieri_h, symplectic_mn, FormalExpansion, MixedExpansion,
};
use mnrules_core::oracle::{
    even_orthogonal_char, hook_schur, odd_orthogonal_char, orthosymplectic_char,
    orthosymplectic_char_tableaux, schur, schur_tableaux, symplectic_char, symplectic_char_king,
};
use mnrules_core::sweep::{run_sweep, Rule, SweepConfig};
use mnrules_core::{LaurentPoly, Partition};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(name = "mnrules", version, about = "Exact Murnaghan-Nakayama rules and character oracles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand a power-sum product in a character basis
    Expand {
        /// classical | hook | sp | oo | oe | spo | pieri-h | pieri-e
        #[arg(long)]
        rule: String,
        /// Partition, comma-separated (e.g. 4,3,1; 0 or empty for the empty one)
        #[arg(long)]
        mu: Option<String>,
        /// Alias for --mu
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a character as an explicit Laurent polynomial
    Oracle {
        /// s | sp | oo | oe | hs | spo
        #[arg(long = "char")]
        character: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify every rule against the oracles over a configured range
    Verify {
        #[arg(long, default_value_t = 6)]
        max_size: u32,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        #[arg(long, default_value_t = 6)]
        max_r: u32,
        /// Comma-separated subset of classical,hook,sp,oo,oe,spo
        #[arg(long)]
        rules: Option<String>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Write or check the golden corpus of worked examples
    Golden {
        /// write | check
        mode: String,
        /// Golden directory (default: $MNRULES_GOLDEN_DIR or ./golden)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::from_str(s).map_err(|e| format!("invalid partition {s:?}: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Expand {
            rule,
            mu,
            lambda,
            r,
            n,
            m,
            format,
        } => cmd_expand(&rule, mu.or(lambda), r, n, m, format),
        Cmd::Oracle {
            character,
            lambda,
            n,
            m,
            format,
        } => cmd_oracle(&character, &lambda, n, m, format),
        Cmd::Verify {
            max_size,
            max_n,
            max_m,
            max_r,
            rules,
            jobs,
        } => cmd_verify(max_size, max_n, max_m, max_r, rules, jobs),
        Cmd::Golden { mode, out } => golden::cmd_golden(&mode, out),
    }
}

fn cmd_expand(
    rule: &str,
    mu: Option<String>,
    r: u32,
    n: usize,
    m: Option<usize>,
    format: Format,
) -> ExitCode {
    let mu = match mu {
        Some(s) => match parse_partition(&s) {
            Ok(p) => p,
            Err(e) => return usage_error(&e),
        },
        None => return usage_error("--mu (or --lambda) is required"),
    };
    let uses_y = matches!(rule, "hook" | "spo");
    if m.is_some() && !uses_y {
        return usage_error(&format!("--m is not meaningful for rule {rule:?}"));
    }
    if uses_y && m.is_none() {
        return usage_error(&format!("rule {rule:?} requires --m"));
    }
    let m = m.unwrap_or(0);
    if n == 0 {
        return usage_error("--n must be at least 1");
    }
    let needs_row_bound = matches!(rule, "classical" | "sp" | "oo" | "oe" | "spo" | "pieri-h" | "pieri-e");
    if needs_row_bound && mu.len() > n {
        return usage_error(&format!("rule {rule:?} requires at most n={n} rows, got {mu}"));
    }
    if r == 0 && !matches!(rule, "pieri-h" | "pieri-e") {
        return usage_error("--r must be at least 1");
    }

    enum Output {
        Plain(FormalExpansion),
        Mixed(MixedExpansion),
    }
    let out = match rule {
        "classical" => Output::Plain(classical_mn(&mu, r, n)),
        "hook" => Output::Plain(hook_mn(&mu, r)),
        "sp" => Output::Plain(symplectic_mn(&mu, r, n)),
        "oo" => Output::Plain(odd_orthogonal_mn(&mu, r, n)),
        "oe" => Output::Plain(even_orthogonal_mn(&mu, r, n)),
        "spo" => Output::Mixed(orthosymplectic_mn(&mu, r, n, m)),
        "pieri-h" => Output::Plain(pieri_h(&mu, r, n)),
        "pieri-e" => Output::Plain(pieri_e(&mu, r, n)),
        other => return usage_error(&format!("unknown rule {other:?}")),
    };
    match (out, format) {
        (Output::Plain(e), Format::Text) => println!("{}", e.render_text()),
        (Output::Plain(e), Format::Latex) => println!("{}", e.render_latex()),
        (Output::Plain(e), Format::Json) => {
            println!("{}", render::expansion_doc(rule, &mu, r, n, m, &e))
        }
        (Output::Mixed(e), Format::Text) => println!("{}", e.render_text()),
        (Output::Mixed(e), Format::Latex) => println!("{}", e.render_latex()),
        (Output::Mixed(e), Format::Json) => {
            println!("{}", serde_json::to_string_pretty(&e.to_json()).unwrap())
        }
    }
    ExitCode::SUCCESS
}

fn cmd_oracle(kind: &str, lambda: &str, n: usize, m: Option<usize>, format: Format) -> ExitCode {
    let la = match parse_partition(lambda) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let uses_y = matches!(kind, "hs" | "hook" | "spo");
    if m.is_some() && !uses_y {
        return usage_error(&format!("--m is not meaningful for character {kind:?}"));
    }
    if uses_y && m.is_none() {
        return usage_error(&format!("character {kind:?} requires --m"));
    }
    let m = m.unwrap_or(0);
    if n == 0 {
        return usage_error("--n must be at least 1");
    }

    // dual-route characters are computed both ways and must agree
    let poly: LaurentPoly = match kind {
        "s" | "schur" => {
            let a = schur(&la, n);
            let b = schur_tableaux(&la, n);
            if a != b {
                eprintln!("internal inconsistency: Schur routes disagree for {la} n={n}");
                return ExitCode::from(EXIT_INCONSISTENT);
            }
            a
        }
        "sp" => {
            let a = symplectic_char(&la, n);
            let b = symplectic_char_king(&la, n);
            if a != b {
                eprintln!("internal inconsistency: symplectic routes disagree for {la} n={n}");
                return ExitCode::from(EXIT_INCONSISTENT);
            }
            a
        }
        "oo" => odd_orthogonal_char(&la, n),
        "oe" => even_orthogonal_char(&la, n),
        "hs" | "hook" => hook_schur(&la, n, m),
        "spo" => {
            let a = orthosymplectic_char(&la, n, m);
            let b = orthosymplectic_char_tableaux(&la, n, m);
            if a != b {
                eprintln!(
                    "internal inconsistency: orthosymplectic routes disagree for {la} n={n} m={m}"
                );
                return ExitCode::from(EXIT_INCONSISTENT);
            }
            a
        }
        other => return usage_error(&format!("unknown character {other:?}")),
    };
    match format {
        Format::Text => println!("{poly}"),
        Format::Json => println!("{}", render::poly_json_pretty(&poly)),
        Format::Latex => println!("{}", render::poly_latex(&poly)),
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    max_size: u32,
    max_n: usize,
    max_m: usize,
    max_r: u32,
    rules: Option<String>,
    jobs: Option<usize>,
) -> ExitCode {
    let rules = match rules {
        None => Rule::ALL.to_vec(),
        Some(list) => {
            let mut out = Vec::new();
            for tag in list.split(',').filter(|s| !s.is_empty()) {
                match Rule::from_tag(tag.trim()) {
                    Some(r) => out.push(r),
                    None => return usage_error(&format!("unknown rule {tag:?}")),
                }
            }
            out
        }
    };
    let config = SweepConfig {
        max_partition_size: max_size,
        max_n,
        max_m,
        max_r,
        rules,
        parallelism: jobs,
    };
    let report = run_sweep(&config);
    if report.all_pass() {
        println!("verified {} instances: all pass", report.instances);
        ExitCode::SUCCESS
    } else {
        println!(
            "verified {} instances: {} FAILED",
            report.instances,
            report.failures.len()
        );
        for f in &report.failures {
            println!("{}", f.to_json());
        }
        ExitCode::from(EXIT_FAILURE)
    }
}
