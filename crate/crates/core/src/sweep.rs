//! Verification sweep: for every rule instance in a configured range,
//! evaluates the product side and the expansion side as explicit Laurent
//! polynomials and compares exactly.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::expansion;
use crate::laurent::LaurentPoly;
use crate::oracle::{
    self, hook_schur, orthosymplectic_char, CharCache,
};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Classical,
    Hook,
    Symplectic,
    OddOrthogonal,
    EvenOrthogonal,
    Orthosymplectic,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::Classical,
        Rule::Hook,
        Rule::Symplectic,
        Rule::OddOrthogonal,
        Rule::EvenOrthogonal,
        Rule::Orthosymplectic,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Rule::Classical => "classical",
            Rule::Hook => "hook",
            Rule::Symplectic => "sp",
            Rule::OddOrthogonal => "oo",
            Rule::EvenOrthogonal => "oe",
            Rule::Orthosymplectic => "spo",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Rule> {
        Some(match tag {
            "classical" => Rule::Classical,
            "hook" => Rule::Hook,
            "sp" => Rule::Symplectic,
            "oo" => Rule::OddOrthogonal,
            "oe" => Rule::EvenOrthogonal,
            "spo" => Rule::Orthosymplectic,
            _ => return None,
        })
    }

    pub fn uses_y(&self) -> bool {
        matches!(self, Rule::Hook | Rule::Orthosymplectic)
    }
}

/// Bounds for the sweep. The two supersymmetric rules blow up fastest, so
/// they are clamped harder (size 5, n 2, r 4) regardless of the configured
/// maxima.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_partition_size: u32,
    pub max_n: usize,
    pub max_m: usize,
    pub max_r: u32,
    pub rules: Vec<Rule>,
    pub parallelism: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_partition_size: 6,
            max_n: 3,
            max_m: 2,
            max_r: 6,
            rules: Rule::ALL.to_vec(),
            parallelism: None,
        }
    }
}

const HOOK_SPO_MAX_SIZE: u32 = 5;
const HOOK_SPO_MAX_N: usize = 2;
const HOOK_SPO_MAX_R: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub rule: Rule,
    pub mu: Partition,
    pub n: usize,
    pub m: usize,
    pub r: u32,
}

#[derive(Clone, Debug)]
pub struct FailureRecord {
    pub instance: Instance,
    pub lhs: String,
    pub rhs: String,
}

impl FailureRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "rule": self.instance.rule.tag(),
            "mu": self.instance.mu.parts(),
            "n": self.instance.n,
            "m": self.instance.m,
            "r": self.instance.r,
            "lhs": self.lhs,
            "rhs": self.rhs,
        })
    }
}

#[derive(Debug)]
pub struct SweepReport {
    pub instances: usize,
    pub failures: Vec<FailureRecord>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Enumerates the instance set in a deterministic order.
pub fn instances(config: &SweepConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    for &rule in &config.rules {
        let (max_size, max_n, max_r) = if rule.uses_y() {
            (
                config.max_partition_size.min(HOOK_SPO_MAX_SIZE),
                config.max_n.min(HOOK_SPO_MAX_N),
                config.max_r.min(HOOK_SPO_MAX_R),
            )
        } else {
            (config.max_partition_size, config.max_n, config.max_r)
        };
        let ms: Vec<usize> = if rule.uses_y() {
            (1..=config.max_m).collect()
        } else {
            vec![0]
        };
        for n in 1..=max_n {
            for &m in &ms {
                for mu in Partition::all_up_to(max_size, max_size as usize) {
                    // every rule except the hook one is stated for at most
                    // n rows (and genuinely fails beyond)
                    if rule != Rule::Hook && mu.len() > n {
                        continue;
                    }
                    for r in 1..=max_r {
                        out.push(Instance {
                            rule,
                            mu: mu.clone(),
                            n,
                            m,
                            r,
                        });
                    }
                }
            }
        }
    }
    out
}

fn check_instance(inst: &Instance, cache: &CharCache) -> Option<FailureRecord> {
    let n = inst.n;
    let m = inst.m;
    let r = inst.r;
    let mu = &inst.mu;
    let (lhs, rhs): (LaurentPoly, LaurentPoly) = match inst.rule {
        Rule::Classical => (
            &oracle::power_sum(r, n) * &cache.get(crate::CharacterKind::Schur, mu, n, 0),
            expansion::classical_mn(mu, r, n).evaluate(n, 0, cache),
        ),
        Rule::Symplectic => (
            &oracle::power_sum_bar(r, n) * &cache.get(crate::CharacterKind::Symplectic, mu, n, 0),
            expansion::symplectic_mn(mu, r, n).evaluate(n, 0, cache),
        ),
        Rule::OddOrthogonal => (
            &oracle::power_sum_bar(r, n)
                * &cache.get(crate::CharacterKind::OddOrthogonal, mu, n, 0),
            expansion::odd_orthogonal_mn(mu, r, n).evaluate(n, 0, cache),
        ),
        Rule::EvenOrthogonal => (
            &oracle::power_sum_bar(r, n)
                * &cache.get(crate::CharacterKind::EvenOrthogonal, mu, n, 0),
            expansion::even_orthogonal_mn(mu, r, n).evaluate(n, 0, cache),
        ),
        Rule::Hook => (
            &oracle::super_power_sum(r, n, m) * &hook_schur(mu, n, m),
            expansion::hook_mn(mu, r).evaluate(n, m, cache),
        ),
        Rule::Orthosymplectic => (
            &oracle::spo_power_sum(r, n, m) * &orthosymplectic_char(mu, n, m),
            expansion::orthosymplectic_mn(mu, r, n, m).evaluate(cache),
        ),
    };
    if lhs == rhs {
        None
    } else {
        Some(FailureRecord {
            instance: inst.clone(),
            lhs: format!("{lhs}"),
            rhs: format!("{rhs}"),
        })
    }
}

pub fn run_sweep(config: &SweepConfig) -> SweepReport {
    let insts = instances(config);
    let cache = CharCache::new();
    let run = || -> Vec<FailureRecord> {
        insts
            .par_iter()
            .filter_map(|inst| check_instance(inst, &cache))
            .collect()
    };
    let failures = match config.parallelism {
        Some(jobs) if jobs >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(run),
        _ => run(),
    };
    SweepReport {
        instances: insts.len(),
        failures,
    }
}
