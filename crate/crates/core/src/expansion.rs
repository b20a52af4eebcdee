//! Right-hand sides of the Murnaghan-Nakayama rules as formal expansions
//! with exact rational coefficients, plus the auxiliary determinant and
//! strip-interchange identities used to validate them.

use std::collections::BTreeMap;
use std::fmt;

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};
use serde_json::{json, Value};

use crate::laurent::{rat, LaurentPoly};
use crate::oracle::{
    self, a_alpha, n_alpha, skew_schur, CharCache, CharacterKind,
};
use crate::partition::{
    border_strip_additions, border_strip_removals, horizontal_strip_additions, m_index, mu_q,
    vertical_strip_additions, vertical_strip_removals, Partition, SkewShape, Staircase,
    StaircaseKind,
};

fn sign_of_parity(k: usize) -> BigRational {
    if k % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Exact-rational linear combination of partitions in one character basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalExpansion {
    basis: CharacterKind,
    terms: BTreeMap<Partition, BigRational>,
}

impl FormalExpansion {
    pub fn new(basis: CharacterKind) -> Self {
        FormalExpansion {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> CharacterKind {
        self.basis
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, part: &Partition) -> BigRational {
        self.terms.get(part).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Merges a term in; zero results are pruned.
    pub fn add_term(&mut self, part: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(part);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let merged = o.get() + &coeff;
                if merged.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = merged;
                }
            }
        }
    }

    pub fn add_expansion(&mut self, other: &FormalExpansion) {
        assert_eq!(self.basis, other.basis);
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = FormalExpansion::new(self.basis);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    /// Linear extension: replaces each label by an expansion of its image.
    pub fn apply(&self, f: impl Fn(&Partition) -> FormalExpansion) -> FormalExpansion {
        let mut out: Option<FormalExpansion> = None;
        for (p, c) in &self.terms {
            let image = f(p).scale(c);
            match &mut out {
                None => out = Some(image),
                Some(acc) => acc.add_expansion(&image),
            }
        }
        out.unwrap_or_else(|| FormalExpansion::new(self.basis))
    }

    /// Evaluates the expansion as a Laurent polynomial in (n, m) variables
    /// through the character oracles.
    pub fn evaluate(&self, n: usize, m: usize, cache: &CharCache) -> LaurentPoly {
        let my = if self.basis.uses_y() { m } else { 0 };
        let mut acc = LaurentPoly::zero(n, my);
        for (p, c) in &self.terms {
            let ch = cache.get(self.basis, p, n, my);
            acc = &acc + &ch.scale(c);
        }
        acc
    }

    pub fn render_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            out.push_str(&coeff_prefix(c, i == 0));
            out.push_str(&format!("{}_{}", self.basis.tag(), p));
        }
        out
    }

    pub fn render_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            out.push_str(&coeff_prefix_latex(c, i == 0));
            out.push_str(&format!("\\mathrm{{{}}}_{{{}}}", self.basis.tag(), p));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(p, c)| {
                json!({
                    "basis": self.basis.tag(),
                    "partition": p.parts(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        Value::Array(terms)
    }

    pub fn from_json(basis: CharacterKind, v: &Value) -> Option<Self> {
        let mut out = FormalExpansion::new(basis);
        for item in v.as_array()? {
            let tag = item.get("basis")?.as_str()?;
            if CharacterKind::from_tag(tag)? != basis {
                return None;
            }
            let part = partition_from_json(item.get("partition")?)?;
            let coeff = coeff_from_str(item.get("coeff")?.as_str()?)?;
            out.add_term(part, coeff);
        }
        Some(out)
    }
}

fn coeff_prefix(c: &BigRational, first: bool) -> String {
    let mag = c.abs();
    let sign = if c.is_negative() {
        if first { "-" } else { " - " }
    } else if first {
        ""
    } else {
        " + "
    };
    if mag.is_one() {
        sign.to_string()
    } else {
        format!("{sign}{mag}*")
    }
}

fn coeff_prefix_latex(c: &BigRational, first: bool) -> String {
    let mag = c.abs();
    let sign = if c.is_negative() {
        if first { "-" } else { " - " }
    } else if first {
        ""
    } else {
        " + "
    };
    if mag.is_one() {
        sign.to_string()
    } else if mag.denom().is_one() {
        format!("{sign}{mag} \\, ")
    } else {
        format!("{sign}\\frac{{{}}}{{{}}} \\, ", mag.numer(), mag.denom())
    }
}

pub fn coeff_from_str(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let num: BigInt = a.trim().parse().ok()?;
            let den: BigInt = b.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = s.trim().parse().ok()?;
            Some(BigRational::from_integer(num))
        }
    }
}

pub fn partition_from_json(v: &Value) -> Option<Partition> {
    let arr = v.as_array()?;
    let parts: Option<Vec<u32>> = arr.iter().map(|x| x.as_u64().map(|u| u as u32)).collect();
    Partition::try_new(parts?).ok()
}

/// One summand `coeff * sp_{sp_part}(X) * s_{outer'/inner'}(Y)` of the
/// mixed third sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedTerm {
    pub sp_part: Partition,
    pub skew_outer: Partition,
    pub skew_inner: Partition,
    pub coeff: BigRational,
}

impl MixedTerm {
    pub fn evaluate(&self, n: usize, m: usize, cache: &CharCache) -> LaurentPoly {
        let sp = cache.get(CharacterKind::Symplectic, &self.sp_part, n, 0);
        let skew = SkewShape::new(self.skew_outer.conjugate(), self.skew_inner.conjugate())
            .expect("inner fits in outer");
        let sk = skew_schur(&skew, m);
        (&sp.embed(n, m) * &sk.embed(n, m)).scale(&self.coeff)
    }

    pub fn render_text(&self, first: bool) -> String {
        let mut out = coeff_prefix(&self.coeff, first);
        out.push_str(&format!("sp_{}(X)", self.sp_part));
        if self.skew_outer != self.skew_inner {
            out.push_str(&format!(
                "*s_{}/{}(Y)",
                self.skew_outer, self.skew_inner
            ));
        }
        out
    }

    pub fn render_latex(&self, first: bool) -> String {
        let mut out = coeff_prefix_latex(&self.coeff, first);
        out.push_str(&format!("\\mathrm{{sp}}_{{{}}}(X)", self.sp_part));
        if self.skew_outer != self.skew_inner {
            out.push_str(&format!(
                " \\, s_{{{}/{}}}(Y)",
                self.skew_outer, self.skew_inner
            ));
        }
        out
    }
}

impl fmt::Display for MixedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text(true))
    }
}

/// Output of the orthosymplectic rule: orthosymplectic-labeled terms plus
/// mixed terms that need not be re-expressible in the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedExpansion {
    pub lambda: Partition,
    pub r: u32,
    pub n: usize,
    pub m: usize,
    /// Canonical terms: labels η with padded η_{n+1} ≤ m.
    pub spo_terms: FormalExpansion,
    /// Labels whose character vanishes identically (η_{n+1} > m); kept for
    /// bookkeeping, excluded from canonical output.
    pub vanishing_terms: FormalExpansion,
    pub mixed_terms: Vec<MixedTerm>,
}

impl MixedExpansion {
    pub fn evaluate(&self, cache: &CharCache) -> LaurentPoly {
        let mut acc = self.spo_terms.evaluate(self.n, self.m, cache);
        for t in &self.mixed_terms {
            acc = &acc + &t.evaluate(self.n, self.m, cache);
        }
        acc
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if !self.spo_terms.is_empty() {
            out.push_str(&self.spo_terms.render_text());
        }
        for t in &self.mixed_terms {
            out.push_str(&t.render_text(out.is_empty()));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn render_latex(&self) -> String {
        let mut out = String::new();
        if !self.spo_terms.is_empty() {
            out.push_str(&self.spo_terms.render_latex());
        }
        for t in &self.mixed_terms {
            out.push_str(&t.render_latex(out.is_empty()));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mixed: Vec<Value> = self
            .mixed_terms
            .iter()
            .map(|t| {
                json!({
                    "sp": t.sp_part.parts(),
                    "skew_outer": t.skew_outer.parts(),
                    "skew_inner": t.skew_inner.parts(),
                    "coeff": t.coeff.to_string(),
                })
            })
            .collect();
        json!({
            "rule": "spo",
            "n": self.n,
            "m": self.m,
            "r": self.r,
            "mu": self.lambda.parts(),
            "terms": self.spo_terms.to_json(),
            "mixed_terms": Value::Array(mixed),
        })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        if v.get("rule")?.as_str()? != "spo" {
            return None;
        }
        let n = v.get("n")?.as_u64()? as usize;
        let m = v.get("m")?.as_u64()? as usize;
        let r = v.get("r")?.as_u64()? as u32;
        let lambda = partition_from_json(v.get("mu")?)?;
        let spo_terms =
            FormalExpansion::from_json(CharacterKind::Orthosymplectic, v.get("terms")?)?;
        let mut mixed_terms = Vec::new();
        for item in v.get("mixed_terms")?.as_array()? {
            mixed_terms.push(MixedTerm {
                sp_part: partition_from_json(item.get("sp")?)?,
                skew_outer: partition_from_json(item.get("skew_outer")?)?,
                skew_inner: partition_from_json(item.get("skew_inner")?)?,
                coeff: coeff_from_str(item.get("coeff")?.as_str()?)?,
            });
        }
        Some(MixedExpansion {
            lambda,
            r,
            n,
            m,
            spo_terms,
            vanishing_terms: FormalExpansion::new(CharacterKind::Orthosymplectic),
            mixed_terms,
        })
    }
}

// --- classical rules --------------------------------------------------------

/// `p_r s_μ`: signed border-strip additions, row bound `n`.
pub fn classical_mn(mu: &Partition, r: u32, n: usize) -> FormalExpansion {
    let mut out = FormalExpansion::new(CharacterKind::Schur);
    for (eta, ht) in border_strip_additions(mu, r, n) {
        out.add_term(eta, sign_of_parity(ht));
    }
    out
}

/// `h_r s_μ`: horizontal-strip additions, unit coefficients.
pub fn pieri_h(mu: &Partition, r: u32, n: usize) -> FormalExpansion {
    let mut out = FormalExpansion::new(CharacterKind::Schur);
    for eta in horizontal_strip_additions(mu, r, n) {
        out.add_term(eta, rat(1));
    }
    out
}

/// `e_r s_μ`: vertical-strip additions, unit coefficients.
pub fn pieri_e(mu: &Partition, r: u32, n: usize) -> FormalExpansion {
    let mut out = FormalExpansion::new(CharacterKind::Schur);
    for eta in vertical_strip_additions(mu, r, n) {
        out.add_term(eta, rat(1));
    }
    out
}

/// `p_r^⊥ s_λ`: signed border-strip removals.
pub fn p_perp(la: &Partition, r: u32) -> FormalExpansion {
    let mut out = FormalExpansion::new(CharacterKind::Schur);
    for (xi, ht) in border_strip_removals(la, r) {
        out.add_term(xi, sign_of_parity(ht));
    }
    out
}

/// `e_s^⊥ s_λ`: vertical-strip removals, unit coefficients.
pub fn e_perp(la: &Partition, s: u32) -> FormalExpansion {
    let mut out = FormalExpansion::new(CharacterKind::Schur);
    for pi in vertical_strip_removals(la, s) {
        out.add_term(pi, rat(1));
    }
    out
}

/// `P_r(X/Y) hs_λ`: signed border-strip additions with unbounded rows
/// (`ℓ(λ)+r` captures them all).
pub fn hook_mn(la: &Partition, r: u32) -> FormalExpansion {
    let mut out = FormalExpansion::new(CharacterKind::HookSchur);
    for (eta, ht) in border_strip_additions(la, r, la.len() + r as usize) {
        out.add_term(eta, sign_of_parity(ht));
    }
    out
}

// --- bar power-sum rules ----------------------------------------------------

fn staircase_for(kind: CharacterKind) -> StaircaseKind {
    match kind {
        CharacterKind::Symplectic => StaircaseKind::Symplectic,
        CharacterKind::OddOrthogonal => StaircaseKind::OddOrthogonal,
        CharacterKind::EvenOrthogonal => StaircaseKind::EvenOrthogonal,
        _ => panic!("no staircase for {kind:?}"),
    }
}

/// The three sums of a bar-power-sum rule, kept separate.
pub struct BarRuleParts {
    pub additions: FormalExpansion,
    pub removals: FormalExpansion,
    pub third: FormalExpansion,
}

impl BarRuleParts {
    pub fn merged(&self) -> FormalExpansion {
        let mut out = self.additions.clone();
        out.add_expansion(&self.removals);
        out.add_expansion(&self.third);
        out
    }
}

/// Shared skeleton of the symplectic and the two orthogonal rules. The
/// even-orthogonal case carries rational `(1+δ)` factors and a third-sum
/// sign exponent shifted by one.
pub fn bar_rule_parts(kind: CharacterKind, mu: &Partition, r: u32, n: usize) -> BarRuleParts {
    assert!(mu.len() <= n, "rule requires at most n rows");
    assert!(r >= 1);
    let even = kind == CharacterKind::EvenOrthogonal;
    let inv = if even {
        oracle::inv_one_plus_delta(mu, n)
    } else {
        rat(1)
    };
    let delta = Staircase::new(staircase_for(kind), n);

    let mut additions = FormalExpansion::new(kind);
    for (eta, ht) in border_strip_additions(mu, r, n) {
        let mut c = sign_of_parity(ht);
        if even {
            c = c * oracle::one_plus_delta(&eta, n) * inv.clone();
        }
        additions.add_term(eta, c);
    }

    let mut removals = FormalExpansion::new(kind);
    for (xi, ht) in border_strip_removals(mu, r) {
        let mut c = sign_of_parity(ht);
        if even {
            c = c * oracle::one_plus_delta(&xi, n) * inv.clone();
        }
        removals.add_term(xi, c);
    }

    let mut third = FormalExpansion::new(kind);
    for q in m_index(mu, &delta, r) + 1..=n {
        if let Some((part, p)) = mu_q(mu, &delta, r, q) {
            let c = if even {
                sign_of_parity(p + q) * oracle::one_plus_delta(&part, n) * inv.clone()
            } else {
                sign_of_parity(p + q + 1)
            };
            third.add_term(part, c);
        }
    }

    BarRuleParts {
        additions,
        removals,
        third,
    }
}

/// `p̄_r sp_μ` in `n` variables.
pub fn symplectic_mn(mu: &Partition, r: u32, n: usize) -> FormalExpansion {
    bar_rule_parts(CharacterKind::Symplectic, mu, r, n).merged()
}

/// `p̄_r oo_μ`.
pub fn odd_orthogonal_mn(mu: &Partition, r: u32, n: usize) -> FormalExpansion {
    bar_rule_parts(CharacterKind::OddOrthogonal, mu, r, n).merged()
}

/// `p̄_r oe_μ`.
pub fn even_orthogonal_mn(mu: &Partition, r: u32, n: usize) -> FormalExpansion {
    bar_rule_parts(CharacterKind::EvenOrthogonal, mu, r, n).merged()
}

// --- orthosymplectic rule ---------------------------------------------------

/// `P_r(X,X̄/Y) spo_λ`: signed additions (unbounded rows) and removals in
/// the orthosymplectic basis, plus the mixed third sum over μ ⊆ λ with
/// padded μ_n < r−1 built from the symplectic staircase data.
pub fn orthosymplectic_mn(la: &Partition, r: u32, n: usize, m: usize) -> MixedExpansion {
    assert!(r >= 1);
    assert!(la.len() <= n, "rule requires at most n rows");
    let mut spo_terms = FormalExpansion::new(CharacterKind::Orthosymplectic);
    let mut vanishing_terms = FormalExpansion::new(CharacterKind::Orthosymplectic);
    let mut push = |eta: Partition, c: BigRational| {
        if (eta.part(n + 1) as usize) > m {
            vanishing_terms.add_term(eta, c);
        } else {
            spo_terms.add_term(eta, c);
        }
    };
    for (eta, ht) in border_strip_additions(la, r, la.len() + r as usize) {
        push(eta, sign_of_parity(ht));
    }
    for (xi, ht) in border_strip_removals(la, r) {
        push(xi, sign_of_parity(ht));
    }

    let delta = Staircase::new(StaircaseKind::Symplectic, n);
    let mut mixed: BTreeMap<(Partition, Partition), BigRational> = BTreeMap::new();
    for mu in la.sub_partitions(n) {
        if mu.part(n) as i64 >= r as i64 - 1 {
            continue;
        }
        // drop terms whose y-factor is identically zero in m letters: the
        // skew shape la'/mu' has a column of la_i - mu_i boxes per row i
        if (1..=la.len()).any(|i| la.part(i) - mu.part(i) > m as u32) {
            continue;
        }
        for q in m_index(&mu, &delta, r) + 1..=n {
            if let Some((part, p)) = mu_q(&mu, &delta, r, q) {
                let c = sign_of_parity(p + q + 1);
                let entry = mixed.entry((mu.clone(), part)).or_insert_with(BigRational::zero);
                *entry += c;
            }
        }
    }
    let mixed_terms: Vec<MixedTerm> = mixed
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((mu, part), c)| MixedTerm {
            sp_part: part,
            skew_outer: la.clone(),
            skew_inner: mu,
            coeff: c,
        })
        .collect();

    MixedExpansion {
        lambda: la.clone(),
        r,
        n,
        m,
        spo_terms,
        vanishing_terms,
        mixed_terms,
    }
}

// --- auxiliary identities ----------------------------------------------------

/// Both sides of the strip-interchange identity at fixed vertical-strip
/// size `s`, evaluated in `(n, m-1)` variables.
pub fn interchange_sides(
    la: &Partition,
    r: u32,
    s: u32,
    n: usize,
    m: usize,
    cache: &CharCache,
) -> (LaurentPoly, LaurentPoly) {
    assert!(m >= 1);
    let my = m - 1;
    let mut lhs = LaurentPoly::zero(n, my);
    for nu in vertical_strip_removals(la, s) {
        for (zeta, ht) in border_strip_removals(&nu, r) {
            let ch = cache.get(CharacterKind::Orthosymplectic, &zeta, n, my);
            lhs = &lhs + &ch.scale(&sign_of_parity(ht));
        }
    }
    let mut rhs = LaurentPoly::zero(n, my);
    for (xi, ht) in border_strip_removals(la, r) {
        let sgn = sign_of_parity(ht);
        for omega in vertical_strip_removals(&xi, s) {
            let ch = cache.get(CharacterKind::Orthosymplectic, &omega, n, my);
            rhs = &rhs + &ch.scale(&sgn);
        }
    }
    (lhs, rhs)
}

/// Both sides of the strip-addition identity: peeling the last y-variable
/// off the signed border-strip additions.
pub fn add_lemma_sides(
    la: &Partition,
    r: u32,
    n: usize,
    m: usize,
    cache: &CharCache,
) -> (LaurentPoly, LaurentPoly) {
    assert!(m >= 1);
    let mut lhs = LaurentPoly::zero(n, m);
    for s in 0..=la.len() as u32 {
        for nu in vertical_strip_removals(la, s) {
            for (sigma, ht) in border_strip_additions(&nu, r, nu.len() + r as usize) {
                let ch = cache
                    .get(CharacterKind::Orthosymplectic, &sigma, n, m - 1)
                    .embed(n, m);
                let ym = LaurentPoly::y_pow(n, m, m, s as i64);
                lhs = &lhs + &(&ch * &ym).scale(&sign_of_parity(ht));
            }
            let ch = cache
                .get(CharacterKind::Orthosymplectic, &nu, n, m - 1)
                .embed(n, m);
            let ym = LaurentPoly::y_pow(n, m, m, s as i64 + r as i64);
            let sgn = sign_of_parity(r as usize + 1);
            lhs = &lhs + &(&ch * &ym).scale(&sgn);
        }
    }
    let mut rhs = LaurentPoly::zero(n, m);
    for (eta, ht) in border_strip_additions(la, r, la.len() + r as usize) {
        let ch = cache.get(CharacterKind::Orthosymplectic, &eta, n, m);
        rhs = &rhs + &ch.scale(&sign_of_parity(ht));
    }
    (lhs, rhs)
}

/// Both sides of `p̄_r A_α = Σ_j A_{α+rε_j} + Σ_j A_{α−rε_j}` for a strict
/// exponent vector `α` (doubled units).
pub fn bar_times_a_sides(alpha_doubled: &[i64], r: u32, n: usize) -> (LaurentPoly, LaurentPoly) {
    det_identity_sides(alpha_doubled, r, n, a_alpha)
}

/// Same identity for the plus-type determinant `N_α`.
pub fn bar_times_n_sides(alpha_doubled: &[i64], r: u32, n: usize) -> (LaurentPoly, LaurentPoly) {
    det_identity_sides(alpha_doubled, r, n, n_alpha)
}

fn det_identity_sides(
    alpha_doubled: &[i64],
    r: u32,
    n: usize,
    det: impl Fn(&[i64], usize) -> LaurentPoly,
) -> (LaurentPoly, LaurentPoly) {
    assert_eq!(alpha_doubled.len(), n);
    let lhs = &oracle::power_sum_bar(r, n) * &det(alpha_doubled, n);
    let mut rhs = LaurentPoly::zero(n, 0);
    for j in 0..n {
        for sgn in [1i64, -1] {
            let mut shifted = alpha_doubled.to_vec();
            shifted[j] += sgn * 2 * r as i64;
            rhs = &rhs + &det(&shifted, n);
        }
    }
    (lhs, rhs)
}

/// Both orders of composing the border-strip and vertical-strip removal
/// operators on a Schur label; the operators commute.
pub fn perp_commute_sides(
    la: &Partition,
    r: u32,
    s: u32,
) -> (FormalExpansion, FormalExpansion) {
    let first = p_perp(la, r).apply(|p| e_perp(p, s));
    let second = e_perp(la, s).apply(|p| p_perp(p, r));
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{
        even_orthogonal_char, hook_schur, odd_orthogonal_char, orthosymplectic_char,
        power_sum, power_sum_bar, schur, spo_power_sum, super_power_sum, symplectic_char,
    };

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn expansion_matches(e: &FormalExpansion, expected: &[(&[u32], i64)]) -> bool {
        e.len() == expected.len()
            && expected
                .iter()
                .all(|(parts, c)| e.coeff(&p(parts)) == rat(*c))
    }

    #[test]
    fn classical_four_strip_example() {
        let e = classical_mn(&p(&[3, 1]), 4, 6);
        assert!(expansion_matches(
            &e,
            &[
                (&[3, 1, 1, 1, 1, 1], -1),
                (&[3, 2, 2, 1], 1),
                (&[3, 3, 2], -1),
                (&[4, 4], -1),
                (&[7, 1], 1),
            ]
        ));
        assert!(expansion_matches(
            &classical_mn(&Partition::empty(), 1, 1),
            &[(&[1], 1)]
        ));
        assert!(expansion_matches(
            &classical_mn(&p(&[2, 1]), 2, 3),
            &[(&[4, 1], 1)]
        ));
    }

    #[test]
    fn classical_identity_small() {
        let cache = CharCache::new();
        for mu in Partition::all_up_to(4, 3) {
            for n in 1..=3usize {
                if mu.len() > n {
                    continue;
                }
                for r in 1..=4u32 {
                    let lhs = &power_sum(r, n) * &schur(&mu, n);
                    let rhs = classical_mn(&mu, r, n).evaluate(n, 0, &cache);
                    assert_eq!(lhs, rhs, "mu={mu} r={r} n={n}");
                }
            }
        }
    }

    #[test]
    fn pieri_and_perp_examples() {
        assert!(expansion_matches(
            &pieri_h(&p(&[1]), 1, 2),
            &[(&[2], 1), (&[1, 1], 1)]
        ));
        assert!(expansion_matches(
            &pieri_e(&p(&[1]), 1, 2),
            &[(&[2], 1), (&[1, 1], 1)]
        ));
        assert!(expansion_matches(
            &pieri_h(&Partition::empty(), 0, 2),
            &[(&[], 1)]
        ));
        assert!(expansion_matches(&p_perp(&p(&[2, 1]), 3), &[(&[], -1)]));
        assert!(expansion_matches(&e_perp(&p(&[2, 2]), 1), &[(&[2, 1], 1)]));
        assert!(p_perp(&p(&[1]), 2).is_empty());
    }

    #[test]
    fn pieri_identities_small() {
        use crate::oracle::{complete_sum, elementary_sum};
        let cache = CharCache::new();
        for mu in Partition::all_up_to(3, 3) {
            for n in 1..=3usize {
                if mu.len() > n {
                    continue;
                }
                for r in 0..=3u32 {
                    let h = &complete_sum(r, n) * &schur(&mu, n);
                    assert_eq!(h, pieri_h(&mu, r, n).evaluate(n, 0, &cache));
                    let e = &elementary_sum(r, n) * &schur(&mu, n);
                    assert_eq!(e, pieri_e(&mu, r, n).evaluate(n, 0, &cache));
                }
            }
        }
    }

    #[test]
    fn symplectic_worked_example() {
        let e = symplectic_mn(&p(&[4, 3, 1]), 6, 3);
        assert!(expansion_matches(
            &e,
            &[
                (&[5, 5, 4], 1),
                (&[8, 5, 1], -1),
                (&[10, 3, 1], 1),
                (&[2], 1),
                (&[4], 1),
                (&[4, 3, 3], -1),
            ]
        ));
        assert!(expansion_matches(
            &symplectic_mn(&p(&[1]), 1, 1),
            &[(&[2], 1), (&[], 1)]
        ));
    }

    #[test]
    fn symplectic_third_sum_vanishes_for_large_last_part() {
        // rows full and mu_n + 1 >= r
        for (mu, r, n) in [(p(&[3, 2, 2]), 3, 3), (p(&[2, 2]), 2, 2), (p(&[4, 1]), 2, 2)] {
            let parts = bar_rule_parts(CharacterKind::Symplectic, &mu, r, n);
            assert!(parts.third.is_empty(), "mu={mu} r={r} n={n}");
        }
    }

    #[test]
    fn odd_orthogonal_worked_example() {
        let e = odd_orthogonal_mn(&p(&[2, 1]), 2, 3);
        assert!(expansion_matches(&e, &[(&[4, 1], 1), (&[2, 1, 1], -1)]));
    }

    #[test]
    fn even_orthogonal_worked_example() {
        // two -1/2 contributions on the same label merge to -1
        let e = even_orthogonal_mn(&p(&[2, 1]), 3, 3);
        assert!(expansion_matches(
            &e,
            &[
                (&[5, 1], 1),
                (&[3, 3], -1),
                (&[2, 2, 2], -1),
                (&[], -1),
                (&[2], 1),
            ]
        ));
        let parts = bar_rule_parts(CharacterKind::EvenOrthogonal, &p(&[2, 1]), 3, 3);
        assert_eq!(parts.additions.coeff(&p(&[2, 2, 2])), crate::laurent::ratio(-1, 2));
        assert_eq!(parts.third.coeff(&p(&[2, 2, 2])), crate::laurent::ratio(-1, 2));
    }

    #[test]
    fn bar_rule_identities_small() {
        let cache = CharCache::new();
        for mu in Partition::all_up_to(4, 2) {
            for n in 1..=2usize {
                if mu.len() > n {
                    continue;
                }
                for r in 1..=4u32 {
                    let sp = &power_sum_bar(r, n) * &symplectic_char(&mu, n);
                    assert_eq!(
                        sp,
                        symplectic_mn(&mu, r, n).evaluate(n, 0, &cache),
                        "sp mu={mu} r={r} n={n}"
                    );
                    let oo = &power_sum_bar(r, n) * &odd_orthogonal_char(&mu, n);
                    assert_eq!(
                        oo,
                        odd_orthogonal_mn(&mu, r, n).evaluate(n, 0, &cache),
                        "oo mu={mu} r={r} n={n}"
                    );
                    let oe = &power_sum_bar(r, n) * &even_orthogonal_char(&mu, n);
                    assert_eq!(
                        oe,
                        even_orthogonal_mn(&mu, r, n).evaluate(n, 0, &cache),
                        "oe mu={mu} r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn hook_rule_examples_and_identity() {
        let e = hook_mn(&p(&[3, 1]), 4);
        assert!(expansion_matches(
            &e,
            &[
                (&[3, 1, 1, 1, 1, 1], -1),
                (&[3, 2, 2, 1], 1),
                (&[3, 3, 2], -1),
                (&[4, 4], -1),
                (&[7, 1], 1),
            ]
        ));
        assert!(expansion_matches(&hook_mn(&Partition::empty(), 1), &[(&[1], 1)]));
        let cache = CharCache::new();
        let lhs = &super_power_sum(2, 1, 1) * &hook_schur(&p(&[1]), 1, 1);
        let rhs = hook_mn(&p(&[1]), 2).evaluate(1, 1, &cache);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn orthosymplectic_worked_example() {
        // lambda=(2,2), n=2, m=2, r=3: four additions, one removal, four
        // mixed terms. The removal term -spo_(1) is forced by the identity
        // (check the evaluation test below).
        let e = orthosymplectic_mn(&p(&[2, 2]), 3, 2, 2);
        assert!(expansion_matches(
            &e.spo_terms,
            &[
                (&[5, 2], 1),
                (&[4, 3], -1),
                (&[2, 2, 2, 1], -1),
                (&[2, 2, 1, 1, 1], 1),
                (&[1], -1),
            ]
        ));
        assert!(e.vanishing_terms.is_empty());
        assert_eq!(e.mixed_terms.len(), 4);
        let find = |inner: &[u32]| {
            e.mixed_terms
                .iter()
                .find(|t| t.skew_inner == p(inner))
                .unwrap()
        };
        assert_eq!(find(&[1]).sp_part, p(&[1, 1]));
        assert_eq!(find(&[1]).coeff, rat(-1));
        assert_eq!(find(&[2]).sp_part, p(&[2, 1]));
        assert_eq!(find(&[2]).coeff, rat(-1));
        assert_eq!(find(&[1, 1]).sp_part, p(&[1]));
        assert_eq!(find(&[1, 1]).coeff, rat(-1));
        assert_eq!(find(&[2, 1]).sp_part, p(&[2]));
        assert_eq!(find(&[2, 1]).coeff, rat(-1));

        let cache = CharCache::new();
        let lhs = &spo_power_sum(3, 2, 2) * &orthosymplectic_char(&p(&[2, 2]), 2, 2);
        assert_eq!(lhs, e.evaluate(&cache));
    }

    #[test]
    fn orthosymplectic_single_row_example() {
        let e = orthosymplectic_mn(&p(&[1]), 3, 2, 1);
        assert!(expansion_matches(
            &e.spo_terms,
            &[(&[4], 1), (&[2, 2], -1), (&[1, 1, 1, 1], 1)]
        ));
        assert_eq!(e.mixed_terms.len(), 1);
        let t = &e.mixed_terms[0];
        assert_eq!(t.sp_part, p(&[1, 1]));
        assert_eq!(t.skew_inner, p(&[1]));
        assert_eq!(t.coeff, rat(-1));
        assert_eq!(t.render_text(true), "-sp_(1,1)(X)");

        let cache = CharCache::new();
        let lhs = &spo_power_sum(3, 2, 1) * &orthosymplectic_char(&p(&[1]), 2, 1);
        assert_eq!(lhs, e.evaluate(&cache));
    }

    #[test]
    fn orthosymplectic_mixed_empty_for_large_last_part() {
        // padded lambda_n + 1 >= m + r
        for (la, r, n, m) in [
            (p(&[3, 3]), 2, 2, 2),
            (p(&[2, 2]), 2, 2, 1),
            (p(&[4]), 3, 1, 2),
        ] {
            let e = orthosymplectic_mn(&la, r, n, m);
            assert!(
                la.part(n) + 1 >= (m as u32) + r,
                "hypothesis holds la={la} r={r} n={n} m={m}"
            );
            assert!(e.mixed_terms.is_empty(), "la={la} r={r} n={n} m={m}");
        }
    }

    #[test]
    fn interchange_and_add_identities_small() {
        let cache = CharCache::new();
        for la in Partition::all_up_to(4, 3) {
            for (r, s) in [(3u32, 1u32), (2, 2), (1, 0)] {
                let (l, rr) = interchange_sides(&la, r, s, 2, 1, &cache);
                assert_eq!(l, rr, "interchange la={la} r={r} s={s}");
            }
            for r in 1..=3u32 {
                let (l, rr) = add_lemma_sides(&la, r, 1, 1, &cache);
                assert_eq!(l, rr, "add la={la} r={r}");
            }
        }
    }

    #[test]
    fn determinant_identities_examples() {
        let (l, r) = bar_times_a_sides(&[6, 4, 2], 3, 3);
        assert_eq!(l, r);
        let (l, r) = bar_times_n_sides(&[4, 2, 0], 2, 3);
        assert_eq!(l, r);
        let (l, r) = bar_times_a_sides(&[5, 3, 1], 4, 3);
        assert_eq!(l, r);
    }

    #[test]
    fn perp_operators_commute() {
        for la in Partition::all_up_to(6, 4) {
            for (r, s) in [(2u32, 1u32), (3, 2), (1, 3)] {
                let (a, b) = perp_commute_sides(&la, r, s);
                assert_eq!(a, b, "la={la} r={r} s={s}");
            }
        }
    }

    #[test]
    fn render_and_json_round_trip() {
        let e = symplectic_mn(&p(&[4, 3, 1]), 6, 3);
        let text = e.render_text();
        assert!(text.contains("sp_(5,5,4)"));
        assert!(text.contains("- sp_(8,5,1)"));
        let back = FormalExpansion::from_json(CharacterKind::Symplectic, &e.to_json()).unwrap();
        assert_eq!(back, e);

        let half = even_orthogonal_mn(&p(&[2, 1]), 3, 3);
        let back = FormalExpansion::from_json(CharacterKind::EvenOrthogonal, &half.to_json()).unwrap();
        assert_eq!(back, half);

        let me = orthosymplectic_mn(&p(&[2, 2]), 3, 2, 2);
        let mut back = MixedExpansion::from_json(&me.to_json()).unwrap();
        back.vanishing_terms = me.vanishing_terms.clone();
        assert_eq!(back, me);
    }
}
