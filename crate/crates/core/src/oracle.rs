//! Ground-truth evaluation of every character as an explicit Laurent
//! polynomial, with two independent routes (determinantal and tableau
//! based) wherever both exist.

use std::collections::HashMap;
use std::sync::Mutex;

use num::rational::BigRational;
use thiserror::Error;

use crate::laurent::{rat, ratio, determinant, LaurentPoly};
use crate::partition::{
    vertical_strip_removals, Partition, SkewShape, Staircase, StaircaseKind,
};

/// The character bases appearing in the rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharacterKind {
    Schur,
    SkewSchur,
    Symplectic,
    OddOrthogonal,
    EvenOrthogonal,
    HookSchur,
    Orthosymplectic,
}

impl CharacterKind {
    pub fn tag(&self) -> &'static str {
        match self {
            CharacterKind::Schur => "s",
            CharacterKind::SkewSchur => "skew",
            CharacterKind::Symplectic => "sp",
            CharacterKind::OddOrthogonal => "oo",
            CharacterKind::EvenOrthogonal => "oe",
            CharacterKind::HookSchur => "hs",
            CharacterKind::Orthosymplectic => "spo",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "s" | "schur" => CharacterKind::Schur,
            "skew" | "skew_schur" => CharacterKind::SkewSchur,
            "sp" => CharacterKind::Symplectic,
            "oo" => CharacterKind::OddOrthogonal,
            "oe" => CharacterKind::EvenOrthogonal,
            "hs" | "hook" => CharacterKind::HookSchur,
            "spo" => CharacterKind::Orthosymplectic,
            _ => return None,
        })
    }

    /// Whether the character carries y-variables.
    pub fn uses_y(&self) -> bool {
        matches!(self, CharacterKind::HookSchur | CharacterKind::Orthosymplectic)
    }
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("branching identity failed for {kind:?} lambda={lambda} n={n} m={m}")]
    BranchMismatch {
        kind: CharacterKind,
        lambda: Partition,
        n: usize,
        m: usize,
    },
}

// --- power sums -----------------------------------------------------------

/// `p_r(X) = sum_i x_i^r` in `n` x-variables; `p_0 = 1`.
pub fn power_sum(r: u32, n: usize) -> LaurentPoly {
    if r == 0 {
        return LaurentPoly::one(n, 0);
    }
    let mut acc = LaurentPoly::zero(n, 0);
    for i in 1..=n {
        acc = &acc + &LaurentPoly::x_pow(n, 0, i, r as i64);
    }
    acc
}

/// `p̄_r = sum_i (x_i^r + x_i^{-r})`.
pub fn power_sum_bar(r: u32, n: usize) -> LaurentPoly {
    assert!(r >= 1);
    let p = power_sum(r, n);
    &p + &p.bar_substitute()
}

fn y_power_sum(r: u32, n: usize, m: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(n, m);
    for j in 1..=m {
        acc = &acc + &LaurentPoly::y_pow(n, m, j, r as i64);
    }
    acc
}

/// `P_r(X/Y) = p_r(X) + (-1)^{r-1} p_r(Y)`.
pub fn super_power_sum(r: u32, n: usize, m: usize) -> LaurentPoly {
    if r == 0 {
        return LaurentPoly::one(n, m);
    }
    let sign = if r % 2 == 1 { rat(1) } else { rat(-1) };
    &power_sum(r, n).embed(n, m) + &y_power_sum(r, n, m).scale(&sign)
}

/// `P_r(X,X̄/Y) = p̄_r(X) + (-1)^{r-1} p_r(Y)`.
pub fn spo_power_sum(r: u32, n: usize, m: usize) -> LaurentPoly {
    assert!(r >= 1);
    let sign = if r % 2 == 1 { rat(1) } else { rat(-1) };
    &power_sum_bar(r, n).embed(n, m) + &y_power_sum(r, n, m).scale(&sign)
}

/// `h_r(X)`, the complete homogeneous sum.
pub fn complete_sum(r: u32, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(n, 0);
    let mut exps = vec![0i64; n];
    fn rec(acc: &mut LaurentPoly, exps: &mut Vec<i64>, var: usize, left: u32, n: usize) {
        if var == n {
            if left == 0 {
                *acc = &*acc + &LaurentPoly::monomial(n, 0, exps, &[], rat(1));
            }
            return;
        }
        for k in 0..=left {
            exps[var] = k as i64;
            rec(acc, exps, var + 1, left - k, n);
        }
        exps[var] = 0;
    }
    rec(&mut acc, &mut exps, 0, r, n);
    acc
}

/// `e_r(X)`, the elementary sum.
pub fn elementary_sum(r: u32, n: usize) -> LaurentPoly {
    if r as usize > n {
        return LaurentPoly::zero(n, 0);
    }
    let mut acc = LaurentPoly::zero(n, 0);
    let mut exps = vec![0i64; n];
    fn rec(acc: &mut LaurentPoly, exps: &mut Vec<i64>, var: usize, left: u32, n: usize) {
        if left == 0 {
            *acc = &*acc + &LaurentPoly::monomial(n, 0, exps, &[], rat(1));
            return;
        }
        if var == n {
            return;
        }
        exps[var] = 1;
        rec(acc, exps, var + 1, left - 1, n);
        exps[var] = 0;
        rec(acc, exps, var + 1, left, n);
    }
    rec(&mut acc, &mut exps, 0, r, n);
    acc
}

// --- tableau enumeration --------------------------------------------------

/// Content vectors (letter counts) of all semistandard tableaux of the
/// skew shape in `k` letters.
fn ssyt_contents(shape: &SkewShape, k: usize) -> Vec<Vec<u32>> {
    let outer = shape.outer();
    let inner = shape.inner();
    let rows = outer.len();
    let mut grid: Vec<Vec<usize>> = (1..=rows)
        .map(|i| vec![usize::MAX; outer.part(i) as usize])
        .collect();
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut content = vec![0u32; k];
    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<usize>>,
        inner: &Partition,
        k: usize,
        content: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == cells.len() {
            out.push(content.clone());
            return;
        }
        let (i, j) = cells[idx];
        // cells are row-major, so left and upper neighbors are already set
        let mut lo = 0usize;
        if j >= 2 && j - 1 > inner.part(i) as usize {
            lo = lo.max(grid[i - 1][j - 2]); // weakly increasing rows
        }
        if i >= 2 && j > inner.part(i - 1) as usize && j <= grid[i - 2].len() {
            let up = grid[i - 2][j - 1];
            if up != usize::MAX {
                lo = lo.max(up + 1); // strictly increasing columns
            }
        }
        for v in lo..k {
            grid[i - 1][j - 1] = v;
            content[v] += 1;
            rec(cells, idx + 1, grid, inner, k, content, out);
            content[v] -= 1;
        }
        grid[i - 1][j - 1] = usize::MAX;
    }
    rec(&cells, 0, &mut grid, inner, k, &mut content, &mut out);
    out
}

/// King tableau weights of a straight shape: exponent vectors
/// `n_i(T) - n_{ī}(T)` over all semistandard symplectic tableaux in the
/// alphabet `1 < 1̄ < ... < n < n̄` with row condition: every entry in row
/// `i` is at least the unbarred letter `i`.
fn king_weights(shape: &Partition, n: usize) -> Vec<Vec<i64>> {
    if shape.len() > n {
        return Vec::new();
    }
    let rows = shape.len();
    let mut grid: Vec<Vec<usize>> = (1..=rows)
        .map(|i| vec![usize::MAX; shape.part(i) as usize])
        .collect();
    let cells: Vec<(usize, usize)> = (1..=rows)
        .flat_map(|i| (1..=shape.part(i) as usize).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut weight = vec![0i64; n];
    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        weight: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if idx == cells.len() {
            out.push(weight.clone());
            return;
        }
        let (i, j) = cells[idx];
        let mut lo = 2 * (i - 1); // letter i, unbarred, 0-based index
        if j >= 2 {
            lo = lo.max(grid[i - 1][j - 2]);
        }
        if i >= 2 {
            lo = lo.max(grid[i - 2][j - 1] + 1);
        }
        for v in lo..2 * n {
            grid[i - 1][j - 1] = v;
            let var = v / 2;
            let delta = if v % 2 == 0 { 1 } else { -1 };
            weight[var] += delta;
            rec(cells, idx + 1, grid, n, weight, out);
            weight[var] -= delta;
        }
        grid[i - 1][j - 1] = usize::MAX;
    }
    rec(&cells, 0, &mut grid, n, &mut weight, &mut out);
    out
}

// --- Schur polynomials ------------------------------------------------------

/// Schur polynomial via the bialternant determinant ratio.
pub fn schur(la: &Partition, n: usize) -> LaurentPoly {
    if la.len() > n {
        return LaurentPoly::zero(n, 0);
    }
    let num_exps: Vec<i64> = (1..=n)
        .map(|j| la.part(j) as i64 + (n - j) as i64)
        .collect();
    let den_exps: Vec<i64> = (1..=n).map(|j| (n - j) as i64).collect();
    let entry = |i: usize, e: i64| LaurentPoly::x_pow(n, 0, i, e);
    let num = determinant(
        &(1..=n)
            .map(|i| num_exps.iter().map(|&e| entry(i, e)).collect())
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let den = determinant(
        &(1..=n)
            .map(|i| den_exps.iter().map(|&e| entry(i, e)).collect())
            .collect::<Vec<_>>(),
    )
    .unwrap();
    LaurentPoly::exact_divide(&num, &den).expect("bialternant ratio is exact")
}

/// Schur polynomial via semistandard tableau enumeration.
pub fn schur_tableaux(la: &Partition, n: usize) -> LaurentPoly {
    if la.len() > n {
        return LaurentPoly::zero(n, 0);
    }
    let shape = SkewShape::new(la.clone(), Partition::empty()).unwrap();
    contents_to_x_poly(&ssyt_contents(&shape, n), n)
}

fn contents_to_x_poly(contents: &[Vec<u32>], n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(n, 0);
    for c in contents {
        let exps: Vec<i64> = c.iter().map(|&e| e as i64).collect();
        acc = &acc + &LaurentPoly::monomial(n, 0, &exps, &[], rat(1));
    }
    acc
}

/// Skew Schur polynomial in `m` y-variables (tableau route).
pub fn skew_schur(shape: &SkewShape, m: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(0, m);
    for c in ssyt_contents(shape, m) {
        let exps: Vec<i64> = c.iter().map(|&e| e as i64).collect();
        acc = &acc + &LaurentPoly::monomial(0, m, &[], &exps, rat(1));
    }
    acc
}

// --- Weyl character formulas ------------------------------------------------

/// `A_alpha = det(x_i^{a_j} - x̄_i^{a_j})` with `a_j` in doubled units.
pub fn a_alpha(alpha_doubled: &[i64], n: usize) -> LaurentPoly {
    assert_eq!(alpha_doubled.len(), n);
    let entry = |i: usize, a: i64| {
        let p = LaurentPoly::monomial_doubled(n, 0, &unit(n, i, a), &[], rat(1));
        &p - &p.bar_substitute()
    };
    determinant(
        &(1..=n)
            .map(|i| alpha_doubled.iter().map(|&a| entry(i, a)).collect())
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

/// `N_alpha = det(x_i^{a_j} + x̄_i^{a_j})` with `a_j` in doubled units.
pub fn n_alpha(alpha_doubled: &[i64], n: usize) -> LaurentPoly {
    assert_eq!(alpha_doubled.len(), n);
    let entry = |i: usize, a: i64| {
        let p = LaurentPoly::monomial_doubled(n, 0, &unit(n, i, a), &[], rat(1));
        &p + &p.bar_substitute()
    };
    determinant(
        &(1..=n)
            .map(|i| alpha_doubled.iter().map(|&a| entry(i, a)).collect())
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

fn unit(n: usize, i: usize, a: i64) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[i - 1] = a;
    v
}

fn shifted_doubled(la: &Partition, delta: &Staircase) -> Vec<i64> {
    (1..=delta.n)
        .map(|i| 2 * la.part(i) as i64 + delta.doubled(i))
        .collect()
}

/// Symplectic character via the Weyl ratio `A_{λ+δ}/A_δ`.
pub fn symplectic_char(la: &Partition, n: usize) -> LaurentPoly {
    if la.len() > n {
        return LaurentPoly::zero(n, 0);
    }
    let delta = Staircase::new(StaircaseKind::Symplectic, n);
    let num = a_alpha(&shifted_doubled(la, &delta), n);
    let den = a_alpha(&delta.doubled_vec(), n);
    LaurentPoly::exact_divide(&num, &den).expect("Weyl ratio is exact")
}

/// Symplectic character via King tableau enumeration.
pub fn symplectic_char_king(la: &Partition, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(n, 0);
    for w in king_weights(la, n) {
        acc = &acc + &LaurentPoly::monomial(n, 0, &w, &[], rat(1));
    }
    acc
}

/// Odd orthogonal character: Weyl ratio with half-integer exponents.
pub fn odd_orthogonal_char(la: &Partition, n: usize) -> LaurentPoly {
    if la.len() > n {
        return LaurentPoly::zero(n, 0);
    }
    let delta = Staircase::new(StaircaseKind::OddOrthogonal, n);
    let num = a_alpha(&shifted_doubled(la, &delta), n);
    let den = a_alpha(&delta.doubled_vec(), n);
    LaurentPoly::exact_divide(&num, &den).expect("Weyl ratio is exact")
}

/// Even orthogonal character `2 N_{λ+δ} / ((1 + δ_{λ_n,0}) N_δ)`; the
/// Kronecker factor reads the padded n-th part.
pub fn even_orthogonal_char(la: &Partition, n: usize) -> LaurentPoly {
    if la.len() > n {
        return LaurentPoly::zero(n, 0);
    }
    let delta = Staircase::new(StaircaseKind::EvenOrthogonal, n);
    let num = n_alpha(&shifted_doubled(la, &delta), n);
    let den = n_alpha(&delta.doubled_vec(), n);
    let ratio_poly = LaurentPoly::exact_divide(&num, &den).expect("Weyl ratio is exact");
    let scalar = if la.part(n) == 0 { rat(1) } else { rat(2) };
    ratio_poly.scale(&scalar)
}

// --- supersymmetric characters ----------------------------------------------

/// Hook (supersymmetric) Schur polynomial
/// `hs_λ(X/Y) = Σ_{μ⊆λ, ℓ(μ)≤n} s_μ(X) s_{λ'/μ'}(Y)`.
pub fn hook_schur(la: &Partition, n: usize, m: usize) -> LaurentPoly {
    mixed_sum(la, n, m, schur)
}

/// Orthosymplectic Schur polynomial
/// `spo_λ(X/Y) = Σ_{μ⊆λ, ℓ(μ)≤n} sp_μ(X) s_{λ'/μ'}(Y)`.
pub fn orthosymplectic_char(la: &Partition, n: usize, m: usize) -> LaurentPoly {
    mixed_sum(la, n, m, symplectic_char)
}

/// Orthosymplectic character via spo-tableau enumeration: a King tableau
/// on the unprimed sub-shape, a row-strict primed filling of the rest.
pub fn orthosymplectic_char_tableaux(la: &Partition, n: usize, m: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(n, m);
    for mu in la.sub_partitions(n) {
        let king = symplectic_char_king(&mu, n);
        if king.is_zero() {
            continue;
        }
        // row-strict fillings of la/mu are column-strict fillings of the
        // conjugate skew shape
        let skew = SkewShape::new(la.conjugate(), mu.conjugate()).unwrap();
        let primed = skew_schur(&skew, m);
        if primed.is_zero() {
            continue;
        }
        acc = &acc + &(&king.embed(n, m) * &primed.embed(n, m));
    }
    acc
}

fn mixed_sum(
    la: &Partition,
    n: usize,
    m: usize,
    x_char: impl Fn(&Partition, usize) -> LaurentPoly,
) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(n, m);
    for mu in la.sub_partitions(n) {
        let xc = x_char(&mu, n);
        if xc.is_zero() {
            continue;
        }
        let skew = SkewShape::new(la.conjugate(), mu.conjugate()).unwrap();
        let yc = skew_schur(&skew, m);
        if yc.is_zero() {
            continue;
        }
        acc = &acc + &(&xc.embed(n, m) * &yc.embed(n, m));
    }
    acc
}

/// Dispatcher used by formal-expansion evaluation. `m` is ignored for the
/// x-only bases.
pub fn evaluate(kind: CharacterKind, la: &Partition, n: usize, m: usize) -> LaurentPoly {
    match kind {
        CharacterKind::Schur => schur(la, n),
        CharacterKind::Symplectic => symplectic_char(la, n),
        CharacterKind::OddOrthogonal => odd_orthogonal_char(la, n),
        CharacterKind::EvenOrthogonal => even_orthogonal_char(la, n),
        CharacterKind::HookSchur => hook_schur(la, n, m),
        CharacterKind::Orthosymplectic => orthosymplectic_char(la, n, m),
        CharacterKind::SkewSchur => panic!("skew Schur labels need an explicit shape"),
    }
}

/// Verifies the last-y-variable branching identity
/// `f_λ(X/Y) = Σ_{λ/π ∈ VS} f_π(X/Y̲) y_m^{|λ|-|π|}` for the hook or
/// orthosymplectic character; returns the (π, exponent) pairs used.
pub fn branch_last_y(
    kind: CharacterKind,
    la: &Partition,
    n: usize,
    m: usize,
) -> Result<Vec<(Partition, u32)>, OracleError> {
    assert!(m >= 1);
    assert!(kind.uses_y());
    let lhs = evaluate(kind, la, n, m);
    let mut rhs = LaurentPoly::zero(n, m);
    let mut used = Vec::new();
    for s in 0..=la.len() as u32 {
        for pi in vertical_strip_removals(la, s) {
            let term = evaluate(kind, &pi, n, m - 1).embed(n, m);
            let ym = LaurentPoly::y_pow(n, m, m, s as i64);
            rhs = &rhs + &(&term * &ym);
            used.push((pi, s));
        }
    }
    if lhs != rhs {
        return Err(OracleError::BranchMismatch {
            kind,
            lambda: la.clone(),
            n,
            m,
        });
    }
    Ok(used)
}

/// Memoizing character cache; synchronized for use from parallel sweeps.
pub struct CharCache {
    map: Mutex<HashMap<(CharacterKind, Partition, usize, usize), LaurentPoly>>,
}

impl Default for CharCache {
    fn default() -> Self {
        Self::new()
    }
}

impl CharCache {
    pub fn new() -> Self {
        CharCache {
            map: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, kind: CharacterKind, la: &Partition, n: usize, m: usize) -> LaurentPoly {
        let key = (kind, la.clone(), n, m);
        if let Some(p) = self.map.lock().unwrap().get(&key) {
            return p.clone();
        }
        let p = evaluate(kind, la, n, m);
        self.map.lock().unwrap().insert(key, p.clone());
        p
    }
}

/// Scalar helper: `1 + δ_{λ_n, 0}` with the padded n-th part.
pub fn one_plus_delta(la: &Partition, n: usize) -> BigRational {
    if la.part(n) == 0 {
        rat(2)
    } else {
        rat(1)
    }
}

/// `1 / (1 + δ_{λ_n, 0})`.
pub fn inv_one_plus_delta(la: &Partition, n: usize) -> BigRational {
    if la.part(n) == 0 {
        ratio(1, 2)
    } else {
        rat(1)
    }
}
