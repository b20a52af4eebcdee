//! Exact sparse Laurent polynomials over the rationals in `x_1..x_n`
//! (integer or half-integer exponents, stored in doubled units) and
//! `y_1..y_m` (nonnegative integer exponents).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("variable counts differ: ({0}, {1}) vs ({2}, {3})")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("numerator is not divisible by denominator")]
    NotDivisible,
}

/// Exponent vector layout: first `num_x` entries are x-exponents in
/// DOUBLED units (so `x^(3/2)` is stored as 3), the remaining `num_y`
/// entries are ordinary nonnegative y-exponents.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    num_x: usize,
    num_y: usize,
    terms: HashMap<Vec<i64>, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl LaurentPoly {
    pub fn zero(num_x: usize, num_y: usize) -> Self {
        LaurentPoly {
            num_x,
            num_y,
            terms: HashMap::new(),
        }
    }

    pub fn one(num_x: usize, num_y: usize) -> Self {
        Self::constant(num_x, num_y, BigRational::one())
    }

    pub fn constant(num_x: usize, num_y: usize, c: BigRational) -> Self {
        let mut p = Self::zero(num_x, num_y);
        if !c.is_zero() {
            p.terms.insert(vec![0; num_x + num_y], c);
        }
        p
    }

    /// Single term with x-exponents given in DOUBLED units.
    pub fn monomial_doubled(
        num_x: usize,
        num_y: usize,
        x_doubled: &[i64],
        y_exp: &[i64],
        coeff: BigRational,
    ) -> Self {
        assert_eq!(x_doubled.len(), num_x);
        assert_eq!(y_exp.len(), num_y);
        assert!(y_exp.iter().all(|&e| e >= 0), "y-exponents must be nonnegative");
        let mut p = Self::zero(num_x, num_y);
        if !coeff.is_zero() {
            let mut key = Vec::with_capacity(num_x + num_y);
            key.extend_from_slice(x_doubled);
            key.extend_from_slice(y_exp);
            p.terms.insert(key, coeff);
        }
        p
    }

    /// Single term with ordinary integer x-exponents (doubled internally).
    pub fn monomial(
        num_x: usize,
        num_y: usize,
        x_exp: &[i64],
        y_exp: &[i64],
        coeff: BigRational,
    ) -> Self {
        let doubled: Vec<i64> = x_exp.iter().map(|&e| 2 * e).collect();
        Self::monomial_doubled(num_x, num_y, &doubled, y_exp, coeff)
    }

    /// `x_i^k` with `i` 1-based and `k` an ordinary integer.
    pub fn x_pow(num_x: usize, num_y: usize, i: usize, k: i64) -> Self {
        let mut xs = vec![0i64; num_x];
        xs[i - 1] = k;
        Self::monomial(num_x, num_y, &xs, &vec![0; num_y], BigRational::one())
    }

    /// `y_j^k` with `j` 1-based.
    pub fn y_pow(num_x: usize, num_y: usize, j: usize, k: i64) -> Self {
        let mut ys = vec![0i64; num_y];
        ys[j - 1] = k;
        Self::monomial(num_x, num_y, &vec![0; num_x], &ys, BigRational::one())
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    pub fn num_y(&self) -> usize {
        self.num_y
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over (exponent key, coefficient) pairs in arbitrary order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    fn insert(&mut self, key: Vec<i64>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    fn check_dims(&self, other: &Self) -> Result<(), LaurentError> {
        if self.num_x != other.num_x || self.num_y != other.num_y {
            return Err(LaurentError::DimensionMismatch(
                self.num_x, self.num_y, other.num_x, other.num_y,
            ));
        }
        Ok(())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_x, self.num_y);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), v * c))
            .collect();
        LaurentPoly {
            num_x: self.num_x,
            num_y: self.num_y,
            terms,
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.num_x, self.num_y);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `x_i -> 1/x_i` for every x-variable.
    pub fn bar_substitute(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| {
                let mut key = k.clone();
                for e in key.iter_mut().take(self.num_x) {
                    *e = -*e;
                }
                (key, v.clone())
            })
            .collect();
        LaurentPoly {
            num_x: self.num_x,
            num_y: self.num_y,
            terms,
        }
    }

    /// Embeds into a ring with more variables; existing x-variables map to
    /// the leading x-slots and y-variables to the leading y-slots.
    pub fn embed(&self, num_x: usize, num_y: usize) -> Self {
        assert!(num_x >= self.num_x && num_y >= self.num_y);
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| {
                let mut key = vec![0i64; num_x + num_y];
                key[..self.num_x].copy_from_slice(&k[..self.num_x]);
                key[num_x..num_x + self.num_y].copy_from_slice(&k[self.num_x..]);
                (key, v.clone())
            })
            .collect();
        LaurentPoly {
            num_x,
            num_y,
            terms,
        }
    }

    /// Applies a permutation to the x-variables: variable `i` is sent to
    /// `perm[i]` (0-based slots).
    pub fn permute_x(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.num_x);
        self.map_keys(|k| {
            let mut key = k.to_vec();
            for (i, &pi) in perm.iter().enumerate() {
                key[pi] = k[i];
            }
            key
        })
    }

    pub fn permute_y(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.num_y);
        self.map_keys(|k| {
            let mut key = k.to_vec();
            for (j, &pj) in perm.iter().enumerate() {
                key[self.num_x + pj] = k[self.num_x + j];
            }
            key
        })
    }

    /// Substitutes `x_i -> 1/x_i` for a single variable (1-based).
    pub fn invert_x(&self, i: usize) -> Self {
        self.map_keys(|k| {
            let mut key = k.to_vec();
            key[i - 1] = -key[i - 1];
            key
        })
    }

    fn map_keys(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let mut out = Self::zero(self.num_x, self.num_y);
        for (k, v) in &self.terms {
            out.insert(f(k), v.clone());
        }
        out
    }

    /// Substitutes `x_n = t`, `y_m = -t` and merges the two exponents into
    /// the last x-slot; a supersymmetric polynomial yields a result whose
    /// last x-slot is identically zero.
    pub fn merge_last_xy(&self) -> Self {
        assert!(self.num_x >= 1 && self.num_y >= 1);
        let mut out = Self::zero(self.num_x, self.num_y - 1);
        for (k, v) in &self.terms {
            let y_exp = k[self.num_x + self.num_y - 1];
            let mut key: Vec<i64> = k[..self.num_x + self.num_y - 1].to_vec();
            key[self.num_x - 1] += 2 * y_exp;
            let sign = if y_exp % 2 == 0 { v.clone() } else { -v.clone() };
            out.insert(key, sign);
        }
        out
    }

    /// Maximum absolute doubled exponent of x-variable `i` (1-based).
    pub fn max_abs_x_exp(&self, i: usize) -> i64 {
        self.terms.keys().map(|k| k[i - 1].abs()).max().unwrap_or(0)
    }

    /// Exact quotient in the Laurent ring. Errors if not exactly divisible.
    pub fn exact_divide(num: &Self, den: &Self) -> Result<Self, LaurentError> {
        num.check_dims(den)?;
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero(num.num_x, num.num_y));
        }
        // strip the monomial content so both operands live in the ordinary
        // polynomial subring; there divisibility agrees with the Laurent ring
        let (n1, shift_n) = num.strip_monomial_content();
        let (d1, shift_d) = den.strip_monomial_content();
        let q1 = poly_divide(&n1, &d1)?;
        let shift: Vec<i64> = shift_n
            .iter()
            .zip(&shift_d)
            .map(|(a, b)| a - b)
            .collect();
        // y-variables are not Laurent: a negative shift there means the
        // division only existed formally
        let q = q1.mul_key_shift(&shift);
        if q.terms.keys().any(|k| k[q.num_x..].iter().any(|&e| e < 0)) {
            return Err(LaurentError::NotDivisible);
        }
        Ok(q)
    }

    fn strip_monomial_content(&self) -> (Self, Vec<i64>) {
        let nvars = self.num_x + self.num_y;
        let mut min = vec![i64::MAX; nvars];
        for k in self.terms.keys() {
            for (m, &e) in min.iter_mut().zip(k) {
                *m = (*m).min(e);
            }
        }
        let shifted = self.mul_key_shift(&min.iter().map(|&m| -m).collect::<Vec<_>>());
        (shifted, min)
    }

    fn mul_key_shift(&self, shift: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| {
                let key: Vec<i64> = k.iter().zip(shift).map(|(a, b)| a + b).collect();
                (key, v.clone())
            })
            .collect();
        LaurentPoly {
            num_x: self.num_x,
            num_y: self.num_y,
            terms,
        }
    }

    /// Terms sorted by graded-lexicographic exponent order, descending.
    pub fn sorted_terms(&self) -> Vec<(Vec<i64>, BigRational)> {
        let mut v: Vec<(Vec<i64>, BigRational)> = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| grlex_cmp(&b.0, &a.0));
        v
    }
}

fn grlex_cmp(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Single-divisor division in the ordinary polynomial subring; both inputs
/// must have nonnegative exponents and the division must be exact.
fn poly_divide(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    let lead = |p: &LaurentPoly| -> (Vec<i64>, BigRational) {
        let k = p
            .terms
            .keys()
            .max_by(|a, b| grlex_cmp(a, b))
            .expect("nonzero");
        (k.clone(), p.terms[k].clone())
    };
    let (dk, dc) = lead(den);
    let mut rem = num.clone();
    let mut quot = LaurentPoly::zero(num.num_x, num.num_y);
    while !rem.is_zero() {
        let (rk, rc) = lead(&rem);
        let tk: Vec<i64> = rk.iter().zip(&dk).map(|(a, b)| a - b).collect();
        if tk.iter().any(|&e| e < 0) {
            return Err(LaurentError::NotDivisible);
        }
        let tc = rc / &dc;
        let term = LaurentPoly {
            num_x: num.num_x,
            num_y: num.num_y,
            terms: HashMap::from([(tk, tc)]),
        };
        rem = &rem - &(&term * den);
        quot = &quot + &term;
    }
    Ok(quot)
}

/// Exact determinant by cofactor expansion, memoized on column subsets.
pub fn determinant(mat: &[Vec<LaurentPoly>]) -> Result<LaurentPoly, LaurentError> {
    let n = mat.len();
    if mat.iter().any(|row| row.len() != n) {
        return Err(LaurentError::NotSquare);
    }
    if n == 0 {
        return Ok(LaurentPoly::one(0, 0));
    }
    let (nx, ny) = (mat[0][0].num_x, mat[0][0].num_y);
    for row in mat {
        for e in row {
            mat[0][0].check_dims(e)?;
        }
    }
    let full: u32 = (1 << n) - 1;
    let mut memo: HashMap<u32, LaurentPoly> = HashMap::new();
    fn minor(
        mat: &[Vec<LaurentPoly>],
        row: usize,
        cols: u32,
        nx: usize,
        ny: usize,
        memo: &mut HashMap<u32, LaurentPoly>,
    ) -> LaurentPoly {
        if cols == 0 {
            return LaurentPoly::one(nx, ny);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = LaurentPoly::zero(nx, ny);
        let mut sign = true;
        for j in 0..mat.len() {
            if cols & (1 << j) == 0 {
                continue;
            }
            let sub = minor(mat, row + 1, cols & !(1 << j), nx, ny, memo);
            let contrib = &mat[row][j] * &sub;
            acc = if sign { &acc + &contrib } else { &acc - &contrib };
            sign = !sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    Ok(minor(mat, 0, full, nx, ny, &mut memo))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_dims(rhs).expect("dimension mismatch in add");
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_dims(rhs).expect("dimension mismatch in sub");
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(k.clone(), -v.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_dims(rhs).expect("dimension mismatch in mul");
        let mut out = LaurentPoly::zero(self.num_x, self.num_y);
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                let key: Vec<i64> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.insert(key, va * vb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (key, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in key.iter().take(self.num_x).enumerate() {
                if e == 0 {
                    continue;
                }
                let var = format!("x{}", i + 1);
                if e == 2 {
                    factors.push(var);
                } else if e % 2 == 0 {
                    factors.push(format!("{var}^{}", e / 2));
                } else {
                    factors.push(format!("{var}^{e}/2"));
                }
            }
            for (j, &e) in key.iter().skip(self.num_x).enumerate() {
                if e == 0 {
                    continue;
                }
                let var = format!("y{}", j + 1);
                if e == 1 {
                    factors.push(var);
                } else {
                    factors.push(format!("{var}^{e}"));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
