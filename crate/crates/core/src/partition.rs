//! Partitions, skew shapes, strip predicates and enumerators, and the
//! staircase-indexed constructions shared by all three rule families.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A partition: weakly decreasing positive parts, trailing zeros dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("inner partition {inner} is not contained in outer {outer}")]
    NotContained { outer: Partition, inner: Partition },
    #[error("invalid partition string: {0:?}")]
    Parse(String),
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Panics if the parts
    /// are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        Self::try_new(parts.into()).expect("partition parts must be weakly decreasing")
    }

    pub fn try_new(mut parts: Vec<u32>) -> Result<Self, ShapeError> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ShapeError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// 1-based part access, padded with zeros beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All partitions of `k` with at most `max_len` parts.
    pub fn all_of(k: u32, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 || max_part == 0 {
                return;
            }
            let hi = rem.min(max_part);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        rec(k, k, max_len, &mut cur, &mut out);
        out
    }

    /// All partitions of every size up to `max_size`, at most `max_len` parts.
    pub fn all_up_to(max_size: u32, max_len: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|k| Partition::all_of(k, max_len))
            .collect()
    }

    /// All `mu` with `mu ⊆ self` and at most `max_len` parts.
    pub fn sub_partitions(&self, max_len: usize) -> Vec<Partition> {
        let bound = self.parts.len().min(max_len);
        let mut out = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        fn rec(la: &[u32], row: usize, bound: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if row == bound {
                out.push(Partition::new(cur.clone()));
                return;
            }
            let hi = la[row].min(cur.last().copied().unwrap_or(u32::MAX));
            for p in 0..=hi {
                cur.push(p);
                rec(la, row + 1, bound, cur, out);
                cur.pop();
            }
            // a zero row ends the partition early, which is covered by p = 0
        }
        rec(&self.parts, 0, bound, &mut cur, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    /// Comma-separated positive integers; "0" or the empty string is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| ShapeError::Parse(s.to_string()))?;
        Partition::try_new(parts).map_err(|_| ShapeError::Parse(s.to_string()))
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(row, col)`, 1-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for i in 1..=self.outer.len() {
            for j in (self.inner.part(i) as usize + 1)..=(self.outer.part(i) as usize) {
                cells.push((i, j));
            }
        }
        cells
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Strip classification of a skew shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripReport {
    pub is_horizontal: bool,
    pub is_vertical: bool,
    pub is_border: bool,
    /// One less than the number of non-empty rows, when a border strip.
    pub height: Option<usize>,
}

pub fn classify_strip(shape: &SkewShape) -> StripReport {
    let cells = shape.cells();
    if cells.is_empty() {
        return StripReport {
            is_horizontal: true,
            is_vertical: true,
            is_border: false,
            height: None,
        };
    }
    let set: HashSet<(usize, usize)> = cells.iter().copied().collect();
    let mut col_counts: std::collections::HashMap<usize, usize> = Default::default();
    let mut row_counts: std::collections::HashMap<usize, usize> = Default::default();
    for &(i, j) in &cells {
        *col_counts.entry(j).or_default() += 1;
        *row_counts.entry(i).or_default() += 1;
    }
    let is_horizontal = col_counts.values().all(|&c| c <= 1);
    let is_vertical = row_counts.values().all(|&c| c <= 1);

    // connectivity through side-adjacent boxes
    let mut seen = HashSet::new();
    let mut stack = vec![cells[0]];
    while let Some((i, j)) = stack.pop() {
        if !seen.insert((i, j)) {
            continue;
        }
        let mut nb = vec![(i + 1, j), (i, j + 1)];
        if i > 1 {
            nb.push((i - 1, j));
        }
        if j > 1 {
            nb.push((i, j - 1));
        }
        for c in nb {
            if set.contains(&c) {
                stack.push(c);
            }
        }
    }
    let connected = seen.len() == cells.len();
    let has_block = cells
        .iter()
        .any(|&(i, j)| set.contains(&(i + 1, j)) && set.contains(&(i, j + 1)) && set.contains(&(i + 1, j + 1)));
    let is_border = connected && !has_block;
    let height = is_border.then(|| row_counts.len() - 1);
    StripReport {
        is_horizontal,
        is_vertical,
        is_border,
        height,
    }
}

/// The three staircase families, stored in doubled units so the odd
/// orthogonal half-integer staircase stays integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StaircaseKind {
    Symplectic,
    OddOrthogonal,
    EvenOrthogonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Staircase {
    pub kind: StaircaseKind,
    pub n: usize,
}

impl Staircase {
    pub fn new(kind: StaircaseKind, n: usize) -> Self {
        Staircase { kind, n }
    }

    /// `2 * delta_i`, 1-based.
    pub fn doubled(&self, i: usize) -> i64 {
        assert!(i >= 1 && i <= self.n);
        let n = self.n as i64;
        let i = i as i64;
        match self.kind {
            StaircaseKind::Symplectic => 2 * (n - i + 1),
            StaircaseKind::OddOrthogonal => 2 * (n - i) + 1,
            StaircaseKind::EvenOrthogonal => 2 * (n - i),
        }
    }

    pub fn doubled_vec(&self) -> Vec<i64> {
        (1..=self.n).map(|i| self.doubled(i)).collect()
    }
}

/// `m(mu)` of the rule families: the largest `i` with `mu_i + delta_i >= r`,
/// or 0 when there is none. Comparison in doubled units.
pub fn m_index(mu: &Partition, delta: &Staircase, r: u32) -> usize {
    assert!(mu.len() <= delta.n);
    (1..=delta.n)
        .filter(|&i| 2 * mu.part(i) as i64 + delta.doubled(i) >= 2 * r as i64)
        .max()
        .unwrap_or(0)
}

fn doubled_entries(mu: &Partition, delta: &Staircase) -> Vec<i64> {
    (1..=delta.n)
        .map(|i| 2 * mu.part(i) as i64 + delta.doubled(i))
        .collect()
}

/// Partition recovered from a strictly decreasing doubled vector `entries`
/// by subtracting the staircase. Returns the parts (possibly with zeros).
fn subtract_staircase(entries: &[i64], delta: &Staircase) -> Option<Vec<u32>> {
    let mut parts = Vec::with_capacity(entries.len());
    for (i, &e) in entries.iter().enumerate() {
        let d = e - delta.doubled(i + 1);
        if d < 0 || d % 2 != 0 {
            return None;
        }
        parts.push((d / 2) as u32);
    }
    Some(parts)
}

/// The sorted-vector construction of `mu^(q)`: replace entry `q` of
/// `mu + delta` by `r - (mu_q + delta_q)`, sort descending, subtract the
/// staircase. Returns `None` when the sorted vector has a tie, together
/// with `p(q)`, the position of the replaced entry, otherwise.
pub fn mu_q(mu: &Partition, delta: &Staircase, r: u32, q: usize) -> Option<(Partition, usize)> {
    assert!(q >= 1 && q <= delta.n);
    let entries = doubled_entries(mu, delta);
    let new_val = 2 * r as i64 - entries[q - 1];
    assert!(new_val > 0, "mu_q requires mu_q + delta_q - r < 0");
    if entries.iter().enumerate().any(|(j, &e)| j != q - 1 && e == new_val) {
        return None;
    }
    let mut sorted: Vec<i64> = entries
        .iter()
        .enumerate()
        .map(|(j, &e)| if j == q - 1 { new_val } else { e })
        .collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let p = sorted.iter().position(|&e| e == new_val).unwrap() + 1;
    let parts = subtract_staircase(&sorted, delta)
        .expect("sorted staircase difference must be a partition");
    Some((Partition::new(parts), p))
}

/// The row-manipulation construction of `mu^(q)`: remove row `q`, shift the
/// rows between `q` and `p(q)` adding or removing one box each, and insert a
/// row of `r - (mu_q + delta_q + delta_p)` boxes at row `p(q)`. Agrees with
/// [`mu_q`] on every input; kept separate as a cross-check.
pub fn mu_q_combinatorial(
    mu: &Partition,
    delta: &Staircase,
    r: u32,
    q: usize,
) -> Option<(Partition, usize)> {
    assert!(q >= 1 && q <= delta.n);
    let n = delta.n;
    let entries = doubled_entries(mu, delta);
    let new_val = 2 * r as i64 - entries[q - 1];
    assert!(new_val > 0, "mu_q requires mu_q + delta_q - r < 0");
    if entries.iter().enumerate().any(|(j, &e)| j != q - 1 && e == new_val) {
        return None;
    }
    let p = 1 + entries
        .iter()
        .enumerate()
        .filter(|&(j, &e)| j != q - 1 && e > new_val)
        .count();
    // new row length in ordinary units
    let new_row = (2 * r as i64 - (2 * mu.part(q) as i64 + delta.doubled(q) + delta.doubled(p))) / 2;
    debug_assert!(new_row >= 0);
    let mut rows: Vec<i64> = (1..=n).map(|i| mu.part(i) as i64).collect();
    rows.remove(q - 1);
    if p < q {
        // rows p..q-1 move down one row and gain a box each; after the
        // removal they already sit at indices p-1..q-2
        for row in rows.iter_mut().take(q - 1).skip(p - 1) {
            *row += 1;
        }
    } else if p > q {
        // rows q+1..p move up one row and lose a box each
        for row in rows.iter_mut().take(p - 1).skip(q - 1) {
            *row -= 1;
        }
    }
    rows.insert(p - 1, new_row);
    let parts: Vec<u32> = rows.iter().map(|&x| u32::try_from(x).ok().unwrap()).collect();
    Some((Partition::new(parts), p))
}

/// Border-strip additions via the beta-number move: all `eta ⊇ mu` with at
/// most `n` rows such that `eta/mu` is a border strip of size `r`, with
/// heights. Canonical order: descending lexicographic on the partitions.
pub fn border_strip_additions(mu: &Partition, r: u32, n: usize) -> Vec<(Partition, usize)> {
    assert!(r >= 1);
    assert!(n >= mu.len());
    let beta: Vec<i64> = (1..=n).map(|i| mu.part(i) as i64 + (n - i) as i64).collect();
    let mut out = Vec::new();
    for q in 1..=n {
        let new_val = beta[q - 1] + r as i64;
        if beta.iter().enumerate().any(|(j, &b)| j != q - 1 && b == new_val) {
            continue;
        }
        let mut sorted: Vec<i64> = beta
            .iter()
            .enumerate()
            .map(|(j, &b)| if j == q - 1 { new_val } else { b })
            .collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let p = sorted.iter().position(|&b| b == new_val).unwrap() + 1;
        let parts: Vec<u32> = sorted
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (n - i - 1) as i64) as u32)
            .collect();
        out.push((Partition::new(parts), q - p));
    }
    sort_desc_lex_pairs(&mut out);
    out
}

/// Border-strip removals: all `xi ⊆ mu` with `mu/xi` a border strip of
/// size `r`, with heights.
pub fn border_strip_removals(mu: &Partition, r: u32) -> Vec<(Partition, usize)> {
    assert!(r >= 1);
    let n = mu.len();
    let beta: Vec<i64> = (1..=n).map(|i| mu.part(i) as i64 + (n - i) as i64).collect();
    let mut out = Vec::new();
    for q in 1..=n {
        let new_val = beta[q - 1] - r as i64;
        if new_val < 0 {
            continue;
        }
        if beta.iter().enumerate().any(|(j, &b)| j != q - 1 && b == new_val) {
            continue;
        }
        let mut sorted: Vec<i64> = beta
            .iter()
            .enumerate()
            .map(|(j, &b)| if j == q - 1 { new_val } else { b })
            .collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let p = sorted.iter().position(|&b| b == new_val).unwrap() + 1;
        let parts: Vec<u32> = sorted
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (n - i - 1) as i64) as u32)
            .collect();
        out.push((Partition::new(parts), p - q));
    }
    sort_desc_lex_pairs(&mut out);
    out
}

/// All `nu ⊆ la` with `la/nu` a vertical strip of size `s`.
pub fn vertical_strip_removals(la: &Partition, s: u32) -> Vec<Partition> {
    let n = la.len();
    if s as usize > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    // choose the rows losing one box
    let mut pick: Vec<usize> = Vec::new();
    fn rec(la: &Partition, next: usize, left: u32, pick: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            let parts: Vec<u32> = (1..=la.len())
                .map(|i| la.part(i) - if pick.contains(&i) { 1 } else { 0 })
                .collect();
            if let Ok(nu) = Partition::try_new(parts) {
                out.push(nu);
            }
            return;
        }
        for i in next..=la.len() {
            if la.part(i) >= 1 {
                pick.push(i);
                rec(la, i + 1, left - 1, pick, out);
                pick.pop();
            }
        }
    }
    rec(la, 1, s, &mut pick, &mut out);
    sort_desc_lex(&mut out);
    out.dedup();
    out
}

/// All `eta ⊇ mu` with at most `n` rows and `eta/mu` a vertical strip of
/// size `s`.
pub fn vertical_strip_additions(mu: &Partition, s: u32, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut pick: Vec<usize> = Vec::new();
    fn rec(mu: &Partition, n: usize, next: usize, left: u32, pick: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            let parts: Vec<u32> = (1..=n)
                .map(|i| mu.part(i) + if pick.contains(&i) { 1 } else { 0 })
                .collect();
            if let Ok(eta) = Partition::try_new(parts) {
                out.push(eta);
            }
            return;
        }
        for i in next..=n {
            pick.push(i);
            rec(mu, n, i + 1, left - 1, pick, out);
            pick.pop();
        }
    }
    rec(mu, n, 1, s, &mut pick, &mut out);
    sort_desc_lex(&mut out);
    out.dedup();
    out
}

/// All `eta ⊇ mu` with at most `n` rows and `eta/mu` a horizontal strip of
/// size `r`.
pub fn horizontal_strip_additions(mu: &Partition, r: u32, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    // interlacing: mu_i <= eta_i and eta_{i+1} <= mu_i
    fn rec(mu: &Partition, n: usize, row: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row > n {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let lo = mu.part(row);
        let hi_cap = if row == 1 { u32::MAX } else { mu.part(row - 1).min(cur[row - 2]) };
        let hi = (lo + left).min(hi_cap);
        if lo > hi {
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(mu, n, row + 1, left - (v - lo), cur, out);
            cur.pop();
        }
    }
    rec(mu, n, 1, r, &mut cur, &mut out);
    sort_desc_lex(&mut out);
    out.dedup();
    out
}

/// Canonical enumeration order: descending lexicographic on parts.
pub fn sort_desc_lex(v: &mut [Partition]) {
    v.sort_by(|a, b| b.parts().cmp(a.parts()));
}

fn sort_desc_lex_pairs(v: &mut [(Partition, usize)]) {
    v.sort_by(|a, b| b.0.parts().cmp(a.0.parts()));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn skew(outer: &[u32], inner: &[u32]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 2, 2]).conjugate(), p(&[3, 3, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1, 1]).conjugate(), p(&[4]));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("4,3,1".parse::<Partition>().unwrap(), p(&[4, 3, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,4".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 3, 1]).to_string(), "(4,3,1)");
    }

    #[test]
    fn classify_strip_examples() {
        // disconnected shape
        let rep = classify_strip(&skew(&[5, 2, 2], &[2, 1]));
        assert!(!rep.is_border);
        // single-row border strip
        let rep = classify_strip(&skew(&[7, 1], &[3, 1]));
        assert!(rep.is_border);
        assert_eq!(rep.height, Some(0));
        // hook-column strip: boxes in rows 3..6, so height 3
        let rep = classify_strip(&skew(&[3, 1, 1, 1, 1, 1], &[3, 1]));
        assert!(rep.is_border);
        assert_eq!(rep.height, Some(3));
        // empty skew shape
        let rep = classify_strip(&skew(&[2, 1], &[2, 1]));
        assert!(rep.is_horizontal && rep.is_vertical && !rep.is_border);
        // a 2x2 block is not a border strip
        let rep = classify_strip(&skew(&[2, 2], &[]));
        assert!(!rep.is_border);
        assert!(classify_strip(&skew(&[2], &[])).is_horizontal);
    }

    #[test]
    fn border_strip_additions_small_shapes() {
        let got = border_strip_additions(&p(&[3, 1]), 4, 6);
        let expect: Vec<(Partition, usize)> = vec![
            (p(&[7, 1]), 0),
            (p(&[4, 4]), 1),
            (p(&[3, 3, 2]), 1),
            (p(&[3, 2, 2, 1]), 2),
            (p(&[3, 1, 1, 1, 1, 1]), 3),
        ];
        assert_eq!(got, expect);

        assert_eq!(
            border_strip_additions(&Partition::empty(), 1, 1),
            vec![(p(&[1]), 0)]
        );
        assert_eq!(
            border_strip_additions(&p(&[2, 1]), 2, 3),
            vec![(p(&[4, 1]), 0)]
        );
    }

    #[test]
    fn border_strip_additions_match_exhaustive_filter() {
        for mu in Partition::all_up_to(5, 3) {
            for r in 1..=5u32 {
                for n in mu.len()..=4 {
                    let fast = border_strip_additions(&mu, r, n);
                    let mut brute: Vec<(Partition, usize)> = Partition::all_of(mu.size() + r, n)
                        .into_iter()
                        .filter(|eta| eta.contains(&mu))
                        .filter_map(|eta| {
                            let rep = classify_strip(&SkewShape::new(eta.clone(), mu.clone()).unwrap());
                            rep.is_border.then(|| (eta, rep.height.unwrap()))
                        })
                        .collect();
                    sort_desc_lex_pairs(&mut brute);
                    assert_eq!(fast, brute, "mu={mu} r={r} n={n}");
                }
            }
        }
    }

    #[test]
    fn border_strip_removals_examples() {
        assert_eq!(
            border_strip_removals(&p(&[4, 3, 1]), 6),
            vec![(p(&[2]), 2)]
        );
        assert_eq!(
            border_strip_removals(&p(&[2, 1]), 3),
            vec![(Partition::empty(), 1)]
        );
        assert!(border_strip_removals(&p(&[2, 1]), 2).is_empty());
    }

    #[test]
    fn add_remove_duality() {
        for mu in Partition::all_up_to(6, 4) {
            for r in 1..=4u32 {
                for (xi, h) in border_strip_removals(&mu, r) {
                    let adds = border_strip_additions(&xi, r, mu.len().max(xi.len()));
                    assert!(adds.contains(&(mu.clone(), h)), "mu={mu} r={r} xi={xi}");
                }
            }
        }
    }

    #[test]
    fn vertical_strip_examples() {
        assert_eq!(vertical_strip_removals(&p(&[2, 2]), 1), vec![p(&[2, 1])]);
        assert_eq!(vertical_strip_removals(&p(&[2, 2]), 0), vec![p(&[2, 2])]);
        assert_eq!(
            vertical_strip_removals(&p(&[1, 1]), 2),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn vertical_horizontal_conjugate_duality() {
        for la in Partition::all_up_to(6, 4) {
            for s in 0..=3u32 {
                for nu in vertical_strip_removals(&la, s) {
                    let rep = classify_strip(
                        &SkewShape::new(la.conjugate(), nu.conjugate()).unwrap(),
                    );
                    assert!(rep.is_horizontal);
                }
            }
        }
    }

    #[test]
    fn pieri_strip_additions() {
        assert_eq!(
            horizontal_strip_additions(&p(&[1]), 1, 2),
            vec![p(&[2]), p(&[1, 1])]
        );
        assert_eq!(
            vertical_strip_additions(&p(&[1]), 1, 2),
            vec![p(&[2]), p(&[1, 1])]
        );
        assert_eq!(
            horizontal_strip_additions(&Partition::empty(), 0, 2),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn m_index_examples() {
        let sp3 = Staircase::new(StaircaseKind::Symplectic, 3);
        assert_eq!(m_index(&p(&[4, 3, 1]), &sp3, 6), 1);
        let eo3 = Staircase::new(StaircaseKind::EvenOrthogonal, 3);
        assert_eq!(m_index(&p(&[2, 1]), &eo3, 3), 1);
        let oo3 = Staircase::new(StaircaseKind::OddOrthogonal, 3);
        assert_eq!(m_index(&p(&[2, 1]), &oo3, 2), 2);
    }

    #[test]
    fn m_index_monotone_in_r() {
        for mu in Partition::all_up_to(5, 3) {
            for kind in [
                StaircaseKind::Symplectic,
                StaircaseKind::OddOrthogonal,
                StaircaseKind::EvenOrthogonal,
            ] {
                let d = Staircase::new(kind, 3);
                let vals: Vec<usize> = (1..=8).map(|r| m_index(&mu, &d, r)).collect();
                assert!(vals.windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn mu_q_examples() {
        let sp4 = Staircase::new(StaircaseKind::Symplectic, 4);
        assert_eq!(
            mu_q(&p(&[3, 2, 1]), &sp4, 9, 3),
            Some((p(&[3, 3, 3]), 2))
        );
        let sp3 = Staircase::new(StaircaseKind::Symplectic, 3);
        assert_eq!(mu_q(&p(&[4, 3, 1]), &sp3, 6, 2), Some((p(&[4]), 3)));
        let eo3 = Staircase::new(StaircaseKind::EvenOrthogonal, 3);
        assert_eq!(mu_q(&p(&[2, 1]), &eo3, 3, 3), Some((p(&[2, 2, 2]), 2)));
    }

    #[test]
    fn mu_q_combinatorial_examples() {
        let sp3 = Staircase::new(StaircaseKind::Symplectic, 3);
        assert_eq!(
            mu_q_combinatorial(&p(&[4, 3, 1]), &sp3, 6, 3),
            Some((p(&[4, 3, 3]), 3))
        );
        let oo3 = Staircase::new(StaircaseKind::OddOrthogonal, 3);
        assert_eq!(
            mu_q_combinatorial(&p(&[2, 1]), &oo3, 2, 3),
            Some((p(&[2, 1, 1]), 3))
        );
        // tie: mu = empty, symplectic n=2, r=3 replaces entry 1 by 3-2=1,
        // which equals entry 2
        let sp2 = Staircase::new(StaircaseKind::Symplectic, 2);
        assert_eq!(mu_q_combinatorial(&Partition::empty(), &sp2, 3, 1), None);
        assert_eq!(mu_q(&Partition::empty(), &sp2, 3, 1), None);
    }

    #[test]
    fn mu_q_returns_valid_partition_with_sorted_invariant() {
        for mu in Partition::all_up_to(6, 3) {
            for kind in [
                StaircaseKind::Symplectic,
                StaircaseKind::OddOrthogonal,
                StaircaseKind::EvenOrthogonal,
            ] {
                for n in mu.len().max(1)..=3 {
                    let d = Staircase::new(kind, n);
                    for r in 1..=8u32 {
                        let m = m_index(&mu, &d, r);
                        for q in m + 1..=n {
                            if let Some((res, _)) = mu_q(&mu, &d, r, q) {
                                assert!(res.len() <= n);
                                let mut sorted = doubled_entries(&res, &d);
                                sorted.sort_unstable_by(|a, b| b.cmp(a));
                                let mut expect = doubled_entries(&mu, &d);
                                expect[q - 1] = 2 * r as i64 - expect[q - 1];
                                expect.sort_unstable_by(|a, b| b.cmp(a));
                                assert_eq!(sorted, expect);
                            }
                        }
                    }
                }
            }
        }
    }
}
