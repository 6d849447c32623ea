//! Partitions, standard Young tableaux, contents, and the multiplicity
//! formula for star-graph spectra:
//! `mult(k) = Σ_λ f^λ · #{T ∈ SYT(λ) : c_T(n+1) = k}` over partitions λ of
//! n+1, where the content of a box is its column index minus its row index
//! (1-based on both). The tracked entry is the largest one, n+1: the star
//! transpositions sum to the Jucys–Murphy element of that point, whose
//! eigenvalue on the Young basis vector indexed by T is c_T(n+1).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SytError {
    #[error("size {0} exceeds bound {1}")]
    BoundExceeded(usize, usize),
    #[error("parts must be weakly decreasing and positive")]
    BadPartition,
    #[error("entry {0} is not in the tableau")]
    EntryMissing(usize),
    #[error("partition size {0} does not match n+1 = {1}")]
    SizeMismatch(usize, usize),
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Serializes as the bare part list, e.g. `[3,1]`.
impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SytError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SytError::BadPartition);
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(""))
    }
}

pub const PARTITION_BOUND: usize = 20;

/// All partitions of `m` in reverse-lexicographic order
/// (`[4] > [3,1] > [2,2] > [2,1,1] > [1,1,1,1]`).
pub fn partitions(m: usize) -> Result<Vec<Partition>, SytError> {
    if m > PARTITION_BOUND {
        return Err(SytError::BoundExceeded(m, PARTITION_BOUND));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(m, m, &mut current, &mut out);
    Ok(out)
}

/// A standard Young tableau: rows and columns strictly increasing, entries
/// exactly 1..m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Content of the box holding `m`: column index minus row index, 1-based.
    pub fn content(&self, m: usize) -> Result<i64, SytError> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == m) {
                return Ok((c + 1) as i64 - (r + 1) as i64);
            }
        }
        Err(SytError::EntryMissing(m))
    }
}

pub const SYT_BOUND: usize = 12;

/// All standard Young tableaux of the given shape, by backtracking over the
/// placements of 1..m; the count is cross-checked against the hook length
/// formula.
pub fn syt_enumerate(shape: &Partition) -> Result<Vec<StandardTableau>, SytError> {
    let m = shape.size();
    if m > SYT_BOUND {
        return Err(SytError::BoundExceeded(m, SYT_BOUND));
    }
    let mut out = Vec::new();
    let mut fill: Vec<Vec<usize>> = shape
        .parts
        .iter()
        .map(|&len| Vec::with_capacity(len))
        .collect();
    fn rec(
        shape: &[usize],
        next: usize,
        m: usize,
        fill: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
        proto: &Partition,
    ) {
        if next > m {
            out.push(StandardTableau {
                shape: proto.clone(),
                rows: fill.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let len = fill[r].len();
            if len >= shape[r] {
                continue;
            }
            // Column strictness: the row above must already be longer.
            if r > 0 && fill[r - 1].len() <= len {
                continue;
            }
            fill[r].push(next);
            rec(shape, next + 1, m, fill, out, proto);
            fill[r].pop();
        }
    }
    rec(&shape.parts, 1, m, &mut fill, &mut out, shape);
    debug_assert_eq!(BigInt::from(out.len()), hook_length_count(shape));
    Ok(out)
}

/// `f^λ` by the hook length formula: `m! / Π hooks`.
pub fn hook_length_count(shape: &Partition) -> BigInt {
    let m = shape.size();
    let mut numerator = BigInt::one();
    for k in 1..=m {
        numerator *= BigInt::from(k);
    }
    let col_height = |c: usize| shape.parts.iter().filter(|&&len| len > c).count();
    let mut denom = BigInt::one();
    for (r, &len) in shape.parts.iter().enumerate() {
        for c in 0..len {
            let hook = (len - c) + (col_height(c) - r) - 1;
            denom *= BigInt::from(hook);
        }
    }
    numerator / denom
}

/// `I_λ(k)`: number of SYT of shape λ (a partition of n+1) whose box holding
/// the largest entry n+1 has content `k`. That entry is the one tracking the
/// star-transposition sum (the Jucys–Murphy element for the point n+1), which
/// is what the multiplicity formula counts. Returns 0 for |k| out of range
/// rather than erroring.
pub fn i_lambda(shape: &Partition, n: usize, k: i64) -> Result<usize, SytError> {
    if shape.size() != n + 1 {
        return Err(SytError::SizeMismatch(shape.size(), n + 1));
    }
    let tableaux = syt_enumerate(shape)?;
    let mut count = 0;
    for t in &tableaux {
        if t.content(n + 1)? == k {
            count += 1;
        }
    }
    Ok(count)
}

pub const MULT_BOUND: usize = 9;

/// Eigenvalue-k multiplicity of the star graph Xₙ:
/// `Σ_{λ ⊢ n+1} f^λ · I_λ(k)`.
pub fn multiplicity(n: usize, k: i64) -> Result<usize, SytError> {
    if n < 1 || n > MULT_BOUND {
        return Err(SytError::BoundExceeded(n, MULT_BOUND));
    }
    let mut total = 0usize;
    for shape in partitions(n + 1)? {
        let f = usize::try_from(hook_length_count(&shape)).expect("fits for n ≤ 9");
        total += f * i_lambda(&shape, n, k)?;
    }
    Ok(total)
}

/// One row of the multiplicity table: the shape, its `I_λ(k)` counts for
/// k = −n..n, and `f^λ`. Serializes as `{"lambda": [..], "I": {k: count}, "f": n}`.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    #[serde(rename = "lambda")]
    pub shape: Partition,
    #[serde(rename = "I")]
    pub counts: BTreeMap<i64, usize>,
    pub f: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityTable {
    pub n: usize,
    pub rows: Vec<TableRow>,
}

impl MultiplicityTable {
    pub fn multiplicity(&self, k: i64) -> usize {
        self.rows
            .iter()
            .map(|r| r.f * r.counts.get(&k).copied().unwrap_or(0))
            .sum()
    }

    /// Aligned text rendering, columns k = n..−n to match descending display.
    pub fn render_text(&self) -> String {
        let n = self.n as i64;
        let mut s = String::new();
        s.push_str("lambda");
        for k in (-n..=n).rev() {
            s.push_str(&format!("{:>6}", k));
        }
        s.push_str(&format!("{:>8}\n", "f"));
        for row in &self.rows {
            s.push_str(&format!("{:<6}", row.shape.to_string()));
            for k in (-n..=n).rev() {
                s.push_str(&format!("{:>6}", row.counts.get(&k).copied().unwrap_or(0)));
            }
            s.push_str(&format!("{:>8}\n", row.f));
        }
        s
    }
}

/// The full `I_λ(k)` / `f^λ` table for Xₙ. Row sums satisfy
/// `Σ_k I_λ(k) = f^λ`.
pub fn multiplicity_table(n: usize) -> Result<MultiplicityTable, SytError> {
    if n < 1 || n > MULT_BOUND {
        return Err(SytError::BoundExceeded(n, MULT_BOUND));
    }
    let mut rows = Vec::new();
    for shape in partitions(n + 1)? {
        let f = usize::try_from(hook_length_count(&shape)).expect("fits for n ≤ 9");
        let mut counts = BTreeMap::new();
        for t in syt_enumerate(&shape)? {
            *counts.entry(t.content(n + 1)?).or_insert(0usize) += 1;
        }
        rows.push(TableRow { shape, counts, f });
    }
    Ok(MultiplicityTable { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_4_in_reverse_lex_order() {
        let p = partitions(4).unwrap();
        let strings: Vec<String> = p.iter().map(|q| q.to_string()).collect();
        assert_eq!(strings, vec!["4", "31", "22", "211", "1111"]);
    }

    #[test]
    fn partitions_small_counts() {
        assert_eq!(partitions(1).unwrap().len(), 1);
        assert_eq!(partitions(5).unwrap().len(), 7);
        assert!(partitions(21).is_err());
    }

    #[test]
    fn syt_counts() {
        assert_eq!(syt_enumerate(&part(&[3, 1])).unwrap().len(), 3);
        assert_eq!(syt_enumerate(&part(&[5])).unwrap().len(), 1);
        assert_eq!(syt_enumerate(&part(&[2, 2])).unwrap().len(), 2);
    }

    #[test]
    fn syt_counts_match_hook_lengths_through_8() {
        for m in 1..=8 {
            for shape in partitions(m).unwrap() {
                let listed = syt_enumerate(&shape).unwrap().len();
                assert_eq!(
                    BigInt::from(listed),
                    hook_length_count(&shape),
                    "shape {}",
                    shape
                );
            }
        }
    }

    #[test]
    fn syt_are_standard() {
        for t in syt_enumerate(&part(&[3, 2, 1])).unwrap() {
            let mut all: Vec<usize> = t.rows().iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, (1..=6).collect::<Vec<_>>());
            for row in t.rows() {
                assert!(row.windows(2).all(|w| w[0] < w[1]));
            }
            for r in 1..t.rows().len() {
                for c in 0..t.rows()[r].len() {
                    assert!(t.rows()[r - 1][c] < t.rows()[r][c]);
                }
            }
        }
    }

    #[test]
    fn content_examples() {
        // Single row (1 2 3 4): content of 4 is 3.
        let t = &syt_enumerate(&part(&[4])).unwrap()[0];
        assert_eq!(t.content(4).unwrap(), 3);
        // Top-left box always has content 0.
        assert_eq!(t.content(1).unwrap(), 0);
        // Shape (2,1) with rows (1 2),(3): content of 3 is −1.
        let ts = syt_enumerate(&part(&[2, 1])).unwrap();
        let t = ts.iter().find(|t| t.rows()[0] == vec![1, 2]).unwrap();
        assert_eq!(t.content(3).unwrap(), -1);
        assert!(t.content(9).is_err());
    }

    #[test]
    fn i_lambda_published_values() {
        assert_eq!(i_lambda(&part(&[3, 1]), 3, 2).unwrap(), 2);
        assert_eq!(i_lambda(&part(&[3, 1]), 3, -1).unwrap(), 1);
        assert_eq!(i_lambda(&part(&[2, 2]), 3, 0).unwrap(), 2);
        assert_eq!(i_lambda(&part(&[4]), 3, 3).unwrap(), 1);
        // Out-of-range content is 0, not an error.
        assert_eq!(i_lambda(&part(&[3, 1]), 3, 7).unwrap(), 0);
        assert!(i_lambda(&part(&[3, 1]), 4, 0).is_err());
    }

    #[test]
    fn multiplicities_n3() {
        assert_eq!(multiplicity(3, 0).unwrap(), 4);
        assert_eq!(multiplicity(3, 2).unwrap(), 6);
        assert_eq!(multiplicity(3, 3).unwrap(), 1);
        assert_eq!(multiplicity(3, -3).unwrap(), 1);
        assert_eq!(multiplicity(3, 1).unwrap(), 3);
        assert_eq!(multiplicity(3, -1).unwrap(), 3);
        assert_eq!(multiplicity(3, -2).unwrap(), 6);
    }

    #[test]
    fn table_n3_matches_published_values() {
        let table = multiplicity_table(3).unwrap();
        assert_eq!(table.rows.len(), 5);
        let fs: Vec<usize> = table.rows.iter().map(|r| r.f).collect();
        assert_eq!(fs, vec![1, 3, 2, 3, 1]);
        let want: Vec<(&str, Vec<(i64, usize)>)> = vec![
            ("4", vec![(3, 1)]),
            ("31", vec![(2, 2), (-1, 1)]),
            ("22", vec![(0, 2)]),
            ("211", vec![(1, 1), (-2, 2)]),
            ("1111", vec![(-3, 1)]),
        ];
        for (row, (name, cells)) in table.rows.iter().zip(&want) {
            assert_eq!(&row.shape.to_string(), name);
            let expect: BTreeMap<i64, usize> = cells.iter().copied().collect();
            assert_eq!(row.counts, expect, "row {}", name);
        }
    }

    #[test]
    fn table_n1_is_k2_spectrum() {
        let table = multiplicity_table(1).unwrap();
        assert_eq!(table.rows.len(), 2);
        assert_eq!(table.multiplicity(1), 1);
        assert_eq!(table.multiplicity(-1), 1);
        assert_eq!(table.multiplicity(0), 0);
    }

    #[test]
    fn row_sums_are_f() {
        for n in 1..=5 {
            for row in multiplicity_table(n).unwrap().rows {
                let total: usize = row.counts.values().sum();
                assert_eq!(total, row.f, "shape {}", row.shape);
            }
        }
    }

    #[test]
    fn total_multiplicity_is_factorial() {
        // Σ_k mult(n,k) = Σ_λ f^λ·Σ_k I_λ(k) = Σ (f^λ)² = (n+1)!.
        for n in 1..=4 {
            let table = multiplicity_table(n).unwrap();
            let total: usize = ((-(n as i64))..=(n as i64))
                .map(|k| table.multiplicity(k))
                .sum();
            let fact: usize = (1..=n + 1).product();
            assert_eq!(total, fact, "n = {}", n);
        }
    }

    #[test]
    fn sum_of_squares_n4() {
        let table = multiplicity_table(4).unwrap();
        let total: usize = table.rows.iter().map(|r| r.f * r.f).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn every_k_up_to_n_appears() {
        for n in 3..=6 {
            for k in 0..=n as i64 {
                assert!(multiplicity(n, k).unwrap() >= 1, "n={}, k={}", n, k);
            }
        }
    }

    #[test]
    fn guards() {
        assert!(multiplicity(10, 0).is_err());
        assert!(multiplicity_table(0).is_err());
        assert!(syt_enumerate(&part(&[13])).is_err());
    }

    #[test]
    fn render_text_contains_table() {
        let s = multiplicity_table(3).unwrap().render_text();
        assert!(s.contains("1111"));
        assert!(s.contains("lambda"));
    }

    #[test]
    fn table_json_schema() {
        let t = multiplicity_table(3).unwrap();
        let v = serde_json::to_value(&t.rows[1]).unwrap();
        assert_eq!(v["lambda"], serde_json::json!([3, 1]));
        assert_eq!(v["f"], serde_json::json!(3));
        assert_eq!(v["I"]["2"], serde_json::json!(2));
        assert_eq!(v["I"]["-1"], serde_json::json!(1));
    }
}
