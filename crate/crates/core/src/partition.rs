//! Young diagrams, skew shapes, hook removal and horizontal-strip chains.
//!
//! Conventions: cells are 1-based `(row, col)` with rows growing downward;
//! the content of a cell is `col - row`. A skew hook (border strip) is a
//! connected skew shape with no two cells on one diagonal; its height is the
//! number of rows it meets minus one. A horizontal 2-strip is a two-cell
//! skew shape whose cells do not share a column (they may share a row).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{CoreError, Result};

/// Integer partition: weakly decreasing positive rows. The empty partition
/// (of 0) is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(CoreError::InvalidInput("partition rows must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoreError::InvalidInput(format!(
                "partition rows must be weakly decreasing, got {rows:?}"
            )));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    /// The hook partition (k, 1^{n-k}).
    pub fn hook(k: u32, n: u32) -> Result<Self> {
        if k == 0 || k > n {
            return Err(CoreError::InvalidInput(format!(
                "hook arm must satisfy 1 <= k <= n, got k={k}, n={n}"
            )));
        }
        let mut rows = vec![k];
        rows.extend(std::iter::repeat_n(1, (n - k) as usize));
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Length of row `i` (0-based), zero beyond the last row.
    pub fn row(&self, i: usize) -> u32 {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .rows
            .iter()
            .enumerate()
            .all(|(i, &r)| self.row(i) >= r)
    }

    pub fn is_hook(&self) -> bool {
        self.rows.iter().skip(1).all(|&r| r == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in descending lexicographic order, so
/// `partitions(4)` is (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
pub fn partitions(n: u32) -> Vec<Partition> {
    fn gen(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { rows: prefix.clone() });
            return;
        }
        let mut part = remaining.min(max);
        while part >= 1 {
            prefix.push(part);
            gen(remaining - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    gen(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `size` contained in `outer`.
pub fn subpartitions_of_size(outer: &Partition, size: u32) -> Vec<Partition> {
    fn gen(
        outer: &Partition,
        row: usize,
        remaining: u32,
        max: u32,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { rows: prefix.clone() });
            return;
        }
        if row >= outer.num_rows() {
            return;
        }
        let mut part = remaining.min(max).min(outer.row(row));
        while part >= 1 {
            prefix.push(part);
            gen(outer, row + 1, remaining - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    gen(outer, 0, size, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// Skew shape λ∖μ with μ ⊆ λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(CoreError::InvalidInput(format!(
                "inner shape {inner} is not contained in outer shape {outer}"
            )));
        }
        Ok(Self { outer, inner })
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

    /// Cells of the difference as 1-based (row, col) pairs.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut cells = Vec::new();
        for i in 0..self.outer.num_rows() {
            for j in self.inner.row(i) + 1..=self.outer.row(i) {
                cells.push((i as u32 + 1, j));
            }
        }
        cells
    }

    /// Π (content + 1) over the cells; 1 for the empty shape.
    pub fn content_product(&self) -> BigInt {
        let mut prod = BigInt::one();
        for (row, col) in self.cells() {
            prod *= BigInt::from(col as i64 - row as i64 + 1);
        }
        prod
    }

    /// Number of rows the shape meets, minus one. Zero for the empty shape.
    pub fn height(&self) -> usize {
        let rows: std::collections::BTreeSet<u32> =
            self.cells().iter().map(|&(r, _)| r).collect();
        rows.len().saturating_sub(1)
    }

    /// Border-strip predicate: connected, no two cells on one diagonal.
    pub fn is_skew_hook(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return false;
        }
        let mut diagonals: Vec<i64> = cells.iter().map(|&(r, c)| c as i64 - r as i64).collect();
        diagonals.sort_unstable();
        if diagonals.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        // Edge connectivity by breadth-first search.
        let set: std::collections::BTreeSet<(u32, u32)> = cells.iter().copied().collect();
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![cells[0]];
        seen.insert(cells[0]);
        while let Some((r, c)) = queue.pop() {
            let neighbours = [
                (r.wrapping_sub(1), c),
                (r + 1, c),
                (r, c.wrapping_sub(1)),
                (r, c + 1),
            ];
            for nb in neighbours {
                if set.contains(&nb) && seen.insert(nb) {
                    queue.push(nb);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// Horizontal 2-strip predicate: two cells, not sharing a column.
    pub fn is_horizontal_2strip(&self) -> bool {
        let cells = self.cells();
        cells.len() == 2 && cells[0].1 != cells[1].1
    }
}

/// All μ ⊂ λ with λ∖μ a skew k-hook, paired with the hook's height.
/// Computed on the beta-set (first-column hook lengths): removing a k-hook
/// moves one bead down by k onto a free position; the height is the number
/// of beads jumped over. Results are sorted by μ, descending lexicographic.
pub fn remove_skew_hooks(lambda: &Partition, k: u32) -> Vec<(Partition, usize)> {
    if k == 0 || lambda.size() < k {
        return Vec::new();
    }
    let ell = lambda.num_rows();
    let beta: Vec<i64> = (0..ell)
        .map(|i| lambda.row(i) as i64 + (ell - 1 - i) as i64)
        .collect();
    let mut out = Vec::new();
    for i in 0..ell {
        let target = beta[i] - k as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta
            .iter()
            .filter(|&&b| b > target && b < beta[i])
            .count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let rows: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (ell - 1 - j) as i64) as u32)
            .take_while(|&r| r > 0)
            .collect();
        out.push((Partition { rows }, height));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// All μ ⊂ ν with ν∖μ a horizontal 2-strip: either the last two cells of one
/// row, or the last cells of two rows in distinct columns.
pub fn horizontal_2strip_removals(nu: &Partition) -> Vec<Partition> {
    let rows = nu.rows();
    let mut out = Vec::new();
    let mut push_candidate = |candidate: Vec<u32>| {
        if candidate.windows(2).all(|w| w[0] >= w[1]) {
            let rows: Vec<u32> = candidate.into_iter().take_while(|&r| r > 0).collect();
            out.push(Partition { rows });
        }
    };
    for i in 0..rows.len() {
        if rows[i] >= 2 {
            let mut candidate = rows.to_vec();
            candidate[i] -= 2;
            push_candidate(candidate);
        }
        for j in i + 1..rows.len() {
            // Equal row lengths would remove two cells of one column.
            if rows[i] == rows[j] {
                continue;
            }
            let mut candidate = rows.to_vec();
            candidate[i] -= 1;
            candidate[j] -= 1;
            push_candidate(candidate);
        }
    }
    out
}

/// Counts of chains μ = μ₀ ⊂ μ₁ ⊂ … ⊂ μ_m = λ adding a horizontal 2-strip at
/// each step, for every μ of size `n` at once, by layered dynamic
/// programming downward from λ.
pub fn two_strip_path_counts(lambda: &Partition, n: u32) -> Result<BTreeMap<Partition, BigUint>> {
    let size = lambda.size();
    if n > size || !(size - n).is_multiple_of(2) {
        return Err(CoreError::InvalidInput(format!(
            "cannot reach size {n} from {lambda} by removing 2-strips"
        )));
    }
    let mut layer: BTreeMap<Partition, BigUint> = BTreeMap::new();
    layer.insert(lambda.clone(), BigUint::one());
    let mut current = size;
    while current > n {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (shape, count) in &layer {
            for pred in horizontal_2strip_removals(shape) {
                *next.entry(pred).or_insert_with(BigUint::zero) += count;
            }
        }
        layer = next;
        current -= 2;
    }
    Ok(layer)
}

/// Number of horizontal-2-strip chains from μ up to λ. Errors when μ ⊄ λ;
/// zero when the size difference is odd.
pub fn count_2strip_paths(lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if !lambda.contains(mu) {
        return Err(CoreError::InvalidInput(format!(
            "{mu} is not contained in {lambda}"
        )));
    }
    if !(lambda.size() - mu.size()).is_multiple_of(2) {
        return Ok(BigUint::zero());
    }
    let counts = two_strip_path_counts(lambda, mu.size())?;
    Ok(counts.get(mu).cloned().unwrap_or_else(BigUint::zero))
}
