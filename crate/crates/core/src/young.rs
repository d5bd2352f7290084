//! Integer partitions, Young diagrams, hook lengths and rim hooks.
//!
//! Coordinates are 1-based `(row, column)` in English convention: row 1 is
//! the top (longest) row and column 1 is the leftmost column.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`count_standard_tableaux`].
pub const TABLEAUX_ENUMERATION_LIMIT: usize = 12;

/// A partition of `n`: a non-increasing sequence of positive parts.
///
/// The derived ordering is lexicographic on the parts, so the canonical
/// (reverse lexicographic) order used throughout the crate is *descending*
/// with respect to `Ord`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not non-increasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, (row, col): (usize, usize)) -> bool {
        row >= 1 && col >= 1 && col <= self.row_len(row)
    }

    /// The conjugate partition (rows and columns swapped).
    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let cols = self.transpose();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (0..len)
                    .map(|j| (len - j - 1) + (cols.parts[j] - i - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// `f^λ`, the number of standard Young tableaux, by the hook length
    /// formula. The product of hooks must divide `n!` exactly.
    pub fn dimension(&self) -> BigUint {
        let numerator = factorial(self.size());
        let denominator: BigUint = self
            .hook_lengths()
            .iter()
            .flatten()
            .fold(BigUint::one(), |acc, &h| acc * BigUint::from(h));
        let (q, r) = numerator.div_rem(&denominator);
        assert!(r.is_zero(), "hook product does not divide n! for {self}");
        q
    }

    /// The same parts wrapped in brackets, e.g. `[5,1]`.
    pub fn bracketed(&self) -> String {
        format!("[{self}]")
    }

    /// Outer corners: cells whose removal leaves a partition.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.parts.len())
            .filter(|&i| i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1])
            .map(|i| (i + 1, self.parts[i]))
            .collect()
    }

    /// `(-1)^(n - number of parts)`, the sign of a permutation with this
    /// cycle type.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"5,1"`, `"2,1^4"`, `"[3,2,1]"`; the empty string is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {token:?} in {s:?}")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// All partitions of `n` in reverse lexicographic order: `[n]` first,
/// `[1^n]` last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `μ ⊆ λ` with `|μ| = size`, in reverse lexicographic order.
pub fn sub_diagrams(lambda: &Partition, size: usize) -> Vec<Partition> {
    fn go(
        lambda: &[usize],
        row: usize,
        remaining: usize,
        max: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        if row >= lambda.len() {
            return;
        }
        // Capacity left in rows `row..` under the running bound.
        let room: usize = lambda[row..].iter().map(|&l| l.min(max)).sum();
        if room < remaining {
            return;
        }
        for part in (1..=lambda[row].min(max).min(remaining)).rev() {
            prefix.push(part);
            go(lambda, row + 1, remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if size <= lambda.size() {
        go(&lambda.parts, 0, size, usize::MAX, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of standard Young tableaux of shape `λ`, by exhaustively placing
/// the largest remaining entry in every outer corner.
pub fn count_standard_tableaux(lambda: &Partition) -> Result<u64> {
    fn go(parts: &mut Vec<usize>) -> u64 {
        if parts.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = i + 1 == parts.len() || parts[i] > parts[i + 1];
            if !is_corner {
                continue;
            }
            parts[i] -= 1;
            if parts[i] == 0 {
                parts.pop();
                total += go(parts);
                parts.push(1);
            } else {
                total += go(parts);
                parts[i] += 1;
            }
        }
        total
    }
    if lambda.size() > TABLEAUX_ENUMERATION_LIMIT {
        return Err(Error::SizeLimit {
            what: "n",
            value: lambda.size(),
            limit: TABLEAUX_ENUMERATION_LIMIT,
        });
    }
    Ok(go(&mut lambda.parts.clone()))
}

/// A border strip of a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RimHook {
    cells: Vec<(usize, usize)>,
    leg_length: usize,
}

impl RimHook {
    /// Cells ordered from the southwest end; each step moves up or right.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Rows spanned minus one.
    pub fn leg_length(&self) -> usize {
        self.leg_length
    }

    /// `(-1)^leg_length`.
    pub fn sign(&self) -> i32 {
        if self.leg_length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

fn skew_cells(lambda: &Partition, mu: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for row in (1..=lambda.len()).rev() {
        for col in mu.row_len(row) + 1..=lambda.row_len(row) {
            cells.push((row, col));
        }
    }
    cells
}

/// Connected and free of 2×2 blocks.
fn is_border_strip(cells: &[(usize, usize)]) -> bool {
    if cells.is_empty() {
        return false;
    }
    let set: HashSet<(usize, usize)> = cells.iter().copied().collect();
    let has_square = cells.iter().any(|&(r, c)| {
        set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1))
    });
    if has_square {
        return false;
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([cells[0]]);
    seen.insert(cells[0]);
    while let Some((r, c)) = queue.pop_front() {
        let neighbours = [
            (r + 1, c),
            (r, c + 1),
            (r.wrapping_sub(1), c),
            (r, c.wrapping_sub(1)),
        ];
        for nb in neighbours {
            if set.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == set.len()
}

fn hook_from_cells(cells: Vec<(usize, usize)>) -> RimHook {
    let rows: BTreeSet<usize> = cells.iter().map(|&(r, _)| r).collect();
    RimHook {
        leg_length: rows.len() - 1,
        cells,
    }
}

/// Every rim hook of `λ` with exactly `len` cells, one per sub-diagram
/// `μ ⊢ |λ| - len` whose skew shape `λ/μ` is a border strip. Ordered by `μ`
/// in canonical order. Empty when `len` is 0 or exceeds `|λ|`.
pub fn enumerate_rim_hooks(lambda: &Partition, len: usize) -> Vec<RimHook> {
    if len == 0 || len > lambda.size() {
        return Vec::new();
    }
    sub_diagrams(lambda, lambda.size() - len)
        .into_iter()
        .map(|mu| skew_cells(lambda, &mu))
        .filter(|cells| is_border_strip(cells))
        .map(hook_from_cells)
        .collect()
}

/// `λ ∖ ρ`: deletes the cells of `hook` from `λ`.
pub fn remove_rim_hook(lambda: &Partition, hook: &RimHook) -> Result<Partition> {
    let fail = || Error::NotARimHook(lambda.bracketed());
    let mut removed = vec![0usize; lambda.len()];
    let mut seen = HashSet::new();
    for &cell in &hook.cells {
        if !lambda.contains_cell(cell) || !seen.insert(cell) {
            return Err(fail());
        }
        removed[cell.0 - 1] += 1;
    }
    // Each row must lose a suffix of its cells.
    for &(row, col) in &hook.cells {
        if col + removed[row - 1] <= lambda.row_len(row) {
            return Err(fail());
        }
    }
    let parts: Vec<usize> = lambda
        .parts
        .iter()
        .zip(&removed)
        .map(|(l, r)| l - r)
        .filter(|&p| p > 0)
        .collect();
    let rows_kept = lambda.parts.iter().zip(&removed).take_while(|(l, r)| l > r).count();
    if rows_kept != parts.len() || parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(fail());
    }
    let mu = Partition::from_parts_unchecked(parts);
    let cells = skew_cells(lambda, &mu);
    if !is_border_strip(&cells) {
        return Err(fail());
    }
    let rows: BTreeSet<usize> = cells.iter().map(|&(r, _)| r).collect();
    if rows.len() != hook.leg_length + 1 {
        return Err(fail());
    }
    Ok(mu)
}
