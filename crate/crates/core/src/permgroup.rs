//! Permutations, coordinate slices of `Sym(n)` and implicit Cayley graph
//! operators.
//!
//! Points are 1-based in every public signature. Composition follows
//! function notation: `σ.compose(π)` maps `x` to `σ(π(x))`. In a Cayley
//! graph the neighbours of `g` are `t∘g` for `t` in the connection set.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::charmn::CycleType;
use crate::error::{Error, Result};
use crate::young::Partition;

/// Largest degree for which group elements are materialized.
pub const MATERIALIZE_DEGREE_LIMIT: usize = 9;
/// Largest vertex count for a dense adjacency matrix.
pub const DENSE_ORDER_LIMIT: usize = 1000;
/// Neighbour tables above this many entries are computed on the fly instead.
pub const NEIGHBOR_TABLE_LIMIT: usize = 1 << 26;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// 0-based images.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From the one-line notation `σ(1) σ(2) … σ(n)`, 1-based.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[i - 1] = true;
            zero_based.push(i - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// From disjoint cycles on `1..=n`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = HashSet::new();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n || !used.insert(p) {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle {cycle:?} repeats a point or leaves 1..={n}"
                    )));
                }
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation `(1 2 3)(4 5)` or one-line notation `2 3 1 5 4`.
    /// Cycle notation needs the degree; pass `None` to use the largest point.
    pub fn parse(s: &str, degree: Option<usize>) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in s.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let body = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("malformed cycle notation {s:?}")))?;
                let cycle = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            let max = cycles.iter().flatten().copied().max().unwrap_or(0);
            let n = degree.unwrap_or(max);
            if max > n {
                return Err(Error::InvalidPermutation(format!("{s:?} moves a point above {n}")));
            }
            Permutation::from_cycles(n, &cycles)
        } else {
            let images = s
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if let Some(n) = degree {
                if n != images.len() {
                    return Err(Error::SizeMismatch(format!(
                        "{} images given for degree {n}",
                        images.len()
                    )));
                }
            }
            Permutation::from_images(&images)
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(point)`, 1-based.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch(format!(
                "degrees {} and {} differ",
                self.degree(),
                other.degree()
            )));
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn invert(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles of length at least 2, each starting at its smallest
    /// point, ordered by that point. 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lengths.iter().sum();
        lengths.extend(std::iter::repeat_n(1, self.degree() - moved));
        CycleType::new(Partition::from_unsorted(lengths))
    }

    /// Points moved, 1-based and ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.images[i] != i)
            .map(|i| i + 1)
            .collect()
    }

    pub fn moves(&self, point: usize) -> bool {
        self.images[point - 1] != point - 1
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Position of the image sequence among all `n!` permutations in
    /// lexicographic order.
    pub fn lex_rank(&self) -> u64 {
        lex_rank(&self.images)
    }
}

fn lex_rank<T: Copy + Ord>(images: &[T]) -> u64 {
    let n = images.len();
    let mut rank = 0u64;
    for i in 0..n {
        let smaller = images[i + 1..].iter().filter(|&&x| x < images[i]).count() as u64;
        rank = rank * (n - i) as u64 + smaller;
    }
    rank
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Sym({})", self.degree())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s, None)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    All,
    EvenOnly,
}

/// `{σ ∈ Sym(n) : σ fixes every point of `fixed`}`, optionally restricted
/// to even permutations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSlice {
    degree: usize,
    parity: Parity,
    fixed: Vec<usize>,
}

impl GroupSlice {
    pub fn symmetric(n: usize) -> Self {
        GroupSlice {
            degree: n,
            parity: Parity::All,
            fixed: Vec::new(),
        }
    }

    pub fn alternating(n: usize) -> Self {
        GroupSlice {
            degree: n,
            parity: Parity::EvenOnly,
            fixed: Vec::new(),
        }
    }

    /// `G^(i) = G_n ∩ G_(n-1) ∩ … ∩ G_(n-i+1)`: additionally fix the top
    /// `i` points.
    pub fn top_stabilizer(mut self, i: usize) -> Result<Self> {
        if i > self.degree {
            return Err(Error::OutOfRange(format!(
                "cannot fix {i} points of {}",
                self.degree
            )));
        }
        for p in self.degree - i + 1..=self.degree {
            if !self.fixed.contains(&p) {
                self.fixed.push(p);
            }
        }
        self.fixed.sort_unstable();
        Ok(self)
    }

    /// Additionally fix `point`.
    pub fn fixing(mut self, point: usize) -> Result<Self> {
        if point == 0 || point > self.degree {
            return Err(Error::OutOfRange(format!("point {point} outside 1..={}", self.degree)));
        }
        if !self.fixed.contains(&point) {
            self.fixed.push(point);
            self.fixed.sort_unstable();
        }
        Ok(self)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn fixed_points(&self) -> &[usize] {
        &self.fixed
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        sigma.degree() == self.degree
            && self.fixed.iter().all(|&p| !sigma.moves(p))
            && (self.parity == Parity::All || sigma.is_even())
    }

    pub fn size(&self) -> u128 {
        let free = self.degree - self.fixed.len();
        let full: u128 = (2..=free as u128).product();
        match self.parity {
            Parity::EvenOnly if free >= 2 => full / 2,
            _ => full,
        }
    }

    /// Members in lexicographic order of their image sequences.
    pub fn members(&self) -> Result<Vec<Permutation>> {
        if self.degree > MATERIALIZE_DEGREE_LIMIT {
            return Err(Error::SizeLimit {
                what: "degree",
                value: self.degree,
                limit: MATERIALIZE_DEGREE_LIMIT,
            });
        }
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut images: Vec<usize> = (0..self.degree).collect();
        loop {
            let sigma = Permutation {
                images: images.clone(),
            };
            if self.contains(&sigma) {
                out.push(sigma);
            }
            if !next_permutation(&mut images) {
                break;
            }
        }
        Ok(out)
    }

    fn describe(&self) -> String {
        let base = match self.parity {
            Parity::All => format!("Sym({})", self.degree),
            Parity::EvenOnly => format!("Alt({})", self.degree),
        };
        if self.fixed.is_empty() {
            base
        } else {
            format!("{base} fixing {:?}", self.fixed)
        }
    }
}

impl fmt::Display for GroupSlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All `m`-cycles of `Sym(n)`, sorted lexicographically by image sequence.
pub fn enumerate_class_cycles(n: usize, m: usize) -> Result<Vec<Permutation>> {
    if n > MATERIALIZE_DEGREE_LIMIT {
        return Err(Error::SizeLimit {
            what: "n",
            value: n,
            limit: MATERIALIZE_DEGREE_LIMIT,
        });
    }
    if m < 2 || m > n {
        return Err(Error::OutOfRange(format!("need 2 <= m <= n, got m={m}, n={n}")));
    }
    fn subsets(n: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for p in start..=n {
            if n - p + 1 < m - cur.len() {
                break;
            }
            cur.push(p);
            subsets(n, m, p + 1, cur, out);
            cur.pop();
        }
    }
    let mut sets = Vec::new();
    subsets(n, m, 1, &mut Vec::new(), &mut sets);
    let mut out = Vec::new();
    for set in sets {
        // Fix the smallest point first; order the rest every possible way.
        let mut rest: Vec<usize> = set[1..].to_vec();
        loop {
            let mut cycle = vec![set[0]];
            cycle.extend_from_slice(&rest);
            out.push(Permutation::from_cycles(n, &[cycle])?);
            if !next_permutation(&mut rest) {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `T_k = {σ ∈ T : {1..k} ⊆ supp(σ)}`.
pub fn t_filtration(t: &[Permutation], k: usize) -> Vec<Permutation> {
    t.iter()
        .filter(|sigma| (1..=k).all(|p| p <= sigma.degree() && sigma.moves(p)))
        .cloned()
        .collect()
}

/// The extra coset condition in [`coset_count`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetCondition {
    /// `σ(p) = p`, membership in the point stabilizer `G_p`.
    Fixes(usize),
    /// `σ(from) = to`, membership in `G_{from,to}`.
    Maps { from: usize, to: usize },
}

impl CosetCondition {
    pub fn holds(self, sigma: &Permutation) -> bool {
        match self {
            CosetCondition::Fixes(p) => p <= sigma.degree() && sigma.apply(p) == p,
            CosetCondition::Maps { from, to } => from <= sigma.degree() && sigma.apply(from) == to,
        }
    }
}

/// `|T ∩ slice ∩ condition|`.
pub fn coset_count(t: &[Permutation], slice: &GroupSlice, condition: CosetCondition) -> usize {
    t.iter()
        .filter(|sigma| slice.contains(sigma) && condition.holds(sigma))
        .count()
}

/// How [`CayleyOperator`] finds the neighbours of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborStrategy {
    /// Compose and rank on every matvec.
    OnTheFly,
    /// Precompute a `|group| × |connection|` index table.
    Table,
    /// Table when it has at most [`NEIGHBOR_TABLE_LIMIT`] entries.
    Auto,
}

/// Adjacency operator of `Cay(slice, connection ∩ slice)`, never
/// materialized as an edge list.
pub struct CayleyOperator {
    slice: GroupSlice,
    degree: usize,
    dim: usize,
    /// Member images, `dim × degree`, 0-based.
    members: Vec<u8>,
    /// Lexicographic rank in `Sym(degree)` → vertex index, `u32::MAX` if absent.
    rank_to_index: Vec<u32>,
    connection: Vec<Permutation>,
    /// Connection images, `valency × degree`, 0-based.
    connection_images: Vec<u8>,
    neighbors: Option<Vec<u32>>,
}

/// Builds the Cayley graph operator on `slice` with connection set
/// `connection ∩ slice`.
pub fn cayley_adjacency(slice: &GroupSlice, connection: &[Permutation]) -> Result<CayleyOperator> {
    CayleyOperator::new(slice, connection, NeighborStrategy::Auto)
}

impl CayleyOperator {
    pub fn new(
        slice: &GroupSlice,
        connection: &[Permutation],
        strategy: NeighborStrategy,
    ) -> Result<Self> {
        let degree = slice.degree();
        if let Some(bad) = connection.iter().find(|t| t.degree() != degree) {
            return Err(Error::SizeMismatch(format!(
                "connection element {bad} has degree {} but the group has degree {degree}",
                bad.degree()
            )));
        }
        let mut conn: Vec<Permutation> = connection
            .iter()
            .filter(|t| slice.contains(t))
            .cloned()
            .collect();
        conn.sort();
        conn.dedup();
        if conn.iter().any(Permutation::is_identity) {
            return Err(Error::InvalidConnectionSet("contains the identity".into()));
        }
        let set: HashSet<&Permutation> = conn.iter().collect();
        if let Some(t) = conn.iter().find(|t| !set.contains(&t.invert())) {
            return Err(Error::InvalidConnectionSet(format!(
                "not closed under inversion: {t} is present but {} is not",
                t.invert()
            )));
        }

        let member_list = slice.members()?;
        let dim = member_list.len();
        let full: usize = (1..=degree).product();
        let mut rank_to_index = vec![u32::MAX; full];
        let mut members = Vec::with_capacity(dim * degree);
        for (idx, sigma) in member_list.iter().enumerate() {
            rank_to_index[sigma.lex_rank() as usize] = idx as u32;
            members.extend(sigma.images.iter().map(|&i| i as u8));
        }
        let connection_images = conn
            .iter()
            .flat_map(|t| t.images.iter().map(|&i| i as u8))
            .collect();

        let mut op = CayleyOperator {
            slice: slice.clone(),
            degree,
            dim,
            members,
            rank_to_index,
            connection: conn,
            connection_images,
            neighbors: None,
        };
        let entries = dim * op.connection.len();
        let use_table = match strategy {
            NeighborStrategy::OnTheFly => false,
            NeighborStrategy::Table => true,
            NeighborStrategy::Auto => entries <= NEIGHBOR_TABLE_LIMIT,
        };
        if use_table {
            let valency = op.valency();
            let mut table = vec![0u32; entries];
            if valency > 0 {
                table
                    .par_chunks_mut(valency)
                    .enumerate()
                    .for_each(|(v, row)| {
                        for (j, slot) in row.iter_mut().enumerate() {
                            *slot = op.compute_neighbor(v, j) as u32;
                        }
                    });
            }
            op.neighbors = Some(table);
        }
        Ok(op)
    }

    pub fn slice(&self) -> &GroupSlice {
        &self.slice
    }

    /// Number of vertices.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `|connection ∩ slice|`, the degree of every vertex.
    pub fn valency(&self) -> usize {
        self.connection.len()
    }

    pub fn connection(&self) -> &[Permutation] {
        &self.connection
    }

    pub fn has_neighbor_table(&self) -> bool {
        self.neighbors.is_some()
    }

    pub fn member(&self, index: usize) -> Permutation {
        let images = self.members[index * self.degree..(index + 1) * self.degree]
            .iter()
            .map(|&i| i as usize)
            .collect();
        Permutation { images }
    }

    pub fn index_of(&self, sigma: &Permutation) -> Option<usize> {
        if sigma.degree() != self.degree {
            return None;
        }
        match self.rank_to_index[sigma.lex_rank() as usize] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    /// Index of `t_j ∘ g_v`.
    fn compute_neighbor(&self, v: usize, j: usize) -> usize {
        let n = self.degree;
        let g = &self.members[v * n..(v + 1) * n];
        let t = &self.connection_images[j * n..(j + 1) * n];
        let mut composed = [0u8; MATERIALIZE_DEGREE_LIMIT];
        for i in 0..n {
            composed[i] = t[g[i] as usize];
        }
        let idx = self.rank_to_index[lex_rank(&composed[..n]) as usize];
        debug_assert_ne!(idx, u32::MAX, "slice is not closed under the connection set");
        idx as usize
    }

    #[inline]
    fn neighbor(&self, v: usize, j: usize) -> usize {
        match &self.neighbors {
            Some(table) => table[v * self.valency() + j] as usize,
            None => self.compute_neighbor(v, j),
        }
    }

    /// Neighbours of vertex `v`, one per connection element (in order).
    pub fn neighbors_of(&self, v: usize) -> Vec<usize> {
        (0..self.valency()).map(|j| self.neighbor(v, j)).collect()
    }

    /// `y ← A x`. Each output entry is summed in connection order, so the
    /// result does not depend on the thread count.
    pub fn apply(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let valency = self.valency();
        y.par_iter_mut().enumerate().for_each(|(v, out)| {
            let mut acc = 0.0;
            for j in 0..valency {
                acc += x[self.neighbor(v, j)];
            }
            *out = acc;
        });
    }

    /// Dense adjacency matrix; only for at most [`DENSE_ORDER_LIMIT`] vertices.
    pub fn to_dense(&self) -> Result<DMatrix<f64>> {
        if self.dim > DENSE_ORDER_LIMIT {
            return Err(Error::SizeLimit {
                what: "group order",
                value: self.dim,
                limit: DENSE_ORDER_LIMIT,
            });
        }
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for v in 0..self.dim {
            for w in self.neighbors_of(v) {
                m[(v, w)] += 1.0;
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn arithmetic() {
        let sigma = perm("(1 2 3)(4 5)", 6);
        assert!(sigma.compose(&sigma.invert()).unwrap().is_identity());
        assert_eq!(sigma.cycle_type().to_string(), "3,2,1");
        assert_eq!(perm("(1 2 3 4)", 4).invert(), perm("(1 4 3 2)", 4));
        assert!(sigma.compose(&Permutation::identity(5)).is_err());
        assert_eq!(sigma.support(), vec![1, 2, 3, 4, 5]);
        assert!(!sigma.is_even());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = perm("(1 2)", 3);
        let b = perm("(2 3)", 3);
        // (1 2)∘(2 3) sends 2 -> 3 -> 3 and 3 -> 2 -> 1.
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.apply(2), 3);
        assert_eq!(ab.apply(3), 1);
    }

    #[test]
    fn notation_round_trip() {
        let sigma = perm("2 3 1 5 4", 5);
        assert_eq!(sigma.to_string(), "(1 2 3)(4 5)");
        assert_eq!(sigma.images(), vec![2, 3, 1, 5, 4]);
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::parse("1 1 2", None).is_err());
        assert!(Permutation::parse("(1 2)(2 3)", None).is_err());
        assert!(Permutation::parse("(1 9)", Some(4)).is_err());
    }

    #[test]
    fn class_enumeration() {
        assert_eq!(enumerate_class_cycles(5, 4).unwrap().len(), 30);
        assert_eq!(enumerate_class_cycles(8, 5).unwrap().len(), 1344);
        let transpositions = enumerate_class_cycles(3, 2).unwrap();
        // Image sequences 132 < 213 < 321.
        assert_eq!(
            transpositions,
            vec![perm("(2 3)", 3), perm("(1 2)", 3), perm("(1 3)", 3)]
        );
        assert!(enumerate_class_cycles(10, 5).is_err());
        assert!(enumerate_class_cycles(5, 1).is_err());
    }

    #[test]
    fn filtration_of_five_cycles() {
        let t = enumerate_class_cycles(8, 5).unwrap();
        assert_eq!(t_filtration(&t, 0).len(), 1344);
        assert_eq!(t_filtration(&t, 1).len(), 840);
        assert_eq!(t_filtration(&t, 4).len(), 96);
    }

    #[test]
    fn coset_counts() {
        let t = enumerate_class_cycles(8, 5).unwrap();
        let alt = GroupSlice::alternating(8);
        let fixes = coset_count(&t, &alt, CosetCondition::Fixes(1));
        let maps = coset_count(&t, &alt, CosetCondition::Maps { from: 2, to: 1 });
        assert_eq!(fixes, 504);
        assert_eq!(maps, 120);
        assert_eq!(fixes - maps, 384);
    }

    #[test]
    fn slices() {
        assert_eq!(GroupSlice::alternating(8).size(), 20160);
        let g2 = GroupSlice::symmetric(6).top_stabilizer(2).unwrap();
        assert_eq!(g2.fixed_points(), &[5, 6]);
        assert_eq!(g2.size(), 24);
        assert_eq!(g2.members().unwrap().len(), 24);
        assert_eq!(GroupSlice::alternating(5).fixing(1).unwrap().size(), 12);
        assert!(GroupSlice::symmetric(10).members().is_err());
        let members = GroupSlice::alternating(4).members().unwrap();
        assert!(members.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn cayley_operators() {
        let s3 = GroupSlice::symmetric(3);
        let op = cayley_adjacency(&s3, &enumerate_class_cycles(3, 2).unwrap()).unwrap();
        assert_eq!(op.dim(), 6);
        let mut y = vec![0.0; 6];
        op.apply(&[1.0; 6], &mut y);
        assert_eq!(y, vec![3.0; 6]);

        let s4 = GroupSlice::symmetric(4);
        let op = cayley_adjacency(&s4, &enumerate_class_cycles(4, 3).unwrap()).unwrap();
        assert_eq!(op.valency(), 8);
        let dense = op.to_dense().unwrap();
        assert!((0..24).all(|i| dense.row(i).sum() == 8.0));
        assert_eq!(dense, dense.transpose());
    }

    #[test]
    fn connection_validation() {
        let s4 = GroupSlice::symmetric(4);
        let with_identity = vec![Permutation::identity(4), perm("(1 2)", 4)];
        assert!(matches!(
            cayley_adjacency(&s4, &with_identity),
            Err(Error::InvalidConnectionSet(_))
        ));
        let one_way = vec![perm("(1 2 3)", 4)];
        assert!(matches!(
            cayley_adjacency(&s4, &one_way),
            Err(Error::InvalidConnectionSet(_))
        ));
        // Odd elements are dropped when the slice is Alt(4).
        let op = cayley_adjacency(&GroupSlice::alternating(4), &enumerate_class_cycles(4, 2).unwrap())
            .unwrap();
        assert_eq!(op.valency(), 0);
    }

    #[test]
    fn table_and_on_the_fly_agree() {
        let slice = GroupSlice::alternating(6);
        let conn = enumerate_class_cycles(6, 3).unwrap();
        let a = CayleyOperator::new(&slice, &conn, NeighborStrategy::Table).unwrap();
        let b = CayleyOperator::new(&slice, &conn, NeighborStrategy::OnTheFly).unwrap();
        assert!(a.has_neighbor_table() && !b.has_neighbor_table());
        let x: Vec<f64> = (0..a.dim()).map(|i| ((i * 7919) % 101) as f64 / 17.0).collect();
        let (mut ya, mut yb) = (vec![0.0; a.dim()], vec![0.0; a.dim()]);
        a.apply(&x, &mut ya);
        b.apply(&x, &mut yb);
        assert_eq!(ya, yb);
        let g = a.member(17);
        assert_eq!(a.index_of(&g), Some(17));
    }
}
