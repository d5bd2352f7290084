//! Quotient matrices of the coset partitions of Cayley graphs.
//!
//! Partitioning `Sym(n)` into left cosets `gG_i` of a point stabilizer
//! groups permutations by the image of `i`; for a Cayley graph this
//! partition is equitable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::permgroup::{coset_count, CayleyOperator, CosetCondition, GroupSlice, Permutation};
use crate::spectra::{binomial, class_size};
use crate::young::factorial;

/// Largest group order accepted by [`verify_equitable`].
pub const EQUITABLE_CHECK_LIMIT: usize = 5040;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub order: usize,
    /// `entries[s][t]`: neighbours in cell `t` of any vertex in cell `s`.
    pub entries: Vec<Vec<BigInt>>,
    pub provenance: String,
}

impl QuotientMatrix {
    pub fn row_sums(&self) -> Vec<BigInt> {
        self.entries.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Entries as `f64`, for numerical cross-checks.
    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.order, self.order, |i, j| {
            self.entries[i][j].to_f64().expect("entry fits in f64")
        })
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n < 2 || k > n - 2 {
        return Err(Error::OutOfRange(format!("need 0 <= k <= n-2, got n={n}, k={k}")));
    }
    Ok(())
}

/// `(diagonal, off_diagonal)` of the quotient of `Γ(n,k)` by the cosets of a
/// point stabilizer: `C(n-1,n-k)(n-k-1)!` and `C(n-2,n-k-2)(n-k-2)!`.
fn gamma_quotient_coefficients(n: usize, k: usize) -> (BigInt, BigInt) {
    let m = n - k;
    let diagonal = BigInt::from(binomial(n - 1, m) * factorial(m - 1));
    let off = BigInt::from(binomial(n - 2, m - 2) * factorial(m - 2));
    (diagonal, off)
}

pub fn quotient_matrix_gamma(n: usize, k: usize) -> Result<QuotientMatrix> {
    check_nk(n, k)?;
    let (diagonal, off) = gamma_quotient_coefficients(n, k);
    let entries = (0..n)
        .map(|s| {
            (0..n)
                .map(|t| if s == t { diagonal.clone() } else { off.clone() })
                .collect()
        })
        .collect();
    Ok(QuotientMatrix {
        order: n,
        entries,
        provenance: format!("Γ({n},{k}) over the cosets of a point stabilizer"),
    })
}

/// Eigenvalues of a quotient of the form `off·(J - I) + diagonal·I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientEigenvalues {
    /// `diagonal + (n-1)·off`, on the all-ones vector.
    pub principal: BigInt,
    /// `diagonal - off`, with multiplicity `n - 1`.
    pub secondary: BigInt,
    pub secondary_multiplicity: usize,
}

pub fn quotient_eigenvalues_gamma(n: usize, k: usize) -> Result<QuotientEigenvalues> {
    check_nk(n, k)?;
    let (diagonal, off) = gamma_quotient_coefficients(n, k);
    let principal = &diagonal + BigInt::from(n - 1) * &off;
    debug_assert_eq!(principal, BigInt::from(class_size(n, k)?));
    Ok(QuotientEigenvalues {
        principal,
        secondary: diagonal - off,
        secondary_multiplicity: n - 1,
    })
}

/// `|T_k ∩ G ∩ G_(k+1)| - |T_k ∩ G ∩ G_(k+2,k+1)|`, the second eigenvalue
/// of the quotient of `Cay(G, T_k ∩ G)` by the cosets of a point
/// stabilizer, where `G` is the slice.
pub fn quotient_lambda2_recursive(t_k: &[Permutation], slice: &GroupSlice, k: usize) -> Result<i64> {
    if k + 2 > slice.degree() {
        return Err(Error::OutOfRange(format!(
            "k + 2 = {} exceeds the degree {}",
            k + 2,
            slice.degree()
        )));
    }
    let fixes = coset_count(t_k, slice, CosetCondition::Fixes(k + 1));
    let maps = coset_count(t_k, slice, CosetCondition::Maps { from: k + 2, to: k + 1 });
    Ok(fixes as i64 - maps as i64)
}

/// Left cosets of the stabilizer of `point` (1-based): vertices grouped by the image
/// of `point`, cells ordered by that image.
pub fn stabilizer_coset_cells(op: &CayleyOperator, point: usize) -> Vec<Vec<usize>> {
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..op.dim() {
        cells.entry(op.member(v).apply(point)).or_default().push(v);
    }
    cells.into_values().collect()
}

/// The quotient matrix of an explicit graph over the cosets of the
/// stabilizer of `point`, built by counting neighbours.
#[doc(hidden)]
pub fn coset_quotient_matrix(op: &CayleyOperator, point: usize) -> Result<QuotientMatrix> {
    let cells = stabilizer_coset_cells(op, point);
    match verify_equitable(op, &cells)? {
        EquitableCheck::Equitable { quotient } => Ok(QuotientMatrix {
            order: cells.len(),
            entries: quotient
                .into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect(),
            provenance: format!(
                "Cay({}, {} elements) over the cosets of the stabilizer of {point}",
                op.slice(),
                op.valency()
            ),
        }),
        EquitableCheck::NotEquitable(w) => Err(Error::Internal(format!(
            "coset partition is not equitable: {w:?}"
        ))),
    }
}

/// Two vertices of one cell with different neighbour counts into another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitableViolation {
    pub cell: usize,
    pub target_cell: usize,
    pub vertex_a: usize,
    pub count_a: usize,
    pub vertex_b: usize,
    pub count_b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquitableCheck {
    /// `quotient[i][j]`: neighbours in cell `j` of each vertex of cell `i`.
    Equitable { quotient: Vec<Vec<usize>> },
    NotEquitable(EquitableViolation),
}

impl EquitableCheck {
    pub fn is_equitable(&self) -> bool {
        matches!(self, EquitableCheck::Equitable { .. })
    }
}

/// Checks that every vertex in cell `i` has the same number of neighbours
/// in cell `j`, for all `i, j`.
pub fn verify_equitable(op: &CayleyOperator, cells: &[Vec<usize>]) -> Result<EquitableCheck> {
    if op.dim() > EQUITABLE_CHECK_LIMIT {
        return Err(Error::SizeLimit {
            what: "group order",
            value: op.dim(),
            limit: EQUITABLE_CHECK_LIMIT,
        });
    }
    let mut cell_of = vec![usize::MAX; op.dim()];
    for (i, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(Error::InvalidCells(format!("cell {i} is empty")));
        }
        for &v in cell {
            if v >= op.dim() {
                return Err(Error::InvalidCells(format!("vertex {v} out of range")));
            }
            if cell_of[v] != usize::MAX {
                return Err(Error::InvalidCells(format!("vertex {v} appears twice")));
            }
            cell_of[v] = i;
        }
    }
    if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::InvalidCells(format!("vertex {v} is in no cell")));
    }

    let mut quotient = vec![vec![0usize; cells.len()]; cells.len()];
    for (i, cell) in cells.iter().enumerate() {
        let mut first: Option<(usize, Vec<usize>)> = None;
        for &v in cell {
            let mut counts = vec![0usize; cells.len()];
            for w in op.neighbors_of(v) {
                counts[cell_of[w]] += 1;
            }
            match &first {
                None => first = Some((v, counts)),
                Some((a, reference)) => {
                    if let Some(j) = (0..cells.len()).find(|&j| reference[j] != counts[j]) {
                        return Ok(EquitableCheck::NotEquitable(EquitableViolation {
                            cell: i,
                            target_cell: j,
                            vertex_a: *a,
                            count_a: reference[j],
                            vertex_b: v,
                            count_b: counts[j],
                        }));
                    }
                }
            }
        }
        quotient[i] = first.expect("cells are non-empty").1;
    }
    Ok(EquitableCheck::Equitable { quotient })
}

/// `Σ` of a quotient row as a plain integer; convenience for tests.
pub fn row_sum_i64(row: &[BigInt]) -> i64 {
    row.iter().fold(BigInt::zero(), |a, b| a + b).to_i64().expect("fits")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{cayley_adjacency, enumerate_class_cycles, t_filtration};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gamma_quotients() {
        let q = quotient_matrix_gamma(5, 1).unwrap();
        assert!(q.entries.iter().flatten().all(|e| *e == BigInt::from(6)));
        let q = quotient_matrix_gamma(6, 2).unwrap();
        assert!(q.row_sums().iter().all(|s| *s == BigInt::from(90)));
        let q = quotient_matrix_gamma(4, 0).unwrap();
        assert_eq!(q.entries[0], ints(&[0, 2, 2, 2]));
        assert!(quotient_matrix_gamma(4, 3).is_err());
        assert!(q.to_csv().starts_with("0,2,2,2\n2,0,2,2\n"));
    }

    #[test]
    fn gamma_quotient_eigenvalues() {
        let pairs = [((5, 1), (30, 0)), ((6, 2), (90, 18)), ((4, 0), (6, -2))];
        for ((n, k), (top, second)) in pairs {
            let ev = quotient_eigenvalues_gamma(n, k).unwrap();
            assert_eq!(ev.principal, BigInt::from(top));
            assert_eq!(ev.secondary, BigInt::from(second));
            assert_eq!(ev.secondary_multiplicity, n - 1);
        }
    }

    #[test]
    fn recursive_lambda2_on_alt8() {
        let alt8 = GroupSlice::alternating(8);
        let t = enumerate_class_cycles(8, 5).unwrap();
        let expected = [(0, 384), (2, 216), (4, 72)];
        for (k, value) in expected {
            let tk = t_filtration(&t, k);
            assert_eq!(quotient_lambda2_recursive(&tk, &alt8, k).unwrap(), value);
        }
        assert!(quotient_lambda2_recursive(&t, &alt8, 7).is_err());
    }

    #[test]
    fn coset_partitions_are_equitable() {
        let s4 = GroupSlice::symmetric(4);
        let op = cayley_adjacency(&s4, &enumerate_class_cycles(4, 2).unwrap()).unwrap();
        let cells = stabilizer_coset_cells(&op, 1);
        assert_eq!(cells.len(), 4);
        assert!(verify_equitable(&op, &cells).unwrap().is_equitable());

        let s3 = GroupSlice::symmetric(3);
        for conn in [enumerate_class_cycles(3, 2).unwrap(), enumerate_class_cycles(3, 3).unwrap()] {
            let op = cayley_adjacency(&s3, &conn).unwrap();
            for point in 1..=3 {
                let cells = stabilizer_coset_cells(&op, point);
                assert!(verify_equitable(&op, &cells).unwrap().is_equitable());
            }
        }
    }

    #[test]
    fn non_coset_partition_fails() {
        let s4 = GroupSlice::symmetric(4);
        let op = cayley_adjacency(&s4, &enumerate_class_cycles(4, 2).unwrap()).unwrap();
        // Vertices 0 and 1 are the identity and (3 4), which are adjacent.
        let cells = vec![vec![0, 2], (1..24).filter(|&v| v != 2).collect()];
        match verify_equitable(&op, &cells).unwrap() {
            EquitableCheck::NotEquitable(w) => {
                assert_eq!(w.cell, 1);
                assert_eq!(w.target_cell, 0);
                assert_eq!((w.vertex_a, w.count_a), (1, 1));
            }
            other => panic!("expected a violation, got {other:?}"),
        }
    }

    #[test]
    fn malformed_cells_are_rejected() {
        let s3 = GroupSlice::symmetric(3);
        let op = cayley_adjacency(&s3, &enumerate_class_cycles(3, 2).unwrap()).unwrap();
        assert!(verify_equitable(&op, &[vec![0, 1, 2], vec![3, 4]]).is_err());
        assert!(verify_equitable(&op, &[vec![0, 1, 2], vec![2, 3, 4, 5]]).is_err());
        assert!(verify_equitable(&op, &[vec![0, 1, 2, 3, 4, 5], vec![]]).is_err());
    }

    #[test]
    fn explicit_quotient_matches_closed_form() {
        for (n, k) in [(4, 0), (4, 1), (5, 1), (5, 2)] {
            let conn = enumerate_class_cycles(n, n - k).unwrap();
            let op = cayley_adjacency(&GroupSlice::symmetric(n), &conn).unwrap();
            let explicit = coset_quotient_matrix(&op, 1).unwrap();
            assert_eq!(explicit.entries, quotient_matrix_gamma(n, k).unwrap().entries);
            assert!(explicit
                .row_sums()
                .iter()
                .all(|s| *s == BigInt::from(op.valency())));
        }
    }
}
