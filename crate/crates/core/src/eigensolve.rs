//! Numerical eigenvalues of explicit Cayley graphs.
//!
//! Dense symmetric eigendecomposition serves as the brute-force oracle for
//! small groups. For larger groups [`extremal_eigenvalues`] runs Lanczos
//! with full reorthogonalization against an implicit operator. The spectra
//! here carry multiplicities `(f^λ)²`, and without reorthogonalization
//! converged eigenvalues reappear as spurious copies.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::{
    enumerate_class_cycles, t_filtration, CayleyOperator, GroupSlice, NeighborStrategy,
    DENSE_ORDER_LIMIT,
};
use crate::quotient::quotient_lambda2_recursive;
use crate::spectra::{five_cycle_lambda2_formula, full_spectrum};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_ITER: usize = 500;
pub const DEFAULT_SEED: u64 = 0x5EED;
/// A numeric eigenvalue is claimed as an integer only within this distance.
pub const INTEGRALITY_TOL: f64 = 1e-6;
/// Relative tolerance of the `⟨Ax,y⟩ = ⟨x,Ay⟩` check.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// A real symmetric linear operator.
pub trait SymmetricOperator: Sync {
    fn dim(&self) -> usize;
    /// `y ← A x`.
    fn apply(&self, x: &[f64], y: &mut [f64]);
    /// An upper bound on `‖A‖₁`.
    fn norm_one(&self) -> f64;
}

impl SymmetricOperator for CayleyOperator {
    fn dim(&self) -> usize {
        CayleyOperator::dim(self)
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        CayleyOperator::apply(self, x, y)
    }

    fn norm_one(&self) -> f64 {
        self.valency() as f64
    }
}

/// A dense symmetric matrix as an operator.
pub struct DenseOperator(pub DMatrix<f64>);

impl SymmetricOperator for DenseOperator {
    fn dim(&self) -> usize {
        self.0.nrows()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        let out = &self.0 * DVector::from_column_slice(x);
        y.copy_from_slice(out.as_slice());
    }

    fn norm_one(&self) -> f64 {
        self.0
            .column_iter()
            .map(|c| c.iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// Adjacency matrix of the complete graph `K_m`.
pub fn complete_graph(m: usize) -> DMatrix<f64> {
    DMatrix::from_fn(m, m, |i, j| if i == j { 0.0 } else { 1.0 })
}

/// Adjacency matrix of the cycle `C_m`.
pub fn cycle_graph(m: usize) -> DMatrix<f64> {
    DMatrix::from_fn(m, m, |i, j| {
        if (i + 1) % m == j || (j + 1) % m == i {
            1.0
        } else {
            0.0
        }
    })
}

/// All eigenvalues of a dense symmetric matrix, descending.
pub fn dense_spectrum(matrix: &DMatrix<f64>) -> Result<Vec<f64>> {
    let n = matrix.nrows();
    if n > DENSE_ORDER_LIMIT {
        return Err(Error::SizeLimit {
            what: "matrix order",
            value: n,
            limit: DENSE_ORDER_LIMIT,
        });
    }
    if matrix.ncols() != n {
        return Err(Error::SizeMismatch(format!("{}×{} matrix", n, matrix.ncols())));
    }
    if matrix != &matrix.transpose() {
        return Err(Error::NotSymmetric("dense matrix differs from its transpose".into()));
    }
    let mut values: Vec<f64> = SymmetricEigen::new(matrix.clone()).eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Eigenvalues of a Cayley graph small enough to materialize.
pub fn dense_spectrum_of(op: &CayleyOperator) -> Result<Vec<f64>> {
    dense_spectrum(&op.to_dense()?)
}

/// Rounds each value to the nearest integer, failing if any is farther than
/// `tol` from it.
pub fn round_integral(values: &[f64], tol: f64) -> Result<Vec<i64>> {
    values
        .iter()
        .map(|&v| {
            let r = v.round();
            if (v - r).abs() < tol {
                Ok(r as i64)
            } else {
                Err(Error::NonIntegral(format!("{v} (tolerance {tol})")))
            }
        })
        .collect()
}

/// Largest `n` for which [`brute_force_comparison`] materializes `Γ(n,k)`.
pub const BRUTE_FORCE_MAX_N: usize = 6;

/// Dense and character-derived spectra of `Γ(n,k)`, as eigenvalue →
/// multiplicity maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceComparison {
    pub n: usize,
    pub k: usize,
    pub dense: BTreeMap<i64, u64>,
    pub character: BTreeMap<i64, u64>,
}

impl BruteForceComparison {
    pub fn agree(&self) -> bool {
        self.dense == self.character
    }
}

/// Builds `Γ(n,k)` explicitly, diagonalizes it densely and compares with
/// the spectrum predicted by the characters (multiplicities `(f^λ)²`).
pub fn brute_force_comparison(n: usize, k: usize) -> Result<BruteForceComparison> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::SizeLimit {
            what: "n",
            value: n,
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    let spectrum = full_spectrum(n, k)?;
    let connection = enumerate_class_cycles(n, n - k)?;
    let op = CayleyOperator::new(&GroupSlice::symmetric(n), &connection, NeighborStrategy::Table)?;
    let mut dense = BTreeMap::new();
    for v in round_integral(&dense_spectrum_of(&op)?, 1e-8)? {
        *dense.entry(v).or_insert(0) += 1;
    }
    let mut character = BTreeMap::new();
    for e in &spectrum.entries {
        let value = i64::try_from(&e.eigenvalue).map_err(|_| Error::Internal("eigenvalue overflow".into()))?;
        let mult = u64::try_from(&e.multiplicity).map_err(|_| Error::Internal("multiplicity overflow".into()))?;
        *character.entry(value).or_insert(0) += mult;
    }
    Ok(BruteForceComparison {
        n,
        k,
        dense,
        character,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn random_unit(dim: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let nv = norm(&v);
    v.iter_mut().for_each(|x| *x /= nv);
    v
}

/// Checks `⟨Ax,y⟩ = ⟨x,Ay⟩` on pseudo-random vectors drawn from `seed`.
pub fn check_symmetry(op: &impl SymmetricOperator, seed: u64) -> Result<()> {
    let dim = op.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5717_AE77);
    let x = random_unit(dim, &mut rng);
    let y = random_unit(dim, &mut rng);
    let (mut ax, mut ay) = (vec![0.0; dim], vec![0.0; dim]);
    op.apply(&x, &mut ax);
    op.apply(&y, &mut ay);
    let (lhs, rhs) = (dot(&ax, &y), dot(&x, &ay));
    let scale = norm(&ax).max(norm(&ay)).max(f64::MIN_POSITIVE);
    if (lhs - rhs).abs() > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric(format!("<Ax,y> = {lhs} but <x,Ay> = {rhs}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LanczosConfig {
    /// How many of the largest eigenvalues to return.
    pub count: usize,
    /// Residuals must satisfy `‖Av − θv‖ ≤ tol·‖A‖₁`.
    pub tol: f64,
    pub max_iter: usize,
    pub seed: u64,
}

impl Default for LanczosConfig {
    fn default() -> Self {
        LanczosConfig {
            count: 2,
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            seed: DEFAULT_SEED,
        }
    }
}

/// The largest Ritz values and their a posteriori residuals.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalEigenvalues {
    /// Descending.
    pub values: Vec<f64>,
    /// `‖A y − θ y‖` for the unit Ritz vector `y` of each value.
    pub residuals: Vec<f64>,
    pub iterations: usize,
    pub norm_bound: f64,
    /// Every residual is within `tol·norm_bound`. When false the values are
    /// the best available estimates.
    pub converged: bool,
}

impl ExtremalEigenvalues {
    /// The value as an integer, if it is within [`INTEGRALITY_TOL`] of one
    /// and its residual is certified.
    pub fn integral(&self, i: usize, tol: f64) -> Option<i64> {
        let v = *self.values.get(i)?;
        let certified = self.residuals[i] <= tol * self.norm_bound;
        let r = v.round();
        (certified && (v - r).abs() < INTEGRALITY_TOL).then_some(r as i64)
    }
}

/// Top `config.count` eigenvalues of `op` by Lanczos with full
/// reorthogonalization from a seeded pseudo-random start vector.
///
/// Each new Lanczos vector is orthogonalized twice against the whole basis.
/// A single Krylov space holds one copy of each eigenspace, so the values
/// returned are the largest *distinct* eigenvalues.
pub fn extremal_eigenvalues(
    op: &impl SymmetricOperator,
    config: &LanczosConfig,
) -> Result<ExtremalEigenvalues> {
    let dim = op.dim();
    if config.count == 0 || config.count > dim {
        return Err(Error::OutOfRange(format!(
            "cannot extract {} eigenvalues of a {dim}-dimensional operator",
            config.count
        )));
    }
    check_symmetry(op, config.seed)?;
    let norm_bound = op.norm_one().max(f64::MIN_POSITIVE);
    let threshold = config.tol * norm_bound;
    let breakdown = 1e-12 * norm_bound;
    let max_iter = config.max_iter.min(dim).max(config.count);

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut basis: Vec<Vec<f64>> = vec![random_unit(dim, &mut rng)];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut w = vec![0.0; dim];
    let mut ritz: Option<(Vec<f64>, DMatrix<f64>)> = None;

    for j in 0..max_iter {
        op.apply(&basis[j], &mut w);
        let alpha = dot(&w, &basis[j]);
        alphas.push(alpha);
        for _ in 0..2 {
            for v in &basis {
                let c = dot(&w, v);
                w.iter_mut().zip(v).for_each(|(wi, vi)| *wi -= c * vi);
            }
        }
        let beta = norm(&w);
        let steps = j + 1;
        let exhausted = beta <= breakdown || steps == dim;
        let check_now = exhausted || steps == max_iter || steps < 60 || steps % 5 == 0;
        if check_now && steps >= config.count {
            let (values, vectors) = tridiagonal_eigen(&alphas, &betas);
            let done = exhausted
                || (0..config.count).all(|i| beta * vectors[(steps - 1, i)].abs() <= threshold);
            ritz = Some((values, vectors));
            if done {
                break;
            }
        }
        if exhausted || steps == max_iter {
            break;
        }
        betas.push(beta);
        basis.push(w.iter().map(|x| x / beta).collect());
    }

    let (values, vectors) = ritz.ok_or_else(|| Error::Internal("Lanczos produced no Ritz values".into()))?;
    let steps = alphas.len();
    let mut out_values = Vec::with_capacity(config.count);
    let mut residuals = Vec::with_capacity(config.count);
    let mut ay = vec![0.0; dim];
    for i in 0..config.count {
        let theta = values[i];
        let mut y = vec![0.0; dim];
        for (idx, v) in basis.iter().take(steps).enumerate() {
            let s = vectors[(idx, i)];
            y.iter_mut().zip(v).for_each(|(yi, vi)| *yi += s * vi);
        }
        let ny = norm(&y);
        y.iter_mut().for_each(|x| *x /= ny);
        op.apply(&y, &mut ay);
        let r = ay
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - theta * b).powi(2))
            .sum::<f64>()
            .sqrt();
        out_values.push(theta);
        residuals.push(r);
    }
    let converged = residuals.iter().all(|&r| r <= threshold);
    Ok(ExtremalEigenvalues {
        values: out_values,
        residuals,
        iterations: steps,
        norm_bound,
        converged,
    })
}

/// Eigenpairs of the symmetric tridiagonal matrix with the given diagonal
/// and off-diagonal, sorted by eigenvalue descending (columns of the matrix
/// follow the same order).
fn tridiagonal_eigen(alphas: &[f64], betas: &[f64]) -> (Vec<f64>, DMatrix<f64>) {
    let m = alphas.len();
    let t = DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            alphas[i]
        } else if i + 1 == j {
            betas[i]
        } else if j + 1 == i {
            betas[j]
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::new(t);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(m, m, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CertificationConfig {
    pub tol: f64,
    pub seed: u64,
    pub max_iter: usize,
    pub strategy: NeighborStrategy,
}

impl Default for CertificationConfig {
    fn default() -> Self {
        CertificationConfig {
            tol: DEFAULT_TOL,
            seed: DEFAULT_SEED,
            max_iter: DEFAULT_MAX_ITER,
            strategy: NeighborStrategy::Auto,
        }
    }
}

/// One level `k` of the recursive check on `Cay(Alt(8), T_k)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificationRecord {
    pub k: usize,
    /// `|T_k ∩ Alt(8)|`.
    pub valency: usize,
    pub lambda1_numeric: f64,
    pub lambda2_numeric: f64,
    pub lambda1_exact: Option<i64>,
    pub lambda2_exact: Option<i64>,
    /// `|T_k ∩ G_(k+1)| − |T_k ∩ G_(k+2,k+1)|`.
    pub rhs_exact: i64,
    pub residuals: Vec<f64>,
    pub iterations: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificationReport {
    pub records: Vec<CertificationRecord>,
    pub all_pass: bool,
    /// The level at which checking stopped, if one failed.
    pub aborted_at: Option<usize>,
    /// Present only when every level passed.
    pub certified_formula: Option<String>,
    pub formula_value_at_8: Option<i64>,
}

impl CertificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Checks, for `k = 0..=4`, that the second eigenvalue of
/// `Cay(Alt(8), T_k)` (with `T` the 5-cycles and `T_k` those moving
/// `1..=k`) equals the exact coset-count expression. Together these give
/// `λ₂(Γ(n, n-5)) = n(n-2)(n-3)(n-4)(n-6)/5` for every `n >= 7`.
///
/// Stops at the first failing level.
pub fn verify_recursive_5cycles(config: &CertificationConfig) -> Result<CertificationReport> {
    let alt8 = GroupSlice::alternating(8);
    let five_cycles = enumerate_class_cycles(8, 5)?;
    let lanczos = LanczosConfig {
        count: 2,
        tol: config.tol,
        max_iter: config.max_iter,
        seed: config.seed,
    };
    let mut records = Vec::new();
    let mut aborted_at = None;
    for k in 0..=4 {
        let t_k = t_filtration(&five_cycles, k);
        let op = CayleyOperator::new(&alt8, &t_k, config.strategy)?;
        let eig = extremal_eigenvalues(&op, &lanczos)?;
        let rhs_exact = quotient_lambda2_recursive(&t_k, &alt8, k)?;
        let lambda1_exact = eig.integral(0, config.tol);
        let lambda2_exact = eig.integral(1, config.tol);
        let pass = eig.converged
            && lambda1_exact == Some(op.valency() as i64)
            && lambda2_exact == Some(rhs_exact);
        records.push(CertificationRecord {
            k,
            valency: op.valency(),
            lambda1_numeric: eig.values[0],
            lambda2_numeric: eig.values[1],
            lambda1_exact,
            lambda2_exact,
            rhs_exact,
            residuals: eig.residuals.clone(),
            iterations: eig.iterations,
            pass,
        });
        if !pass {
            aborted_at = Some(k);
            break;
        }
    }
    let all_pass = aborted_at.is_none();
    let (certified_formula, formula_value_at_8) = if all_pass {
        let at8 = five_cycle_lambda2_formula(8);
        let at8 = at8.is_integer().then(|| at8.to_integer());
        let at8 = at8.and_then(|v| i64::try_from(v).ok());
        (Some("n(n-2)(n-3)(n-4)(n-6)/5".to_string()), at8)
    } else {
        (None, None)
    };
    Ok(CertificationReport {
        records,
        all_pass,
        aborted_at,
        certified_formula,
        formula_value_at_8,
    })
}
