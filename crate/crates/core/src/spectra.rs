//! Spectra of `Γ(n,k) = Cay(Sym(n), C(n,k))`, where `C(n,k)` is the class
//! of `(n-k)`-cycles.
//!
//! Every irreducible character `χ^λ` contributes the eigenvalue
//! `χ^λ(σ) / f^λ · c(n,k)` with multiplicity `(f^λ)²`, where `σ` is any
//! `(n-k)`-cycle and `c(n,k) = C(n,k)·(n-k-1)!` is the valency.
//!
//! # Second eigenvalue convention
//!
//! [`lambda2`] returns the largest eigenvalue *strictly below the valency*.
//! When `n-k` is odd the connection set lies in `Alt(n)`, the graph splits
//! into two isomorphic components and the valency occurs twice (from `[n]`
//! and `[1^n]`); the convention then yields the second eigenvalue of one
//! component, `Cay(Alt(n), C(n,k))`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::charmn::character_on_long_cycle;
use crate::error::{Error, Result};
use crate::young::{enumerate_partitions, enumerate_rim_hooks, factorial, remove_rim_hook, Partition};

/// Default bound on `n` for [`full_spectrum`].
pub const DEFAULT_SPECTRUM_MAX_N: usize = 14;

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n < 2 || k > n - 2 {
        return Err(Error::OutOfRange(format!(
            "need 0 <= k <= n-2 (the connection set must avoid the identity), got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// Exact binomial coefficient for non-negative arguments.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// `a(a-1)…(a-b+1) / b!` for any integer `a`. Zero when `0 <= a < b`.
pub fn binomial_poly(a: i64, b: u32) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..b as i64 {
        num *= BigInt::from(a - i);
    }
    num / BigInt::from(factorial(b as usize))
}

/// `c(n,k) = |C(n,k)| = C(n,k)·(n-k-1)!`.
pub fn class_size(n: usize, k: usize) -> Result<BigUint> {
    check_nk(n, k)?;
    Ok(binomial(n, k) * factorial(n - k - 1))
}

fn to_integer(value: BigRational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{} = {value}", what())))
    }
}

/// The eigenvalue of `Γ(n,k)` afforded by `χ^λ`.
///
/// When `3k+1 < n` the partition has at most one rim hook of length `n-k`
/// and the value is read off that single hook; the result is checked
/// against the summed character value in every case.
pub fn eigenvalue_for(lambda: &Partition, n: usize, k: usize) -> Result<BigInt> {
    let valency = BigInt::from(class_size(n, k)?);
    if lambda.size() != n {
        return Err(Error::SizeMismatch(format!("|λ| = {} but n = {n}", lambda.size())));
    }
    let dim = BigInt::from(lambda.dimension());
    let chi = character_on_long_cycle(lambda, n, k)?;
    let general = to_integer(BigRational::new(chi * &valency, dim.clone()), || {
        format!("eigenvalue of {} for n={n}, k={k}", lambda.bracketed())
    })
    .map_err(|e| Error::Internal(e.to_string()))?;

    if 3 * k + 1 < n {
        let hooks = enumerate_rim_hooks(lambda, n - k);
        if hooks.len() > 1 {
            return Err(Error::Internal(format!(
                "{} has {} rim hooks of length {} although 3k+1 < n",
                lambda.bracketed(),
                hooks.len(),
                n - k
            )));
        }
        let fast = match hooks.first() {
            None => BigInt::zero(),
            Some(hook) => {
                let rest = BigInt::from(remove_rim_hook(lambda, hook)?.dimension());
                let ratio = BigRational::new(rest * BigInt::from(hook.sign()) * &valency, dim);
                to_integer(ratio, || format!("single-hook eigenvalue of {}", lambda.bracketed()))
                    .map_err(|e| Error::Internal(e.to_string()))?
            }
        };
        if fast != general {
            return Err(Error::Internal(format!(
                "single-hook value {fast} disagrees with character sum {general} for {}",
                lambda.bracketed()
            )));
        }
    }
    Ok(general)
}

/// One irreducible's contribution to the spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub partition: Partition,
    pub eigenvalue: BigInt,
    /// `(f^λ)²`.
    pub multiplicity: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub n: usize,
    pub k: usize,
    pub valency: BigUint,
    /// Sorted by eigenvalue, descending; ties keep canonical partition order.
    pub entries: Vec<SpectrumEntry>,
}

#[derive(Serialize)]
struct EntryJson {
    partition: String,
    eigenvalue: String,
    multiplicity: String,
}

#[derive(Serialize)]
struct SpectrumJson {
    n: usize,
    k: usize,
    valency: String,
    entries: Vec<EntryJson>,
}

impl Spectrum {
    /// `Σ (f^λ)² ξ_λ`, the trace of the adjacency matrix.
    pub fn trace(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| BigInt::from(e.multiplicity.clone()) * &e.eigenvalue)
            .sum()
    }

    /// `Σ (f^λ)² ξ_λ²`, twice the number of edges.
    pub fn second_moment(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| BigInt::from(e.multiplicity.clone()) * &e.eigenvalue * &e.eigenvalue)
            .sum()
    }

    pub fn total_multiplicity(&self) -> BigUint {
        self.entries.iter().map(|e| e.multiplicity.clone()).sum()
    }

    pub fn entry(&self, lambda: &Partition) -> Option<&SpectrumEntry> {
        self.entries.iter().find(|e| &e.partition == lambda)
    }

    pub fn to_json(&self) -> String {
        let doc = SpectrumJson {
            n: self.n,
            k: self.k,
            valency: self.valency.to_string(),
            entries: self
                .entries
                .iter()
                .map(|e| EntryJson {
                    partition: e.partition.to_string(),
                    eigenvalue: e.eigenvalue.to_string(),
                    multiplicity: e.multiplicity.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("spectrum serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("partition,eigenvalue,multiplicity\n");
        for e in &self.entries {
            out.push_str(&format!(
                "\"{}\",{},{}\n",
                e.partition, e.eigenvalue, e.multiplicity
            ));
        }
        out
    }
}

pub fn full_spectrum(n: usize, k: usize) -> Result<Spectrum> {
    full_spectrum_with_limit(n, k, DEFAULT_SPECTRUM_MAX_N)
}

pub fn full_spectrum_with_limit(n: usize, k: usize, max_n: usize) -> Result<Spectrum> {
    if n > max_n {
        return Err(Error::SizeLimit {
            what: "n",
            value: n,
            limit: max_n,
        });
    }
    let valency = class_size(n, k)?;
    let mut entries = enumerate_partitions(n)
        .into_par_iter()
        .map(|lambda| {
            let eigenvalue = eigenvalue_for(&lambda, n, k)?;
            let dim = lambda.dimension();
            Ok(SpectrumEntry {
                partition: lambda,
                eigenvalue,
                multiplicity: &dim * &dim,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by(|a, b| b.eigenvalue.cmp(&a.eigenvalue));
    Ok(Spectrum {
        n,
        k,
        valency,
        entries,
    })
}

/// Largest eigenvalue strictly below the valency, with every partition
/// affording it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondEigenvalue {
    pub value: BigInt,
    pub witnesses: Vec<Partition>,
}

impl SecondEigenvalue {
    pub fn from_spectrum(spectrum: &Spectrum) -> Result<Self> {
        let valency = BigInt::from(spectrum.valency.clone());
        let value = spectrum
            .entries
            .iter()
            .map(|e| &e.eigenvalue)
            .filter(|v| **v < valency)
            .max()
            .cloned()
            .ok_or_else(|| {
                Error::Internal(format!(
                    "every eigenvalue of Γ({},{}) equals the valency",
                    spectrum.n, spectrum.k
                ))
            })?;
        let witnesses = spectrum
            .entries
            .iter()
            .filter(|e| e.eigenvalue == value)
            .map(|e| e.partition.clone())
            .collect();
        Ok(SecondEigenvalue { value, witnesses })
    }
}

pub fn lambda2(n: usize, k: usize) -> Result<SecondEigenvalue> {
    SecondEigenvalue::from_spectrum(&full_spectrum(n, k)?)
}

pub fn lambda2_with_limit(n: usize, k: usize, max_n: usize) -> Result<SecondEigenvalue> {
    SecondEigenvalue::from_spectrum(&full_spectrum_with_limit(n, k, max_n)?)
}

/// `(k-1)/(n-1) · c(n,k)`, the eigenvalue afforded by `[n-1,1]`.
pub fn standard_eigenvalue(n: usize, k: usize) -> Result<BigInt> {
    closed_form_table1(Table1Shape::Standard, n, k)
}

/// The fourteen low-dimensional irreducibles with closed-form eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Table1Shape {
    /// `[n]`
    Trivial,
    /// `[1^n]`
    Sign,
    /// `[n-1,1]`
    Standard,
    /// `[2,1^(n-2)]`
    StandardConjugate,
    /// `[n-2,2]`
    TwoRowTwo,
    /// `[2^2,1^(n-4)]`
    TwoRowTwoConjugate,
    /// `[n-2,1^2]`
    HookTwo,
    /// `[3,1^(n-3)]`
    HookTwoConjugate,
    /// `[n-3,3]`
    TwoRowThree,
    /// `[2^3,1^(n-6)]`
    TwoRowThreeConjugate,
    /// `[n-3,1^3]`
    HookThree,
    /// `[4,1^(n-4)]`
    HookThreeConjugate,
    /// `[n-3,2,1]`
    Staircase,
    /// `[3,2,1^(n-5)]`
    StaircaseConjugate,
}

impl Table1Shape {
    pub const ALL: [Table1Shape; 14] = [
        Table1Shape::Trivial,
        Table1Shape::Sign,
        Table1Shape::Standard,
        Table1Shape::StandardConjugate,
        Table1Shape::TwoRowTwo,
        Table1Shape::TwoRowTwoConjugate,
        Table1Shape::HookTwo,
        Table1Shape::HookTwoConjugate,
        Table1Shape::TwoRowThree,
        Table1Shape::TwoRowThreeConjugate,
        Table1Shape::HookThree,
        Table1Shape::HookThreeConjugate,
        Table1Shape::Staircase,
        Table1Shape::StaircaseConjugate,
    ];

    pub fn identifier(self) -> &'static str {
        match self {
            Table1Shape::Trivial => "n",
            Table1Shape::Sign => "1^n",
            Table1Shape::Standard => "n-1,1",
            Table1Shape::StandardConjugate => "2,1^n-2",
            Table1Shape::TwoRowTwo => "n-2,2",
            Table1Shape::TwoRowTwoConjugate => "2^2,1^n-4",
            Table1Shape::HookTwo => "n-2,1^2",
            Table1Shape::HookTwoConjugate => "3,1^n-3",
            Table1Shape::TwoRowThree => "n-3,3",
            Table1Shape::TwoRowThreeConjugate => "2^3,1^n-6",
            Table1Shape::HookThree => "n-3,1^3",
            Table1Shape::HookThreeConjugate => "4,1^n-4",
            Table1Shape::Staircase => "n-3,2,1",
            Table1Shape::StaircaseConjugate => "3,2,1^n-5",
        }
    }

    fn base(self) -> (Table1Shape, bool) {
        use Table1Shape::*;
        match self {
            Sign => (Trivial, true),
            StandardConjugate => (Standard, true),
            TwoRowTwoConjugate => (TwoRowTwo, true),
            HookTwoConjugate => (HookTwo, true),
            TwoRowThreeConjugate => (TwoRowThree, true),
            HookThreeConjugate => (HookThree, true),
            StaircaseConjugate => (Staircase, true),
            other => (other, false),
        }
    }

    /// The partition of `n` this shape denotes, if it is one.
    pub fn partition(self, n: usize) -> Option<Partition> {
        use Table1Shape::*;
        let (base, conjugate) = self.base();
        let (head, tail): (usize, &[usize]) = match base {
            Trivial => (0, &[]),
            Standard => (1, &[1]),
            TwoRowTwo => (2, &[2]),
            HookTwo => (2, &[1, 1]),
            TwoRowThree => (3, &[3]),
            HookThree => (3, &[1, 1, 1]),
            Staircase => (3, &[2, 1]),
            _ => unreachable!("base shapes only"),
        };
        if n < head + 1 {
            return None;
        }
        let mut parts = vec![n - head];
        parts.extend_from_slice(tail);
        let lambda = Partition::new(parts).ok()?;
        Some(if conjugate { lambda.transpose() } else { lambda })
    }

    /// The rational factor multiplying `c(n,k)`, before the conjugation sign.
    fn factor(self, n: usize, k: usize) -> Option<BigRational> {
        use Table1Shape::*;
        let (n, k) = (n as i64, k as i64);
        let b = |a: i64, m: u32| binomial_poly(a, m);
        let (num, den) = match self.base().0 {
            Trivial => (BigInt::one(), BigInt::one()),
            Standard => (BigInt::from(k - 1), BigInt::from(n - 1)),
            TwoRowTwo => (b(k, 2) - k, b(n, 2) - n),
            HookTwo => (b(k - 1, 2), b(n - 1, 2)),
            TwoRowThree => (b(k, 3) - b(k, 2), b(n, 3) - b(n, 2)),
            HookThree => (b(k - 1, 3), b(n - 1, 3)),
            Staircase => (
                BigInt::from(k * (k - 2) * (k - 4)),
                BigInt::from(n * (n - 2) * (n - 4)),
            ),
            _ => unreachable!("base shapes only"),
        };
        (!den.is_zero()).then(|| BigRational::new(num, den))
    }
}

impl fmt::Display for Table1Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.identifier())
    }
}

impl FromStr for Table1Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '[' && *c != ']' && *c != '{' && *c != '}')
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        Table1Shape::ALL
            .into_iter()
            .find(|shape| shape.identifier() == norm)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown shape {s:?}; expected one of {}",
                    Table1Shape::ALL.map(|s| s.identifier()).join(" ")
                ))
            })
    }
}

/// The closed-form eigenvalue of `Γ(n,k)` for a low-dimensional shape, as
/// an exact rational.
pub fn closed_form_table1_exact(shape: Table1Shape, n: usize, k: usize) -> Result<BigRational> {
    check_nk(n, k)?;
    if shape.partition(n).is_none() {
        return Err(Error::OutOfRange(format!("{shape} is not a partition of {n}")));
    }
    let factor = shape
        .factor(n, k)
        .ok_or_else(|| Error::OutOfRange(format!("{shape} has a vanishing denominator at n={n}")))?;
    let sign = if shape.base().1 && (n - k + 1) % 2 == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    let valency = BigRational::from_integer(BigInt::from(class_size(n, k)?));
    Ok(sign * factor * valency)
}

/// As [`closed_form_table1_exact`], asserting the value is an integer.
pub fn closed_form_table1(shape: Table1Shape, n: usize, k: usize) -> Result<BigInt> {
    to_integer(closed_form_table1_exact(shape, n, k)?, || {
        format!("closed form {shape} at n={n}, k={k}")
    })
}

/// One line of the closed-form comparison at fixed `(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub shape: Table1Shape,
    pub partition: Partition,
    pub closed_form: BigRational,
    pub character_value: BigInt,
    /// Whether agreement is required here (`3k+1 < n`, or `k <= 1`).
    pub asserted: bool,
}

impl Table1Row {
    pub fn agrees(&self) -> bool {
        self.closed_form == BigRational::from_integer(self.character_value.clone())
    }
}

/// Closed form against character value for every shape that is a partition
/// of `n`.
pub fn table1_report(n: usize, k: usize) -> Result<Vec<Table1Row>> {
    check_nk(n, k)?;
    let asserted = 3 * k + 1 < n || k <= 1;
    Table1Shape::ALL
        .into_iter()
        .filter_map(|shape| shape.partition(n).map(|p| (shape, p)))
        .filter(|(shape, _)| shape.factor(n, k).is_some())
        .map(|(shape, partition)| {
            Ok(Table1Row {
                shape,
                closed_form: closed_form_table1_exact(shape, n, k)?,
                character_value: eigenvalue_for(&partition, n, k)?,
                partition,
                asserted,
            })
        })
        .collect()
}

/// The arithmetic side conditions under which the character argument for
/// `λ₂ = (k-1)/(n-1)·c(n,k)` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisFlags {
    /// `k = 2`, or `3 <= k <= min(n, 2·log_{k/e}(n(n-2)/(2e)) - 1)`.
    pub in_main_theorem_range: bool,
    /// `3k + 1 < n`: every partition has at most one rim hook of length `n-k`.
    pub unique_rimhook_range: bool,
    /// `√(k!) <= 3/(n-1)·C(n,3)`, evaluated as `k!(n-1)² <= 9·C(n,3)²`.
    pub sqrtkfact_bound_holds: bool,
}

/// Relative margin by which `k` must clear the floating-point logarithmic
/// bound before it counts as inside the range.
pub const LOG_BOUND_GUARD: f64 = 1e-9;

/// The upper bound `2·log_{k/e}(n(n-2)/(2e)) - 1`, defined for `k >= 3`.
pub fn main_theorem_log_bound(n: usize, k: usize) -> Option<f64> {
    if k < 3 {
        return None;
    }
    let e = std::f64::consts::E;
    let (n, k) = (n as f64, k as f64);
    Some(2.0 * (n * (n - 2.0) / (2.0 * e)).ln() / (k / e).ln() - 1.0)
}

pub fn hypothesis_check(n: usize, k: usize) -> HypothesisFlags {
    let unique_rimhook_range = 3 * k + 1 < n;
    let lhs = factorial(k) * BigUint::from(n.saturating_sub(1)).pow(2);
    let rhs = BigUint::from(9u32) * binomial(n, 3).pow(2);
    let sqrtkfact_bound_holds = lhs <= rhs;
    let in_main_theorem_range = match k {
        2 => true,
        k if k >= 3 && k <= n => {
            let bound = main_theorem_log_bound(n, k).expect("k >= 3");
            bound.is_finite() && (k as f64) <= bound - LOG_BOUND_GUARD * bound.abs().max(1.0)
        }
        _ => false,
    };
    HypothesisFlags {
        in_main_theorem_range,
        unique_rimhook_range,
        sqrtkfact_bound_holds,
    }
}

/// Partitions of `n` with `f^λ < 3·C(n,3)`.
pub fn low_dimensional_partitions(n: usize) -> Vec<Partition> {
    let threshold = BigUint::from(3u32) * binomial(n, 3);
    enumerate_partitions(n)
        .into_par_iter()
        .filter(|lambda| lambda.dimension() < threshold)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: usize,
    pub k: usize,
    pub lambda2: BigInt,
    pub predicted: BigInt,
    pub witnesses: Vec<Partition>,
    /// `lambda2 == predicted` and `[n-1,1]` is a witness.
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

pub fn conjecture_check(n_max: usize) -> Result<ConjectureReport> {
    conjecture_check_with_limit(n_max, DEFAULT_SPECTRUM_MAX_N)
}

pub fn conjecture_check_with_limit(n_max: usize, max_n: usize) -> Result<ConjectureReport> {
    if n_max < 3 {
        return Err(Error::OutOfRange(format!("n_max must be at least 3, got {n_max}")));
    }
    if n_max > max_n {
        return Err(Error::SizeLimit {
            what: "n_max",
            value: n_max,
            limit: max_n,
        });
    }
    let mut rows = Vec::new();
    for n in 3..=n_max {
        let standard = Partition::from_parts_unchecked(vec![n - 1, 1]);
        for k in 2..=n - 2 {
            let second = lambda2_with_limit(n, k, max_n)?;
            let predicted = standard_eigenvalue(n, k)?;
            let pass = second.value == predicted && second.witnesses.contains(&standard);
            rows.push(ConjectureRow {
                n,
                k,
                lambda2: second.value,
                predicted,
                witnesses: second.witnesses,
                pass,
            });
        }
    }
    Ok(ConjectureReport { rows })
}

/// `n(n-2)(n-3)(n-4)(n-6)/5`, the second eigenvalue of `Γ(n, n-5)`.
pub fn five_cycle_lambda2_formula(n: usize) -> BigRational {
    let n = BigInt::from(n);
    let prod = [0, 2, 3, 4, 6]
        .iter()
        .fold(BigInt::one(), |acc, &d| acc * (&n - BigInt::from(d)));
    BigRational::new(prod, BigInt::from(5))
}

/// Whether every eigenvalue occurs together with its negation, counted with
/// multiplicity.
pub fn is_symmetric_about_zero(spectrum: &Spectrum) -> bool {
    use std::collections::BTreeMap;
    let mut balance: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    for e in &spectrum.entries {
        let m = BigInt::from(e.multiplicity.clone());
        *balance.entry(e.eigenvalue.abs()).or_default() += if e.eigenvalue.is_negative() {
            -m
        } else if e.eigenvalue.is_zero() {
            BigInt::zero()
        } else {
            m
        };
    }
    balance.values().all(|v| v.is_zero())
}
