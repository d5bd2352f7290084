//! Irreducible characters of `Sym(n)` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::young::{
    enumerate_partitions, enumerate_rim_hooks, factorial, remove_rim_hook, Partition,
};

/// Largest `n` for which [`character_table`] builds a full table.
pub const CHARACTER_TABLE_LIMIT: usize = 10;

/// A conjugacy class of `Sym(n)`: the multiset of cycle lengths, fixed
/// points included as 1s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(lengths: Partition) -> Self {
        CycleType(lengths)
    }

    /// `(m, 1^fixed)`, the type of an `m`-cycle in `Sym(m + fixed)`.
    pub fn cycle_with_fixed_points(m: usize, fixed: usize) -> Self {
        let mut parts = Vec::with_capacity(fixed + 1);
        if m > 0 {
            parts.push(m);
        }
        parts.extend(std::iter::repeat_n(1, fixed));
        CycleType(Partition::from_unsorted(parts))
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.size()
    }

    pub fn sign(&self) -> i32 {
        self.0.sign()
    }

    /// `Π l^{m_l} · m_l!` over the multiplicities `m_l` of each length `l`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &l in self.0.parts() {
            *counts.entry(l).or_default() += 1;
        }
        counts.into_iter().fold(BigUint::one(), |acc, (len, mult)| {
            acc * BigUint::from(len).pow(mult as u32) * factorial(mult)
        })
    }

    pub fn class_size(&self) -> BigUint {
        factorial(self.degree()) / self.centralizer_order()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Accepts the cycle lengths in any order.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for token in trimmed.split(',').filter(|t| !t.trim().is_empty()) {
            let token = token.trim();
            let (base, exp) = token.split_once('^').unwrap_or((token, "1"));
            let base: usize = base
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad cycle length {token:?}")))?;
            let exp: usize = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {token:?}")))?;
            if base == 0 {
                return Err(Error::Parse("cycle length 0".into()));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Ok(CycleType(Partition::from_unsorted(parts)))
    }
}

/// Memoized evaluator of `χ^λ(τ)`.
///
/// Peels the largest remaining cycle length at each step. Once only fixed
/// points remain the value is `f^μ`, read off the hook length formula.
#[derive(Default)]
pub struct CharacterEvaluator {
    memo: HashMap<(Partition, Vec<usize>), BigInt>,
}

impl CharacterEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn evaluate(&mut self, lambda: &Partition, cycle_type: &CycleType) -> Result<BigInt> {
        if lambda.size() != cycle_type.degree() {
            return Err(Error::SizeMismatch(format!(
                "|λ| = {} but the cycle type has degree {}",
                lambda.size(),
                cycle_type.degree()
            )));
        }
        Ok(self.eval(lambda, cycle_type.as_partition().parts()))
    }

    fn eval(&mut self, lambda: &Partition, cycles: &[usize]) -> BigInt {
        match cycles.first() {
            None => return BigInt::one(),
            Some(1) => return BigInt::from(lambda.dimension()),
            Some(_) => {}
        }
        let key = (lambda.clone(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (&len, rest) = cycles.split_first().expect("non-empty");
        let mut total = BigInt::zero();
        for hook in enumerate_rim_hooks(lambda, len) {
            let mu = remove_rim_hook(lambda, &hook).expect("enumerated hook is removable");
            let value = self.eval(&mu, rest);
            if hook.sign() > 0 {
                total += value;
            } else {
                total -= value;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ^λ(σ)` for `σ` of cycle type `τ`.
pub fn mn_character(lambda: &Partition, cycle_type: &CycleType) -> Result<BigInt> {
    CharacterEvaluator::new().evaluate(lambda, cycle_type)
}

/// `χ^λ` on an `(n-k)`-cycle: `Σ (-1)^{ll(ρ)} f^{λ∖ρ}` over rim hooks `ρ`
/// of length `n-k`.
pub fn character_on_long_cycle(lambda: &Partition, n: usize, k: usize) -> Result<BigInt> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(format!("|λ| = {} but n = {n}", lambda.size())));
    }
    if n < 2 || k > n - 2 {
        return Err(Error::OutOfRange(format!("need 0 <= k <= n-2, got n={n}, k={k}")));
    }
    let mut total = BigInt::zero();
    for hook in enumerate_rim_hooks(lambda, n - k) {
        let f = BigInt::from(remove_rim_hook(lambda, &hook)?.dimension());
        if hook.sign() > 0 {
            total += f;
        } else {
            total -= f;
        }
    }
    Ok(total)
}

/// Full character table of `Sym(n)`: rows are irreducibles `λ`, columns
/// are cycle types `τ`, both in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub cycle_types: Vec<CycleType>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn value(&self, lambda: &Partition, cycle_type: &CycleType) -> Option<&BigInt> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.cycle_types.iter().position(|t| t == cycle_type)?;
        Some(&self.values[i][j])
    }

    /// CSV with a header row of cycle types; multi-part labels are quoted.
    pub fn to_csv(&self) -> String {
        let quote = |s: String| if s.contains(',') { format!("\"{s}\"") } else { s };
        let mut out = String::from("partition");
        for t in &self.cycle_types {
            out.push(',');
            out.push_str(&quote(t.to_string()));
        }
        out.push('\n');
        for (lambda, row) in self.partitions.iter().zip(&self.values) {
            out.push_str(&quote(lambda.to_string()));
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

pub fn character_table(n: usize) -> Result<CharacterTable> {
    if n > CHARACTER_TABLE_LIMIT {
        return Err(Error::SizeLimit {
            what: "n",
            value: n,
            limit: CHARACTER_TABLE_LIMIT,
        });
    }
    let partitions = enumerate_partitions(n);
    let cycle_types: Vec<CycleType> = partitions.iter().cloned().map(CycleType).collect();
    let mut evaluator = CharacterEvaluator::new();
    let values = partitions
        .iter()
        .map(|lambda| {
            cycle_types
                .iter()
                .map(|t| evaluator.evaluate(lambda, t))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable {
        n,
        partitions,
        cycle_types,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_character_is_one() {
        for tau in enumerate_partitions(6) {
            assert_eq!(mn_character(&p("6"), &CycleType::new(tau)).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(mn_character(&p("3,2"), &t("3,1,1")).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&p("3,1"), &t("3,1")).unwrap(), BigInt::zero());
        assert_eq!(mn_character(&p("3,2"), &t("1^5")).unwrap(), BigInt::from(5));
    }

    #[test]
    fn size_mismatch_is_rejected() {
        assert!(matches!(
            mn_character(&p("3,2"), &t("3,1")),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn long_cycle_examples() {
        for n in 2..9 {
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            let column = Partition::from_unsorted(vec![1; n]);
            assert_eq!(
                character_on_long_cycle(&column, n, 0).unwrap(),
                BigInt::from(sign)
            );
        }
        assert_eq!(character_on_long_cycle(&p("5,1"), 6, 2).unwrap(), BigInt::one());
        assert_eq!(character_on_long_cycle(&p("4,1"), 5, 1).unwrap(), BigInt::zero());
        assert!(character_on_long_cycle(&p("4,1"), 5, 4).is_err());
    }

    #[test]
    fn small_tables() {
        // Rows [2], [1,1]; columns (2), (1,1).
        let table = character_table(2).unwrap();
        assert_eq!(
            table.values,
            vec![
                vec![BigInt::one(), BigInt::one()],
                vec![BigInt::from(-1), BigInt::one()],
            ]
        );
        let table3 = character_table(3).unwrap();
        assert_eq!(table3.value(&p("2,1"), &t("3")).unwrap(), &BigInt::from(-1));
        let table5 = character_table(5).unwrap();
        assert_eq!(table5.value(&p("3,2"), &t("5")).unwrap(), &BigInt::zero());
        assert!(character_table(11).is_err());
    }

    #[test]
    fn centralizers() {
        assert_eq!(t("2,2").centralizer_order(), BigUint::from(8u32));
        assert_eq!(t("3,1").class_size(), BigUint::from(8u32));
        assert_eq!(t("1^4").class_size(), BigUint::one());
    }

    #[test]
    fn csv_layout() {
        let csv = character_table(2).unwrap().to_csv();
        assert_eq!(csv, "partition,2,\"1,1\"\n2,1,1\n\"1,1\",-1,1\n");
    }
}
