use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use cayley_spectra::charmn::{character_table, mn_character, CycleType};
use cayley_spectra::eigensolve::{extremal_eigenvalues, LanczosConfig};
use cayley_spectra::permgroup::{enumerate_class_cycles, CayleyOperator, GroupSlice, NeighborStrategy, Permutation};
use cayley_spectra::quotient::quotient_eigenvalues_gamma;
use cayley_spectra::spectra::{full_spectrum, low_dimensional_partitions, Table1Shape};
use cayley_spectra::young::{count_standard_tableaux, enumerate_partitions, factorial, Partition};

/// Character value via bead moves on a beta-set, removing cycles
/// smallest first. Shares nothing with the diagram-based implementation.
fn beta_set_character(parts: &[usize], cycles: &[usize]) -> i64 {
    let len = parts.len();
    let beads: Vec<usize> = parts.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut cycles = cycles.to_vec();
    cycles.sort_unstable();
    recurse(&beads, &cycles)
}

fn recurse(beads: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let occupied: BTreeSet<usize> = beads.iter().copied().collect();
    let mut total = 0;
    for &b in beads {
        if b < r || occupied.contains(&(b - r)) {
            continue;
        }
        let between = occupied.range(b - r + 1..b).count();
        let sign = if between.is_multiple_of(2) { 1 } else { -1 };
        let moved: Vec<usize> = beads.iter().map(|&x| if x == b { b - r } else { x }).collect();
        total += sign * recurse(&moved, rest);
    }
    total
}

#[test]
fn character_tables_match_bead_oracle() {
    for n in 1..=9 {
        let table = character_table(n).unwrap();
        for (i, lambda) in table.partitions.iter().enumerate() {
            for (j, tau) in table.cycle_types.iter().enumerate() {
                let oracle = beta_set_character(lambda.parts(), tau.as_partition().parts());
                assert_eq!(table.values[i][j], BigInt::from(oracle), "{} on {}", lambda, tau);
            }
        }
    }
}

#[test]
fn column_orthogonality() {
    for n in 1..=8 {
        let table = character_table(n).unwrap();
        for (a, ta) in table.cycle_types.iter().enumerate() {
            for b in 0..table.cycle_types.len() {
                let sum: BigInt = table.values.iter().map(|row| &row[a] * &row[b]).sum();
                let expected = if a == b { BigInt::from(ta.centralizer_order()) } else { BigInt::from(0) };
                assert_eq!(sum, expected, "n={n}, columns {a},{b}");
            }
        }
    }
}

#[test]
fn hook_length_matches_tableau_count() {
    for n in 1..=10 {
        for lambda in enumerate_partitions(n) {
            let counted = count_standard_tableaux(&lambda).unwrap();
            assert_eq!(lambda.dimension(), BigUint::from(counted), "{}", lambda.bracketed());
        }
    }
}

#[test]
fn low_dimensional_census_is_the_fourteen_shapes() {
    for n in 19..=22 {
        let census: BTreeSet<Partition> = low_dimensional_partitions(n).into_iter().collect();
        let shapes: BTreeSet<Partition> = Table1Shape::ALL.iter().filter_map(|s| s.partition(n)).collect();
        assert_eq!(census, shapes, "n={n}");
    }
}

#[test]
fn quotient_eigenvalues_lie_in_spectrum() {
    for n in 3..=10 {
        for k in 0..=n - 2 {
            let q = quotient_eigenvalues_gamma(n, k).unwrap();
            let spectrum = full_spectrum(n, k).unwrap();
            let values: BTreeSet<BigInt> = spectrum.entries.iter().map(|e| e.eigenvalue.clone()).collect();
            assert!(values.contains(&q.principal), "n={n} k={k}");
            assert!(values.contains(&q.secondary), "n={n} k={k}");
            let standard = spectrum.entry(&Partition::new(vec![n - 1, 1]).unwrap()).unwrap();
            assert_eq!(standard.eigenvalue, q.secondary, "n={n} k={k}");
        }
    }
}

#[test]
fn lanczos_is_seed_independent_on_alt8() {
    let five_cycles = enumerate_class_cycles(8, 5).unwrap();
    let op = CayleyOperator::new(&GroupSlice::alternating(8), &five_cycles, NeighborStrategy::Auto).unwrap();
    for seed in [1, 2, 0xDEAD_BEEF] {
        let config = LanczosConfig { seed, ..LanczosConfig::default() };
        let result = extremal_eigenvalues(&op, &config).unwrap();
        assert!(result.converged, "seed {seed}");
        assert_eq!(result.integral(0, 1e-6), Some(1344), "seed {seed}");
        assert_eq!(result.integral(1, 1e-6), Some(384), "seed {seed}");
    }
}

#[test]
fn lanczos_top_eigenvalue_is_the_valency() {
    for (n, m) in [(6, 3), (7, 4), (7, 2)] {
        let conn = enumerate_class_cycles(n, m).unwrap();
        let op = CayleyOperator::new(&GroupSlice::symmetric(n), &conn, NeighborStrategy::OnTheFly).unwrap();
        let result = extremal_eigenvalues(&op, &LanczosConfig::default()).unwrap();
        assert_eq!(result.integral(0, 1e-6), Some(op.valency() as i64), "n={n} m={m}");
    }
}

fn partition_strategy(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = enumerate_partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mn_agrees_with_bead_oracle(n in 1usize..=12, seed in any::<u64>()) {
        let partitions = enumerate_partitions(n);
        let lambda = &partitions[(seed % partitions.len() as u64) as usize];
        let tau = &partitions[((seed >> 32) % partitions.len() as u64) as usize];
        let value = mn_character(lambda, &CycleType::new(tau.clone())).unwrap();
        prop_assert_eq!(value, BigInt::from(beta_set_character(lambda.parts(), tau.parts())));
    }

    #[test]
    fn transpose_twists_by_sign(lambda in partition_strategy(12), seed in any::<u64>()) {
        let classes = enumerate_partitions(lambda.size());
        let tau = CycleType::new(classes[(seed % classes.len() as u64) as usize].clone());
        let chi = mn_character(&lambda, &tau).unwrap();
        let twisted = mn_character(&lambda.transpose(), &tau).unwrap();
        prop_assert_eq!(twisted, chi * tau.sign());
    }

    #[test]
    fn partition_text_round_trips(lambda in partition_strategy(20)) {
        let parsed: Partition = lambda.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &lambda);
        prop_assert_eq!(lambda.transpose().transpose(), lambda);
    }

    #[test]
    fn permutation_group_laws(images in Just((1..=7).collect::<Vec<usize>>()).prop_shuffle(),
                              other in Just((1..=7).collect::<Vec<usize>>()).prop_shuffle()) {
        let a = Permutation::from_images(&images).unwrap();
        let b = Permutation::from_images(&other).unwrap();
        prop_assert!(a.compose(&a.invert()).unwrap().is_identity());
        let ab = a.compose(&b).unwrap();
        for p in 1..=7 {
            prop_assert_eq!(ab.apply(p), a.apply(b.apply(p)));
        }
        prop_assert_eq!(ab.is_even(), a.is_even() == b.is_even());
        prop_assert_eq!(Permutation::parse(&a.to_string(), Some(7)).unwrap(), a.clone());
        prop_assert!(a.lex_rank() < 5040);
    }
}

#[test]
fn lex_rank_is_a_bijection() {
    let members = GroupSlice::symmetric(6).members().unwrap();
    let ranks: Vec<u64> = members.iter().map(Permutation::lex_rank).collect();
    assert_eq!(ranks, (0..720).collect::<Vec<_>>());
    assert_eq!(factorial(6), BigUint::from(members.len()));
}
