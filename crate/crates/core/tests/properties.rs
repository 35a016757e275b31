use std::collections::BTreeSet;

use proptest::prelude::*;

use spinblocks::abacus::{BarAbacus, FencedRunner};
use spinblocks::blocks::spin_blocks;
use spinblocks::characters::{bar_hook_lengths, Group};
use spinblocks::galois::{jacobi, tau_sqrt, GaloisElement};
use spinblocks::littlewood::{bar_decompose, bar_reconstruct, is_bar_core, ordinary_decompose, ordinary_reconstruct};
use spinblocks::partitions::{enumerate, enumerate_strict, strict_up_to, PartitionKind};
use spinblocks::{BarPartition, Partition};

fn strict_partition() -> impl Strategy<Value = BarPartition> {
    prop::collection::btree_set(1usize..=16, 0..6)
        .prop_map(|parts| BarPartition::new(parts.into_iter().rev().collect()).unwrap())
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=9, 0..9).prop_map(Partition::from_unsorted)
}

fn odd_modulus() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![3usize, 5, 7, 9, 11, 13])
}

fn galois_element() -> impl Strategy<Value = GaloisElement> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
        .prop_flat_map(|p| (Just(p), 0u32..4, 1..p))
        .prop_map(|(p, e, s)| GaloisElement::new(p, e, s).unwrap())
}

proptest! {
    #[test]
    fn bar_decomposition_round_trips(lambda in strict_partition(), t in odd_modulus()) {
        let dec = bar_decompose(&lambda, t).unwrap();
        prop_assert_eq!(bar_reconstruct(&dec.core, &dec.quotient, t).unwrap(), lambda.clone());
        prop_assert_eq!(lambda.size(), dec.core.size() + t * dec.weight);
        prop_assert!(is_bar_core(&dec.core, t).unwrap());
        let abacus = BarAbacus::new(&lambda, t).unwrap();
        prop_assert_eq!(abacus.twist().untwist(), abacus);
    }

    #[test]
    fn ordinary_decomposition_round_trips(lambda in partition(), p in odd_modulus()) {
        let dec = ordinary_decompose(&lambda, p).unwrap();
        prop_assert_eq!(ordinary_reconstruct(&dec.core, &dec.quotient, p).unwrap(), lambda.clone());
        prop_assert_eq!(lambda.size(), dec.core.size() + p * dec.weight);
        prop_assert_eq!(dec.cocore.size(), p * dec.weight);
    }

    #[test]
    fn shifts_invert(above in prop::collection::btree_set(0usize..8, 0..5),
                     below in prop::collection::btree_set(0usize..8, 0..5),
                     k in -6i64..=6) {
        let runner = FencedRunner::new(above, below);
        prop_assert_eq!(runner.shift(k).shift(-k), runner.clone());
        prop_assert_eq!(runner.shift(k).charge(), runner.charge() + k);
        let (pointed, c) = runner.normalize();
        prop_assert!(pointed.is_pointed());
        prop_assert_eq!(pointed.shift(c), runner);
    }

    #[test]
    fn conjugation_is_an_involution(lambda in partition()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(Partition::from_frobenius(&lambda.frobenius()), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn tau_sqrt_is_multiplicative(a in 1u128..500, b in 1u128..500, f in galois_element()) {
        prop_assert_eq!(tau_sqrt(a * b, f), tau_sqrt(a, f) * tau_sqrt(b, f));
    }

    #[test]
    fn jacobi_is_multiplicative(a in -300i64..300, b in -300i64..300, n in (1u64..400).prop_map(|k| 2 * k + 1)) {
        let ab = jacobi(a * b, n).unwrap();
        prop_assert_eq!(ab, jacobi(a, n).unwrap() * jacobi(b, n).unwrap());
    }

    #[test]
    fn galois_composition_matches_on_surds(f in galois_element(), e in 0u32..3, s in 1u64..3, m in 1u128..300) {
        let g = GaloisElement::new(f.p, e, s).unwrap();
        prop_assert_eq!(tau_sqrt(m, f.compose(g)), tau_sqrt(m, f) * tau_sqrt(m, g));
    }
}

#[test]
fn strict_and_odd_partitions_are_equinumerous() {
    for n in 0..=40 {
        let odd = enumerate(n, PartitionKind::All)
            .into_iter()
            .filter(|l| l.parts().iter().all(|x| x % 2 == 1))
            .count();
        assert_eq!(enumerate_strict(n).len(), odd, "n = {n}");
    }
}

#[test]
fn jacobi_agrees_with_euler_criterion() {
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
        for a in 0..p {
            let power = (0..(p - 1) / 2).fold(1, |acc, _| acc * a % p);
            let euler = match power {
                0 => 0,
                1 => 1,
                _ => -1,
            };
            assert_eq!(jacobi(a as i64, p).unwrap(), euler, "({a}/{p})");
        }
    }
}

#[test]
fn cores_are_exactly_the_partitions_without_divisible_hooks() {
    for p in [3usize, 5, 7] {
        for lambda in strict_up_to(26) {
            let divisible = bar_hook_lengths(&lambda).iter().any(|h| h % p == 0);
            assert_eq!(is_bar_core(&lambda, p).unwrap(), !divisible, "{lambda} p={p}");
        }
        for n in 0..=18 {
            for lambda in enumerate(n, PartitionKind::All) {
                let divisible = lambda.hook_lengths().iter().any(|h| h % p == 0);
                assert_eq!(
                    ordinary_decompose(&lambda, p).unwrap().is_core(),
                    !divisible,
                    "{lambda} p={p}"
                );
            }
        }
    }
}

#[test]
fn blocks_partition_the_strict_partitions() {
    for p in [3usize, 5, 7] {
        for n in 0..=24 {
            for group in [Group::Stilde, Group::Atilde] {
                let mut seen = BTreeSet::new();
                for (id, members) in spin_blocks(n, p, group).unwrap() {
                    assert_eq!(id.n(), n);
                    for label in members {
                        let lambda = label.partition.clone();
                        assert_eq!(bar_decompose(&lambda.to_bar().unwrap(), p).unwrap().core, id.kappa);
                        seen.insert(lambda);
                    }
                }
                let all: BTreeSet<Partition> = enumerate_strict(n).into_iter().map(Into::into).collect();
                assert_eq!(seen, all, "n = {n} p = {p}");
            }
        }
    }
}
