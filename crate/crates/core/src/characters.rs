//! Character labels of the double covers `S̃_n`, `Ã_n` and of `A_n`,
//! split classes, hook lengths and p-adic degree valuations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{tau_partition, tau_selfconjugate, GaloisElement};
use crate::partitions::{enumerate, BarPartition, Partition, PartitionKind, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Stilde,
    Atilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Spin,
    Nonspin,
}

/// A self-associate character is `Whole`; an associate pair is `Plus`/`Minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Whole,
    Plus,
    Minus,
}

impl Variant {
    pub fn is_pair(self) -> bool {
        self != Variant::Whole
    }

    pub fn suffix(self) -> &'static str {
        match self {
            Variant::Whole => "",
            Variant::Plus => "+",
            Variant::Minus => "-",
        }
    }
}

/// The one or two variants of a label.
pub fn variants(pair: bool) -> &'static [Variant] {
    if pair {
        &[Variant::Plus, Variant::Minus]
    } else {
        &[Variant::Whole]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CharLabel {
    pub partition: Partition,
    pub group: Group,
    pub flavor: Flavor,
    pub variant: Variant,
}

impl CharLabel {
    pub fn bar(&self) -> Option<BarPartition> {
        self.partition.to_bar().ok()
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.partition.is_empty() {
            return write!(f, "(∅){}", self.variant.suffix());
        }
        write!(f, "({}){}", self.partition, self.variant.suffix())
    }
}

/// Whether the spin character of a bar-partition with sign `sign` splits
/// into an associate pair on `group`.
pub fn spin_is_pair(sign: Sign, group: Group) -> bool {
    match group {
        Group::Stilde => sign == Sign::Minus,
        Group::Atilde => sign == Sign::Plus,
    }
}

/// The labels carried by `lambda`: one whole label or a plus/minus pair.
///
/// Non-spin labels of `Ã_n` identify `λ` with its conjugate and use the
/// larger of the two as representative.
pub fn classify(lambda: &Partition, group: Group, flavor: Flavor) -> Result<Vec<CharLabel>> {
    let (partition, pair) = match (flavor, group) {
        (Flavor::Spin, _) => {
            if !lambda.is_strict() {
                return Err(Error::SpinNeedsStrict(lambda.to_string()));
            }
            (lambda.clone(), spin_is_pair(lambda.sign(), group))
        }
        (Flavor::Nonspin, Group::Stilde) => (lambda.clone(), false),
        (Flavor::Nonspin, Group::Atilde) => {
            let conj = lambda.conjugate();
            let pair = conj == *lambda;
            (conj.max(lambda.clone()), pair)
        }
    };
    Ok(variants(pair)
        .iter()
        .map(|&variant| CharLabel {
            partition: partition.clone(),
            group,
            flavor,
            variant,
        })
        .collect())
}

/// Every label of the given group and flavor at `n`.
pub fn all_labels(n: usize, group: Group, flavor: Flavor) -> Vec<CharLabel> {
    let kind = match flavor {
        Flavor::Spin => PartitionKind::Strict,
        Flavor::Nonspin => PartitionKind::All,
    };
    let mut out = Vec::new();
    for lambda in enumerate(n, kind) {
        if flavor == Flavor::Nonspin && group == Group::Atilde && lambda < lambda.conjugate() {
            continue;
        }
        out.extend(classify(&lambda, group, flavor).expect("partition kind matches flavor"));
    }
    out
}

/// `τ(label, f)`: the sign by which `f` acts on an associate pair; whole
/// labels are fixed.
pub fn tau_label(label: &CharLabel, f: GaloisElement) -> Result<Sign> {
    if !label.variant.is_pair() {
        return Ok(Sign::Plus);
    }
    match label.flavor {
        Flavor::Spin => Ok(tau_partition(&label.partition.to_bar()?, f)),
        Flavor::Nonspin => tau_selfconjugate(&label.partition, f),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassLabel {
    pub cycle_type: Partition,
    pub group: Group,
}

/// Split classes: odd cycle types, together with strict cycle types of
/// sign `-1` for `S̃_n` and `+1` for `Ã_n`.
pub fn is_split(class: &ClassLabel) -> bool {
    let lambda = &class.cycle_type;
    if lambda.parts().iter().all(|x| x % 2 == 1) {
        return true;
    }
    lambda.is_strict() && spin_is_pair(lambda.sign(), class.group)
}

/// Bar hook lengths: for each part `λ_i`, the sums `λ_i + λ_j` with `j > i`
/// and the numbers `1..=λ_i` other than the differences `λ_i - λ_j`.
pub fn bar_hook_lengths(lambda: &BarPartition) -> Vec<usize> {
    let parts = lambda.parts();
    let mut hooks = Vec::with_capacity(lambda.size());
    for (i, &a) in parts.iter().enumerate() {
        let later = &parts[i + 1..];
        hooks.extend(later.iter().map(|b| a + b));
        hooks.extend((1..=a).filter(|&h| !later.contains(&(a - h))));
    }
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    hooks
}

pub fn nu_p(mut x: usize, p: usize) -> usize {
    assert!(x > 0, "valuation of zero");
    let mut k = 0;
    while x.is_multiple_of(p) {
        x /= p;
        k += 1;
    }
    k
}

/// `ν_p(n!)` by Legendre's formula.
pub fn nu_p_factorial(n: usize, p: usize) -> usize {
    let mut total = 0;
    let mut q = p;
    while q <= n {
        total += n / q;
        q *= p;
    }
    total
}

/// `ν_p` of the degree of the spin character of `λ`, ignoring powers of 2.
pub fn spin_degree_valuation(lambda: &BarPartition, p: usize) -> usize {
    let hooks: usize = bar_hook_lengths(lambda).iter().map(|&h| nu_p(h, p)).sum();
    nu_p_factorial(lambda.size(), p) - hooks
}

/// `ν_p` of the degree of the ordinary character of `λ`.
pub fn ordinary_degree_valuation(lambda: &Partition, p: usize) -> usize {
    let hooks: usize = lambda.hook_lengths().iter().map(|&h| nu_p(h, p)).sum();
    nu_p_factorial(lambda.size(), p) - hooks
}

/// Associate characters have equal degrees up to a factor 2, so every
/// variant has the same valuation at odd `p`.
pub fn degree_valuation(label: &CharLabel, p: usize) -> usize {
    match label.flavor {
        Flavor::Spin => spin_degree_valuation(&label.partition.to_bar().expect("spin label is strict"), p),
        Flavor::Nonspin => ordinary_degree_valuation(&label.partition, p),
    }
}

/// Defect and heights of a block from the degree valuations of its members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockInvariants<L: Ord> {
    pub defect: usize,
    /// Sorted by label.
    pub heights: Vec<(L, usize)>,
}

impl<L: Ord> BlockInvariants<L> {
    pub fn height(&self, label: &L) -> Option<usize> {
        self.heights
            .binary_search_by(|(l, _)| l.cmp(label))
            .ok()
            .map(|i| self.heights[i].1)
    }
}

/// `defect = ν_p(|G|) - min ν_p(χ(1))` and `ht(χ) = ν_p(χ(1)) + defect - ν_p(|G|)`.
pub fn height_and_defect<L: Ord + Clone>(
    valuations: &[(L, usize)],
    group_valuation: usize,
) -> Result<BlockInvariants<L>> {
    let min = valuations.iter().map(|(_, v)| *v).min().ok_or(Error::EmptyBlock)?;
    let defect = group_valuation - min;
    let heights: BTreeMap<L, usize> = valuations
        .iter()
        .map(|(label, v)| (label.clone(), v + defect - group_valuation))
        .collect();
    let heights = heights.into_iter().collect();
    Ok(BlockInvariants { defect, heights })
}

/// [`height_and_defect`] for labels of `S̃_n` or `Ã_n`.
pub fn label_heights(members: &[CharLabel], n: usize, p: usize) -> Result<BlockInvariants<CharLabel>> {
    let valuations: Vec<(CharLabel, usize)> = members.iter().map(|l| (l.clone(), degree_valuation(l, p))).collect();
    height_and_defect(&valuations, nu_p_factorial(n, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_strict;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bar(s: &str) -> BarPartition {
        s.parse().unwrap()
    }

    fn kinds(labels: &[CharLabel]) -> Vec<Variant> {
        labels.iter().map(|l| l.variant).collect()
    }

    #[test]
    fn classify_examples() {
        for p in [3usize, 5, 7] {
            let whole = classify(&part(&p.to_string()), Group::Stilde, Flavor::Spin).unwrap();
            assert_eq!(kinds(&whole), [Variant::Whole]);
            let pair = classify(&part(&format!("{},1", p - 1)), Group::Stilde, Flavor::Spin).unwrap();
            assert_eq!(kinds(&pair), [Variant::Plus, Variant::Minus]);
        }
        let sc = classify(&part("2,1"), Group::Atilde, Flavor::Nonspin).unwrap();
        assert_eq!(kinds(&sc), [Variant::Plus, Variant::Minus]);
        let six = classify(&part("6"), Group::Atilde, Flavor::Spin).unwrap();
        assert_eq!(kinds(&six), [Variant::Whole]);
        assert!(matches!(
            classify(&part("2,2"), Group::Stilde, Flavor::Spin),
            Err(Error::SpinNeedsStrict(_))
        ));
        let conj = classify(&part("2,1,1"), Group::Atilde, Flavor::Nonspin).unwrap();
        assert_eq!(conj[0].partition, part("3,1"));
    }

    #[test]
    fn split_classes() {
        for group in [Group::Stilde, Group::Atilde] {
            assert!(is_split(&ClassLabel {
                cycle_type: part("5,3,1"),
                group
            }));
            assert!(is_split(&ClassLabel {
                cycle_type: part("1,1,1,1"),
                group
            }));
        }
        assert!(is_split(&ClassLabel {
            cycle_type: part("2,1"),
            group: Group::Stilde
        }));
        assert!(!is_split(&ClassLabel {
            cycle_type: part("2,1"),
            group: Group::Atilde
        }));
    }

    #[test]
    fn label_counts_match_sign_classes() {
        for n in 0..=20 {
            let strict = enumerate_strict(n);
            let minus = strict.iter().filter(|l| l.sign() == Sign::Minus).count();
            let plus = strict.len() - minus;
            assert_eq!(all_labels(n, Group::Stilde, Flavor::Spin).len(), plus + 2 * minus);
            assert_eq!(all_labels(n, Group::Atilde, Flavor::Spin).len(), minus + 2 * plus);
        }
    }

    #[test]
    fn bar_hooks() {
        assert_eq!(bar_hook_lengths(&bar("3,2,1")), vec![5, 4, 3, 3, 2, 1]);
        assert_eq!(bar_hook_lengths(&bar("6")), vec![6, 5, 4, 3, 2, 1]);
        for n in 0..=25 {
            for lambda in enumerate_strict(n) {
                assert_eq!(bar_hook_lengths(&lambda).len(), n);
            }
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(spin_degree_valuation(&bar("3"), 3), 0);
        assert_eq!(spin_degree_valuation(&bar("3,2,1"), 3), 0);
        assert_eq!(nu_p_factorial(10, 3), 4);
        assert_eq!(nu_p(54, 3), 3);
    }

    #[test]
    fn ordinary_degrees_are_integers() {
        fn factorial(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        for n in 0..=20 {
            for lambda in enumerate(n, PartitionKind::All) {
                let hooks: u128 = lambda.hook_lengths().iter().map(|&h| h as u128).product();
                assert_eq!(factorial(n) % hooks, 0, "{lambda}");
            }
        }
    }

    #[test]
    fn block_invariants() {
        let members: Vec<CharLabel> = enumerate_strict(6)
            .iter()
            .flat_map(|l| classify(l, Group::Stilde, Flavor::Spin).unwrap())
            .collect();
        let inv = label_heights(&members, 6, 3).unwrap();
        assert_eq!(inv.defect, 2);
        assert!(inv.heights.iter().all(|&(_, h)| h == 0));
        assert_eq!(inv.height(&members[0]), Some(0));
        assert_eq!(height_and_defect::<CharLabel>(&[], 4), Err(Error::EmptyBlock));
    }
}
