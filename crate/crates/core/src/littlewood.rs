//! Littlewood decompositions: the t-bar core, quotient, characteristic
//! vector and cocore of a bar-partition, and the p-core, p-quotient and
//! cocore of an ordinary partition built from its Frobenius symbol.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::abacus::{check_modulus, FencedRunner, TwistedBarAbacus};
use crate::error::{Error, Result};
use crate::partitions::{BarPartition, FrobeniusSymbol, Partition};

/// The t-bar Littlewood decomposition of a bar-partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarLittlewood {
    pub t: usize,
    pub core: BarPartition,
    /// `(t + 1) / 2` components; component 0 has distinct parts.
    pub quotient: Vec<Partition>,
    /// One entry per fenced runner `r = 1..=(t-1)/2`.
    pub charvec: Vec<i64>,
    pub weight: usize,
    pub cocore: BarPartition,
    /// Beads annihilated at the fences when the cocore runners are shifted
    /// back into place.
    pub d: usize,
}

impl BarLittlewood {
    pub fn is_core(&self) -> bool {
        self.weight == 0
    }
}

/// Decomposes `lambda` on its twisted t-bar abacus.
pub fn bar_decompose(lambda: &BarPartition, t: usize) -> Result<BarLittlewood> {
    let twisted = TwistedBarAbacus::new(lambda, t)?;
    let mut quotient = vec![Partition::from_unsorted(twisted.runner0().iter().copied().collect())];
    let mut charvec = Vec::with_capacity((t - 1) / 2);
    let mut pointed = Vec::with_capacity((t - 1) / 2);
    let mut d = 0;
    for runner in twisted.shifted() {
        let (s, c) = runner.normalize();
        d += s.vanished(c);
        quotient.push(s.to_partition());
        charvec.push(c);
        pointed.push(s);
    }
    let weight = quotient.iter().map(Partition::size).sum();
    let cocore = TwistedBarAbacus::from_runners(t, twisted.runner0().clone(), pointed)?.to_partition();
    Ok(BarLittlewood {
        t,
        core: bar_core_from_charvec(t, &charvec),
        quotient,
        charvec,
        weight,
        cocore,
        d,
    })
}

/// The t-bar core with the given characteristic vector.
pub fn bar_core_from_charvec(t: usize, charvec: &[i64]) -> BarPartition {
    let mut parts = Vec::new();
    for (i, &c) in charvec.iter().enumerate() {
        let r = i + 1;
        let base = if c > 0 { r } else { t - r };
        parts.extend((0..c.unsigned_abs() as usize).map(|k| base + t * k));
    }
    BarPartition::from_distinct(parts)
}

pub fn bar_core(lambda: &BarPartition, t: usize) -> Result<BarPartition> {
    Ok(bar_decompose(lambda, t)?.core)
}

pub fn is_bar_core(lambda: &BarPartition, t: usize) -> Result<bool> {
    Ok(bar_decompose(lambda, t)?.is_core())
}

/// The bar-partition with t-bar core `core` and t-bar quotient `quotient`.
pub fn bar_reconstruct(core: &BarPartition, quotient: &[Partition], t: usize) -> Result<BarPartition> {
    let dec = bar_decompose(core, t)?;
    if !dec.is_core() {
        return Err(Error::NotABarCore {
            partition: core.to_string(),
            t,
        });
    }
    let expected = t.div_ceil(2);
    if quotient.len() != expected {
        return Err(Error::QuotientArity {
            expected,
            got: quotient.len(),
        });
    }
    if !quotient[0].is_strict() {
        return Err(Error::NotStrict(quotient[0].parts().to_vec()));
    }
    let runner0: BTreeSet<usize> = quotient[0].parts().iter().copied().collect();
    let shifted = quotient[1..]
        .iter()
        .zip(&dec.charvec)
        .map(|(q, &c)| FencedRunner::from_frobenius(&q.frobenius()).shift(c))
        .collect();
    Ok(TwistedBarAbacus::from_runners(t, runner0, shifted)?.to_partition())
}

/// The t-bar cocore: empty core, same quotient.
pub fn bar_cocore(lambda: &BarPartition, t: usize) -> Result<BarPartition> {
    Ok(bar_decompose(lambda, t)?.cocore)
}

/// Paired parts `(t*x + r, t*x' + (t - r))` of a t-bar cocore, grouped by
/// runner `r` and then by increasing `x`.
pub fn paired_parts(lambda: &BarPartition, t: usize) -> Result<Vec<(usize, usize)>> {
    let dec = bar_decompose(lambda, t)?;
    if !dec.core.is_empty() {
        return Err(Error::NotACocore {
            partition: lambda.to_string(),
            t,
        });
    }
    let mut pairs = Vec::new();
    for (i, q) in dec.quotient[1..].iter().enumerate() {
        let r = i + 1;
        let mut runner: Vec<(usize, usize)> = q
            .frobenius()
            .paired()
            .map(|(x, y)| (t * x + r, t * y + (t - r)))
            .collect();
        runner.reverse();
        pairs.extend(runner);
    }
    Ok(pairs)
}

/// The p-core decomposition of an ordinary partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdinaryLittlewood {
    pub p: usize,
    pub core: Partition,
    /// `p` components, one per runner.
    pub quotient: Vec<Partition>,
    pub charvec: Vec<i64>,
    pub weight: usize,
    pub cocore: Partition,
    /// Only recorded for self-conjugate partitions.
    pub d: Option<usize>,
}

impl OrdinaryLittlewood {
    pub fn is_core(&self) -> bool {
        self.weight == 0
    }
}

/// Runner `i` holds arm `a` above the fence when `a = p*x + i`, and leg `l`
/// below it when `l = p*y + (p - 1 - i)`.
fn ordinary_runners(lambda: &Partition, p: usize) -> Vec<FencedRunner> {
    let f = lambda.frobenius();
    let mut runners = vec![FencedRunner::default(); p];
    for &a in f.arms() {
        runners[a % p].black_above.insert(a / p);
    }
    for &l in f.legs() {
        runners[p - 1 - l % p].white_below.insert(l / p);
    }
    runners
}

fn partition_of_runners(runners: &[FencedRunner]) -> Partition {
    let p = runners.len();
    let mut arms = Vec::new();
    let mut legs = Vec::new();
    for (i, r) in runners.iter().enumerate() {
        arms.extend(r.black_above.iter().map(|x| p * x + i));
        legs.extend(r.white_below.iter().map(|y| p * y + (p - 1 - i)));
    }
    Partition::from_frobenius(&FrobeniusSymbol::new(legs, arms).expect("balanced runners"))
}

pub fn ordinary_decompose(lambda: &Partition, p: usize) -> Result<OrdinaryLittlewood> {
    check_modulus(p)?;
    let runners = ordinary_runners(lambda, p);
    let mut quotient = Vec::with_capacity(p);
    let mut charvec = Vec::with_capacity(p);
    let mut pointed = Vec::with_capacity(p);
    let mut vanished = Vec::with_capacity(p);
    for runner in &runners {
        let (s, c) = runner.normalize();
        vanished.push(s.vanished(c));
        quotient.push(s.to_partition());
        charvec.push(c);
        pointed.push(s);
    }
    let weight = quotient.iter().map(Partition::size).sum();
    let core_runners: Vec<FencedRunner> = charvec.iter().map(|&c| FencedRunner::reference(c)).collect();
    let d = lambda.is_self_conjugate().then(|| vanished[..(p - 1) / 2].iter().sum());
    Ok(OrdinaryLittlewood {
        p,
        core: partition_of_runners(&core_runners),
        quotient,
        charvec,
        weight,
        cocore: partition_of_runners(&pointed),
        d,
    })
}

/// The partition with p-core `core` and p-quotient `quotient`.
pub fn ordinary_reconstruct(core: &Partition, quotient: &[Partition], p: usize) -> Result<Partition> {
    let dec = ordinary_decompose(core, p)?;
    if !dec.is_core() {
        return Err(Error::NotACore {
            partition: core.to_string(),
            t: p,
        });
    }
    if quotient.len() != p {
        return Err(Error::QuotientArity {
            expected: p,
            got: quotient.len(),
        });
    }
    let runners: Vec<FencedRunner> = quotient
        .iter()
        .zip(&dec.charvec)
        .map(|(q, &c)| FencedRunner::from_frobenius(&q.frobenius()).shift(c))
        .collect();
    Ok(partition_of_runners(&runners))
}

pub fn ordinary_cocore(lambda: &Partition, p: usize) -> Result<Partition> {
    Ok(ordinary_decompose(lambda, p)?.cocore)
}

/// Diagonal hook pairs `(2(p*x + i) + 1, 2(p*x' + p - 1 - i) + 1)` of a
/// self-conjugate p-cocore, over runners `i < (p-1)/2`, grouped by runner
/// and then by increasing `x`.
pub fn selfconjugate_paired_hooks(lambda: &Partition, p: usize) -> Result<Vec<(usize, usize)>> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(lambda.to_string()));
    }
    let dec = ordinary_decompose(lambda, p)?;
    if !dec.core.is_empty() {
        return Err(Error::NotACocore {
            partition: lambda.to_string(),
            t: p,
        });
    }
    let mut pairs = Vec::new();
    for (i, q) in dec.quotient[..(p - 1) / 2].iter().enumerate() {
        let mut runner: Vec<(usize, usize)> = q
            .frobenius()
            .paired()
            .map(|(x, y)| (2 * (p * x + i) + 1, 2 * (p * y + p - 1 - i) + 1))
            .collect();
        runner.reverse();
        pairs.extend(runner);
    }
    Ok(pairs)
}
