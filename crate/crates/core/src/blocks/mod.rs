//! Spin blocks of `S̃_n` and `Ã_n`, non-spin blocks of `A_n` with
//! self-conjugate cores, and the core-replacing maps `Ψ` between blocks of
//! equal weight.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::characters::{classify, label_heights, tau_label, BlockInvariants, CharLabel, Flavor, Group};
use crate::error::{Error, Result};
use crate::galois::{tau_partition, tau_selfconjugate, GaloisElement};
use crate::littlewood::{bar_decompose, bar_reconstruct, is_bar_core, ordinary_decompose, ordinary_reconstruct};
use crate::partitions::{enumerate, enumerate_strict, BarPartition, Partition, PartitionKind, Sign};

pub mod verify;

pub use verify::{verify, Suite, VerificationReport, VerifyOptions, Witness};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SpinBlockId {
    pub kappa: BarPartition,
    pub w: usize,
    pub group: Group,
    pub p: usize,
}

impl SpinBlockId {
    pub fn n(&self) -> usize {
        self.kappa.size() + self.p * self.w
    }
}

fn check_bar_core(kappa: &BarPartition, p: usize) -> Result<()> {
    if !is_bar_core(kappa, p)? {
        return Err(Error::NotABarCore {
            partition: kappa.to_string(),
            t: p,
        });
    }
    Ok(())
}

/// Labels of the strict partitions of `|κ| + pw` with p-bar core `κ`, sorted.
pub fn spin_block_members(id: &SpinBlockId) -> Result<Vec<CharLabel>> {
    check_bar_core(&id.kappa, id.p)?;
    let mut out = Vec::new();
    for lambda in enumerate_strict(id.n()) {
        if bar_decompose(&lambda, id.p)?.core == id.kappa {
            out.extend(classify(&lambda, id.group, Flavor::Spin)?);
        }
    }
    out.sort();
    Ok(out)
}

pub fn spin_block_invariants(id: &SpinBlockId) -> Result<BlockInvariants<CharLabel>> {
    label_heights(&spin_block_members(id)?, id.n(), id.p)
}

/// Every spin block of `group` at `n`, keyed by core, with its members.
pub fn spin_blocks(n: usize, p: usize, group: Group) -> Result<Vec<(SpinBlockId, Vec<CharLabel>)>> {
    let mut by_core: BTreeMap<BarPartition, Vec<CharLabel>> = BTreeMap::new();
    for lambda in enumerate_strict(n) {
        let core = bar_decompose(&lambda, p)?.core;
        by_core
            .entry(core)
            .or_default()
            .extend(classify(&lambda, group, Flavor::Spin)?);
    }
    Ok(by_core
        .into_iter()
        .map(|(kappa, mut members)| {
            members.sort();
            let w = (n - kappa.size()) / p;
            (SpinBlockId { kappa, w, group, p }, members)
        })
        .collect())
}

/// Which of the maps `Ψ` a pair of cores and a source group determine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PsiKind {
    /// `sgn κ = sgn κ'`; the group is kept.
    SameSign,
    /// `B̃_{κ,w} → b̃_{κ',w}` with `sgn κ = -1`, `sgn κ' = 1`, or its inverse.
    Crossing,
    /// `B̃_{κ,w} → b̃_{κ',w}` with `sgn κ = 1`, `sgn κ' = -1`, or its inverse.
    ReversedCrossing,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CrossingPolicy {
    #[default]
    Standard,
    AllowReversed,
}

pub fn psi_kind(kappa: &BarPartition, target_core: &BarPartition, group: Group) -> PsiKind {
    if kappa.sign() == target_core.sign() {
        return PsiKind::SameSign;
    }
    let forward = group == Group::Stilde && kappa.sign() == Sign::Minus;
    let backward = group == Group::Atilde && kappa.sign() == Sign::Plus;
    if forward || backward {
        PsiKind::Crossing
    } else {
        PsiKind::ReversedCrossing
    }
}

/// A label bijection between two blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelMap<S, T = S> {
    pub source: S,
    pub target: T,
    /// `(label, image)`, sorted by label.
    pub pairs: Vec<(CharLabel, CharLabel)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinPsi {
    pub kind: PsiKind,
    #[serde(flatten)]
    pub map: LabelMap<SpinBlockId>,
}

fn image_label(source: &CharLabel, image: Partition, group: Group, flavor: Flavor) -> Result<CharLabel> {
    let labels = classify(&image, group, flavor)?;
    let pair = labels.len() == 2;
    if pair != source.variant.is_pair() {
        return Err(Error::UnsupportedBlockMap(format!(
            "{source} and its image {image} disagree on splitting"
        )));
    }
    Ok(labels
        .into_iter()
        .find(|l| l.variant == source.variant)
        .expect("variant present"))
}

/// `λ ↦` the partition with core `target_core` and the quotient of `λ`.
pub fn psi(source: &SpinBlockId, target_core: &BarPartition, policy: CrossingPolicy) -> Result<SpinPsi> {
    let p = source.p;
    check_bar_core(target_core, p)?;
    let kind = psi_kind(&source.kappa, target_core, source.group);
    if kind == PsiKind::ReversedCrossing && policy != CrossingPolicy::AllowReversed {
        return Err(Error::UnsupportedBlockMap(format!(
            "({}) -> ({}) on {:?} is a reversed crossing",
            source.kappa, target_core, source.group
        )));
    }
    let group = match (kind, source.group) {
        (PsiKind::SameSign, g) => g,
        (_, Group::Stilde) => Group::Atilde,
        (_, Group::Atilde) => Group::Stilde,
    };
    let target = SpinBlockId {
        kappa: target_core.clone(),
        w: source.w,
        group,
        p,
    };
    let mut pairs = Vec::new();
    for label in spin_block_members(source)? {
        let lambda = label.partition.to_bar()?;
        let dec = bar_decompose(&lambda, p)?;
        let image = bar_reconstruct(target_core, &dec.quotient, p)?;
        let image = image_label(&label, image.into_partition(), group, Flavor::Spin)?;
        pairs.push((label, image));
    }
    Ok(SpinPsi {
        kind,
        map: LabelMap {
            source: source.clone(),
            target,
            pairs,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NonSpinBlockId {
    pub kappa: Partition,
    pub w: usize,
    pub p: usize,
}

impl NonSpinBlockId {
    pub fn n(&self) -> usize {
        self.kappa.size() + self.p * self.w
    }
}

fn check_selfconjugate_core(kappa: &Partition, p: usize) -> Result<()> {
    if !kappa.is_self_conjugate() || !ordinary_decompose(kappa, p)?.is_core() {
        return Err(Error::NotASelfConjugateCore {
            partition: kappa.to_string(),
            t: p,
        });
    }
    Ok(())
}

/// Non-spin labels of `A_n` whose partitions have p-core `κ`, sorted.
pub fn nonspin_block_members(id: &NonSpinBlockId) -> Result<Vec<CharLabel>> {
    check_selfconjugate_core(&id.kappa, id.p)?;
    let mut out = Vec::new();
    for lambda in enumerate(id.n(), PartitionKind::All) {
        if lambda < lambda.conjugate() {
            continue;
        }
        if ordinary_decompose(&lambda, id.p)?.core == id.kappa {
            out.extend(classify(&lambda, Group::Atilde, Flavor::Nonspin)?);
        }
    }
    out.sort();
    Ok(out)
}

pub fn nonspin_block_invariants(id: &NonSpinBlockId) -> Result<BlockInvariants<CharLabel>> {
    label_heights(&nonspin_block_members(id)?, id.n(), id.p)
}

/// Core replacement on non-spin labels of `A_n`.
pub fn nonspin_psi(source: &NonSpinBlockId, target_core: &Partition) -> Result<LabelMap<NonSpinBlockId>> {
    let p = source.p;
    check_selfconjugate_core(target_core, p)?;
    let target = NonSpinBlockId {
        kappa: target_core.clone(),
        w: source.w,
        p,
    };
    let mut pairs = Vec::new();
    for label in nonspin_block_members(source)? {
        let dec = ordinary_decompose(&label.partition, p)?;
        let image = ordinary_reconstruct(target_core, &dec.quotient, p)?;
        let image = image_label(&label, image, Group::Atilde, Flavor::Nonspin)?;
        pairs.push((label, image));
    }
    Ok(LabelMap {
        source: source.clone(),
        target,
        pairs,
    })
}

/// `τ(κ, σ_p)` of a core: spin for bar-partitions, non-spin otherwise.
pub fn core_tau_spin(kappa: &BarPartition, p: usize) -> Result<Sign> {
    Ok(tau_partition(kappa, GaloisElement::sigma(p as u64)?))
}

pub fn core_tau_nonspin(kappa: &Partition, p: usize) -> Result<Sign> {
    tau_selfconjugate(kappa, GaloisElement::sigma(p as u64)?)
}

/// Compares `τ` on each label and its image for every `f` in `gens`.
pub fn equivariance_check<S: Serialize, T: Serialize>(
    map: &LabelMap<S, T>,
    gens: &[GaloisElement],
) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    for (label, image) in &map.pairs {
        for &f in gens {
            let lhs = tau_label(label, f)?;
            let rhs = tau_label(image, f)?;
            if lhs != rhs {
                out.push(Witness {
                    input: format!("{label} -> {image} under {f}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    Ok(out)
}
