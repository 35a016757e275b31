//! Labels of the twisted product `G = S̃_r ×̂ S̃_pw` and its index-two
//! subgroup `G⁺`, their blocks `B_{κ,w}`, `b_{κ,w}`, and the label map `Φ`
//! from spin characters of `S̃_n`, `Ã_n`.
//!
//! Only labels, signs and valuations are modelled. Group elements, the
//! representation matrices of the factors and the grading functions used
//! to build the product are not.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::characters::{
    height_and_defect, nu_p_factorial, spin_degree_valuation, variants, BlockInvariants, CharLabel, Flavor, Group,
    Variant,
};
use crate::error::{Error, Result};
use crate::galois::{tau_i, tau_partition, GaloisElement};
use crate::littlewood::{bar_decompose, bar_reconstruct, is_bar_core};
use crate::partitions::{enumerate_strict, BarPartition, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GGroup {
    G,
    Gplus,
}

impl GGroup {
    /// `S̃_n` corresponds to `G`, `Ã_n` to `G⁺`.
    pub fn from_group(group: Group) -> GGroup {
        match group {
            Group::Stilde => GGroup::G,
            Group::Atilde => GGroup::Gplus,
        }
    }

    pub fn to_group(self) -> Group {
        match self {
            GGroup::G => Group::Stilde,
            GGroup::Gplus => Group::Atilde,
        }
    }
}

/// The character `ζ_{μ,ν}` (or `ζ^±_{μ,ν}`) of `G` or `G⁺`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GCharLabel {
    pub mu: BarPartition,
    pub nu: BarPartition,
    pub group: GGroup,
    pub variant: Variant,
}

impl fmt::Display for GCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |l: &BarPartition| if l.is_empty() { "∅".to_string() } else { l.to_string() };
        write!(f, "({}; {}){}", show(&self.mu), show(&self.nu), self.variant.suffix())
    }
}

/// Whether `ζ_{μ,ν}` is an associate pair on `group`.
pub fn g_is_pair(mu: &BarPartition, nu: &BarPartition, group: GGroup) -> bool {
    let mixed = mu.sign() != nu.sign();
    match group {
        GGroup::G => mixed,
        GGroup::Gplus => !mixed,
    }
}

pub fn classify_g(mu: &BarPartition, nu: &BarPartition, group: GGroup) -> Vec<GCharLabel> {
    variants(g_is_pair(mu, nu, group))
        .iter()
        .map(|&variant| GCharLabel {
            mu: mu.clone(),
            nu: nu.clone(),
            group,
            variant,
        })
        .collect()
}

/// The sign by which `f` acts on a pair label; whole labels are fixed.
pub fn tau_g(label: &GCharLabel, f: GaloisElement) -> Sign {
    if !label.variant.is_pair() {
        return Sign::Plus;
    }
    let product = tau_partition(&label.mu, f) * tau_partition(&label.nu, f);
    if label.mu.sign() == Sign::Minus && label.nu.sign() == Sign::Minus {
        tau_i(f) * product
    } else {
        product
    }
}

/// `ν_p` of the degree of `ζ_{μ,ν}`.
pub fn g_degree_valuation(label: &GCharLabel, p: usize) -> usize {
    spin_degree_valuation(&label.mu, p) + spin_degree_valuation(&label.nu, p)
}

/// `ℬ_w`: bar-partitions of `pw` with empty p-bar core.
pub fn cocores(w: usize, p: usize) -> Result<Vec<BarPartition>> {
    let mut out = Vec::new();
    for lambda in enumerate_strict(p * w) {
        if bar_decompose(&lambda, p)?.core.is_empty() {
            out.push(lambda);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GBlockId {
    pub kappa: BarPartition,
    pub w: usize,
    pub group: GGroup,
    pub p: usize,
}

impl GBlockId {
    /// `ν_p(|G|) = ν_p(r!) + ν_p((pw)!)`.
    pub fn group_valuation(&self) -> usize {
        nu_p_factorial(self.kappa.size(), self.p) + nu_p_factorial(self.p * self.w, self.p)
    }
}

fn check_core(kappa: &BarPartition, p: usize) -> Result<()> {
    if !is_bar_core(kappa, p)? {
        return Err(Error::NotABarCore {
            partition: kappa.to_string(),
            t: p,
        });
    }
    Ok(())
}

/// `{ζ_{κ,μ} : μ ∈ ℬ_w}`, sorted.
pub fn block_members(id: &GBlockId) -> Result<Vec<GCharLabel>> {
    check_core(&id.kappa, id.p)?;
    let mut out: Vec<GCharLabel> = cocores(id.w, id.p)?
        .iter()
        .flat_map(|mu| classify_g(&id.kappa, mu, id.group))
        .collect();
    out.sort();
    Ok(out)
}

pub fn g_block_invariants(id: &GBlockId) -> Result<BlockInvariants<GCharLabel>> {
    let valuations: Vec<(GCharLabel, usize)> = block_members(id)?
        .into_iter()
        .map(|l| {
            let v = g_degree_valuation(&l, id.p);
            (l, v)
        })
        .collect();
    height_and_defect(&valuations, id.group_valuation())
}

/// `ξ_λ ↦ ζ_{core, cocore}`, keeping the variant.
pub fn phi(label: &CharLabel, p: usize) -> Result<GCharLabel> {
    if label.flavor != Flavor::Spin {
        return Err(Error::SpinNeedsStrict(label.partition.to_string()));
    }
    let lambda = label.partition.to_bar()?;
    let dec = bar_decompose(&lambda, p)?;
    let group = GGroup::from_group(label.group);
    debug_assert_eq!(
        g_is_pair(&dec.core, &dec.cocore, group),
        label.variant.is_pair(),
        "sign is multiplicative over core and cocore"
    );
    Ok(GCharLabel {
        mu: dec.core,
        nu: dec.cocore,
        group,
        variant: label.variant,
    })
}

/// The spin label whose core and cocore are `μ` and `ν`.
pub fn phi_inverse(label: &GCharLabel, p: usize) -> Result<CharLabel> {
    check_core(&label.mu, p)?;
    let dec = bar_decompose(&label.nu, p)?;
    if !dec.core.is_empty() {
        return Err(Error::NotACocore {
            partition: label.nu.to_string(),
            t: p,
        });
    }
    let lambda = bar_reconstruct(&label.mu, &dec.quotient, p)?;
    Ok(CharLabel {
        partition: lambda.into_partition(),
        group: label.group.to_group(),
        flavor: Flavor::Spin,
        variant: label.variant,
    })
}
