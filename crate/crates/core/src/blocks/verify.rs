//! Exhaustive verification suites.
//!
//! Each suite walks a fixed, ordered domain in parallel and merges the
//! per-item results in domain order, so reports are reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    core_tau_nonspin, core_tau_spin, equivariance_check, nonspin_block_invariants, nonspin_block_members, nonspin_psi,
    psi, psi_kind, spin_block_invariants, spin_block_members, CrossingPolicy, LabelMap, NonSpinBlockId, PsiKind,
    SpinBlockId,
};
use crate::abacus::{check_modulus, BarAbacus};
use crate::characters::{classify, spin_degree_valuation, tau_label, BlockInvariants, CharLabel, Flavor, Group};
use crate::error::{Error, Result};
use crate::galois::{oracle_tau_sqrt, tau_i, tau_partition, tau_selfconjugate, tau_sqrt, GaloisElement};
use crate::humphreys::{
    block_members, g_block_invariants, g_degree_valuation, g_is_pair, phi, phi_inverse, tau_g, GBlockId, GGroup,
};
use crate::littlewood::{bar_decompose, bar_reconstruct, ordinary_decompose, paired_parts};
use crate::partitions::{enumerate, strict_up_to, BarPartition, Partition, PartitionKind, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Roundtrip,
    Lengths,
    Signs,
    Sizes,
    Pairing,
    Oracle,
    Little,
    Phi,
    Valuation,
    Blocks,
    Census,
    Psi,
    Crossing,
    CrossingFails,
    NonspinTau,
    Durfee,
    NonspinPsi,
}

impl Suite {
    pub const ALL: [Suite; 17] = [
        Suite::Roundtrip,
        Suite::Lengths,
        Suite::Signs,
        Suite::Sizes,
        Suite::Pairing,
        Suite::Oracle,
        Suite::Little,
        Suite::Phi,
        Suite::Valuation,
        Suite::Blocks,
        Suite::Census,
        Suite::Psi,
        Suite::Crossing,
        Suite::CrossingFails,
        Suite::NonspinTau,
        Suite::Durfee,
        Suite::NonspinPsi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Lengths => "lengths",
            Suite::Signs => "signs",
            Suite::Sizes => "sizes",
            Suite::Pairing => "pairing",
            Suite::Oracle => "oracle",
            Suite::Little => "little",
            Suite::Phi => "phi",
            Suite::Valuation => "valuation",
            Suite::Blocks => "blocks",
            Suite::Census => "census",
            Suite::Psi => "psi",
            Suite::Crossing => "crossing",
            Suite::CrossingFails => "crossing_fails",
            Suite::NonspinTau => "nonspin_tau",
            Suite::Durfee => "durfee",
            Suite::NonspinPsi => "nonspin_psi",
        }
    }

    /// Suites whose bound limits the core size rather than `|λ|`.
    pub fn bounds_cores(self) -> bool {
        matches!(
            self,
            Suite::Blocks | Suite::Census | Suite::Psi | Suite::Crossing | Suite::CrossingFails | Suite::NonspinPsi
        )
    }

    fn needs_prime(self) -> bool {
        !matches!(
            self,
            Suite::Roundtrip | Suite::Lengths | Suite::Signs | Suite::Sizes | Suite::Pairing | Suite::Durfee
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// The modulus; a prime for every suite involving Galois action.
    pub p: usize,
    /// Largest `|λ|`, `m` for the oracle, or `|κ|` for block suites.
    pub bound: usize,
    /// Largest weight for block suites.
    pub max_w: usize,
}

impl VerifyOptions {
    pub fn new(p: usize, bound: usize) -> Self {
        VerifyOptions { p, bound, max_w: 3 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub p: usize,
    pub bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_w: Option<usize>,
    pub cases: usize,
    pub violations: Vec<Witness>,
    pub tallies: BTreeMap<String, usize>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, key: &str) -> usize {
        self.tallies.get(key).copied().unwrap_or(0)
    }
}

#[derive(Default)]
struct Partial {
    cases: usize,
    violations: Vec<Witness>,
    tallies: BTreeMap<String, usize>,
}

impl Partial {
    fn case(&mut self) {
        self.cases += 1;
    }

    fn tally(&mut self, key: &str) {
        *self.tallies.entry(key.to_string()).or_default() += 1;
    }

    fn check<T: PartialEq + fmt::Display>(&mut self, input: impl FnOnce() -> String, lhs: T, rhs: T) -> bool {
        if lhs == rhs {
            return true;
        }
        self.violations.push(Witness {
            input: input(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
        false
    }

    fn merge(&mut self, other: Partial) {
        self.cases += other.cases;
        self.violations.extend(other.violations);
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
    }
}

fn fan_out<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Partial> + Sync + Send) -> Result<Partial> {
    let parts: Vec<Partial> = items.par_iter().map(f).collect::<Result<_>>()?;
    let mut total = Partial::default();
    for part in parts {
        total.merge(part);
    }
    Ok(total)
}

/// Runs `suite` exhaustively up to the bound in `opts`.
pub fn verify(suite: Suite, opts: VerifyOptions) -> Result<VerificationReport> {
    if opts.bound == 0 {
        return Err(Error::ZeroBound);
    }
    check_modulus(opts.p)?;
    if suite.needs_prime() {
        GaloisElement::sigma(opts.p as u64)?;
    }
    let mut notes = Vec::new();
    let partial = match suite {
        Suite::Roundtrip => roundtrip(opts)?,
        Suite::Lengths => lengths(opts)?,
        Suite::Signs => signs(opts)?,
        Suite::Sizes => sizes(opts)?,
        Suite::Pairing => pairing(opts)?,
        Suite::Oracle => oracle(opts)?,
        Suite::Little => little(opts)?,
        Suite::Phi => phi_suite(opts)?,
        Suite::Valuation => valuation(opts)?,
        Suite::Blocks => blocks(opts)?,
        Suite::Census => census(opts)?,
        Suite::Psi => psi_suite(opts, Mode::SameSign, &mut notes)?,
        Suite::Crossing => psi_suite(opts, Mode::Crossing, &mut notes)?,
        Suite::CrossingFails => psi_suite(opts, Mode::Reversed, &mut notes)?,
        Suite::NonspinTau => nonspin_tau(opts)?,
        Suite::Durfee => durfee(opts)?,
        Suite::NonspinPsi => nonspin_psi_suite(opts)?,
    };
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        p: opts.p,
        bound: opts.bound,
        max_w: suite.bounds_cores().then_some(opts.max_w),
        cases: partial.cases,
        violations: partial.violations,
        tallies: partial.tallies,
        notes,
    })
}

fn strict(bound: usize) -> Vec<BarPartition> {
    strict_up_to(bound).collect()
}

fn selfconjugate(bound: usize) -> Vec<Partition> {
    (0..=bound)
        .flat_map(|n| enumerate(n, PartitionKind::SelfConjugate))
        .collect()
}

fn generators(p: usize) -> Vec<GaloisElement> {
    GaloisElement::generators(p as u64).expect("prime checked")
}

fn roundtrip(opts: VerifyOptions) -> Result<Partial> {
    let t = opts.p;
    fan_out(&strict(opts.bound), |lambda| {
        let mut out = Partial::default();
        out.case();
        let at = || format!("{lambda} t={t}");
        out.check(
            at,
            &Partition::from_frobenius(&lambda.frobenius()),
            lambda.as_partition(),
        );
        let abacus = BarAbacus::new(lambda, t)?;
        out.check(at, &abacus.to_partition(), lambda);
        let twisted = abacus.twist();
        out.check(at, &twisted.to_partition(), lambda);
        if twisted.untwist() != abacus {
            out.check(at, "untwist", "abacus");
        }
        let dec = bar_decompose(lambda, t)?;
        out.check(at, &bar_reconstruct(&dec.core, &dec.quotient, t)?, lambda);
        let co = bar_decompose(&dec.cocore, t)?;
        out.check(at, co.core.to_string(), String::new());
        if co.quotient != dec.quotient {
            out.check(at, "cocore quotient", "quotient");
        }
        Ok(out)
    })
}

fn lengths(opts: VerifyOptions) -> Result<Partial> {
    fan_out(&strict(opts.bound), |lambda| {
        let mut out = Partial::default();
        out.case();
        let dec = bar_decompose(lambda, opts.p)?;
        let rhs = dec.core.len() as i64 + dec.cocore.len() as i64 - 2 * dec.d as i64;
        out.check(|| format!("{lambda} d={}", dec.d), lambda.len() as i64, rhs);
        Ok(out)
    })
}

fn signs(opts: VerifyOptions) -> Result<Partial> {
    fan_out(&strict(opts.bound), |lambda| {
        let mut out = Partial::default();
        out.case();
        let dec = bar_decompose(lambda, opts.p)?;
        out.check(
            || lambda.to_string(),
            lambda.sign(),
            dec.core.sign() * dec.cocore.sign(),
        );
        Ok(out)
    })
}

fn sizes(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    fan_out(&strict(opts.bound), |lambda| {
        let mut out = Partial::default();
        out.case();
        let dec = bar_decompose(lambda, p)?;
        out.check(|| lambda.to_string(), lambda.size(), dec.core.size() + p * dec.weight);
        out.check(|| format!("cocore of {lambda}"), dec.cocore.size(), p * dec.weight);
        Ok(out)
    })
}

fn pairing(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    fan_out(&strict(opts.bound), |lambda| {
        let mut out = Partial::default();
        if !bar_decompose(lambda, p)?.core.is_empty() {
            return Ok(out);
        }
        out.case();
        let pairs = paired_parts(lambda, p)?;
        let mut covered: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        covered.sort_unstable_by(|a, b| b.cmp(a));
        let expected: Vec<usize> = lambda.parts().iter().copied().filter(|x| x % p != 0).collect();
        out.check(|| lambda.to_string(), format!("{covered:?}"), format!("{expected:?}"));
        for (a, b) in pairs {
            out.check(|| format!("{lambda}: ({a}, {b})"), (a + b) % p, 0);
        }
        Ok(out)
    })
}

fn oracle(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p as u64;
    let ms: Vec<u64> = (1..=opts.bound as u64).collect();
    fan_out(&ms, |&m| {
        let mut out = Partial::default();
        for e in 0..3 {
            for s in 1..p {
                out.case();
                let f = GaloisElement::new(p, e, s)?;
                out.check(
                    || format!("m={m} f={f}"),
                    tau_sqrt(m as u128, f),
                    oracle_tau_sqrt(m, f)?,
                );
            }
        }
        Ok(out)
    })
}

fn little(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    let gens = generators(p);
    fan_out(&strict(opts.bound), |lambda| {
        let mut out = Partial::default();
        let dec = bar_decompose(lambda, p)?;
        let both_negative = dec.core.sign() == Sign::Minus && dec.cocore.sign() == Sign::Minus;
        for &f in &gens {
            out.case();
            let product = tau_partition(&dec.core, f) * tau_partition(&dec.cocore, f);
            let rhs = if f.e == 0 {
                out.tally("case_iii");
                product
            } else if both_negative {
                out.tally("case_ii");
                tau_i(f) * product
            } else {
                out.tally("case_i");
                product
            };
            out.check(|| format!("{lambda} f={f}"), tau_partition(lambda, f), rhs);
        }
        Ok(out)
    })
}

fn phi_suite(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    let gens = generators(p);
    fan_out(&strict(opts.bound), |lambda| {
        let mut out = Partial::default();
        for group in [Group::Stilde, Group::Atilde] {
            for label in classify(lambda, group, Flavor::Spin)? {
                out.case();
                let image = phi(&label, p)?;
                out.check(|| format!("{label} on {group:?}"), &phi_inverse(&image, p)?, &label);
                out.check(
                    || format!("splitting of {label} on {group:?}"),
                    g_is_pair(&image.mu, &image.nu, image.group),
                    label.variant.is_pair(),
                );
                for &f in &gens {
                    out.check(
                        || format!("{label} on {group:?} f={f}"),
                        tau_label(&label, f)?,
                        tau_g(&image, f),
                    );
                }
            }
        }
        Ok(out)
    })
}

fn valuation(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    fan_out(&strict(opts.bound), |lambda| {
        let mut out = Partial::default();
        let dec = bar_decompose(lambda, p)?;
        if dec.core.size() >= p {
            out.tally("core_too_large");
            return Ok(out);
        }
        out.case();
        let label = classify(lambda, Group::Stilde, Flavor::Spin)?.remove(0);
        let image = phi(&label, p)?;
        out.check(
            || lambda.to_string(),
            spin_degree_valuation(lambda, p),
            g_degree_valuation(&image, p),
        );
        Ok(out)
    })
}

fn bar_cores(bound: usize, p: usize) -> Result<Vec<BarPartition>> {
    let mut out = Vec::new();
    for kappa in strict_up_to(bound) {
        if bar_decompose(&kappa, p)?.is_core() {
            out.push(kappa);
        }
    }
    Ok(out)
}

fn compare_heights<A: Ord + fmt::Display, B: Ord + fmt::Display>(
    out: &mut Partial,
    pairs: &[(A, B)],
    source: &BlockInvariants<A>,
    target: &BlockInvariants<B>,
    context: &str,
) {
    out.check(|| format!("defect {context}"), source.defect, target.defect);
    for (a, b) in pairs {
        out.check(
            || format!("height {a} -> {b} {context}"),
            source.height(a).map_or(-1, |h| h as i64),
            target.height(b).map_or(-1, |h| h as i64),
        );
    }
}

fn blocks(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    let gens = generators(p);
    let mut items = Vec::new();
    for kappa in bar_cores(opts.bound, p)? {
        for w in 1..=opts.max_w {
            for group in [Group::Stilde, Group::Atilde] {
                items.push((kappa.clone(), w, group));
            }
        }
    }
    fan_out(&items, |(kappa, w, group)| {
        let mut out = Partial::default();
        out.case();
        let (kappa, w, group) = (kappa.clone(), *w, *group);
        let ctx = format!("({kappa}) w={w} {group:?}");
        let spin = SpinBlockId {
            kappa: kappa.clone(),
            w,
            group,
            p,
        };
        let gid = GBlockId {
            kappa,
            w,
            group: GGroup::from_group(group),
            p,
        };
        let members = spin_block_members(&spin)?;
        let targets = block_members(&gid)?;
        let mut pairs = Vec::with_capacity(members.len());
        for label in &members {
            let image = phi(label, p)?;
            for &f in &gens {
                out.check(
                    || format!("{label} f={f} {ctx}"),
                    tau_label(label, f)?,
                    tau_g(&image, f),
                );
            }
            pairs.push((label.clone(), image));
        }
        let mut images: Vec<_> = pairs.iter().map(|(_, b)| b.clone()).collect();
        images.sort();
        if images != targets {
            out.check(
                || format!("image of {ctx}"),
                images.len() as i64,
                -(targets.len() as i64),
            );
        }
        compare_heights(
            &mut out,
            &pairs,
            &spin_block_invariants(&spin)?,
            &g_block_invariants(&gid)?,
            &ctx,
        );
        let principal = GBlockId {
            kappa: BarPartition::empty(),
            ..gid.clone()
        };
        out.check(
            || format!("defect against the principal block {ctx}"),
            g_block_invariants(&gid)?.defect,
            g_block_invariants(&principal)?.defect,
        );
        let spin_principal = SpinBlockId {
            kappa: BarPartition::empty(),
            ..spin.clone()
        };
        out.check(
            || format!("spin defect against the principal block {ctx}"),
            spin_block_invariants(&spin)?.defect,
            spin_block_invariants(&spin_principal)?.defect,
        );
        *out.tallies.entry("labels".into()).or_default() += members.len();
        Ok(out)
    })
}

fn census(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    fan_out(&bar_cores(opts.bound, p)?, |kappa| {
        let mut out = Partial::default();
        out.case();
        let (big, small) = if kappa.sign() == Sign::Plus {
            (p, (p + 3) / 2)
        } else {
            ((p + 3) / 2, p)
        };
        for (group, expected) in [(Group::Stilde, big), (Group::Atilde, small)] {
            let gid = GBlockId {
                kappa: kappa.clone(),
                w: 1,
                group: GGroup::from_group(group),
                p,
            };
            out.check(
                || format!("|{:?}| for ({kappa})", gid.group),
                block_members(&gid)?.len(),
                expected,
            );
            let spin = SpinBlockId {
                kappa: kappa.clone(),
                w: 1,
                group,
                p,
            };
            out.check(
                || format!("|{group:?}| for ({kappa})"),
                spin_block_members(&spin)?.len(),
                expected,
            );
        }
        Ok(out)
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    SameSign,
    Crossing,
    Reversed,
}

fn check_map<S: Serialize, T: Serialize>(
    out: &mut Partial,
    map: &LabelMap<S, T>,
    targets: &[CharLabel],
    source_inv: &BlockInvariants<CharLabel>,
    target_inv: &BlockInvariants<CharLabel>,
    gens: &[GaloisElement],
    ctx: &str,
) -> Result<Vec<Witness>> {
    let mut images: Vec<_> = map.pairs.iter().map(|(_, b)| b.clone()).collect();
    images.sort();
    images.dedup();
    if images != targets {
        out.check(
            || format!("image of {ctx}"),
            images.len() as i64,
            -(targets.len() as i64),
        );
    }
    compare_heights(out, &map.pairs, source_inv, target_inv, ctx);
    equivariance_check(map, gens)
}

fn psi_suite(opts: VerifyOptions, mode: Mode, notes: &mut Vec<String>) -> Result<Partial> {
    let p = opts.p;
    let gens = generators(p);
    let sigma = GaloisElement::sigma(p as u64)?;
    let cores = bar_cores(opts.bound, p)?;
    let mut items = Vec::new();
    for kappa in &cores {
        for target in &cores {
            if core_tau_spin(kappa, p)? != core_tau_spin(target, p)? {
                continue;
            }
            for group in [Group::Stilde, Group::Atilde] {
                let kind = psi_kind(kappa, target, group);
                let wanted = match mode {
                    Mode::SameSign => kind == PsiKind::SameSign,
                    Mode::Crossing => kind == PsiKind::Crossing,
                    Mode::Reversed => kind == PsiKind::ReversedCrossing && group == Group::Stilde,
                };
                if wanted {
                    for w in 1..=opts.max_w {
                        items.push((kappa.clone(), target.clone(), w, group));
                    }
                }
            }
        }
    }
    if mode == Mode::Reversed {
        notes.push(format!("tau(i, sigma_{p}) = {}", tau_i(sigma)));
    }
    let policy = match mode {
        Mode::Reversed => CrossingPolicy::AllowReversed,
        _ => CrossingPolicy::Standard,
    };
    fan_out(&items, |(kappa, target, w, group)| {
        let mut out = Partial::default();
        out.case();
        let source = SpinBlockId {
            kappa: kappa.clone(),
            w: *w,
            group: *group,
            p,
        };
        let ctx = format!("({kappa}) -> ({target}) w={w} {group:?}");
        let map = psi(&source, target, policy)?;
        out.tally(&format!("maps_{group:?}").to_lowercase());
        let tid = &map.map.target;
        let bad = check_map(
            &mut out,
            &map.map,
            &spin_block_members(tid)?,
            &spin_block_invariants(&source)?,
            &spin_block_invariants(tid)?,
            &gens,
            &ctx,
        )?;
        let structural = out.violations.len();
        for (label, image) in &map.map.pairs {
            let cocore = bar_decompose(&image.partition.to_bar()?, p)?.cocore;
            let at_both_negative = target.sign() == Sign::Minus && cocore.sign() == Sign::Minus;
            for &f in &gens {
                if tau_label(label, f)? != tau_label(image, f)? {
                    out.tally(if at_both_negative {
                        "violations_at_both_negative"
                    } else {
                        "violations_elsewhere"
                    });
                }
            }
        }
        out.violations.extend(bad);
        for _ in 0..structural {
            out.tally("violations_elsewhere");
        }
        let back = psi(tid, kappa, policy)?;
        let back: BTreeMap<_, _> = back.map.pairs.into_iter().collect();
        for (a, b) in &map.map.pairs {
            out.check(|| format!("inverse at {b} {ctx}"), back.get(b).unwrap_or(b), a);
        }
        Ok(out)
    })
}

fn nonspin_tau(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    let gens = generators(p);
    fan_out(&selfconjugate(opts.bound), |lambda| {
        let mut out = Partial::default();
        let dec = ordinary_decompose(lambda, p)?;
        let parts_ok = dec.core.is_self_conjugate() && dec.cocore.is_self_conjugate();
        if !out.check(|| format!("{lambda}: core and cocore self-conjugate"), parts_ok, true) {
            return Ok(out);
        }
        for &f in &gens {
            out.case();
            let rhs = tau_selfconjugate(&dec.core, f)? * tau_selfconjugate(&dec.cocore, f)?;
            out.check(|| format!("{lambda} f={f}"), tau_selfconjugate(lambda, f)?, rhs);
        }
        Ok(out)
    })
}

fn durfee(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    fan_out(&selfconjugate(opts.bound), |lambda| {
        let mut out = Partial::default();
        out.case();
        let dec = ordinary_decompose(lambda, p)?;
        let d = dec.d.expect("self-conjugate partitions record d");
        let rhs = dec.core.durfee() as i64 + dec.cocore.durfee() as i64 - 2 * d as i64;
        out.check(|| format!("{lambda} d={d}"), lambda.durfee() as i64, rhs);
        Ok(out)
    })
}

fn nonspin_psi_suite(opts: VerifyOptions) -> Result<Partial> {
    let p = opts.p;
    let gens = generators(p);
    let mut cores = Vec::new();
    for kappa in selfconjugate(opts.bound) {
        if ordinary_decompose(&kappa, p)?.is_core() {
            cores.push(kappa);
        }
    }
    let mut items = Vec::new();
    for kappa in &cores {
        for target in &cores {
            if core_tau_nonspin(kappa, p)? == core_tau_nonspin(target, p)? {
                for w in 1..=opts.max_w {
                    items.push((kappa.clone(), target.clone(), w));
                }
            }
        }
    }
    fan_out(&items, |(kappa, target, w)| {
        let mut out = Partial::default();
        out.case();
        let source = NonSpinBlockId {
            kappa: kappa.clone(),
            w: *w,
            p,
        };
        let ctx = format!("({kappa}) -> ({target}) w={w}");
        let map = nonspin_psi(&source, target)?;
        let bad = check_map(
            &mut out,
            &map,
            &nonspin_block_members(&map.target)?,
            &nonspin_block_invariants(&source)?,
            &nonspin_block_invariants(&map.target)?,
            &gens,
            &ctx,
        )?;
        out.violations.extend(bad);
        Ok(out)
    })
}
