//! Fenced runners, t-bar abaci and twisted t-bar abaci.
//!
//! A fenced runner has slots `0, 1, 2, ...` above the fence and slots
//! `0, 1, 2, ...` below it, slot 0 on each side touching the fence. Its
//! default state has white beads above and black beads below; a runner is
//! stored as the finite sets of black slots above and white slots below.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{BarPartition, FrobeniusSymbol, Partition};

/// Checks that `t` is an odd modulus of at least 3.
pub fn check_modulus(t: usize) -> Result<()> {
    if t < 3 || t.is_multiple_of(2) {
        Err(Error::InvalidModulus(t))
    } else {
        Ok(())
    }
}

/// A runner with a fence, recorded by its departures from the default state.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FencedRunner {
    #[serde(rename = "above")]
    pub black_above: BTreeSet<usize>,
    #[serde(rename = "below")]
    pub white_below: BTreeSet<usize>,
}

impl FencedRunner {
    pub fn new(black_above: impl IntoIterator<Item = usize>, white_below: impl IntoIterator<Item = usize>) -> Self {
        FencedRunner {
            black_above: black_above.into_iter().collect(),
            white_below: white_below.into_iter().collect(),
        }
    }

    /// The pointed runner of a partition: arms above, legs below.
    pub fn from_frobenius(symbol: &FrobeniusSymbol) -> Self {
        FencedRunner::new(symbol.arms().iter().copied(), symbol.legs().iter().copied())
    }

    /// The partition of a pointed runner.
    ///
    /// Panics if the runner is not pointed.
    pub fn to_partition(&self) -> Partition {
        let symbol = FrobeniusSymbol::new(
            self.white_below.iter().copied().collect(),
            self.black_above.iter().copied().collect(),
        )
        .expect("pointed runner");
        Partition::from_frobenius(&symbol)
    }

    /// Reference runner: `m` black beads above the fence if `m > 0`,
    /// `|m|` white beads below it if `m < 0`.
    pub fn reference(m: i64) -> Self {
        let k = m.unsigned_abs() as usize;
        if m >= 0 {
            FencedRunner::new(0..k, [])
        } else {
            FencedRunner::new([], 0..k)
        }
    }

    /// `#black above - #white below`.
    pub fn charge(&self) -> i64 {
        self.black_above.len() as i64 - self.white_below.len() as i64
    }

    pub fn is_pointed(&self) -> bool {
        self.charge() == 0
    }

    pub fn is_default(&self) -> bool {
        self.black_above.is_empty() && self.white_below.is_empty()
    }

    /// Number of beads differing from the default state.
    pub fn bead_count(&self) -> usize {
        self.black_above.len() + self.white_below.len()
    }

    /// Moves every bead one slot down; above-slot 0 crosses to below-slot 0.
    pub fn push_down(&self) -> Self {
        let black_above = self.black_above.iter().filter(|&&k| k > 0).map(|k| k - 1).collect();
        let mut white_below: BTreeSet<usize> = self.white_below.iter().map(|j| j + 1).collect();
        if !self.black_above.contains(&0) {
            white_below.insert(0);
        }
        FencedRunner {
            black_above,
            white_below,
        }
    }

    /// Moves every bead one slot up; below-slot 0 crosses to above-slot 0.
    pub fn pull_up(&self) -> Self {
        let mut black_above: BTreeSet<usize> = self.black_above.iter().map(|k| k + 1).collect();
        if !self.white_below.contains(&0) {
            black_above.insert(0);
        }
        let white_below = self.white_below.iter().filter(|&&j| j > 0).map(|j| j - 1).collect();
        FencedRunner {
            black_above,
            white_below,
        }
    }

    /// Pulls up `k` times if `k > 0`, pushes down `|k|` times if `k < 0`.
    pub fn shift(&self, k: i64) -> Self {
        let mut r = self.clone();
        for _ in 0..k.unsigned_abs() {
            r = if k > 0 { r.pull_up() } else { r.push_down() };
        }
        r
    }

    /// The pointed runner reached by vertical shifting, and the charge.
    /// `pointed.shift(c)` recovers `self`.
    pub fn normalize(&self) -> (FencedRunner, i64) {
        let c = self.charge();
        (self.shift(-c), c)
    }

    /// Number of beads of this pointed runner that annihilate at the fence
    /// when it is shifted by `c` (pulled up if `c > 0`, pushed down if
    /// `c < 0`).
    pub fn vanished(&self, c: i64) -> usize {
        let k = c.unsigned_abs() as usize;
        let side = if c > 0 { &self.white_below } else { &self.black_above };
        side.range(..k).count()
    }
}

/// The t-bar abacus: runner `r` holds slot `x` for each part `t*x + r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BarAbacus {
    t: usize,
    runners: Vec<BTreeSet<usize>>,
}

impl BarAbacus {
    pub fn new(lambda: &BarPartition, t: usize) -> Result<Self> {
        check_modulus(t)?;
        let mut runners = vec![BTreeSet::new(); t];
        for &part in lambda.parts() {
            runners[part % t].insert(part / t);
        }
        Ok(BarAbacus { t, runners })
    }

    /// Builds an abacus from explicit runners, rejecting slot 0 on runner 0.
    pub fn from_runners(t: usize, runners: Vec<BTreeSet<usize>>) -> Result<Self> {
        check_modulus(t)?;
        if runners.len() != t {
            return Err(Error::QuotientArity {
                expected: t,
                got: runners.len(),
            });
        }
        if runners[0].contains(&0) {
            return Err(Error::NotStrict(vec![0]));
        }
        Ok(BarAbacus { t, runners })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn runners(&self) -> &[BTreeSet<usize>] {
        &self.runners
    }

    pub fn to_partition(&self) -> BarPartition {
        let parts = self
            .runners
            .iter()
            .enumerate()
            .flat_map(|(r, slots)| slots.iter().map(move |x| self.t * x + r))
            .collect();
        BarPartition::from_distinct(parts)
    }

    pub fn twist(&self) -> TwistedBarAbacus {
        let t = self.t;
        let shifted = (1..=(t - 1) / 2)
            .map(|r| FencedRunner {
                black_above: self.runners[r].clone(),
                white_below: self.runners[t - r].clone(),
            })
            .collect();
        TwistedBarAbacus {
            t,
            runner0: self.runners[0].clone(),
            shifted,
        }
    }

    pub fn render(&self) -> String {
        let height = self
            .runners
            .iter()
            .filter_map(|s| s.last())
            .max()
            .map_or(0, |m| m + 1)
            .max(2);
        let w = digits(self.t - 1);
        let mut out = String::new();
        for row in (0..height).rev() {
            let cells: Vec<String> = self
                .runners
                .iter()
                .map(|s| format!("{:>w$}", if s.contains(&row) { "●" } else { "○" }))
                .collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out.push_str(&label_row(0..self.t, w));
        out
    }
}

/// Runner 0 of the t-bar abacus, and for `r = 1..=(t-1)/2` a fenced runner
/// holding runner `r` above the fence and runner `t - r`, colors reversed,
/// below it. `shifted[r - 1]` is the runner for residue `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistedBarAbacus {
    t: usize,
    runner0: BTreeSet<usize>,
    shifted: Vec<FencedRunner>,
}

impl TwistedBarAbacus {
    pub fn new(lambda: &BarPartition, t: usize) -> Result<Self> {
        Ok(BarAbacus::new(lambda, t)?.twist())
    }

    pub fn from_runners(t: usize, runner0: BTreeSet<usize>, shifted: Vec<FencedRunner>) -> Result<Self> {
        check_modulus(t)?;
        if shifted.len() != (t - 1) / 2 {
            return Err(Error::QuotientArity {
                expected: (t - 1) / 2,
                got: shifted.len(),
            });
        }
        if runner0.contains(&0) {
            return Err(Error::NotStrict(vec![0]));
        }
        Ok(TwistedBarAbacus { t, runner0, shifted })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn runner0(&self) -> &BTreeSet<usize> {
        &self.runner0
    }

    pub fn shifted(&self) -> &[FencedRunner] {
        &self.shifted
    }

    pub fn untwist(&self) -> BarAbacus {
        let t = self.t;
        let mut runners = vec![BTreeSet::new(); t];
        runners[0] = self.runner0.clone();
        for (i, runner) in self.shifted.iter().enumerate() {
            let r = i + 1;
            runners[r] = runner.black_above.clone();
            runners[t - r] = runner.white_below.clone();
        }
        BarAbacus { t, runners }
    }

    pub fn to_partition(&self) -> BarPartition {
        self.untwist().to_partition()
    }

    pub fn render(&self) -> String {
        let above = self
            .shifted
            .iter()
            .map(|r| &r.black_above)
            .chain(std::iter::once(&self.runner0))
            .filter_map(|s| s.last())
            .max()
            .map_or(0, |m| m + 1)
            .max(2);
        let below = self
            .shifted
            .iter()
            .filter_map(|r| r.white_below.last())
            .max()
            .map_or(0, |m| m + 1)
            .max(2);
        let w = digits((self.t - 1) / 2);
        let cell = |s: &str| format!("{s:>w$}");
        let mut out = String::new();
        for row in (0..above).rev() {
            let mut cells = vec![cell(if self.runner0.contains(&row) { "●" } else { "○" })];
            for r in &self.shifted {
                cells.push(cell(if r.black_above.contains(&row) { "●" } else { "○" }));
            }
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        let mut fence = vec![cell(" ")];
        fence.extend(self.shifted.iter().map(|_| cell("-")));
        out.push_str(fence.join(" ").trim_end());
        out.push('\n');
        for row in 0..below {
            let mut cells = vec![cell(" ")];
            for r in &self.shifted {
                cells.push(cell(if r.white_below.contains(&row) { "○" } else { "●" }));
            }
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out.push_str(&label_row(0..self.t.div_ceil(2), w));
        out
    }
}

fn digits(n: usize) -> usize {
    n.to_string().len()
}

fn label_row(labels: std::ops::Range<usize>, w: usize) -> String {
    let mut out = String::new();
    for (i, r) in labels.enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{r:>w$}");
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bar(s: &str) -> BarPartition {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn bar_abacus_examples() {
        let a = BarAbacus::new(&bar("5,3,2,1"), 3).unwrap();
        assert_eq!(a.runners(), &[set(&[1]), set(&[0]), set(&[0, 1])]);

        let a = BarAbacus::new(&bar("14,12,8,6,3,2"), 5).unwrap();
        assert_eq!(
            a.runners(),
            &[set(&[]), set(&[1]), set(&[0, 2]), set(&[0, 1]), set(&[2])]
        );

        let a = BarAbacus::new(&BarPartition::empty(), 5).unwrap();
        assert!(a.runners().iter().all(|s| s.is_empty()));
    }

    #[test]
    fn rejects_bad_modulus() {
        for t in [0, 1, 2, 4, 10] {
            assert_eq!(BarAbacus::new(&bar("3"), t), Err(Error::InvalidModulus(t)));
        }
    }

    #[test]
    fn twist_examples() {
        let tw = TwistedBarAbacus::new(&bar("5,3,2,1"), 3).unwrap();
        assert_eq!(tw.runner0(), &set(&[1]));
        assert_eq!(tw.shifted(), &[FencedRunner::new([0], [0, 1])]);
        assert_eq!(tw.shifted()[0].charge(), -1);

        let shown = TwistedBarAbacus::from_runners(
            5,
            set(&[1]),
            vec![FencedRunner::new([1], [0]), FencedRunner::new([], [1])],
        )
        .unwrap();
        assert_eq!(shown.to_partition(), bar("8,6,5,4"));

        let tw = TwistedBarAbacus::new(&BarPartition::empty(), 7).unwrap();
        assert!(tw.runner0().is_empty() && tw.shifted().iter().all(FencedRunner::is_default));
    }

    #[test]
    fn reference_runners() {
        assert_eq!(FencedRunner::reference(1), FencedRunner::new([0], []));
        assert_eq!(FencedRunner::reference(-1), FencedRunner::new([], [0]));
        assert!(FencedRunner::reference(0).is_default());
        for m in -5..=5 {
            assert_eq!(FencedRunner::reference(m).normalize(), (FencedRunner::default(), m));
        }
    }

    #[test]
    fn normalize_examples() {
        let r = FencedRunner::new([0, 1], [0]);
        assert_eq!(r.normalize(), (FencedRunner::new([0], [1]), 1));

        let r = FencedRunner::new([0], []);
        assert_eq!(r.normalize(), (FencedRunner::default(), 1));

        let p = FencedRunner::new([3, 0], [2, 1]);
        assert_eq!(p.normalize(), (p.clone(), 0));
    }

    #[test]
    fn push_and_pull_are_inverse() {
        let r = FencedRunner::new([0, 2, 5], [1, 3]);
        assert_eq!(r.push_down().pull_up(), r);
        assert_eq!(r.pull_up().push_down(), r);
        assert_eq!(r.shift(4).shift(-4), r);
    }

    #[test]
    fn vanished_matches_bead_count_change() {
        let pointed = FencedRunner::new([0], [1]);
        // pulling up once adds a black bead at above-slot 0
        assert_eq!(pointed.vanished(1), 0);
        assert_eq!(pointed.shift(1).bead_count(), 3);
        // pushing down once meets the black bead at above-slot 0
        assert_eq!(pointed.vanished(-1), 1);
        assert_eq!(pointed.shift(-1).bead_count(), 1);
    }

    #[test]
    fn render_empty_three() {
        let a = BarAbacus::new(&BarPartition::empty(), 3).unwrap();
        assert_eq!(a.render(), "○ ○ ○\n○ ○ ○\n0 1 2\n");
    }

    #[test]
    fn render_small_example() {
        let a = BarAbacus::new(&bar("5,3,2,1"), 3).unwrap();
        assert_eq!(a.render(), "● ○ ●\n○ ● ●\n0 1 2\n");
        let tw = a.twist();
        assert_eq!(tw.render(), "● ○\n○ ●\n  -\n  ○\n  ○\n0 1\n");
    }

    #[test]
    fn json_shapes() {
        let a = BarAbacus::new(&bar("5,3,2,1"), 3).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"t":3,"runners":[[1],[0],[0,1]]}"#
        );
        assert_eq!(
            serde_json::to_string(&a.twist()).unwrap(),
            r#"{"t":3,"runner0":[1],"shifted":[{"above":[0],"below":[0,1]}]}"#
        );
    }
}
