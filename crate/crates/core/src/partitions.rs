//! Partitions, bar-partitions, Frobenius symbols and signs.
//!
//! Partitions are stored as their weakly decreasing list of positive parts;
//! the empty partition is an ordinary value. The text form is the
//! comma-separated list of parts (`"4,4,3,3"`, empty string for the empty
//! partition) and the JSON form is the array of parts.

use std::fmt;
use std::ops::{Deref, Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// A sign `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn from_parity(k: usize) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn pow(self, k: usize) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::from_parity(k),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match i8::deserialize(deserializer)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!("sign must be 1 or -1, got {other}"))),
        }
    }
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.last() == Some(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `(-1)^(|λ| - ℓ(λ))`.
    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.size() - self.len())
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&x| x >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Number of diagonal boxes.
    pub fn durfee(&self) -> usize {
        self.parts.iter().enumerate().take_while(|&(i, &x)| x > i).count()
    }

    pub fn frobenius(&self) -> FrobeniusSymbol {
        let d = self.durfee();
        let conj = self.conjugate();
        let arms = (0..d).map(|i| self.parts[i] - i - 1).collect();
        let legs = (0..d).map(|i| conj.parts[i] - i - 1).collect();
        FrobeniusSymbol { legs, arms }
    }

    pub fn from_frobenius(symbol: &FrobeniusSymbol) -> Partition {
        let d = symbol.arms.len();
        let mut parts: Vec<usize> = (0..d).map(|i| symbol.arms[i] + i + 1).collect();
        let depth = symbol.legs.first().map_or(0, |&l| l + 1);
        for row in d + 1..=depth {
            let width = (0..d).filter(|&j| symbol.legs[j] + j + 1 >= row).count();
            parts.push(width);
        }
        Partition { parts }
    }

    /// Diagonal hook lengths `a_i + l_i + 1`, decreasing.
    pub fn diagonal_hooks(&self) -> Vec<usize> {
        let f = self.frobenius();
        f.arms.iter().zip(&f.legs).map(|(a, l)| a + l + 1).collect()
    }

    /// Ordinary hook lengths of every box, decreasing.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in conj.parts.iter().enumerate().take(row) {
                hooks.push((row - j - 1) + (col - i - 1) + 1);
            }
        }
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    pub fn to_bar(&self) -> Result<BarPartition> {
        BarPartition::new(self.parts.clone())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Partition> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, x) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| tok.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        Partition::new(parse_parts(s)?)
    }
}

/// A partition with distinct parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BarPartition(Partition);

impl BarPartition {
    pub fn new(parts: Vec<usize>) -> Result<BarPartition> {
        let strict = parts.windows(2).all(|w| w[0] > w[1]);
        if !strict || parts.last() == Some(&0) {
            return Err(Error::NotStrict(parts));
        }
        Ok(BarPartition(Partition { parts }))
    }

    /// Builds a bar-partition from distinct positive parts in any order.
    pub(crate) fn from_distinct(parts: Vec<usize>) -> BarPartition {
        let p = Partition::from_unsorted(parts);
        debug_assert!(p.is_strict());
        BarPartition(p)
    }

    pub fn empty() -> BarPartition {
        BarPartition::default()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }
}

impl Deref for BarPartition {
    type Target = Partition;

    fn deref(&self) -> &Partition {
        &self.0
    }
}

impl TryFrom<Vec<usize>> for BarPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<BarPartition> {
        BarPartition::new(parts)
    }
}

impl From<BarPartition> for Vec<usize> {
    fn from(p: BarPartition) -> Vec<usize> {
        p.0.parts
    }
}

impl TryFrom<Partition> for BarPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<BarPartition> {
        if p.is_strict() {
            Ok(BarPartition(p))
        } else {
            Err(Error::NotStrict(p.parts))
        }
    }
}

impl From<BarPartition> for Partition {
    fn from(p: BarPartition) -> Partition {
        p.0
    }
}

impl fmt::Display for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BarPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<BarPartition> {
        BarPartition::new(parse_parts(s)?)
    }
}

/// Frobenius coordinates `(legs | arms)`, each stored strictly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct FrobeniusSymbol {
    legs: Vec<usize>,
    arms: Vec<usize>,
}

impl FrobeniusSymbol {
    /// Accepts the two coordinate sets in any order.
    pub fn new(mut legs: Vec<usize>, mut arms: Vec<usize>) -> Result<FrobeniusSymbol> {
        if legs.len() != arms.len() {
            return Err(Error::FrobeniusArity {
                legs: legs.len(),
                arms: arms.len(),
            });
        }
        for set in [&mut legs, &mut arms] {
            set.sort_unstable_by(|a, b| b.cmp(a));
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::FrobeniusRepeat(set.clone()));
            }
        }
        Ok(FrobeniusSymbol { legs, arms })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// Arm/leg pairs forming the diagonal hooks, outermost first.
    pub fn paired(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arms.iter().copied().zip(self.legs.iter().copied())
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_parts(f, &self.legs)?;
        f.write_str(" | ")?;
        write_parts(f, &self.arms)?;
        f.write_str(")")
    }
}

/// Which partitions [`enumerate`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    All,
    Strict,
    SelfConjugate,
}

/// Every partition of `n` of the given kind, in lexicographically decreasing order.
pub fn enumerate(n: usize, kind: PartitionKind) -> Vec<Partition> {
    match kind {
        PartitionKind::All => {
            let mut out = Vec::new();
            descend(n, n, false, &mut Vec::new(), &mut out);
            out
        }
        PartitionKind::Strict => {
            let mut out = Vec::new();
            descend(n, n, true, &mut Vec::new(), &mut out);
            out
        }
        PartitionKind::SelfConjugate => {
            // Self-conjugate partitions are determined by their distinct odd diagonal hooks.
            let mut out = Vec::new();
            odd_hooks(n, n, &mut Vec::new(), &mut out);
            out.sort_unstable_by(|a, b| b.cmp(a));
            out
        }
    }
}

/// Strict partitions of `n` as [`BarPartition`]s, lexicographically decreasing.
pub fn enumerate_strict(n: usize) -> Vec<BarPartition> {
    enumerate(n, PartitionKind::Strict)
        .into_iter()
        .map(BarPartition)
        .collect()
}

/// Strict partitions of every size up to and including `max_n`.
pub fn strict_up_to(max_n: usize) -> impl Iterator<Item = BarPartition> {
    (0..=max_n).flat_map(enumerate_strict)
}

fn descend(n: usize, max_part: usize, strict: bool, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: prefix.clone() });
        return;
    }
    for first in (1..=max_part.min(n)).rev() {
        prefix.push(first);
        let next_max = if strict { first - 1 } else { first };
        descend(n - first, next_max, strict, prefix, out);
        prefix.pop();
    }
}

fn odd_hooks(n: usize, max_hook: usize, hooks: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        let arms: Vec<usize> = hooks.iter().map(|h| (h - 1) / 2).collect();
        let symbol = FrobeniusSymbol {
            legs: arms.clone(),
            arms,
        };
        out.push(Partition::from_frobenius(&symbol));
        return;
    }
    let mut h = max_hook.min(n);
    if h.is_multiple_of(2) {
        h = h.saturating_sub(1);
    }
    while h >= 1 {
        hooks.push(h);
        odd_hooks(n - h, h.saturating_sub(2), hooks, out);
        hooks.pop();
        if h < 2 {
            break;
        }
        h -= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Partition::empty().sign(), Sign::Plus);
        assert_eq!(part("4,3,2,1").sign(), Sign::Plus);
        for p in [3usize, 5, 7, 11] {
            assert_eq!(part(&p.to_string()).sign(), Sign::Plus);
            for k in 1..=(p - 1) / 2 {
                assert_eq!(part(&format!("{},{}", p - k, k)).sign(), Sign::Minus);
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let f = FrobeniusSymbol::new(vec![1, 2, 3], vec![0, 2, 3]).unwrap();
        assert_eq!(Partition::from_frobenius(&f), part("4,4,3,3"));
        assert_eq!(part("4,4,3,3").frobenius(), f);

        assert_eq!(Partition::empty().frobenius(), FrobeniusSymbol::default());
        assert_eq!(
            Partition::from_frobenius(&FrobeniusSymbol::default()),
            Partition::empty()
        );

        let f = part("2,1,1").frobenius();
        assert_eq!((f.legs(), f.arms()), (&[2][..], &[1][..]));
        let f = part("3,2").frobenius();
        assert_eq!((f.legs(), f.arms()), (&[1, 0][..], &[2, 0][..]));
    }

    #[test]
    fn frobenius_rejects_unequal_sets() {
        assert_eq!(
            FrobeniusSymbol::new(vec![1, 0], vec![3]),
            Err(Error::FrobeniusArity { legs: 2, arms: 1 })
        );
        assert!(FrobeniusSymbol::new(vec![1, 1], vec![3, 2]).is_err());
    }

    #[test]
    fn diagonal_hook_examples() {
        assert_eq!(part("2,1").diagonal_hooks(), vec![3]);
        assert_eq!(part("3,2").diagonal_hooks(), vec![4, 1]);
        assert_eq!(part("3,2").durfee(), 2);
        assert_eq!(Partition::empty().durfee(), 0);
        // self-conjugate: hooks are 2a + 1 over the arms
        let sc = part("4,3,2,1");
        let arms = sc.frobenius().arms().to_vec();
        let expected: Vec<usize> = arms.iter().map(|a| 2 * a + 1).collect();
        assert_eq!(sc.diagonal_hooks(), expected);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part("4,4,3,3").conjugate(), part("4,4,4,2"));
        assert!(part("2,1").is_self_conjugate());
        assert!(!part("3,1,1,1").is_self_conjugate());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(0, PartitionKind::Strict), vec![Partition::empty()]);
        let strict6: Vec<String> = enumerate(6, PartitionKind::Strict)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(strict6, ["6", "5,1", "4,2", "3,2,1"]);
        let sc4: Vec<String> = enumerate(4, PartitionKind::SelfConjugate)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(sc4, ["2,2"]);
        for n in 0..=12 {
            let brute: Vec<Partition> = enumerate(n, PartitionKind::All)
                .into_iter()
                .filter(|p| p.is_self_conjugate())
                .collect();
            assert_eq!(enumerate(n, PartitionKind::SelfConjugate), brute);
        }
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(part("").to_string(), "");
        assert_eq!(part("5, 3,1").to_string(), "5,3,1");
        assert!("3,4".parse::<Partition>().is_err());
        assert!("3,3".parse::<BarPartition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        let json = serde_json::to_string(&part("4,4,3")).unwrap();
        assert_eq!(json, "[4,4,3]");
        let back: BarPartition = serde_json::from_str("[5,2]").unwrap();
        assert_eq!(back.to_string(), "5,2");
        assert!(serde_json::from_str::<BarPartition>("[2,2]").is_err());
    }

    #[test]
    fn hook_lengths_small() {
        assert_eq!(part("2,1").hook_lengths(), vec![3, 1, 1]);
        assert_eq!(part("3,1").hook_lengths(), vec![4, 2, 1, 1]);
    }
}
