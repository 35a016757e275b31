//! Jacobi symbols and the signs by which Galois automorphisms move the
//! quadratic irrationalities attached to spin characters.
//!
//! An automorphism is modelled by its action on roots of unity: it raises
//! `p'`-roots of unity to the power `p^e` and `p`-th roots of unity to the
//! power `s`. For a quadratic irrationality `α`, `τ(α, f)` is the sign with
//! `f(α) = τ(α, f) α`.

mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{BarPartition, Partition, Sign};

pub use oracle::oracle_tau_sqrt;

/// The Jacobi symbol `(a / n)` for odd positive `n`.
pub fn jacobi(a: i64, n: u64) -> Result<i8> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidJacobiModulus(n));
    }
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut result = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && (n % 8 == 3 || n % 8 == 5) {
            result = -result;
        }
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    Ok(if n == 1 { result } else { 0 })
}

pub fn is_odd_prime(p: u64) -> bool {
    p >= 3
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// A Galois automorphism acting by `ζ ↦ ζ^(p^e)` on `p'`-roots of unity and
/// by `ζ ↦ ζ^s` on `p`-th roots of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaloisElement {
    pub p: u64,
    pub e: u32,
    pub s: u64,
}

impl GaloisElement {
    pub fn new(p: u64, e: u32, s: u64) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if s.is_multiple_of(p) {
            return Err(Error::NotAUnit { s, p });
        }
        Ok(GaloisElement { p, e, s: s % p })
    }

    /// `σ_p`: Frobenius on `p'`-roots, trivial on `p`-power roots.
    pub fn sigma(p: u64) -> Result<Self> {
        GaloisElement::new(p, 1, 1)
    }

    pub fn identity(p: u64) -> Result<Self> {
        GaloisElement::new(p, 0, 1)
    }

    pub fn compose(self, other: GaloisElement) -> GaloisElement {
        assert_eq!(self.p, other.p, "automorphisms for different primes");
        GaloisElement {
            p: self.p,
            e: self.e + other.e,
            s: self.s * other.s % self.p,
        }
    }

    /// `σ_p` followed by every automorphism trivial on `p'`-roots of unity.
    pub fn generators(p: u64) -> Result<Vec<Self>> {
        let mut gens = vec![GaloisElement::sigma(p)?];
        for s in 1..p {
            gens.push(GaloisElement::new(p, 0, s)?);
        }
        Ok(gens)
    }

    fn delta(self) -> bool {
        self.p % 4 == 3
    }
}

impl std::fmt::Display for GaloisElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(p={}, e={}, s={})", self.p, self.e, self.s)
    }
}

fn legendre_sign(a: i64, p: u64) -> Sign {
    match jacobi(a, p).expect("odd modulus") {
        -1 => Sign::Minus,
        _ => Sign::Plus,
    }
}

/// `τ(i, f) = ((-1)^((p-1)/2))^e`.
pub fn tau_i(f: GaloisElement) -> Sign {
    legendre_sign(-1, f.p).pow(f.e as usize)
}

/// `τ(√2, f) = (2/p)^e`.
pub fn tau_sqrt2(f: GaloisElement) -> Sign {
    legendre_sign(2, f.p).pow(f.e as usize)
}

/// `τ(√m, f)` for a positive integer `m`.
///
/// With `m = p^a m'` and `p ∤ m'` this is `(m'/p)^e` times, when `a` is odd,
/// the sign `(s/p) τ(i, f)^δ` of `√p`, where `δ = 1` iff `p ≡ 3 (mod 4)`.
pub fn tau_sqrt(m: u128, f: GaloisElement) -> Sign {
    assert!(m > 0, "square root of zero");
    let p = f.p as u128;
    let (mut rest, mut a) = (m, 0usize);
    while rest % p == 0 {
        rest /= p;
        a += 1;
    }
    let coprime = legendre_sign((rest % p) as i64, f.p).pow(f.e as usize);
    if a % 2 == 0 {
        return coprime;
    }
    let mut root_p = legendre_sign(f.s as i64, f.p);
    if f.delta() {
        root_p = root_p * tau_i(f);
    }
    coprime * root_p
}

/// `√2^two_exp · i^i_exp · √radicand` with a squarefree radicand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SurdValue {
    pub two_exp: u8,
    pub i_exp: u8,
    pub radicand: u128,
}

impl SurdValue {
    pub const ONE: SurdValue = SurdValue {
        two_exp: 0,
        i_exp: 0,
        radicand: 1,
    };

    fn new(two_exp: u8, i_exp: usize, factors: &[usize]) -> SurdValue {
        SurdValue {
            two_exp,
            i_exp: (i_exp % 4) as u8,
            radicand: squarefree_product(factors),
        }
    }

    pub fn tau(&self, f: GaloisElement) -> Sign {
        tau_sqrt2(f).pow(self.two_exp as usize) * tau_i(f).pow(self.i_exp as usize) * tau_sqrt(self.radicand, f)
    }
}

/// Squarefree part of a product, from prime exponent parities.
fn squarefree_product(factors: &[usize]) -> u128 {
    let mut odd: Vec<usize> = Vec::new();
    for &x in factors {
        let mut x = x;
        let mut q = 2;
        while x > 1 {
            if q * q > x {
                q = x;
            }
            while x % q == 0 {
                x /= q;
                match odd.iter().position(|&y| y == q) {
                    Some(i) => {
                        odd.swap_remove(i);
                    }
                    None => odd.push(q),
                }
            }
            q += 1;
        }
    }
    odd.iter().map(|&q| q as u128).product()
}

/// The non-zero value of the difference character attached to `λ`:
/// `√2 i^((n-k+1)/2) √(λ_1⋯λ_k)` if `sgn λ = -1`, `i^((n-k)/2) √(λ_1⋯λ_k)`
/// otherwise, up to sign.
pub fn diff_value(lambda: &BarPartition) -> SurdValue {
    if lambda.is_empty() {
        return SurdValue::ONE;
    }
    let gap = lambda.size() - lambda.len();
    if gap % 2 == 1 {
        SurdValue::new(1, gap.div_ceil(2), lambda.parts())
    } else {
        SurdValue::new(0, gap / 2, lambda.parts())
    }
}

/// `τ(λ, f)`: the sign by which `f` acts on the associate pair of `λ`.
pub fn tau_partition(lambda: &BarPartition, f: GaloisElement) -> Sign {
    diff_value(lambda).tau(f)
}

/// The analogue of [`diff_value`] for a self-conjugate partition, with
/// diagonal hook lengths in place of parts.
pub fn selfconjugate_value(lambda: &Partition) -> Result<SurdValue> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(lambda.to_string()));
    }
    let hooks = lambda.diagonal_hooks();
    Ok(SurdValue::new(0, (lambda.size() - hooks.len()) / 2, &hooks))
}

pub fn tau_selfconjugate(lambda: &Partition, f: GaloisElement) -> Result<Sign> {
    Ok(selfconjugate_value(lambda)?.tau(f))
}
