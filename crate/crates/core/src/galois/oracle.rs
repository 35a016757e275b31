//! Exact evaluation of `τ(√m, f)` in the cyclotomic ring `ℤ[ζ_N]`.
//!
//! `√m` is written with `√2 = ζ_8 + ζ_8⁻¹` and quadratic Gauss sums
//! `Σ (a/ℓ) ζ_ℓ^a`, `f` is applied exponent-wise, and the result is
//! compared with `±√m` after reduction to a power basis.

use super::GaloisElement;
use crate::error::{Error, Result};
use crate::partitions::Sign;

/// Largest cyclotomic order the oracle will build.
const MAX_ORDER: u64 = 1 << 22;

/// An element of `ℤ[ζ_N]` as coefficients of `ζ_N^0, …, ζ_N^(N-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Cyclotomic {
    n: usize,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    fn zero(n: usize) -> Self {
        Cyclotomic { n, coeffs: vec![0; n] }
    }

    fn root(n: usize, k: usize) -> Self {
        let mut z = Cyclotomic::zero(n);
        z.coeffs[k % n] = 1;
        z
    }

    fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let mut out = Cyclotomic::zero(self.n);
        let support: Vec<(usize, i64)> = other
            .coeffs
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, b) in &support {
                out.coeffs[(i + j) % self.n] += a * b;
            }
        }
        out
    }

    #[cfg(test)]
    fn scale(&self, c: i64) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// The image under `ζ_N ↦ ζ_N^r`.
    fn galois(&self, r: usize) -> Cyclotomic {
        let mut out = Cyclotomic::zero(self.n);
        for (k, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[k * r % self.n] += c;
        }
        out
    }

    /// Canonical coordinates: `ℤ[ζ_N]` is the tensor product of `ℤ[ζ_q]`
    /// over the prime powers `q ∥ N`, and each factor is reduced to the
    /// power basis of degree `φ(q)`.
    fn reduced(&self) -> Vec<i64> {
        let axes = prime_power_factors(self.n);
        let sizes: Vec<usize> = axes.iter().map(|&(_, q)| q).collect();
        let mut grid = vec![0i64; self.n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let idx = crt_index(k, &sizes);
                grid[idx] += c;
            }
        }
        let mut stride = 1;
        for &(ell, q) in axes.iter().rev() {
            reduce_axis(&mut grid, ell, q, stride);
            stride *= q;
        }
        grid
    }
}

/// Row-major index of `(k mod q_0, k mod q_1, …)`, last axis fastest.
fn crt_index(k: usize, sizes: &[usize]) -> usize {
    sizes.iter().fold(0, |idx, &q| idx * q + k % q)
}

/// Reduces the axis of a `ℓ^a`-th root of unity with relation
/// `Φ_{ℓ^a}(x) = Σ_{j<ℓ} x^(j ℓ^(a-1))`.
fn reduce_axis(grid: &mut [i64], ell: usize, q: usize, stride: usize) {
    let block = q / ell;
    let top = q - block;
    let outer = grid.len() / (q * stride);
    for o in 0..outer {
        for inner in 0..stride {
            let at = |k: usize| o * q * stride + k * stride + inner;
            for k in top..q {
                let c = std::mem::take(&mut grid[at(k)]);
                if c == 0 {
                    continue;
                }
                let base = k - top;
                for j in 0..ell - 1 {
                    grid[at(base + j * block)] -= c;
                }
            }
        }
    }
}

fn prime_power_factors(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut q = 2;
    while n > 1 {
        if q * q > n {
            q = n;
        }
        if n.is_multiple_of(q) {
            let mut pw = 1;
            while n.is_multiple_of(q) {
                n /= q;
                pw *= q;
            }
            out.push((q, pw));
        }
        q += 1;
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Quadratic residues by squaring, kept separate from the Jacobi symbol.
fn residue_table(ell: usize) -> Vec<i64> {
    let mut table = vec![-1i64; ell];
    table[0] = 0;
    for x in 1..ell {
        table[x * x % ell] = 1;
    }
    table
}

/// `τ(√m, f)` by exact cyclotomic arithmetic.
pub fn oracle_tau_sqrt(m: u64, f: GaloisElement) -> Result<Sign> {
    if m == 0 {
        return Err(Error::OracleBound("m must be positive".into()));
    }
    let mut free = 1u64;
    let mut rest = m;
    let mut q = 2;
    while rest > 1 {
        if q * q > rest {
            q = rest;
        }
        let mut k = 0;
        while rest.is_multiple_of(q) {
            rest /= q;
            k += 1;
        }
        if k % 2 == 1 {
            free *= q;
        }
        q += 1;
    }
    let odd_part = if free.is_multiple_of(2) { free / 2 } else { free };
    let lcm = |a: u64, b: u64| a / gcd(a, b) * b;
    let n = lcm(lcm(8, f.p), odd_part);
    if n > MAX_ORDER {
        return Err(Error::OracleBound(format!("cyclotomic order {n} for m = {m}")));
    }
    let n = n as usize;

    let value = sqrt_element(free, n);

    let r = exponent(n, f);
    let image = value.galois(r).reduced();
    let original = value.reduced();
    if image == original {
        Ok(Sign::Plus)
    } else if image.iter().zip(&original).all(|(a, b)| *a == -b) {
        Ok(Sign::Minus)
    } else {
        unreachable!("automorphism moved √{free} off its line")
    }
}

/// `√free` in `ℤ[ζ_n]` as `√2^[2 | free] · Π g_ℓ · i^(-#{ℓ ≡ 3 mod 4})`,
/// for squarefree `free` whose odd part divides `n`, with `8 | n`.
fn sqrt_element(free: u64, n: usize) -> Cyclotomic {
    let mut value = Cyclotomic::root(n, 0);
    if free.is_multiple_of(2) {
        let mut sqrt2 = Cyclotomic::root(n, n / 8);
        sqrt2.coeffs[7 * n / 8] += 1;
        value = value.mul(&sqrt2);
    }
    let mut three_mod_four = 0;
    for (ell, _) in prime_power_factors(free as usize) {
        if ell == 2 {
            continue;
        }
        let table = residue_table(ell);
        let mut gauss = Cyclotomic::zero(n);
        for (a, &chi) in table.iter().enumerate() {
            gauss.coeffs[a * (n / ell)] += chi;
        }
        value = value.mul(&gauss);
        if ell % 4 == 3 {
            three_mod_four += 1;
        }
    }
    value.mul(&Cyclotomic::root(n, (4 - three_mod_four % 4) % 4 * (n / 4)))
}

/// The exponent `r` with `r ≡ s (mod p)` and `r ≡ p^e (mod N/p)`.
fn exponent(n: usize, f: GaloisElement) -> usize {
    let p = f.p as usize;
    let other = n / p;
    let mut pe = 1 % other;
    for _ in 0..f.e {
        pe = pe * p % other;
    }
    (0..n)
        .find(|&r| r % p == f.s as usize && r % other == pe)
        .expect("coprime moduli")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_detects_zero() {
        // 1 + ζ_3 + ζ_3² = 0 inside ℤ[ζ_24]
        let n = 24;
        let mut x = Cyclotomic::zero(n);
        x.coeffs[0] = 1;
        x.coeffs[8] = 1;
        x.coeffs[16] = 1;
        assert!(x.reduced().iter().all(|&c| c == 0));
        // ζ_8² + ζ_8⁶ = i - i = 0
        let mut y = Cyclotomic::zero(n);
        y.coeffs[6] = 1;
        y.coeffs[18] = 1;
        assert!(y.reduced().iter().all(|&c| c == 0));
        assert!(Cyclotomic::root(n, 5).reduced().iter().any(|&c| c != 0));
    }

    #[test]
    fn square_root_construction() {
        for free in [1u64, 2, 3, 5, 6, 7, 10, 15, 30, 33, 42, 105] {
            let odd = if free % 2 == 0 { free / 2 } else { free };
            let n = 8 * odd as usize;
            let x = sqrt_element(free, n);
            let expected = Cyclotomic::root(n, 0).scale(free as i64).reduced();
            assert_eq!(x.mul(&x).reduced(), expected, "√{free}");
        }
    }

    #[test]
    fn sqrt2_under_sigma5() {
        let f = GaloisElement::sigma(5).unwrap();
        assert_eq!(oracle_tau_sqrt(2, f).unwrap(), Sign::Minus);
    }

    #[test]
    fn squares_are_fixed() {
        for p in [3, 5, 7] {
            for f in GaloisElement::generators(p).unwrap() {
                for k in 1..15 {
                    assert_eq!(oracle_tau_sqrt(k * k, f).unwrap(), Sign::Plus);
                }
            }
        }
    }

    #[test]
    fn small_known_values() {
        assert_eq!(
            oracle_tau_sqrt(3, GaloisElement::sigma(3).unwrap()).unwrap(),
            Sign::Minus
        );
        assert_eq!(
            oracle_tau_sqrt(40, GaloisElement::sigma(5).unwrap()).unwrap(),
            Sign::Minus
        );
        // σ_7 fixes √2 since 7 ≡ -1 (mod 8)
        assert_eq!(
            oracle_tau_sqrt(2, GaloisElement::sigma(7).unwrap()).unwrap(),
            Sign::Plus
        );
    }

    #[test]
    fn agrees_with_formula_small() {
        for p in [3u64, 5, 7] {
            for e in 0..3 {
                for s in 1..p {
                    let f = GaloisElement::new(p, e, s).unwrap();
                    for m in 1..=40u64 {
                        assert_eq!(
                            oracle_tau_sqrt(m, f).unwrap(),
                            super::super::tau_sqrt(m as u128, f),
                            "m={m} f={f:?}"
                        );
                    }
                }
            }
        }
    }
}
