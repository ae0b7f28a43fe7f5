//! Prime search, Chinese remainder reconstruction, binomials.

use crate::error::Error;
use crate::scalar::{FpElem, PrimeField, Ring};
use num::bigint::{BigInt, BigUint};
use num::{One, Zero};

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let pow = |b: u64, mut e: u64| -> u64 {
        let mut acc = 1u128;
        let mut base = b as u128 % n as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % n as u128;
            }
            base = base * base % n as u128;
            e >>= 1;
        }
        acc as u64
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a % n, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `p >= lower_bound` with `p = 1 (mod modulus)`.
pub fn find_prime_one_mod(modulus: u64, lower_bound: u64) -> Result<u64, Error> {
    let mut p = lower_bound.max(2);
    p += (1 + modulus - p % modulus) % modulus;
    while p < (1 << 31) {
        if is_prime(p) {
            return Ok(p);
        }
        p += modulus;
    }
    Err(Error::PrimeSearchOverflow)
}

/// Smallest prime `p >= lower_bound` with `p = 1 (mod 2n)`, together with an
/// element of exact multiplicative order `2n`. This is the smallest field in
/// which the degree-n dicyclic group has its defining representation.
pub fn find_semisimple_prime(n: u32, lower_bound: u64) -> Result<(u64, FpElem), Error> {
    assert!(n >= 1);
    let p = find_prime_one_mod(2 * n as u64, lower_bound)?;
    let field = PrimeField::new(p);
    let zeta = field
        .root_of_unity(2 * n as u64)
        .expect("p = 1 mod 2n guarantees a root");
    Ok((p, zeta))
}

/// Like [`find_semisimple_prime`] but additionally requires a square root of
/// -1 in the field (p = 1 mod lcm(2n, 4)), which the tail projectors need at
/// odd degree.
pub fn find_splitting_prime(n: u32, lower_bound: u64) -> Result<(u64, FpElem), Error> {
    let two_n = 2 * n as u64;
    let modulus = num::integer::lcm(two_n, 4);
    let p = find_prime_one_mod(modulus, lower_bound)?;
    let field = PrimeField::new(p);
    let zeta = field.root_of_unity(two_n).expect("p = 1 mod 2n");
    Ok((p, zeta))
}

/// Symmetric-range Chinese remainder reconstruction: the unique integer in
/// `(-P/2, P/2]` congruent to every residue, `P` the product of the pairwise
/// distinct primes. The caller is responsible for the magnitude bound.
pub fn crt_reconstruct(residues: &[(u64, u64)]) -> BigInt {
    let x = crt_reconstruct_unsigned(residues);
    let product: BigUint = residues.iter().map(|(_, p)| BigUint::from(*p)).product();
    let x = BigInt::from(x);
    let product = BigInt::from(product);
    if &x * 2 > product {
        x - product
    } else {
        x
    }
}

/// Least nonnegative Chinese remainder reconstruction in `[0, P)`.
pub fn crt_reconstruct_unsigned(residues: &[(u64, u64)]) -> BigUint {
    let mut x = BigUint::zero();
    let mut modulus = BigUint::one();
    for &(r, p) in residues {
        let p_big = BigUint::from(p);
        // solve x + modulus*t = r (mod p)
        let x_mod_p = (&x % &p_big)
            .to_u64_digits()
            .first()
            .copied()
            .unwrap_or(0);
        let m_mod_p = (&modulus % &p_big)
            .to_u64_digits()
            .first()
            .copied()
            .unwrap_or(0);
        let field = PrimeField::new(p);
        let rhs = field.sub(
            &FpElem {
                residue: r % p,
                modulus: p,
            },
            &FpElem {
                residue: x_mod_p,
                modulus: p,
            },
        );
        let m_inv = field
            .inv(&FpElem {
                residue: m_mod_p,
                modulus: p,
            })
            .expect("pairwise distinct primes");
        let t = field.mul(&rhs, &m_inv);
        x += &modulus * BigUint::from(t.residue);
        modulus *= p_big;
    }
    x
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semisimple_primes() {
        assert_eq!(find_semisimple_prime(4, 2).unwrap().0, 17);
        assert_eq!(find_semisimple_prime(3, 2).unwrap().0, 7);
        assert_eq!(find_semisimple_prime(1, 2).unwrap().0, 3);
        let (_, zeta) = find_semisimple_prime(4, 2).unwrap();
        assert_eq!(PrimeField::new(17).order(&zeta), 8);
        let (_, z2) = find_semisimple_prime(1, 2).unwrap();
        assert_eq!(z2.residue, 2); // -1 mod 3 has order 2
    }

    #[test]
    fn splitting_primes_have_i() {
        let (p, _) = find_splitting_prime(3, 2).unwrap();
        assert_eq!(p, 13);
        assert!(PrimeField::new(p).root_of_unity(4).is_some());
    }

    #[test]
    fn crt_small() {
        assert_eq!(crt_reconstruct(&[(1, 7), (1, 11)]), BigInt::from(1));
        assert_eq!(crt_reconstruct(&[(36, 101)]), BigInt::from(36));
        // 8256 exceeds half of 101*103; the nonnegative range recovers it.
        let r = [(8256 % 101, 101), (8256 % 103, 103)];
        assert_eq!(crt_reconstruct_unsigned(&r), BigUint::from(8256u32));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(16, 8), BigUint::from(12870u32));
    }
}
