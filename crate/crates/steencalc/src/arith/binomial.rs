//! Binomial coefficients modulo a prime, including negative upper index.

use super::{mod_pow, FpElement, PrimeModulus};

/// C(n, k) mod p, computed digit-wise in base p: the coefficient is the
/// product of the small binomials of the base-p digits of n and k.
pub fn binom_mod_p(n: u64, k: u64, p: PrimeModulus) -> FpElement {
    let pr = p.get();
    let mut n = n;
    let mut k = k;
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let nd = n % pr;
        let kd = k % pr;
        if kd > nd {
            return FpElement::zero(p);
        }
        acc = acc * small_binom_mod(nd, kd, pr) % pr;
        n /= pr;
        k /= pr;
    }
    FpElement::from_u64(acc, p)
}

/// C(-n, k) mod p via C(-n, k) = (-1)^k C(n+k-1, k).
pub fn binom_neg_mod_p(n: u64, k: u64, p: PrimeModulus) -> FpElement {
    if k == 0 {
        return FpElement::one(p);
    }
    if n == 0 {
        // C(0, k) = 0 for k > 0.
        return FpElement::zero(p);
    }
    let b = binom_mod_p(n + k - 1, k, p);
    if k % 2 == 0 {
        b
    } else {
        b.neg()
    }
}

/// C(a, b) mod p for 0 <= b <= a < p, via factorials mod p.
fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(b <= a && a < p);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * mod_pow(den, p - 2, p) % p
}
