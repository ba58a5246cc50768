//! Exact arithmetic kernels: prime fields, small finite fields, binomial
//! coefficients modulo a prime, p-th-power residue classes and Kummer
//! polynomial factorization.

mod binomial;
mod fq;
mod kummer;
pub mod poly;
mod residue_field;

pub use binomial::{binom_mod_p, binom_neg_mod_p};
pub use fq::{FqElement, FqField};
pub use kummer::{factor_kummer, pth_power_class, same_class, KummerFactor, PthPowerClass};
pub use residue_field::ResidueField;

use crate::error::{Error, Result};

/// A prime number fixed once and used as the modulus of all cycle-class
/// coefficients. Primality is checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus {
    p: u64,
}

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        Ok(PrimeModulus { p })
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.p
    }
}

impl std::fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// Trial division; moduli here are desk-scale.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of Z/pZ for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    residue: u64,
    modulus: PrimeModulus,
}

impl FpElement {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        let p = modulus.get() as i64;
        let r = value.rem_euclid(p) as u64;
        FpElement { residue: r, modulus }
    }

    pub fn from_u64(value: u64, modulus: PrimeModulus) -> Self {
        FpElement { residue: value % modulus.get(), modulus }
    }

    #[inline]
    pub fn residue(self) -> u64 {
        self.residue
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        FpElement { residue: 0, modulus }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        FpElement { residue: 1 % modulus.get(), modulus }
    }

    pub fn add(self, other: Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        FpElement::from_u64(self.residue + other.residue, self.modulus)
    }

    pub fn sub(self, other: Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        let p = self.modulus.get();
        FpElement::from_u64(self.residue + p - other.residue, self.modulus)
    }

    pub fn mul(self, other: Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        let prod = (self.residue as u128 * other.residue as u128) % self.modulus.get() as u128;
        FpElement { residue: prod as u64, modulus: self.modulus }
    }

    pub fn neg(self) -> Self {
        let p = self.modulus.get();
        FpElement { residue: (p - self.residue) % p, modulus: self.modulus }
    }

    /// Multiplicative inverse via Fermat; zero has none.
    pub fn inv(self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::Domain("inverse of zero in F_p".into()));
        }
        let p = self.modulus.get();
        Ok(FpElement { residue: mod_pow(self.residue, p - 2, p), modulus: self.modulus })
    }

    pub fn pow(self, e: u64) -> Self {
        FpElement { residue: mod_pow(self.residue, e, self.modulus.get()), modulus: self.modulus }
    }
}

impl std::fmt::Display for FpElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.residue)
    }
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    base = 0;
    let _ = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}
