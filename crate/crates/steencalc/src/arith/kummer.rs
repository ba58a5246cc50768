//! p-th-power residue classes in F_q^x and the factorization of t^p - a.

use super::poly::{factor, Poly};
use super::{FqElement, FqField, PrimeModulus};
use crate::error::{Error, Result};

/// The class of a nonzero element of F_q^x modulo p-th powers. Two classes
/// are equal iff the ratio of their representatives is a p-th power; when
/// p does not divide q - 1 there is exactly one class.
#[derive(Debug, Clone)]
pub struct PthPowerClass {
    representative: FqElement,
    field: FqField,
    modulus: PrimeModulus,
}

impl PthPowerClass {
    pub fn representative(&self) -> &FqElement {
        &self.representative
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_trivial(&self) -> Result<bool> {
        is_pth_power(&self.field, &self.representative, self.modulus)
    }

    pub fn equals(&self, other: &PthPowerClass) -> Result<bool> {
        if self.field != other.field || self.modulus != other.modulus {
            return Err(Error::Domain("p-th-power classes from different fields".into()));
        }
        let ratio = self.field.mul(&self.representative, &self.field.inv(&other.representative)?);
        is_pth_power(&self.field, &ratio, self.modulus)
    }

    /// The k-th power of the class.
    pub fn pow(&self, k: u64) -> PthPowerClass {
        PthPowerClass {
            representative: self.field.pow(&self.representative, k),
            field: self.field.clone(),
            modulus: self.modulus,
        }
    }
}

/// Whether u is a p-th power in F_q^x: when p | q - 1 this is the test
/// u^((q-1)/p) = 1; otherwise the p-th-power map is a bijection.
fn is_pth_power(field: &FqField, u: &FqElement, p: PrimeModulus) -> Result<bool> {
    if field.is_zero(u) {
        return Err(Error::Domain("p-th power class of zero".into()));
    }
    let m = field.order() - 1;
    if m % p.get() != 0 {
        return Ok(true);
    }
    Ok(field.pow(u, m / p.get()) == field.one())
}

/// The class of a nonzero u in F_q^x / (F_q^x)^p.
pub fn pth_power_class(field: &FqField, u: &FqElement, p: PrimeModulus) -> Result<PthPowerClass> {
    if field.is_zero(u) {
        return Err(Error::Domain("p-th power class of zero".into()));
    }
    Ok(PthPowerClass { representative: u.clone(), field: field.clone(), modulus: p })
}

pub fn same_class(
    field: &FqField,
    u: &FqElement,
    v: &FqElement,
    p: PrimeModulus,
) -> Result<bool> {
    pth_power_class(field, u, p)?.equals(&pth_power_class(field, v, p)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerFactor {
    pub degree: u32,
    pub multiplicity: u32,
    /// The factor itself; for degree 1 its unique root is -coeff(0).
    pub poly: Poly,
}

/// Irreducible factors of t^p - a over F_q. Requires char F_q != p, which
/// makes t^p - a separable, so every multiplicity is one and the degrees sum
/// to p.
pub fn factor_kummer(field: &FqField, a: &FqElement, p: PrimeModulus) -> Result<Vec<KummerFactor>> {
    if field.is_zero(a) {
        return Err(Error::Domain("Kummer parameter must be nonzero".into()));
    }
    if field.characteristic() == p.get() {
        return Err(Error::Domain(format!(
            "characteristic of F_{} equals p = {}",
            field.order(),
            p
        )));
    }
    let f = Poly::kummer(field, p.get(), a);
    let (_, factors) = factor(&f, field)?;
    let out: Vec<KummerFactor> = factors
        .into_iter()
        .map(|(poly, multiplicity)| KummerFactor {
            degree: poly.degree() as u32,
            multiplicity,
            poly,
        })
        .collect();
    let total: u64 = out.iter().map(|k| (k.degree * k.multiplicity) as u64).sum();
    debug_assert_eq!(total, p.get(), "factor degrees must sum to p");
    Ok(out)
}
