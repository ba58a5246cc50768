//! The residue field F_q[t]/(pi) at a monic irreducible pi, with just enough
//! arithmetic for residue-class computations: multiplication, inversion,
//! p-th-power class tests, and the norm down to F_q.

use super::poly::Poly;
use super::{FqElement, FqField, PrimeModulus};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct ResidueField {
    field: FqField,
    modulus: Poly,
    order: u64,
}

impl ResidueField {
    /// `modulus` must be monic irreducible; irreducibility is the caller's
    /// contract (places are validated on construction).
    pub fn new(field: FqField, modulus: Poly) -> Result<Self> {
        let d = modulus.degree();
        if d < 1 || !modulus.is_monic(&field) {
            return Err(Error::Domain("residue field needs a monic modulus of degree >= 1".into()));
        }
        let order = field
            .order()
            .checked_pow(d as u32)
            .ok_or_else(|| Error::Domain("residue field too large".into()))?;
        Ok(ResidueField { field, modulus, order })
    }

    pub fn base(&self) -> &FqField {
        &self.field
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// q^deg(pi)
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn reduce(&self, a: &Poly) -> Poly {
        a.rem(&self.modulus, &self.field).expect("monic modulus")
    }

    pub fn one(&self) -> Poly {
        Poly::one(&self.field)
    }

    pub fn is_zero(&self, a: &Poly) -> bool {
        self.reduce(a).is_zero()
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.mul(b, &self.field))
    }

    pub fn pow(&self, a: &Poly, e: u64) -> Poly {
        a.pow_mod(e, &self.modulus, &self.field).expect("monic modulus")
    }

    pub fn inv(&self, a: &Poly) -> Result<Poly> {
        if self.is_zero(a) {
            return Err(Error::Domain("inverse of zero in residue field".into()));
        }
        // unit group has order q^d - 1
        Ok(self.pow(a, self.order - 2))
    }

    /// a^e with e allowed to be negative.
    pub fn pow_i(&self, a: &Poly, e: i64) -> Result<Poly> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            let inv = self.inv(a)?;
            Ok(self.pow(&inv, (-e) as u64))
        }
    }

    /// Whether a nonzero element is a p-th power: when p divides q^d - 1 this
    /// is the test a^((q^d-1)/p) = 1; otherwise the p-th power map is a
    /// bijection and every unit qualifies.
    pub fn is_pth_power(&self, a: &Poly, p: PrimeModulus) -> Result<bool> {
        if self.is_zero(a) {
            return Err(Error::Domain("p-th power class of zero".into()));
        }
        let m = self.order - 1;
        if m % p.get() != 0 {
            return Ok(true);
        }
        Ok(self.pow(a, m / p.get()) == self.one())
    }

    /// Same class in kappa^x / (kappa^x)^p.
    pub fn same_class(&self, a: &Poly, b: &Poly, p: PrimeModulus) -> Result<bool> {
        let ratio = self.mul(a, &self.inv(b)?);
        self.is_pth_power(&ratio, p)
    }

    /// Norm down to F_q: the product of the q-power conjugates, computed as
    /// a^((q^d-1)/(q-1)). The result is a constant.
    pub fn norm(&self, a: &Poly) -> Result<FqElement> {
        if self.is_zero(a) {
            return Ok(self.field.zero());
        }
        let q = self.field.order();
        let e = (self.order - 1) / (q - 1);
        let n = self.pow(a, e);
        if n.degree() > 0 {
            return Err(Error::Domain("norm did not land in the base field".into()));
        }
        Ok(n.coeff(0, &self.field))
    }
}
