//! Milnor K-theory symbols mod p over F_q(t) in degrees at most two, places
//! of the projective line, divisor and tame-residue maps, the
//! degree-raising prepend operator, and the anticommutation check between
//! them.
//!
//! Symbol equality in degree two is never decided; every check happens at
//! the residue level, where the K-groups of finite fields are concrete
//! (K_0 = Z/p, K_1 = kappa^x / p-th powers, K_2 = 0).

mod residue;

pub use residue::{
    alpha_apply, anticommute_check, anticommute_places, chain_boundary_classes, divisor_map,
    tame_symbol, valuation, PlaceCheck, TameClass,
};

use crate::arith::poly::{factor, is_irreducible, Poly};
use crate::arith::{FpElement, FqField, PrimeModulus};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// An element of F_q(t) in canonical form: monic denominator coprime to the
/// numerator. The zero function has a zero numerator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(field: &FqField, num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RationalFunction { num: Poly::zero(), den: Poly::one(field) });
        }
        let g = num.gcd(&den, field);
        let (num, _) = num.div_rem(&g, field)?;
        let (den, _) = den.div_rem(&g, field)?;
        let lead_inv = field.inv(&den.leading(field))?;
        Ok(RationalFunction { num: num.scale(&lead_inv, field), den: den.scale(&lead_inv, field) })
    }

    pub fn from_poly(field: &FqField, num: Poly) -> Self {
        Self::new(field, num, Poly::one(field)).expect("unit denominator")
    }

    pub fn constant(field: &FqField, c: crate::arith::FqElement) -> Self {
        Self::from_poly(field, Poly::constant(field, c))
    }

    pub fn zero(field: &FqField) -> Self {
        Self::from_poly(field, Poly::zero())
    }

    pub fn one(field: &FqField) -> Self {
        Self::from_poly(field, Poly::one(field))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &Self, field: &FqField) -> Result<Self> {
        Self::new(field, self.num.mul(&other.num, field), self.den.mul(&other.den, field))
    }

    pub fn add(&self, other: &Self, field: &FqField) -> Result<Self> {
        let num = self
            .num
            .mul(&other.den, field)
            .add(&other.num.mul(&self.den, field), field);
        Self::new(field, num, self.den.mul(&other.den, field))
    }

    pub fn neg(&self, field: &FqField) -> Self {
        RationalFunction { num: self.num.neg(field), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self, field: &FqField) -> Result<Self> {
        self.add(&other.neg(field), field)
    }

    pub fn inv(&self, field: &FqField) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of the zero function".into()));
        }
        Self::new(field, self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32, field: &FqField) -> Result<Self> {
        let mut acc = Self::one(field);
        for _ in 0..e {
            acc = acc.mul(self, field)?;
        }
        Ok(acc)
    }

    pub fn display(&self, field: &FqField) -> String {
        if self.den == Poly::one(field) {
            self.num.display(field, "t")
        } else {
            format!("({}) / ({})", self.num.display(field, "t"), self.den.display(field, "t"))
        }
    }
}

/// A closed point of the projective line over F_q: a monic irreducible
/// polynomial, or the point at infinity. The residue field has degree
/// deg(pi) (1 at infinity).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    pub fn finite(field: &FqField, pi: Poly) -> Result<Self> {
        let pi = pi.monic(field)?;
        if !is_irreducible(&pi, field)? {
            return Err(Error::Domain("a finite place must be monic irreducible".into()));
        }
        Ok(Place::Finite(pi))
    }

    pub fn degree(&self) -> u32 {
        match self {
            Place::Finite(pi) => pi.degree() as u32,
            Place::Infinity => 1,
        }
    }

    pub fn display(&self, field: &FqField) -> String {
        match self {
            Place::Finite(pi) => format!("({})", pi.display(field, "t")),
            Place::Infinity => "infinity".to_string(),
        }
    }
}

/// The places in the support of a rational function (including infinity
/// when the degree is unbalanced). Factors both numerator and denominator.
pub fn support(field: &FqField, f: &RationalFunction) -> Result<Vec<Place>> {
    if f.is_zero() {
        return Err(Error::Domain("the zero function has no divisor".into()));
    }
    let mut out: Vec<Place> = Vec::new();
    for poly in [&f.num, &f.den] {
        if poly.degree() > 0 {
            let (_, factors) = factor(poly, field)?;
            for (pi, _) in factors {
                let place = Place::Finite(pi);
                if !out.contains(&place) {
                    out.push(place);
                }
            }
        }
    }
    if f.num.degree() != f.den.degree() {
        out.push(Place::Infinity);
    }
    out.sort();
    Ok(out)
}

/// A formal F_p-linear combination of symbols {f_1, ..., f_n} with nonzero
/// rational-function entries, n in {1, 2}.
#[derive(Debug, Clone)]
pub struct SymbolChain {
    degree: usize,
    terms: Vec<(FpElement, Vec<RationalFunction>)>,
}

impl SymbolChain {
    pub fn new(p: PrimeModulus, degree: usize, terms: Vec<(i64, Vec<RationalFunction>)>) -> Result<Self> {
        if degree == 0 || degree > 2 {
            return Err(Error::Unsupported("symbol degree must be 1 or 2".into()));
        }
        let mut out = Vec::with_capacity(terms.len());
        for (c, fs) in terms {
            if fs.len() != degree {
                return Err(Error::Domain("symbol length must match the chain degree".into()));
            }
            if fs.iter().any(|f| f.is_zero()) {
                return Err(Error::Domain("symbol entries must be nonzero".into()));
            }
            let c = FpElement::new(c, p);
            if !c.is_zero() {
                out.push((c, fs));
            }
        }
        Ok(SymbolChain { degree, terms: out })
    }

    pub fn single(p: PrimeModulus, fs: Vec<RationalFunction>) -> Result<Self> {
        let n = fs.len();
        Self::new(p, n, vec![(1, fs)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[(FpElement, Vec<RationalFunction>)] {
        &self.terms
    }
}

/// A residue datum at one place: a multiplicity in Z/p for degree-1
/// sources, or a unit class in the residue field for degree-2 sources.
#[derive(Debug, Clone)]
pub enum ResidueDatum {
    Multiplicity(FpElement),
    UnitClass(TameClass),
}

/// A finitely supported map from places to residue data.
#[derive(Debug, Clone, Default)]
pub struct ResidueVector {
    pub entries: BTreeMap<Place, ResidueDatum>,
}

#[cfg(test)]
mod tests;
