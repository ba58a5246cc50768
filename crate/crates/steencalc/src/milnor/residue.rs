//! Valuations, divisor and tame-residue maps, the prepend operator, and
//! the anticommutation check.
//!
//! Convention, fixed once: the tame symbol of {f, g} at x is the class of
//!
//!   (-1)^(v(f) v(g)) * f^(v(g)) / g^(v(f))   evaluated at x,
//!
//! in kappa(x)^x modulo p-th powers. Under this convention, the boundary of
//! the prepended chain {a, f} at a place where a is a unit has the same
//! class as a(x)^(v_x(f)); the sign in the anticommutation identity turns
//! into class inversion of the other composite, so the check below compares
//! the two classes for equality via a p-th-power ratio test.

use super::{Place, RationalFunction, ResidueDatum, ResidueVector, SymbolChain};
use crate::arith::poly::Poly;
use crate::arith::{FpElement, FqField, PrimeModulus, ResidueField};
use crate::error::{Error, Result};

/// The standing hypothesis of this module: the base characteristic differs
/// from p, so p-th-power classes behave tamely at every place.
fn ensure_tame(field: &FqField, p: PrimeModulus) -> Result<()> {
    if field.characteristic() == p.get() {
        return Err(Error::Domain(format!(
            "residue classes mod p need char F_q != p; got q = {} and p = {}",
            field.order(),
            p
        )));
    }
    Ok(())
}

/// The multiplicity of a place in f; at infinity, deg den - deg num.
pub fn valuation(field: &FqField, f: &RationalFunction, place: &Place) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::Domain("the zero function has no valuation".into()));
    }
    match place {
        Place::Infinity => Ok(f.denominator().degree() - f.numerator().degree()),
        Place::Finite(pi) => {
            let count = |poly: &Poly| -> Result<i64> {
                let mut rest = poly.clone();
                let mut v = 0i64;
                loop {
                    let (q, r) = rest.div_rem(pi, field)?;
                    if r.is_zero() {
                        v += 1;
                        rest = q;
                    } else {
                        return Ok(v);
                    }
                }
            };
            Ok(count(f.numerator())? - count(f.denominator())?)
        }
    }
}

/// Valuation together with the residue of the unit part at the place.
fn local_unit(field: &FqField, f: &RationalFunction, place: &Place) -> Result<(i64, ResidueField, Poly)> {
    if f.is_zero() {
        return Err(Error::Domain("the zero function has no local unit".into()));
    }
    match place {
        Place::Infinity => {
            let v = f.denominator().degree() - f.numerator().degree();
            let kappa = ResidueField::new(field.clone(), Poly::x(field))?;
            let lead = field.mul(
                &f.numerator().leading(field),
                &field.inv(&f.denominator().leading(field))?,
            );
            Ok((v, kappa, Poly::constant(field, lead)))
        }
        Place::Finite(pi) => {
            let strip = |poly: &Poly| -> Result<(i64, Poly)> {
                let mut rest = poly.clone();
                let mut v = 0i64;
                loop {
                    let (q, r) = rest.div_rem(pi, field)?;
                    if r.is_zero() {
                        v += 1;
                        rest = q;
                    } else {
                        return Ok((v, rest));
                    }
                }
            };
            let (vn, n0) = strip(f.numerator())?;
            let (vd, d0) = strip(f.denominator())?;
            let kappa = ResidueField::new(field.clone(), pi.clone())?;
            let unit = kappa.mul(&kappa.reduce(&n0), &kappa.inv(&kappa.reduce(&d0))?);
            Ok((vn - vd, kappa, unit))
        }
    }
}

/// A unit class in the residue field of a place.
#[derive(Debug, Clone)]
pub struct TameClass {
    place: Place,
    kappa: ResidueField,
    rep: Poly,
}

impl TameClass {
    pub fn place(&self) -> &Place {
        &self.place
    }

    pub fn residue_field(&self) -> &ResidueField {
        &self.kappa
    }

    pub fn representative(&self) -> &Poly {
        &self.rep
    }

    pub fn is_trivial(&self, p: PrimeModulus) -> Result<bool> {
        self.kappa.is_pth_power(&self.rep, p)
    }

    pub fn same_class(&self, other: &TameClass, p: PrimeModulus) -> Result<bool> {
        if self.place != other.place {
            return Err(Error::Domain("classes at different places".into()));
        }
        self.kappa.same_class(&self.rep, &other.rep, p)
    }

    pub fn mul(&self, other: &TameClass) -> Result<TameClass> {
        if self.place != other.place {
            return Err(Error::Domain("classes at different places".into()));
        }
        Ok(TameClass {
            place: self.place.clone(),
            kappa: self.kappa.clone(),
            rep: self.kappa.mul(&self.rep, &other.rep),
        })
    }

    pub fn pow(&self, e: i64) -> Result<TameClass> {
        Ok(TameClass {
            place: self.place.clone(),
            kappa: self.kappa.clone(),
            rep: self.kappa.pow_i(&self.rep, e)?,
        })
    }
}

/// The divisor of f as a residue vector: place -> v_x(f) mod p, over every
/// place including infinity; zero entries are dropped.
pub fn divisor_map(field: &FqField, f: &RationalFunction, p: PrimeModulus) -> Result<ResidueVector> {
    ensure_tame(field, p)?;
    if f.is_zero() {
        return Err(Error::Domain("the zero function has no divisor".into()));
    }
    let mut out = ResidueVector::default();
    for place in super::support(field, f)? {
        let v = valuation(field, f, &place)?;
        let c = FpElement::new(v, p);
        if !c.is_zero() {
            out.entries.insert(place, ResidueDatum::Multiplicity(c));
        }
    }
    Ok(out)
}

/// The tame symbol of {f, g} at a place, under the fixed convention above.
pub fn tame_symbol(
    field: &FqField,
    f: &RationalFunction,
    g: &RationalFunction,
    place: &Place,
) -> Result<TameClass> {
    let (vf, kappa, uf) = local_unit(field, f, place)?;
    let (vg, _, ug) = local_unit(field, g, place)?;
    let mut rep = kappa.mul(&kappa.pow_i(&uf, vg)?, &kappa.pow_i(&ug, -vf)?);
    if (vf * vg) % 2 != 0 {
        rep = kappa.mul(&rep, &Poly::constant(field, field.from_int(-1)));
    }
    Ok(TameClass { place: place.clone(), kappa, rep })
}

/// Prepend a to every symbol of the chain: degree n -> n + 1, F_p-linear.
pub fn alpha_apply(
    p: PrimeModulus,
    a: &RationalFunction,
    chain: &SymbolChain,
) -> Result<SymbolChain> {
    if a.is_zero() {
        return Err(Error::Domain("prepended entry must be nonzero".into()));
    }
    if chain.degree() >= 2 {
        return Err(Error::Unsupported("prepending would exceed degree 2".into()));
    }
    let terms: Vec<(i64, Vec<RationalFunction>)> = chain
        .terms()
        .iter()
        .map(|(c, fs)| {
            let mut symbol = Vec::with_capacity(fs.len() + 1);
            symbol.push(a.clone());
            symbol.extend(fs.iter().cloned());
            (c.residue() as i64, symbol)
        })
        .collect();
    SymbolChain::new(p, chain.degree() + 1, terms)
}

/// The boundary of a chain at every place in the support of its entries:
/// multiplicities for degree 1, tame classes for degree 2.
pub fn chain_boundary_classes(
    field: &FqField,
    chain: &SymbolChain,
    p: PrimeModulus,
) -> Result<ResidueVector> {
    ensure_tame(field, p)?;
    let mut places: Vec<Place> = Vec::new();
    for (_, fs) in chain.terms() {
        for f in fs {
            for place in super::support(field, f)? {
                if !places.contains(&place) {
                    places.push(place);
                }
            }
        }
    }
    places.sort();
    let mut out = ResidueVector::default();
    for place in places {
        match chain.degree() {
            1 => {
                let mut total = FpElement::zero(p);
                for (c, fs) in chain.terms() {
                    let v = valuation(field, &fs[0], &place)?;
                    total = total.add(c.mul(FpElement::new(v, p)));
                }
                if !total.is_zero() {
                    out.entries.insert(place, ResidueDatum::Multiplicity(total));
                }
            }
            2 => {
                let mut class: Option<TameClass> = None;
                for (c, fs) in chain.terms() {
                    let t = tame_symbol(field, &fs[0], &fs[1], &place)?
                        .pow(c.residue() as i64)?;
                    class = Some(match class {
                        None => t,
                        Some(acc) => acc.mul(&t)?,
                    });
                }
                if let Some(cl) = class {
                    out.entries.insert(place, ResidueDatum::UnitClass(cl));
                }
            }
            _ => unreachable!("chain degrees are 1 or 2"),
        }
    }
    Ok(out)
}

/// One place in an anticommutation run.
#[derive(Debug, Clone)]
pub struct PlaceCheck {
    pub place: Place,
    /// v_x(a) = 0, so the identity applies at this place
    pub applicable: bool,
    /// the two composite classes agree (always true when not applicable)
    pub holds: bool,
}

/// Residue-level verification that boundary-then-prepend and
/// prepend-then-boundary agree (up to the sign convention) on the chain
/// {f}: at every place x with v_x(a) = 0 the tame class of {a, f} must
/// equal the class of a(x)^(v_x(f)). Places inside the support of a are
/// skipped, mirroring the local-unit hypothesis.
pub fn anticommute_places(
    field: &FqField,
    a: &RationalFunction,
    f: &RationalFunction,
    p: PrimeModulus,
) -> Result<Vec<PlaceCheck>> {
    ensure_tame(field, p)?;
    if a.is_zero() || f.is_zero() {
        return Err(Error::Domain("anticommutation needs nonzero functions".into()));
    }
    let mut places = super::support(field, a)?;
    for place in super::support(field, f)? {
        if !places.contains(&place) {
            places.push(place);
        }
    }
    if !places.contains(&Place::Infinity) {
        places.push(Place::Infinity);
    }
    places.sort();

    let mut out = Vec::with_capacity(places.len());
    for place in places {
        let va = valuation(field, a, &place)?;
        if va != 0 {
            out.push(PlaceCheck { place, applicable: false, holds: true });
            continue;
        }
        let lhs = tame_symbol(field, a, f, &place)?;
        let vf = valuation(field, f, &place)?;
        let (_, kappa, a_res) = local_unit(field, a, &place)?;
        let rhs = TameClass {
            place: place.clone(),
            kappa: kappa.clone(),
            rep: kappa.pow_i(&a_res, vf)?,
        };
        let holds = lhs.same_class(&rhs, p)?;
        out.push(PlaceCheck { place, applicable: true, holds });
    }
    Ok(out)
}

/// True iff the anticommutation identity holds at every applicable place.
pub fn anticommute_check(
    field: &FqField,
    a: &RationalFunction,
    f: &RationalFunction,
    p: PrimeModulus,
) -> Result<bool> {
    Ok(anticommute_places(field, a, f, p)?.iter().all(|c| c.holds))
}
