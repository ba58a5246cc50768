//! The equivariant shadow of a supported Chow ring: polynomials in one
//! extra codimension-1 symbol `l` with cycle-class coefficients. The symbol
//! is not nilpotent, so products are truncated explicitly in total
//! codimension wherever a bound is known.

use crate::arith::binom_mod_p;
use crate::chow::{same_ring, CycleClass, RingSpec};
use crate::classes::{BundleClass, FilteredGBundle};
use crate::error::{Error, Result};
use std::sync::Arc;

/// a_0 + a_1 l + ... + a_n l^n with cycle-class coefficients; the total
/// codimension of a term counts l with codimension 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantClass {
    ring: Arc<RingSpec>,
    /// coeffs[i] is the coefficient of l^i; the top entry is nonzero for
    /// canonical representations, and the vector may be empty (zero).
    coeffs: Vec<CycleClass>,
}

impl EquivariantClass {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        EquivariantClass { ring: ring.clone(), coeffs: vec![] }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::from_cycle(&CycleClass::one(ring))
    }

    pub fn from_cycle(a: &CycleClass) -> Self {
        let mut out = EquivariantClass { ring: a.ring().clone(), coeffs: vec![a.clone()] };
        out.trim();
        out
    }

    /// c * l^k
    pub fn from_l_power(c: &CycleClass, k: usize) -> Self {
        let mut coeffs = vec![CycleClass::zero(c.ring()); k + 1];
        coeffs[k] = c.clone();
        let mut out = EquivariantClass { ring: c.ring().clone(), coeffs };
        out.trim();
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of l^i.
    pub fn l_coefficient(&self, i: usize) -> CycleClass {
        self.coeffs.get(i).cloned().unwrap_or_else(|| CycleClass::zero(&self.ring))
    }

    pub fn l_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("equivariant classes from different rings".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.l_coefficient(i).add(&other.l_coefficient(i))?);
        }
        let mut out = EquivariantClass { ring: self.ring.clone(), coeffs };
        out.trim();
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = EquivariantClass {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        };
        out.trim();
        out
    }

    /// Product truncated in total codimension: terms with ring codimension
    /// plus l-power beyond `max_total` are dropped.
    pub fn mul_trunc(&self, other: &Self, max_total: u32) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let n = (self.coeffs.len() + other.coeffs.len() - 1).min(max_total as usize + 1);
        let mut coeffs = vec![CycleClass::zero(&self.ring); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                let prod = a.mul(b)?.truncate_above(max_total - (i + j) as u32);
                coeffs[i + j] = coeffs[i + j].add(&prod)?;
            }
        }
        let mut out = EquivariantClass { ring: self.ring.clone(), coeffs };
        out.trim();
        Ok(out)
    }

    /// Inverse of a class with constant term 1 (in total codimension zero),
    /// exact up to total codimension `max_total`.
    pub fn inv_trunc(&self, max_total: u32) -> Result<Self> {
        let one = Self::one(&self.ring);
        if self.graded_total(0) != one {
            return Err(Error::Domain(
                "equivariant series inversion requires constant term 1".into(),
            ));
        }
        let u = self.add(&one.scale(-1))?;
        // inv <- 1 - u * inv, exact after max_total steps since u has
        // positive total codimension
        let mut inv = one.clone();
        for _ in 0..max_total {
            inv = one.add(&u.mul_trunc(&inv, max_total)?.scale(-1))?;
        }
        Ok(inv)
    }

    /// The component of homogeneous total codimension k.
    pub fn graded_total(&self, k: u32) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            if i as u32 > k {
                break;
            }
            coeffs.push(a.graded_component(k as i64 - i as i64));
        }
        let mut out = EquivariantClass { ring: self.ring.clone(), coeffs };
        out.trim();
        out
    }

    /// Total codimension when homogeneous, None for zero or mixed classes.
    pub fn homogeneous_total(&self) -> Option<u32> {
        let mut found: Option<u32> = None;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let c = a.homogeneous_codim()? + i as u32;
            match found {
                None => found = Some(c),
                Some(f) if f == c => {}
                _ => return None,
            }
        }
        found
    }

    /// Substitute l -> 1: a_0 + a_1 + ... + a_n.
    pub fn epsilon(&self) -> CycleClass {
        let mut acc = CycleClass::zero(&self.ring);
        for a in &self.coeffs {
            acc = acc.add(a).expect("one ring");
        }
        acc
    }

    /// True when every coefficient a_i with i not divisible by m vanishes.
    /// With m = p - 1 this is the support constraint satisfied by every
    /// subcone class (vacuous at p = 2).
    pub fn l_support_in_multiples_of(&self, m: u32) -> bool {
        if m <= 1 {
            return true;
        }
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, a)| a.is_zero() || (i as u32) % m == 0)
    }
}

impl std::fmt::Display for EquivariantClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| match i {
                0 => format!("{a}"),
                1 => format!("({a})*l"),
                _ => format!("({a})*l^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// prod_i (1 + c_1(L_i) + r_i * l) over the quotients of a split
/// equivariant bundle: a weight-j line contributes 1 + c1 + j*l.
pub fn equivariant_chern(m: &FilteredGBundle, max_total: u32) -> Result<EquivariantClass> {
    let ring = m.ring();
    let mut acc = EquivariantClass::one(ring);
    for (c1, w) in m.quotients() {
        let factor = EquivariantClass::from_cycle(&CycleClass::one(ring).add(c1)?)
            .add(&EquivariantClass::from_l_power(
                &CycleClass::constant(ring, *w as i64),
                1,
            ))?;
        acc = acc.mul_trunc(&factor, max_total)?;
    }
    Ok(acc)
}

/// The equivariant total Chern class of V tensor (trivial line of weight j),
/// for an honest bundle V given by its Chern classes: the classical
/// tensor-by-a-line formula c_k(V ox L) = sum_i C(r-i, k-i) c_i(V) t^(k-i)
/// evaluated at t = j*l.
pub fn equivariant_chern_twisted(
    v: &BundleClass,
    weight: u32,
    max_total: u32,
) -> Result<EquivariantClass> {
    if !v.is_honest() || v.rank() < 0 {
        return Err(Error::Unsupported(
            "equivariant twist needs an honest bundle".into(),
        ));
    }
    let ring = v.ring();
    let p = ring.modulus();
    let r = v.rank() as u64;
    let mut acc = EquivariantClass::one(ring);
    for k in 1..=r {
        for i in 0..=k {
            let binom = binom_mod_p(r - i, k - i, p);
            if binom.is_zero() {
                continue;
            }
            let li = (k - i) as usize;
            if li as u32 > max_total {
                continue;
            }
            // c_i(V) * (j l)^(k-i)
            let w_pow = crate::arith::FpElement::new(weight as i64, p).pow(k - i);
            let scalar = binom.mul(w_pow);
            let cycle = v.chern(i as i64).scale(scalar.residue() as i64);
            if cycle.is_zero() {
                continue;
            }
            acc = acc.add(&EquivariantClass::from_l_power(&cycle, li))?;
        }
    }
    Ok(acc)
}

/// The equivariant Chern class of V tensor H, where H is the split bundle
/// with trivial line quotients of weights 1..p-1. The underlying rank is
/// rank(V) * (p-1).
pub fn equivariant_chern_tensor_h(v: &BundleClass, max_total: u32) -> Result<EquivariantClass> {
    let ring = v.ring();
    let p = ring.modulus().get() as u32;
    let mut acc = EquivariantClass::one(ring);
    for j in 1..p {
        acc = acc.mul_trunc(&equivariant_chern_twisted(v, j, max_total)?, max_total)?;
    }
    Ok(acc)
}
