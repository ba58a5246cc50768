//! Truncated graded quotient polynomial rings with F_p coefficients: the
//! concrete model of the mod-p Chow ring of the varieties this crate
//! supports.
//!
//! A ring is presented by generators with a codimension and an optional
//! nilpotency bound, a global truncation in total codimension, and a list of
//! homogeneous rewrite rules (used by projective-bundle presets). Classes
//! are kept in normal form at all times: every rule fired to exhaustion,
//! nilpotent and over-dimension monomials dropped, coefficients reduced
//! mod p with zeros removed.

pub mod presets;

use crate::arith::{FpElement, PrimeModulus};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub codim: u32,
    /// g^nilpotency = 0 when present.
    pub nilpotency: Option<u32>,
}

/// A homogeneous rewrite rule lhs -> rhs; lhs is a single monomial with
/// coefficient one. Rules must strictly decrease the exponent of some
/// distinguished generator so that rewriting terminates; the presets
/// guarantee this, and a step cap guards hand-built rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Vec<u32>,
    pub rhs: Vec<(Vec<u32>, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    /// A product of projective spaces with the given dimensions; supports
    /// the degree pairing.
    ProjectiveProduct(Vec<u32>),
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    modulus: PrimeModulus,
    dimension: u32,
    generators: Vec<Generator>,
    rules: Vec<RewriteRule>,
    kind: RingKind,
    name: String,
}

/// Raw polynomial input for [`CycleClass::normalize`]: integer-coefficient
/// terms over named generators, before any reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTerm {
    pub coeff: i64,
    pub factors: Vec<(String, u32)>,
}

pub type RawPoly = Vec<RawTerm>;

const REDUCTION_STEP_CAP: usize = 2_000_000;

impl RingSpec {
    pub fn new(
        modulus: PrimeModulus,
        dimension: u32,
        generators: Vec<Generator>,
        rules: Vec<RewriteRule>,
        kind: RingKind,
        name: impl Into<String>,
    ) -> Result<Arc<Self>> {
        let mut seen = std::collections::BTreeSet::new();
        for g in &generators {
            if g.codim == 0 {
                return Err(Error::Domain(format!("generator `{}` must have codim >= 1", g.name)));
            }
            if g.nilpotency == Some(0) {
                return Err(Error::Domain(format!(
                    "generator `{}` must have nilpotency >= 1",
                    g.name
                )));
            }
            if !seen.insert(g.name.clone()) {
                return Err(Error::Domain(format!("duplicate generator `{}`", g.name)));
            }
            if g.name.is_empty()
                || !g.name.chars().next().unwrap().is_ascii_alphabetic()
                || !g.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::Domain(format!("generator name `{}` is not valid", g.name)));
            }
        }
        let n = generators.len();
        for r in &rules {
            if r.lhs.len() != n || r.rhs.iter().any(|(m, _)| m.len() != n) {
                return Err(Error::Domain("rewrite rule has wrong arity".into()));
            }
            if r.lhs.iter().all(|&e| e == 0) {
                return Err(Error::Domain("rewrite rule lhs must be a nonconstant monomial".into()));
            }
        }
        Ok(Arc::new(RingSpec { modulus, dimension, generators, rules, kind, name: name.into() }))
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn total_codim(&self, mono: &[u32]) -> u32 {
        mono.iter()
            .zip(&self.generators)
            .map(|(&e, g)| e * g.codim)
            .sum()
    }

    /// All normal-form monomials of total codimension exactly k.
    pub fn monomials_of_codim(&self, k: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.generators.len()];
        self.enumerate_monomials(0, k, &mut current, &mut out);
        out
    }

    fn enumerate_monomials(&self, idx: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == self.generators.len() {
            if remaining == 0 && self.is_normal_monomial(current) {
                out.push(current.clone());
            }
            return;
        }
        let g = &self.generators[idx];
        let max_e = remaining / g.codim;
        for e in 0..=max_e {
            current[idx] = e;
            self.enumerate_monomials(idx + 1, remaining - e * g.codim, current, out);
        }
        current[idx] = 0;
    }

    fn is_normal_monomial(&self, mono: &[u32]) -> bool {
        if self.total_codim(mono) > self.dimension {
            return false;
        }
        for (e, g) in mono.iter().zip(&self.generators) {
            if let Some(nil) = g.nilpotency {
                if *e >= nil {
                    return false;
                }
            }
        }
        for r in &self.rules {
            if r.lhs.iter().zip(mono).all(|(&l, &m)| l <= m) {
                return false;
            }
        }
        true
    }

}

/// Rings are interchangeable when they are the same allocation or
/// structurally equal presentations.
pub(crate) fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// An element of a truncated graded quotient ring: a normal-form coefficient
/// table from exponent vectors to nonzero residues mod p.
#[derive(Debug, Clone)]
pub struct CycleClass {
    ring: Arc<RingSpec>,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl PartialEq for CycleClass {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for CycleClass {}

impl CycleClass {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        CycleClass { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<RingSpec>, c: i64) -> Self {
        let mut out = Self::zero(ring);
        let r = FpElement::new(c, ring.modulus()).residue();
        if r != 0 {
            out.terms.insert(vec![0; ring.generators().len()], r);
        }
        out
    }

    pub fn generator(ring: &Arc<RingSpec>, name: &str) -> Result<Self> {
        let idx = ring
            .generator_index(name)
            .ok_or_else(|| Error::UnknownGenerator { name: name.to_string() })?;
        let mut mono = vec![0u32; ring.generators().len()];
        mono[idx] = 1;
        let mut out = Self::zero(ring);
        out.accumulate(mono, 1)?;
        Ok(out)
    }

    /// Reduces a raw integer polynomial over named generators to normal
    /// form. Idempotent: normalizing a normal form reproduces it.
    pub fn normalize(ring: &Arc<RingSpec>, raw: &RawPoly) -> Result<Self> {
        let n = ring.generators().len();
        let mut out = Self::zero(ring);
        for term in raw {
            let mut mono = vec![0u32; n];
            for (name, exp) in &term.factors {
                let idx = ring
                    .generator_index(name)
                    .ok_or_else(|| Error::UnknownGenerator { name: name.clone() })?;
                mono[idx] += exp;
            }
            let c = FpElement::new(term.coeff, ring.modulus()).residue();
            out.accumulate(mono, c)?;
        }
        Ok(out)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, FpElement)> + '_ {
        let p = self.ring.modulus();
        self.terms.iter().map(move |(m, &c)| (m, FpElement::from_u64(c, p)))
    }

    pub fn coefficient(&self, mono: &[u32]) -> FpElement {
        FpElement::from_u64(self.terms.get(mono).copied().unwrap_or(0), self.ring.modulus())
    }

    /// Reduce `mono` against rules/nilpotency/truncation and add the result
    /// into this class with coefficient `coeff`. The step cap turns a
    /// non-well-founded rule set (a user-input possibility) into an error.
    fn accumulate(&mut self, mono: Vec<u32>, coeff: u64) -> Result<()> {
        let p = self.ring.modulus().get();
        let coeff = coeff % p;
        if coeff == 0 {
            return Ok(());
        }
        let mut work = vec![(mono, coeff)];
        let mut steps = 0usize;
        'work: while let Some((m, c)) = work.pop() {
            steps += 1;
            if steps >= REDUCTION_STEP_CAP {
                return Err(Error::Domain(
                    "rewriting did not terminate; the rule set is not well-founded".into(),
                ));
            }
            if c == 0 {
                continue;
            }
            if self.ring.total_codim(&m) > self.ring.dimension() {
                continue;
            }
            for (e, g) in m.iter().zip(self.ring.generators()) {
                if let Some(nil) = g.nilpotency {
                    if *e >= nil {
                        continue 'work;
                    }
                }
            }
            let mut fired = false;
            for r in &self.ring.rules {
                if r.lhs.iter().zip(&m).all(|(&l, &e)| l <= e) {
                    let base: Vec<u32> = m.iter().zip(&r.lhs).map(|(&e, &l)| e - l).collect();
                    for (rm, rc) in &r.rhs {
                        let nm: Vec<u32> = base.iter().zip(rm).map(|(&a, &b)| a + b).collect();
                        let rc = rc.rem_euclid(p as i64) as u64;
                        work.push((nm, c * rc % p));
                    }
                    fired = true;
                    break;
                }
            }
            if fired {
                continue;
            }
            let entry = self.terms.entry(m.clone()).or_insert(0);
            *entry = (*entry + c) % p;
            if *entry == 0 {
                self.terms.remove(&m);
            }
        }
        Ok(())
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch(format!(
                "`{}` vs `{}`",
                self.ring.name(),
                other.ring.name()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let p = self.ring.modulus().get();
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            let entry = out.terms.entry(m.clone()).or_insert(0);
            *entry = (*entry + c) % p;
            if *entry == 0 {
                out.terms.remove(m);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Self {
        let p = self.ring.modulus().get();
        let c = c.rem_euclid(p as i64) as u64;
        let mut out = Self::zero(&self.ring);
        if c == 0 {
            return out;
        }
        for (m, &v) in &self.terms {
            let nv = v * c % p;
            if nv != 0 {
                out.terms.insert(m.clone(), nv);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let mono: Vec<u32> = ma.iter().zip(mb).map(|(&a, &b)| a + b).collect();
                out.accumulate(mono, ca * cb)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Terms of total codimension exactly k; negative k gives zero.
    pub fn graded_component(&self, k: i64) -> Self {
        let mut out = Self::zero(&self.ring);
        if k < 0 {
            return out;
        }
        for (m, &c) in &self.terms {
            if self.ring.total_codim(m) as i64 == k {
                out.terms.insert(m.clone(), c);
            }
        }
        out
    }

    /// Total codimension when homogeneous; None for 0 or mixed classes.
    pub fn homogeneous_codim(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| self.ring.total_codim(m));
        let first = it.next()?;
        if it.all(|c| c == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn max_codim(&self) -> u32 {
        self.terms.keys().map(|m| self.ring.total_codim(m)).max().unwrap_or(0)
    }

    /// Drop all terms of total codimension above k.
    pub fn truncate_above(&self, k: u32) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, &c) in &self.terms {
            if self.ring.total_codim(m) <= k {
                out.terms.insert(m.clone(), c);
            }
        }
        out
    }

    /// Exact inverse of a series with constant term 1, by the truncated
    /// geometric series: with u = a - 1 nilpotent, the loop inv <- 1 - u*inv
    /// is exact after dim many steps.
    pub fn invert_unit_series(&self) -> Result<Self> {
        let one = Self::one(&self.ring);
        if self.graded_component(0) != one {
            return Err(Error::Domain("series inversion requires constant term 1".into()));
        }
        let u = self.sub(&one)?;
        let mut inv = one.clone();
        for _ in 0..self.ring.dimension() {
            inv = one.sub(&u.mul(&inv)?)?;
        }
        Ok(inv)
    }

    /// The coefficient of the top monomial h1^n1 ... hm^nm of a product of
    /// projective spaces.
    pub fn degree(&self) -> Result<FpElement> {
        match self.ring.kind() {
            RingKind::ProjectiveProduct(dims) => {
                let top: Vec<u32> = dims.clone();
                Ok(self.coefficient(&top))
            }
            RingKind::General => Err(Error::Unsupported(
                "degree is defined only on products of projective spaces".into(),
            )),
        }
    }

    /// Monomial-keyed coefficient table, the wire format of all class
    /// results: keys are `name^exp` factors joined by `*`, the empty
    /// monomial is keyed `"1"`.
    pub fn coefficient_table(&self) -> BTreeMap<String, u64> {
        self.terms
            .iter()
            .map(|(m, &c)| (self.monomial_key(m), c))
            .collect()
    }

    fn monomial_key(&self, mono: &[u32]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (e, g) in mono.iter().zip(self.ring.generators()) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                _ => parts.push(format!("{}^{}", g.name, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.sort();
            parts.join("*")
        }
    }
}

impl std::fmt::Display for CycleClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<(u32, String, u64)> = self
            .terms
            .iter()
            .map(|(m, &c)| (self.ring.total_codim(m), self.monomial_key(m), c))
            .collect();
        entries.sort();
        let rendered: Vec<String> = entries
            .into_iter()
            .map(|(_, key, c)| {
                if key == "1" {
                    format!("{c}")
                } else if c == 1 {
                    key
                } else {
                    format!("{c}*{key}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests;
