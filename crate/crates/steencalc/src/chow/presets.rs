//! Ring presets addressable by name: `P{n}`, `P{n1}xP{n2}x...`, and
//! `ProjBundle(base, c1, c2, ...)`.

use super::{CycleClass, Generator, RewriteRule, RingKind, RingSpec};
use crate::arith::PrimeModulus;
use crate::error::{Error, Result};
use std::sync::Arc;

/// The Chow ring of P^n mod p: one generator `h` of codimension 1 with
/// h^{n+1} = 0.
pub fn projective_space(n: u32, p: PrimeModulus) -> Arc<RingSpec> {
    projective_product(&[n], p)
}

/// The Chow ring of P^{n1} x ... x P^{nk}. A single factor names its
/// generator `h`; several factors use `h1`, `h2`, ...
pub fn projective_product(dims: &[u32], p: PrimeModulus) -> Arc<RingSpec> {
    assert!(!dims.is_empty(), "at least one projective factor");
    let gens: Vec<Generator> = dims
        .iter()
        .enumerate()
        .map(|(i, &n)| Generator {
            name: if dims.len() == 1 { "h".to_string() } else { format!("h{}", i + 1) },
            codim: 1,
            nilpotency: Some(n + 1),
        })
        .collect();
    let dimension: u32 = dims.iter().sum();
    let name = dims.iter().map(|n| format!("P{n}")).collect::<Vec<_>>().join("x");
    RingSpec::new(p, dimension, gens, vec![], RingKind::ProjectiveProduct(dims.to_vec()), name)
        .expect("preset is well-formed")
}

/// The Chow ring of a projectivized rank-r bundle over `base`: adds a
/// codimension-1 generator (default `g`) with the relation
/// g^r = -(c1 g^{r-1} + ... + cr), where the Chern classes live in the base
/// ring. The Chern class list c1..cr determines r.
pub fn projective_bundle(
    base: &Arc<RingSpec>,
    chern: &[CycleClass],
    gen_name: &str,
) -> Result<Arc<RingSpec>> {
    if chern.is_empty() {
        return Err(Error::Domain("projective bundle needs at least c1 (rank >= 1)".into()));
    }
    let r = chern.len() as u32;
    for (i, c) in chern.iter().enumerate() {
        if !super::same_ring(c.ring(), base) {
            return Err(Error::RingMismatch("Chern classes must live in the base ring".into()));
        }
        if !c.is_zero() && c.homogeneous_codim() != Some(i as u32 + 1) {
            return Err(Error::Domain(format!(
                "c{} must be homogeneous of codimension {}",
                i + 1,
                i + 1
            )));
        }
    }
    let mut gens = base.generators().to_vec();
    gens.push(Generator { name: gen_name.to_string(), codim: 1, nilpotency: None });
    let n = gens.len();
    let mut lhs = vec![0u32; n];
    lhs[n - 1] = r;
    let mut rhs: Vec<(Vec<u32>, i64)> = Vec::new();
    for (i, c) in chern.iter().enumerate() {
        // term -c_{i+1} * g^{r-1-i}
        for (mono, coeff) in c.terms() {
            let mut m = mono.clone();
            m.push(r - 1 - i as u32);
            rhs.push((m, -(coeff.residue() as i64)));
        }
    }
    // base rules keep their arity by appending a zero exponent for g
    let mut rules: Vec<RewriteRule> = base
        .rules_cloned()
        .into_iter()
        .map(|mut rule| {
            rule.lhs.push(0);
            for (m, _) in rule.rhs.iter_mut() {
                m.push(0);
            }
            rule
        })
        .collect();
    rules.push(RewriteRule { lhs, rhs });
    RingSpec::new(
        base.modulus(),
        base.dimension() + r - 1,
        gens,
        rules,
        RingKind::General,
        format!("ProjBundle({}; rank {})", base.name(), r),
    )
}

/// Resolves a preset name: `P3`, `P1xP2`, `P2xP1xP1`.
pub fn by_name(name: &str, p: PrimeModulus) -> Result<Arc<RingSpec>> {
    let dims = parse_product_name(name)
        .ok_or_else(|| Error::Input(format!("unknown ring preset `{name}`")))?;
    Ok(projective_product(&dims, p))
}

pub(crate) fn parse_product_name(name: &str) -> Option<Vec<u32>> {
    let mut dims = Vec::new();
    for part in name.split('x') {
        let rest = part.strip_prefix('P')?;
        let n: u32 = rest.parse().ok()?;
        if n > 64 {
            return None;
        }
        dims.push(n);
    }
    if dims.is_empty() {
        None
    } else {
        Some(dims)
    }
}

impl RingSpec {
    pub(crate) fn rules_cloned(&self) -> Vec<RewriteRule> {
        self.rules.clone()
    }
}
