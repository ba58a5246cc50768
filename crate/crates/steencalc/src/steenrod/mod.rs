//! Steenrod operations on supported Chow rings. The cohomological total
//! operation is defined operationally: a seed class per ring generator
//! (for divisor classes, g + g^p), extended to all classes as the unique
//! additive and multiplicative map. The homological operation is the
//! product with the inverted tangent b-class. The cone pipeline in
//! [`subcone`] recomputes the homological operation through equivariant
//! characteristic classes and must agree; that agreement is part of the
//! acceptance gate.

pub mod equivariant;
pub mod subcone;

use crate::chow::{presets, same_ring, CycleClass, RingKind, RingSpec};
use crate::classes::{b_class_neg, BundleClass};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A smooth variety with enough structure to run the operations: its ring
/// presentation, the total Chern class of the tangent bundle, and one seed
/// class per generator.
#[derive(Debug, Clone)]
pub struct VarietySpec {
    ring: Arc<RingSpec>,
    dimension: u32,
    tangent: BundleClass,
    seeds: BTreeMap<String, CycleClass>,
}

impl VarietySpec {
    /// Validates the seed contract: the codim-(codim g) component of the
    /// seed of g is g itself, and the seed is supported in codimensions
    /// codim(g) + k(p-1).
    pub fn new(
        ring: Arc<RingSpec>,
        tangent_chern: CycleClass,
        seeds: BTreeMap<String, CycleClass>,
    ) -> Result<Self> {
        if !same_ring(tangent_chern.ring(), &ring) {
            return Err(Error::RingMismatch("tangent class must live in the variety ring".into()));
        }
        let dimension = ring.dimension();
        let tangent = BundleClass::new(dimension as i64, tangent_chern, true)?;
        let p = ring.modulus().get() as u32;
        for g in ring.generators() {
            let seed = seeds
                .get(&g.name)
                .ok_or_else(|| Error::Input(format!("generator `{}` has no seed", g.name)))?;
            if !same_ring(seed.ring(), &ring) {
                return Err(Error::RingMismatch("seed in a foreign ring".into()));
            }
            let gen_class = CycleClass::generator(&ring, &g.name)?;
            if seed.graded_component(g.codim as i64) != gen_class {
                return Err(Error::Input(format!(
                    "seed of `{}` must start with the generator in codimension {}",
                    g.name, g.codim
                )));
            }
            for (mono, _) in seed.terms() {
                let c = ring.total_codim(mono);
                let shifted = c as i64 - g.codim as i64;
                if shifted < 0 || (shifted as u32) % (p - 1).max(1) != 0 {
                    return Err(Error::Input(format!(
                        "seed of `{}` has support outside codim {} + k(p-1)",
                        g.name, g.codim
                    )));
                }
            }
        }
        Ok(VarietySpec { ring, dimension, tangent, seeds })
    }

    /// P^n with the hyperplane seed h + h^p.
    pub fn projective_space(n: u32, p: crate::arith::PrimeModulus) -> Self {
        Self::projective_product(&[n], p)
    }

    /// A product of projective spaces; every factor generator is a divisor
    /// class and gets the divisor seed.
    pub fn projective_product(dims: &[u32], p: crate::arith::PrimeModulus) -> Self {
        let ring = presets::projective_product(dims, p);
        let mut tangent = CycleClass::one(&ring);
        let mut seeds = BTreeMap::new();
        for (g, &n) in ring.generators().iter().zip(dims) {
            let h = CycleClass::generator(&ring, &g.name).expect("preset generator");
            let one_plus_h = CycleClass::one(&ring).add(&h).expect("same ring");
            tangent = tangent.mul(&one_plus_h.pow(n + 1).expect("small power")).expect("same ring");
            seeds.insert(g.name.clone(), wu_seed(&ring, &g.name).expect("divisor seed"));
        }
        VarietySpec::new(ring, tangent, seeds).expect("preset variety is valid")
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn tangent(&self) -> &BundleClass {
        &self.tangent
    }

    pub fn seed(&self, name: &str) -> Option<&CycleClass> {
        self.seeds.get(name)
    }

    /// S_X: the additive, multiplicative extension of the seeds; S(1) = 1.
    pub fn coh_total(&self, class: &CycleClass) -> Result<CycleClass> {
        if !same_ring(class.ring(), &self.ring) {
            return Err(Error::RingMismatch("class from a foreign ring".into()));
        }
        let mut out = CycleClass::zero(&self.ring);
        for (mono, coeff) in class.terms() {
            let mut term = CycleClass::constant(&self.ring, coeff.residue() as i64);
            for (i, &e) in mono.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let seed = &self.seeds[&self.ring.generators()[i].name];
                term = term.mul(&seed.pow(e)?)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// S^k_X on a homogeneous class of codimension n: the component of the
    /// total operation in codimension n + k(p-1).
    pub fn coh_k(&self, class: &CycleClass, k: i64) -> Result<CycleClass> {
        if class.is_zero() {
            return Ok(CycleClass::zero(&self.ring));
        }
        let n = class.homogeneous_codim().ok_or_else(|| {
            Error::Domain("graded Steenrod components act on homogeneous classes".into())
        })?;
        let p = self.ring.modulus().get() as i64;
        let total = self.coh_total(class)?;
        Ok(total.graded_component(n as i64 + k * (p - 1)))
    }

    /// S^X = b(-T_X) . S_X.
    pub fn hom_total(&self, class: &CycleClass) -> Result<CycleClass> {
        let b_neg = b_class_neg(&self.tangent)?;
        b_neg.mul(&self.coh_total(class)?)
    }
}

/// The divisor seed g(1 + g^(p-1)) = g + g^p: the value of the
/// cohomological operation on a codimension-1 class represented by a smooth
/// divisor whose normal bundle restricts a line bundle with first Chern
/// class g. That geometric hypothesis is the caller's contract.
pub fn wu_seed(ring: &Arc<RingSpec>, name: &str) -> Result<CycleClass> {
    let g = CycleClass::generator(ring, name)?;
    let idx = ring.generator_index(name).expect("resolved above");
    if ring.generators()[idx].codim != 1 {
        return Err(Error::Unsupported(format!(
            "divisor seed applies to codimension-1 generators; `{name}` has codim {}",
            ring.generators()[idx].codim
        )));
    }
    let p = ring.modulus().get() as u32;
    g.add(&g.pow(p)?)
}

/// A graded ring homomorphism between supported varieties, given by the
/// images of the target generators. Construction verifies that nilpotency
/// relations and rewrite rules are preserved.
#[derive(Debug, Clone)]
pub struct MorphismSpec {
    source: VarietySpec,
    target: VarietySpec,
    images: Vec<CycleClass>,
    kind: MorphismKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismKind {
    LinearEmbedding,
    Projection,
}

impl MorphismSpec {
    pub fn new(
        source: VarietySpec,
        target: VarietySpec,
        images: &BTreeMap<String, CycleClass>,
        kind: MorphismKind,
    ) -> Result<Self> {
        let tring = target.ring().clone();
        let mut ordered = Vec::with_capacity(tring.generators().len());
        for g in tring.generators() {
            let img = images
                .get(&g.name)
                .ok_or_else(|| Error::Input(format!("no pullback image for `{}`", g.name)))?;
            if !same_ring(img.ring(), source.ring()) {
                return Err(Error::RingMismatch("pullback image in a foreign ring".into()));
            }
            if !img.is_zero() && img.homogeneous_codim() != Some(g.codim) {
                return Err(Error::Input(format!(
                    "pullback image of `{}` must be homogeneous of codimension {}",
                    g.name, g.codim
                )));
            }
            ordered.push(img.clone());
        }
        let morphism = MorphismSpec { source, target, images: ordered, kind };
        // relations must map to relations
        for (i, g) in tring.generators().iter().enumerate() {
            if let Some(nil) = g.nilpotency {
                if !morphism.images[i].pow(nil)?.is_zero() {
                    return Err(Error::Input(format!(
                        "pullback does not preserve {}^{} = 0",
                        g.name, nil
                    )));
                }
            }
        }
        for rule in tring.rules_cloned() {
            let lhs = morphism.apply_monomial(&rule.lhs)?;
            let mut rhs = CycleClass::zero(morphism.source.ring());
            for (mono, c) in &rule.rhs {
                rhs = rhs.add(&morphism.apply_monomial(mono)?.scale(*c))?;
            }
            if lhs != rhs {
                return Err(Error::Input("pullback does not preserve a rewrite rule".into()));
            }
        }
        Ok(morphism)
    }

    /// The linear embedding P^m into P^n (m <= n): h maps to h.
    pub fn linear_projective_embedding(
        source: VarietySpec,
        target: VarietySpec,
    ) -> Result<Self> {
        if source.ring().generator_index("h").is_none()
            || target.ring().generator_index("h").is_none()
        {
            return Err(Error::Unsupported(
                "linear embeddings are between single projective spaces".into(),
            ));
        }
        if source.dimension() > target.dimension() {
            return Err(Error::Input("embedding needs source dimension <= target".into()));
        }
        let h = CycleClass::generator(source.ring(), "h")?;
        let mut images = BTreeMap::new();
        images.insert("h".to_string(), h);
        MorphismSpec::new(source, target, &images, MorphismKind::LinearEmbedding)
    }

    pub fn source(&self) -> &VarietySpec {
        &self.source
    }

    pub fn target(&self) -> &VarietySpec {
        &self.target
    }

    pub fn kind(&self) -> MorphismKind {
        self.kind
    }

    fn apply_monomial(&self, mono: &[u32]) -> Result<CycleClass> {
        let mut acc = CycleClass::one(self.source.ring());
        for (img, &e) in self.images.iter().zip(mono) {
            if e > 0 {
                acc = acc.mul(&img.pow(e)?)?;
            }
        }
        Ok(acc)
    }

    /// Pullback: substitute generator images; a graded ring homomorphism.
    pub fn pullback(&self, class: &CycleClass) -> Result<CycleClass> {
        if !same_ring(class.ring(), self.target.ring()) {
            return Err(Error::RingMismatch("pullback argument from a foreign ring".into()));
        }
        let mut out = CycleClass::zero(self.source.ring());
        for (mono, c) in class.terms() {
            out = out.add(&self.apply_monomial(mono)?.scale(c.residue() as i64))?;
        }
        Ok(out)
    }
}

/// Builds the product variety of two products of projective spaces,
/// together with the embeddings of the factors' classes.
pub struct ProductVariety {
    pub variety: VarietySpec,
    left_dims: usize,
}

impl ProductVariety {
    pub fn new(x: &VarietySpec, y: &VarietySpec) -> Result<Self> {
        let (dx, dy) = match (x.ring().kind(), y.ring().kind()) {
            (RingKind::ProjectiveProduct(a), RingKind::ProjectiveProduct(b)) => {
                (a.clone(), b.clone())
            }
            _ => {
                return Err(Error::Unsupported(
                    "external products are supported between products of projective spaces".into(),
                ))
            }
        };
        if x.ring().modulus() != y.ring().modulus() {
            return Err(Error::RingMismatch("external product needs one prime".into()));
        }
        let mut dims = dx.clone();
        dims.extend_from_slice(&dy);
        let variety = VarietySpec::projective_product(&dims, x.ring().modulus());
        Ok(ProductVariety { variety, left_dims: dx.len() })
    }

    /// gamma x 1
    pub fn embed_left(&self, class: &CycleClass) -> Result<CycleClass> {
        self.embed(class, 0)
    }

    /// 1 x delta
    pub fn embed_right(&self, class: &CycleClass) -> Result<CycleClass> {
        self.embed(class, self.left_dims)
    }

    fn embed(&self, class: &CycleClass, offset: usize) -> Result<CycleClass> {
        let pring = self.variety.ring();
        let n = pring.generators().len();
        let mut out = CycleClass::zero(pring);
        for (mono, c) in class.terms() {
            if mono.len() + offset > n {
                return Err(Error::RingMismatch("factor class does not fit the product".into()));
            }
            let mut m = vec![0u32; n];
            m[offset..offset + mono.len()].copy_from_slice(mono);
            let raw = crate::chow::RawTerm {
                coeff: c.residue() as i64,
                factors: m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (pring.generators()[i].name.clone(), e))
                    .collect(),
            };
            out = out.add(&CycleClass::normalize(pring, &vec![raw])?)?;
        }
        Ok(out)
    }

    /// The Kuenneth inclusion of gamma x delta.
    pub fn external_class(&self, gamma: &CycleClass, delta: &CycleClass) -> Result<CycleClass> {
        self.embed_left(gamma)?.mul(&self.embed_right(delta)?)
    }
}

/// gamma x delta in the product ring. The total operation of the product
/// variety on the result equals the external product of the factor
/// operations; the property suites re-verify that.
pub fn external_product(
    x: &VarietySpec,
    y: &VarietySpec,
    gamma: &CycleClass,
    delta: &CycleClass,
) -> Result<(ProductVariety, CycleClass)> {
    let product = ProductVariety::new(x, y)?;
    let class = product.external_class(gamma, delta)?;
    Ok((product, class))
}

/// Fiber integration along q: P^r x X -> X: extracts the coefficient of
/// h1^r, lowering codimension by r. The source ring must be a product
/// preset whose first factor is P^r.
pub fn pushforward_projection(
    source: &VarietySpec,
    target: &VarietySpec,
    class: &CycleClass,
) -> Result<CycleClass> {
    let (sdims, tdims) = match (source.ring().kind(), target.ring().kind()) {
        (RingKind::ProjectiveProduct(a), RingKind::ProjectiveProduct(b)) => (a.clone(), b.clone()),
        _ => {
            return Err(Error::Unsupported(
                "projection pushforward needs product presets".into(),
            ))
        }
    };
    if sdims.len() != tdims.len() + 1 || sdims[1..] != tdims[..] {
        return Err(Error::Unsupported(
            "source must be P^r x (target) with matching factors".into(),
        ));
    }
    if !same_ring(class.ring(), source.ring()) {
        return Err(Error::RingMismatch("class from a foreign ring".into()));
    }
    let r = sdims[0];
    let tring = target.ring();
    let mut out = CycleClass::zero(tring);
    for (mono, c) in class.terms() {
        if mono[0] != r {
            continue;
        }
        let rest = &mono[1..];
        let raw = crate::chow::RawTerm {
            coeff: c.residue() as i64,
            factors: rest
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (tring.generators()[i].name.clone(), e))
                .collect(),
        };
        out = out.add(&CycleClass::normalize(tring, &vec![raw])?)?;
    }
    Ok(out)
}
