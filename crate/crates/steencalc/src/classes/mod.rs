//! Splitting-principle characteristic classes: Chern and Segre classes of
//! formal bundles, the multiplicative classes built from the root powers
//! x_i^(p-1), the mu-class of a weighted filtration, and the residue
//! operator realized on split equivariant bundles.

pub mod newton;

use crate::chow::{same_ring, CycleClass, RingSpec};
use num_traits::Signed;
use crate::error::{Error, Result};
use crate::steenrod::equivariant::EquivariantClass;
use newton::elementary_of_power_roots;
use std::sync::Arc;

/// A formal vector bundle: an integer (possibly virtual) rank together with
/// a total Chern class with constant term 1. `honest` records that the
/// class was validated as that of a genuine rank-`rank` bundle (components
/// above the rank vanish); the root-power transforms require it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleClass {
    rank: i64,
    total: CycleClass,
    honest: bool,
}

impl BundleClass {
    pub fn new(rank: i64, total: CycleClass, honest: bool) -> Result<Self> {
        if total.graded_component(0) != CycleClass::one(total.ring()) {
            return Err(Error::Domain("total Chern class must have constant term 1".into()));
        }
        if honest {
            if rank < 0 {
                return Err(Error::Domain("an honest bundle cannot have negative rank".into()));
            }
            if total.max_codim() as i64 > rank {
                return Err(Error::Domain(format!(
                    "honest rank-{rank} bundle has Chern components above its rank"
                )));
            }
        }
        Ok(BundleClass { rank, total, honest })
    }

    /// The trivial bundle of the given rank.
    pub fn trivial(ring: &Arc<RingSpec>, rank: u32) -> Self {
        BundleClass { rank: rank as i64, total: CycleClass::one(ring), honest: true }
    }

    /// A line bundle with the given first Chern class (homogeneous of
    /// codimension 1, or zero).
    pub fn line(c1: &CycleClass) -> Result<Self> {
        if !c1.is_zero() && c1.homogeneous_codim() != Some(1) {
            return Err(Error::Domain("a line class must be homogeneous of codimension 1".into()));
        }
        let total = CycleClass::one(c1.ring()).add(c1)?;
        Ok(BundleClass { rank: 1, total, honest: true })
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn total_chern(&self) -> &CycleClass {
        &self.total
    }

    pub fn is_honest(&self) -> bool {
        self.honest
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        self.total.ring()
    }

    /// c_k
    pub fn chern(&self, k: i64) -> CycleClass {
        self.total.graded_component(k)
    }
}

/// Ranks add and total Chern classes multiply.
pub fn whitney_sum(a: &BundleClass, b: &BundleClass) -> Result<BundleClass> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch("Whitney sum needs a common ring".into()));
    }
    Ok(BundleClass {
        rank: a.rank + b.rank,
        total: a.total.mul(&b.total)?,
        honest: a.honest && b.honest,
    })
}

/// The total Segre class: the exact inverse of the total Chern class, so
/// that c(V) * s(V) = 1 in the truncated ring.
pub fn segre_total(v: &BundleClass) -> CycleClass {
    v.total.invert_unit_series().expect("total Chern class has constant term 1")
}

/// Replaces the Chern roots x_1..x_r by x_1^m..x_r^m. The result is a
/// formal class whose codim-k*m component is the k-th elementary symmetric
/// function of the powered roots; for m > 1 it is no longer an honest
/// bundle class in the usual grading.
pub fn root_power_transform(v: &BundleClass, m: u32) -> Result<BundleClass> {
    if !v.honest || v.rank < 0 {
        return Err(Error::Unsupported(
            "root-power transform is defined for honest bundles only".into(),
        ));
    }
    if m == 0 {
        return Err(Error::Domain("root power must be positive".into()));
    }
    if m == 1 {
        return Ok(v.clone());
    }
    let total = transformed_total(v, m, false)?;
    Ok(BundleClass { rank: v.rank, total, honest: false })
}

/// prod (1 + x_i^(p-1)): the multiplicative class whose value on a line
/// bundle is 1 + c1^(p-1) and which is multiplicative over Whitney sums.
/// For p = 2 it coincides with the total Chern class.
pub fn b_class(v: &BundleClass) -> Result<CycleClass> {
    let p = v.ring().modulus().get();
    transformed_total(v, p as u32 - 1, false)
}

/// b(-V): the series inverse of b(V), the only way a negative argument
/// enters any computation here.
pub fn b_class_neg(v: &BundleClass) -> Result<CycleClass> {
    b_class(v)?.invert_unit_series()
}

/// prod (1 - x_i^(p-1)); componentwise, the codim k(p-1) piece is (-1)^k
/// times the one of [`b_class`].
pub fn omega_class(v: &BundleClass) -> Result<CycleClass> {
    let p = v.ring().modulus().get();
    transformed_total(v, p as u32 - 1, true)
}

fn transformed_total(v: &BundleClass, m: u32, alternate_signs: bool) -> Result<CycleClass> {
    if !v.honest || v.rank < 0 {
        return Err(Error::Unsupported(
            "root-power classes are defined for honest bundles only".into(),
        ));
    }
    let ring = v.ring();
    let d = ring.dimension();
    let r = v.rank as usize;
    let mut out = CycleClass::one(ring);
    if r == 0 || m == 0 {
        return Ok(out);
    }
    let kmax = (d / m).min(v.rank as u32) as usize;
    let es = elementary_of_power_roots(r, m, kmax, d);
    // cache c_i powers lazily
    let cherns: Vec<CycleClass> = (0..=r as i64).map(|i| v.chern(i)).collect();
    for (k, e) in es.iter().enumerate().skip(1) {
        let mut component = CycleClass::zero(ring);
        for (mono, coeff) in e.integer_terms() {
            let mut term = CycleClass::one(ring);
            for (i, &exp) in mono.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&cherns[i + 1].pow(exp)?)?;
                }
            }
            let c_mod: i64 = {
                let p_big = num_bigint::BigInt::from(ring.modulus().get());
                let mut r = &coeff % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                i64::try_from(r).expect("reduced residue fits in i64")
            };
            component = component.add(&term.scale(c_mod))?;
        }
        if alternate_signs && k % 2 == 1 {
            component = component.scale(-1);
        }
        out = out.add(&component)?;
    }
    Ok(out)
}

/// A split equivariant bundle: an ordered filtration with line quotients,
/// each carrying a first Chern class (codimension 1, possibly zero) and a
/// weight in [0, p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredGBundle {
    quotients: Vec<(CycleClass, u32)>,
    ring: Arc<RingSpec>,
}

impl FilteredGBundle {
    pub fn new(ring: &Arc<RingSpec>, quotients: Vec<(CycleClass, u32)>) -> Result<Self> {
        let p = ring.modulus().get() as u32;
        let mut reduced = Vec::with_capacity(quotients.len());
        for (c1, w) in quotients {
            if !same_ring(c1.ring(), ring) {
                return Err(Error::RingMismatch("filtration quotient in a foreign ring".into()));
            }
            if !c1.is_zero() && c1.homogeneous_codim() != Some(1) {
                return Err(Error::Domain(
                    "filtration quotients need homogeneous codimension-1 Chern classes".into(),
                ));
            }
            reduced.push((c1, w % p));
        }
        Ok(FilteredGBundle { quotients: reduced, ring: ring.clone() })
    }

    pub fn rank(&self) -> usize {
        self.quotients.len()
    }

    pub fn quotients(&self) -> &[(CycleClass, u32)] {
        &self.quotients
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    /// The underlying non-equivariant bundle class.
    pub fn bundle(&self) -> BundleClass {
        let mut acc = BundleClass::trivial(&self.ring, 0);
        for (c1, _) in &self.quotients {
            acc = whitney_sum(&acc, &BundleClass::line(c1).expect("validated")).expect("one ring");
        }
        acc
    }
}

/// prod (r_i + c_1(L_i)) over the filtration quotients.
pub fn mu_class(m: &FilteredGBundle) -> CycleClass {
    let ring = m.ring();
    let mut acc = CycleClass::one(ring);
    for (c1, w) in m.quotients() {
        let factor = CycleClass::constant(ring, *w as i64).add(c1).expect("same ring");
        acc = acc.mul(&factor).expect("same ring");
    }
    acc
}

/// The filtration of V tensor H, where H carries trivial line quotients of
/// weights 1..p-1: every line of the split V appears once per weight.
pub fn tensor_h_filtration(
    ring: &Arc<RingSpec>,
    lines: &[CycleClass],
) -> Result<FilteredGBundle> {
    let p = ring.modulus().get() as u32;
    let mut quotients = Vec::with_capacity(lines.len() * (p as usize - 1));
    for c1 in lines {
        for j in 1..p {
            quotients.push((c1.clone(), j));
        }
    }
    FilteredGBundle::new(ring, quotients)
}

/// mu(V)^{-1} applied to epsilon(sigma): the composite that computes the
/// residue operator on a split bundle with all weights invertible mod p.
pub fn rho_on_split_bundle(
    v: &FilteredGBundle,
    sigma: &EquivariantClass,
) -> Result<CycleClass> {
    let ring = v.ring();
    let p = ring.modulus();
    if v.quotients().iter().any(|(_, w)| *w % p.get() as u32 == 0) {
        return Err(Error::Domain(
            "mu-class is singular: a filtration quotient has weight 0 mod p".into(),
        ));
    }
    let mu = mu_class(v);
    let unit = mu.graded_component(0).coefficient(&vec![0; ring.generators().len()]);
    let unit_inv = unit.inv()?;
    let normalized = mu.scale(unit_inv.residue() as i64);
    let mu_inv = normalized.invert_unit_series()?.scale(unit_inv.residue() as i64);
    mu_inv.mul(&sigma.epsilon())
}
