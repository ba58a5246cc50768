//! The cone pipeline: the homological Steenrod operation of a supported
//! cycle computed through equivariant characteristic classes instead of
//! seeds.
//!
//! For a smooth ambient X and a supported Z (all of X, or a linear subspace
//! of a projective space), the class of the deformation cone inside the
//! ambient equivariant bundle is
//!
//!   cone_class = sum_{j+k = rank E - rank C} c^G_j(E) . i_*( s^G_k(C) )
//!
//! with E the equivariant envelope of T_X, C the one of T_Z, and i_* the
//! declared pushforward (substitution followed by multiplication with the
//! class of Z). Every l-power appearing is a multiple of p-1; re-indexing
//! the l-coefficients by ring codimension and applying the sign
//! (-1)^(dim X + dim Z + i) yields the class whose product with b(-T_X) is
//! the homological operation of the class of Z.

use super::equivariant::{equivariant_chern_tensor_h, EquivariantClass};
use super::VarietySpec;
use crate::arith::PrimeModulus;
use crate::chow::{same_ring, CycleClass, RingSpec};
use crate::classes::b_class_neg;
use crate::error::{Error, Result};
use std::sync::Arc;

/// The declared pushforward of a closed embedding of supported varieties:
/// identify the subvariety ring inside the ambient ring by substituting
/// generators, then multiply by the class of the subvariety.
#[derive(Debug, Clone)]
pub struct DeclaredPushforward {
    /// images of the subvariety generators inside the ambient ring, in
    /// generator order
    images: Vec<CycleClass>,
    /// the class of Z in the ambient ring, homogeneous of codim(Z in X)
    multiplier: CycleClass,
}

impl DeclaredPushforward {
    pub fn identity(ring: &Arc<RingSpec>) -> Self {
        let images = ring
            .generators()
            .iter()
            .map(|g| CycleClass::generator(ring, &g.name).expect("own generator"))
            .collect();
        DeclaredPushforward { images, multiplier: CycleClass::one(ring) }
    }

    pub fn new(
        sub_ring: &Arc<RingSpec>,
        ambient: &Arc<RingSpec>,
        images: Vec<CycleClass>,
        multiplier: CycleClass,
    ) -> Result<Self> {
        if images.len() != sub_ring.generators().len() {
            return Err(Error::Input("one image per subvariety generator".into()));
        }
        for img in &images {
            if !same_ring(img.ring(), ambient) {
                return Err(Error::RingMismatch("pushforward image in a foreign ring".into()));
            }
        }
        if !same_ring(multiplier.ring(), ambient) {
            return Err(Error::RingMismatch("pushforward multiplier in a foreign ring".into()));
        }
        Ok(DeclaredPushforward { images, multiplier })
    }

    pub fn codim_shift(&self) -> u32 {
        self.multiplier.homogeneous_codim().unwrap_or(0)
    }

    fn apply_cycle(&self, ambient: &Arc<RingSpec>, class: &CycleClass) -> Result<CycleClass> {
        let mut out = CycleClass::zero(ambient);
        for (mono, c) in class.terms() {
            let mut term = CycleClass::one(ambient);
            for (img, &e) in self.images.iter().zip(mono) {
                if e > 0 {
                    term = term.mul(&img.pow(e)?)?;
                }
            }
            out = out.add(&term.scale(c.residue() as i64))?;
        }
        out.mul(&self.multiplier)
    }

    /// i_* on equivariant classes: coefficientwise, l passes through.
    pub fn apply(&self, ambient: &Arc<RingSpec>, class: &EquivariantClass) -> Result<EquivariantClass> {
        let mut out = EquivariantClass::zero(ambient);
        for i in 0..=class.l_degree() {
            let pushed = self.apply_cycle(ambient, &class.l_coefficient(i))?;
            out = out.add(&EquivariantClass::from_l_power(&pushed, i))?;
        }
        Ok(out)
    }
}

/// An equivariant bundle given by rank and total equivariant Chern class.
#[derive(Debug, Clone)]
pub struct EquivariantBundle {
    pub rank: u32,
    pub chern: EquivariantClass,
}

/// The class of a sub-cone C inside an equivariant bundle E:
/// sum over j + k = rank E - rank C of c^G_j(E) i_*(s^G_k(C)).
/// The result is homogeneous of total codimension
/// (rank E - rank C) + codim(Z in X).
pub fn subcone_class(
    ambient: &Arc<RingSpec>,
    bundle: &EquivariantBundle,
    cone: &EquivariantBundle,
    push: &DeclaredPushforward,
) -> Result<EquivariantClass> {
    if bundle.rank < cone.rank {
        return Err(Error::Unsupported("cone rank exceeds the ambient bundle rank".into()));
    }
    let weight = bundle.rank - cone.rank;
    let total = weight + push.codim_shift();
    let segre = cone.chern.inv_trunc(weight)?;
    let pushed = push.apply(ambient, &segre)?;
    let product = bundle.chern.mul_trunc(&pushed, total)?;
    let out = product.graded_total(total);
    debug_assert!(
        out.is_zero() || out.homogeneous_total() == Some(total),
        "subcone class must be homogeneous"
    );
    Ok(out)
}

/// Which cycles the cone pipeline supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportedCycle {
    /// Z = X
    WholeVariety,
    /// A linear P^m inside a projective-space X.
    LinearSubspace { m: u32 },
}

/// The full cone-pipeline evaluation for one supported (X, Z).
#[derive(Debug, Clone)]
pub struct ConePipelineRun {
    /// the equivariant subcone class
    pub cone_class: EquivariantClass,
    /// every l-power is a multiple of p-1
    pub l_support_ok: bool,
    /// the sign-decorated sum of the l-coefficients
    pub tilde_class: CycleClass,
    /// b(-T_X) applied to the tilde class
    pub via_classes: CycleClass,
    /// the seed-based homological operation on the class of Z
    pub via_seeds: CycleClass,
    /// the class of Z used on both sides
    pub cycle: CycleClass,
}

impl ConePipelineRun {
    pub fn agree(&self) -> bool {
        self.via_classes == self.via_seeds
    }
}

/// Evaluates the homological operation of the class of Z through the cone
/// pipeline and through the seeds, for a smooth supported X.
pub fn cone_pipeline(x: &VarietySpec, z: SupportedCycle) -> Result<ConePipelineRun> {
    let ring = x.ring();
    let p: PrimeModulus = ring.modulus();
    let pm1 = p.get() as u32 - 1;
    let e_dim = x.dimension();

    let (cone, push, z_dim, cycle) = match z {
        SupportedCycle::WholeVariety => {
            let chern = equivariant_chern_tensor_h(x.tangent(), 0)?;
            // truncation bound 0 suffices: rank E - rank C = 0
            (
                EquivariantBundle { rank: e_dim * pm1, chern },
                DeclaredPushforward::identity(ring),
                e_dim,
                CycleClass::one(ring),
            )
        }
        SupportedCycle::LinearSubspace { m } => {
            if ring.generator_index("h").is_none() || ring.generators().len() != 1 {
                return Err(Error::Unsupported(
                    "linear subspaces are supported inside a single projective space".into(),
                ));
            }
            if m >= e_dim {
                return Err(Error::Unsupported("subspace dimension must be below dim X".into()));
            }
            let sub = VarietySpec::projective_space(m, p);
            let weight = (e_dim - m) * pm1;
            let chern = equivariant_chern_tensor_h(sub.tangent(), weight)?;
            let h = CycleClass::generator(ring, "h")?;
            let images = vec![h.clone()];
            let multiplier = h.pow(e_dim - m)?;
            let push = DeclaredPushforward::new(sub.ring(), ring, images, multiplier)?;
            (
                EquivariantBundle { rank: m * pm1, chern },
                push,
                m,
                CycleClass::generator(ring, "h")?.pow(e_dim - m)?,
            )
        }
    };

    let total_bound = (e_dim - z_dim) * pm1 + push.codim_shift();
    let bundle = EquivariantBundle {
        rank: e_dim * pm1,
        chern: equivariant_chern_tensor_h(x.tangent(), total_bound)?,
    };
    let cone_class = subcone_class(ring, &bundle, &cone, &push)?;
    let l_support_ok = cone_class.l_support_in_multiples_of(pm1);

    // gamma_i is the l-coefficient at index (dim X - dim Z - i)(p-1), a
    // class of ring codimension codim(Z) + i(p-1); the decorated sum applies
    // (-1)^(dim X + dim Z + i).
    let mut tilde = CycleClass::zero(ring);
    for i in 0..=(e_dim - z_dim) {
        let idx = ((e_dim - z_dim - i) * pm1) as usize;
        let gamma = cone_class.l_coefficient(idx).graded_component(
            (e_dim - z_dim + i * pm1) as i64,
        );
        let sign = if (e_dim + z_dim + i) % 2 == 0 { 1 } else { -1 };
        tilde = tilde.add(&gamma.scale(sign))?;
    }

    let via_classes = b_class_neg(x.tangent())?.mul(&tilde)?;
    let via_seeds = x.hom_total(&cycle)?;
    Ok(ConePipelineRun { cone_class, l_support_ok, tilde_class: tilde, via_classes, via_seeds, cycle })
}
