//! The torsor condition record, Kummer parameters, twists, the
//! deformation-grading identity, and fiber decompositions.

use super::linalg;
use super::{GradedAlgebra, GradedIdeal, Subspace};
use crate::arith::{factor_kummer, pth_power_class, FqElement, PrimeModulus, PthPowerClass};
use crate::error::{Error, Result};

/// One boolean per equivalent characterization of a free action. The first
/// six are always computed; the coaction-matrix condition is computed when
/// the degree-0 component is one-dimensional over F_q (a field), and is
/// `None` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsorReport {
    /// (1) the fixed-point quotient R_0/I is zero
    pub fixed_point_empty: bool,
    /// (2) I = R_0
    pub ideal_is_unit: bool,
    /// (3) R_i^p = R_0 for every i = 1..p-1
    pub all_powers_span: bool,
    /// (4) R_1^p = R_0
    pub first_power_spans: bool,
    /// (5) R_i R_{p-i} = R_0 for every i = 1..p-1
    pub complementary_products_span: bool,
    /// (6) every product map R_k x R_l -> R_{k+l} spans, with all
    /// components of equal dimension
    pub component_products_bijective: bool,
    /// (7) the coaction comparison map is a bijection (dimension + rank of
    /// the explicit matrix), when R_0 = F_q
    pub coaction_matrix_bijective: Option<bool>,
}

impl TorsorReport {
    pub fn conditions(&self) -> Vec<bool> {
        let mut v = vec![
            self.fixed_point_empty,
            self.ideal_is_unit,
            self.all_powers_span,
            self.first_power_spans,
            self.complementary_products_span,
            self.component_products_bijective,
        ];
        if let Some(c7) = self.coaction_matrix_bijective {
            v.push(c7);
        }
        v
    }

    pub fn is_torsor(&self) -> bool {
        self.conditions().iter().all(|&b| b)
    }

    /// True when the conditions disagree, which the equivalence theorem
    /// rules out; suites assert this never happens.
    pub fn is_mixed(&self) -> bool {
        let c = self.conditions();
        c.iter().any(|&b| b) && !c.iter().all(|&b| b)
    }
}

/// Evaluates the equivalent torsor conditions.
pub fn torsor_check(a: &GradedAlgebra) -> TorsorReport {
    let p = a.prime().get() as usize;
    let r0 = a.full_component(0);
    let ideal = a.fixed_ideal();
    let ideal_is_unit = a.subspace_eq(&ideal, &r0);
    let fixed_point_empty = a.fixed_point_quotient().is_zero();

    let power_spans = |i: usize| -> bool {
        let mut acc = a.full_component(i);
        for _ in 1..p {
            acc = a.subspace_product(&acc, &a.full_component(i));
        }
        debug_assert_eq!(acc.grade(), 0);
        a.subspace_eq(&acc, &r0)
    };
    let all_powers_span = (1..p).all(power_spans);
    let first_power_spans = power_spans(1);

    let complementary_products_span =
        (1..p).all(|i| a.subspace_eq(&a.component_product(i, p - i), &a.full_component(0)));

    let dims_equal = (0..p).all(|i| a.grade_dims()[i] == a.grade_dims()[0]);
    let component_products_bijective = dims_equal
        && (0..p).all(|k| {
            (0..p).all(|l| {
                a.subspace_eq(&a.component_product(k, l), &a.full_component((k + l) % p))
            })
        });

    let coaction_matrix_bijective =
        if a.grade_dims()[0] == 1 { Some(coaction_bijective(a)) } else { None };

    TorsorReport {
        fixed_point_empty,
        ideal_is_unit,
        all_powers_span,
        first_power_spans,
        complementary_products_span,
        component_products_bijective,
        coaction_matrix_bijective,
    }
}

/// The comparison map R (x) R -> F_q[t]/(t^p - 1) (x) R sending
/// a_k (x) b_l to t^k (x) a_k b_l, as an explicit F_q-matrix: bijective iff
/// the matrix is square of full rank. Assumes dim R_0 = 1, so tensors over
/// R_0 are tensors over F_q.
fn coaction_bijective(a: &GradedAlgebra) -> bool {
    let field = a.field();
    let p = a.prime().get() as usize;
    let d = a.total_dim();
    let rows = p * d; // target basis t^k (x) e_c
    let cols = d * d; // source basis e_a (x) e_b
    if rows != cols {
        return false;
    }
    let mut matrix: Vec<Vec<FqElement>> = Vec::with_capacity(cols);
    for x in 0..d {
        for y in 0..d {
            let mut ex = vec![field.zero(); d];
            ex[x] = field.one();
            let mut ey = vec![field.zero(); d];
            ey[y] = field.one();
            let prod = a.mul(&ex, &ey);
            let mut col = vec![field.zero(); rows];
            let k = a.grade_of(x);
            for (c, val) in prod.iter().enumerate() {
                col[k * d + c] = val.clone();
            }
            matrix.push(col);
        }
    }
    linalg::rank(&linalg::rref(field, matrix)) == cols
}

/// The class of b^p in F_q^x for any nonzero b in R_1; requires a torsor
/// with one-dimensional R_0. The class does not depend on the choice of b,
/// which is asserted by re-deriving it from a scaled representative.
pub fn kummer_parameter(a: &GradedAlgebra) -> Result<PthPowerClass> {
    let report = torsor_check(a);
    if !report.is_torsor() {
        return Err(Error::Domain("Kummer parameter requires a torsor".into()));
    }
    if a.grade_dims()[0] != 1 {
        return Err(Error::Domain("Kummer parameter requires R_0 = F_q".into()));
    }
    let field = a.field().clone();
    let p = a.prime().get();
    let d = a.total_dim();
    let range = a.component_range(1);
    debug_assert_eq!(range.len(), 1, "torsor components over a field are lines");
    let b_idx = range.start;
    let unit_coord = a.component_range(0).start;

    let parameter_from = |b: &Vec<FqElement>| -> Result<FqElement> {
        let mut acc = b.clone();
        for _ in 1..p {
            acc = a.mul(&acc, b);
        }
        // acc = b^p lies in R_0 = F_q * v0; unit = u * v0, so acc = (c/u) * 1
        let c = acc[unit_coord].clone();
        let u = a.unit()[unit_coord].clone();
        field.inv(&u).map(|ui| field.mul(&c, &ui))
    };

    let mut b = vec![field.zero(); d];
    b[b_idx] = field.one();
    let value = parameter_from(&b)?;
    if field.is_zero(&value) {
        return Err(Error::Domain("degenerate torsor: b^p = 0".into()));
    }
    let class = pth_power_class(&field, &value, a.prime())?;

    // independence of the choice: any other b is a nonzero scalar multiple
    if field.order() > 2 {
        let lambda = field
            .elements()
            .find(|e| !field.is_zero(e) && *e != field.one())
            .expect("a field with more than two elements has such a scalar");
        let mut b2 = vec![field.zero(); d];
        b2[b_idx] = lambda;
        let value2 = parameter_from(&b2)?;
        let class2 = pth_power_class(&field, &value2, a.prime())?;
        assert!(
            class.equals(&class2)?,
            "Kummer parameter must not depend on the choice of generator"
        );
    }
    Ok(class)
}

/// The k-twist: regrade with component i of the result equal to component
/// ik mod p of the input, so the twisted degree-1 part is the original
/// degree-k part and the Kummer parameter moves by a -> a^k. The underlying
/// ungraded algebra is unchanged; the result is re-validated.
pub fn twist(a: &GradedAlgebra, k: u64) -> Result<GradedAlgebra> {
    let p = a.prime().get();
    if k % p == 0 {
        return Err(Error::Domain("twist weight must be invertible mod p".into()));
    }
    let k = k % p;
    let pg = p as usize;
    let field = a.field().clone();

    // permutation: position new_global -> old_global
    let mut old_of_new: Vec<usize> = Vec::with_capacity(a.total_dim());
    let mut grade_dims = vec![0usize; pg];
    for new_grade in 0..pg {
        let old_grade = (k as usize * new_grade) % pg;
        grade_dims[new_grade] = a.grade_dims()[old_grade];
        old_of_new.extend(a.component_range(old_grade));
    }
    let mut new_of_old = vec![0usize; a.total_dim()];
    for (new, &old) in old_of_new.iter().enumerate() {
        new_of_old[old] = new;
    }
    let permute = |v: &Vec<FqElement>| -> Vec<FqElement> {
        let mut out = vec![field.zero(); v.len()];
        for (old, c) in v.iter().enumerate() {
            out[new_of_old[old]] = c.clone();
        }
        out
    };
    let names = old_of_new.iter().map(|&o| a.names()[o].clone()).collect();
    let unit = permute(a.unit());
    let d = a.total_dim();
    let mut table = vec![vec![vec![]; d]; d];
    for x in 0..d {
        for y in 0..d {
            table[new_of_old[x]][new_of_old[y]] = permute(&a.table_entry(x, y));
        }
    }
    GradedAlgebra::from_table(a.prime(), field, grade_dims, names, unit, table)
}

impl GradedAlgebra {
    pub(crate) fn table_entry(&self, a: usize, b: usize) -> Vec<FqElement> {
        self.table[a][b].clone()
    }

    /// Whether R_j * U_i lands inside U_{i+j} for every pair of grades.
    pub fn is_graded_ideal(&self, u: &GradedIdeal) -> bool {
        let p = self.prime().get() as usize;
        (0..p).all(|j| {
            (0..p).all(|i| {
                let prod = self.subspace_product(&self.full_component(j), &u.components[i]);
                self.subspace_contains(&u.components[(i + j) % p], &prod)
            })
        })
    }

    /// J = I + R_1 + ... + R_{p-1} as a graded ideal.
    pub fn augmentation_ideal(&self) -> GradedIdeal {
        let p = self.prime().get() as usize;
        let mut components = Vec::with_capacity(p);
        components.push(self.fixed_ideal());
        for i in 1..p {
            components.push(self.full_component(i));
        }
        GradedIdeal { components }
    }

    /// Componentwise product of graded ideals: (U V)_m = sum over
    /// i + j = m mod p of U_i V_j.
    pub fn ideal_product(&self, u: &GradedIdeal, v: &GradedIdeal) -> GradedIdeal {
        let p = self.prime().get() as usize;
        let mut components: Vec<Subspace> =
            (0..p).map(|m| self.subspace_from_vectors(m, vec![])).collect();
        for i in 0..p {
            for j in 0..p {
                let m = (i + j) % p;
                let prod = self.subspace_product(&u.components[i], &v.components[j]);
                components[m] = self.subspace_sum(&components[m], &prod);
            }
        }
        GradedIdeal { components }
    }
}

#[derive(Debug, Clone)]
pub struct DeformationReport {
    pub kmax: u32,
    /// per k = 1..=kmax: (J^k)_0 equals the sum over i+j = p of
    /// J_i (J^{k-1})_j
    pub slice_identity: Vec<bool>,
    /// per k = 1..=kmax: the full degree-(-k) part of the deformation ideal
    /// (all splittings a+b = k) equals (J^k)_0, so the quotient vanishes in
    /// negative degrees
    pub negative_degree_vanishes: Vec<bool>,
    /// the nonnegative-degree quotient components all have dim R_0/I
    pub quotient_dim: usize,
}

impl DeformationReport {
    pub fn holds(&self) -> bool {
        self.slice_identity.iter().all(|&b| b)
            && self.negative_degree_vanishes.iter().all(|&b| b)
    }
}

/// Verifies the deformation-grading identity for k = 1..=kmax.
pub fn deformation_report(a: &GradedAlgebra, kmax: u32) -> DeformationReport {
    let p = a.prime().get() as usize;
    let j_ideal = a.augmentation_ideal();
    // powers[k] = J^k; powers[0] = the unit ideal (full components)
    let unit_ideal =
        GradedIdeal { components: (0..p).map(|i| a.full_component(i)).collect() };
    let mut powers: Vec<GradedIdeal> = vec![unit_ideal];
    for k in 1..=kmax as usize {
        let prev = &powers[k - 1];
        powers.push(a.ideal_product(prev, &j_ideal));
    }

    let mut slice_identity = Vec::with_capacity(kmax as usize);
    let mut negative_degree_vanishes = Vec::with_capacity(kmax as usize);
    for k in 1..=kmax as usize {
        // slice: sum over i+j = p, i,j >= 1 of J_i (J^{k-1})_j
        let mut slice = a.subspace_from_vectors(0, vec![]);
        for i in 1..p {
            let j = p - i;
            let prod =
                a.subspace_product(&j_ideal.components[i], &powers[k - 1].components[j % p]);
            slice = a.subspace_sum(&slice, &prod);
        }
        slice_identity.push(a.subspace_eq(&slice, &powers[k].components[0]));

        // full sum over a+b = k (a, b >= 0), i+j = p
        let mut full = a.subspace_from_vectors(0, vec![]);
        for split_a in 0..=k {
            let split_b = k - split_a;
            for i in 1..p {
                let j = p - i;
                let prod = a.subspace_product(
                    &powers[split_a].components[i],
                    &powers[split_b].components[j % p],
                );
                full = a.subspace_sum(&full, &prod);
            }
        }
        negative_degree_vanishes.push(a.subspace_eq(&full, &powers[k].components[0]));
    }

    let quotient_dim = a.fixed_point_quotient().dim();
    DeformationReport { kmax, slice_identity, negative_degree_vanishes, quotient_dim }
}

/// True iff the deformation-grading identity holds through kmax.
pub fn deformation_check(a: &GradedAlgebra, kmax: u32) -> bool {
    deformation_report(a, kmax).holds()
}

/// Residue degrees of the fiber of the Kummer covering over a point with
/// parameter a: the factor degrees of t^p - a, aggregated, with the
/// push-pull count sum(degree * count) = p asserted.
pub fn fiber_decomposition(
    q: u64,
    p: PrimeModulus,
    a: &FqElement,
) -> Result<Vec<(u32, u32)>> {
    let field = crate::arith::FqField::new(q)?;
    let a = field.from_coords(a.coords())?;
    let factors = factor_kummer(&field, &a, p)?;
    let mut agg: std::collections::BTreeMap<u32, u32> = Default::default();
    for f in &factors {
        *agg.entry(f.degree).or_insert(0) += f.multiplicity;
    }
    let out: Vec<(u32, u32)> = agg.into_iter().collect();
    let total: u64 = out.iter().map(|&(d, c)| (d * c) as u64).sum();
    if total != p.get() {
        return Err(Error::Domain(format!(
            "fiber degrees sum to {total}, expected p = {}",
            p
        )));
    }
    Ok(out)
}
