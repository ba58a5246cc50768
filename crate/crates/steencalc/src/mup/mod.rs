//! Finite-dimensional Z/pZ-graded commutative algebras over F_q, as
//! validated structure-constant tables with subspace arithmetic on top:
//! fixed-point ideals, quotients, the torsor condition record, twists,
//! the deformation-grading identity, and fiber decompositions.

pub mod corpus;
pub mod linalg;
mod torsor;

pub use torsor::{
    deformation_check, deformation_report, fiber_decomposition, kummer_parameter, torsor_check,
    twist, DeformationReport, TorsorReport,
};

use crate::arith::{FqElement, FqField, PrimeModulus};
use crate::error::{Error, Result};
use linalg::Vector;

/// A subspace of one graded component, held as a canonical reduced-echelon
/// basis over F_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    grade: usize,
    ambient_dim: usize,
    rows: Vec<Vector>,
}

impl Subspace {
    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }
}

/// A graded ideal given componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    pub components: Vec<Subspace>,
}

/// A Z/pZ-graded commutative algebra over F_q with char F_q != p.
/// Commutativity, associativity, the unit law, and the grading are verified
/// exhaustively on basis elements at construction; invalid tables are
/// rejected, never silently accepted.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    p: PrimeModulus,
    field: FqField,
    grade_dims: Vec<usize>,
    offsets: Vec<usize>,
    names: Vec<String>,
    unit: Vector,
    table: Vec<Vec<Vector>>,
}

impl GradedAlgebra {
    pub fn from_table(
        p: PrimeModulus,
        field: FqField,
        grade_dims: Vec<usize>,
        names: Vec<String>,
        unit: Vector,
        table: Vec<Vec<Vector>>,
    ) -> Result<Self> {
        if field.characteristic() == p.get() {
            return Err(Error::Algebra(format!(
                "characteristic of F_{} equals p = {}",
                field.order(),
                p
            )));
        }
        if grade_dims.len() != p.get() as usize {
            return Err(Error::Algebra("one component per residue class mod p".into()));
        }
        let total: usize = grade_dims.iter().sum();
        if total == 0 {
            return Err(Error::Algebra("the zero algebra has no unit".into()));
        }
        if names.len() != total {
            return Err(Error::Algebra("one name per basis element".into()));
        }
        {
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != names.len() {
                return Err(Error::Algebra("duplicate basis names".into()));
            }
        }
        if unit.len() != total || table.len() != total || table.iter().any(|r| r.len() != total) {
            return Err(Error::Algebra("table dimensions do not match the basis".into()));
        }
        for row in &table {
            for v in row {
                if v.len() != total {
                    return Err(Error::Algebra("table entry has wrong length".into()));
                }
            }
        }
        let mut offsets = Vec::with_capacity(grade_dims.len());
        let mut acc = 0usize;
        for &d in &grade_dims {
            offsets.push(acc);
            acc += d;
        }
        let algebra = GradedAlgebra { p, field, grade_dims, offsets, names, unit, table };

        // unit lives in grade 0
        if !algebra.supported_in_grade(&algebra.unit, 0) {
            return Err(Error::Algebra("unit element must lie in the degree-0 component".into()));
        }
        // grading: e_a e_b lies in grade (grade a + grade b) mod p
        let pg = p.get() as usize;
        for a in 0..total {
            for b in 0..total {
                let g = (algebra.grade_of(a) + algebra.grade_of(b)) % pg;
                if !algebra.supported_in_grade(&algebra.table[a][b], g) {
                    return Err(Error::Algebra(format!(
                        "product {}*{} leaves its graded component",
                        algebra.names[a], algebra.names[b]
                    )));
                }
                if algebra.table[a][b] != algebra.table[b][a] {
                    return Err(Error::Algebra(format!(
                        "product not commutative at {}*{}",
                        algebra.names[a], algebra.names[b]
                    )));
                }
            }
        }
        // unit law on basis vectors
        for b in 0..total {
            let mut e = vec![algebra.field.zero(); total];
            e[b] = algebra.field.one();
            if algebra.mul(&algebra.unit, &e) != e {
                return Err(Error::Algebra(format!("unit law fails at {}", algebra.names[b])));
            }
        }
        // associativity on all basis triples
        for a in 0..total {
            let mut ea = vec![algebra.field.zero(); total];
            ea[a] = algebra.field.one();
            for b in 0..total {
                let ab = algebra.table[a][b].clone();
                let mut eb = vec![algebra.field.zero(); total];
                eb[b] = algebra.field.one();
                for c in 0..total {
                    let mut ec = vec![algebra.field.zero(); total];
                    ec[c] = algebra.field.one();
                    let lhs = algebra.mul(&ab, &ec);
                    let bc = algebra.mul(&eb, &ec);
                    let rhs = algebra.mul(&ea, &bc);
                    if lhs != rhs {
                        return Err(Error::Algebra(format!(
                            "product not associative at ({}, {}, {})",
                            algebra.names[a], algebra.names[b], algebra.names[c]
                        )));
                    }
                }
            }
        }
        Ok(algebra)
    }

    pub fn prime(&self) -> PrimeModulus {
        self.p
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn total_dim(&self) -> usize {
        self.names.len()
    }

    pub fn grade_dims(&self) -> &[usize] {
        &self.grade_dims
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn grade_of(&self, global: usize) -> usize {
        for (i, &off) in self.offsets.iter().enumerate() {
            if global >= off && global < off + self.grade_dims[i] {
                return i;
            }
        }
        panic!("basis index {global} out of range");
    }

    fn supported_in_grade(&self, v: &Vector, grade: usize) -> bool {
        v.iter().enumerate().all(|(i, c)| self.field.is_zero(c) || self.grade_of(i) == grade)
    }

    /// Bilinear product of global coordinate vectors.
    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let n = self.total_dim();
        let mut out = vec![self.field.zero(); n];
        for (a, ua) in u.iter().enumerate() {
            if self.field.is_zero(ua) {
                continue;
            }
            for (b, vb) in v.iter().enumerate() {
                if self.field.is_zero(vb) {
                    continue;
                }
                let scale = self.field.mul(ua, vb);
                for (o, t) in out.iter_mut().zip(&self.table[a][b]) {
                    let add = self.field.mul(&scale, t);
                    *o = self.field.add(o, &add);
                }
            }
        }
        out
    }

    /// The coordinates of a grade component inside the global space.
    pub fn component_range(&self, grade: usize) -> std::ops::Range<usize> {
        let start = self.offsets[grade];
        start..start + self.grade_dims[grade]
    }

    fn restrict(&self, v: &Vector, grade: usize) -> Vector {
        self.component_range(grade).map(|i| v[i].clone()).collect()
    }

    fn extend(&self, v: &Vector, grade: usize) -> Vector {
        let mut out = vec![self.field.zero(); self.total_dim()];
        for (i, c) in self.component_range(grade).zip(v) {
            out[i] = c.clone();
        }
        out
    }

    /// The whole component R_i as a subspace.
    pub fn full_component(&self, grade: usize) -> Subspace {
        let d = self.grade_dims[grade];
        let mut rows = Vec::with_capacity(d);
        for i in 0..d {
            let mut row = vec![self.field.zero(); d];
            row[i] = self.field.one();
            rows.push(row);
        }
        Subspace { grade, ambient_dim: d, rows }
    }

    pub fn subspace_from_vectors(&self, grade: usize, vectors: Vec<Vector>) -> Subspace {
        let rows = linalg::rref(&self.field, vectors);
        Subspace { grade, ambient_dim: self.grade_dims[grade], rows }
    }

    /// The row space of all pairwise products of two subspaces; lands in
    /// grade (i + j) mod p.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let target = (u.grade + v.grade) % self.grade_dims.len();
        let mut rows = Vec::new();
        for a in &u.rows {
            let ga = self.extend(a, u.grade);
            for b in &v.rows {
                let gb = self.extend(b, v.grade);
                let prod = self.mul(&ga, &gb);
                rows.push(self.restrict(&prod, target));
            }
        }
        self.subspace_from_vectors(target, rows)
    }

    /// R_i * R_j as a subspace of R_{i+j}.
    pub fn component_product(&self, i: usize, j: usize) -> Subspace {
        self.subspace_product(&self.full_component(i), &self.full_component(j))
    }

    pub fn subspace_sum(&self, u: &Subspace, v: &Subspace) -> Subspace {
        assert_eq!(u.grade, v.grade, "sum of subspaces of one component");
        let mut rows = u.rows.clone();
        rows.extend(v.rows.clone());
        self.subspace_from_vectors(u.grade, rows)
    }

    pub fn subspace_eq(&self, u: &Subspace, v: &Subspace) -> bool {
        u.grade == v.grade && u.rows == v.rows
    }

    pub fn subspace_contains(&self, big: &Subspace, small: &Subspace) -> bool {
        big.grade == small.grade
            && small.rows.iter().all(|r| linalg::contains(&self.field, &big.rows, r))
    }

    /// I = sum over i+j = p (i, j >= 1) of R_i R_j, inside R_0; verified to
    /// be closed under multiplication by R_0.
    pub fn fixed_ideal(&self) -> Subspace {
        let p = self.grade_dims.len();
        let mut acc = self.subspace_from_vectors(0, vec![]);
        for i in 1..p {
            let j = p - i;
            acc = self.subspace_sum(&acc, &self.component_product(i, j));
        }
        let closure = self.subspace_product(&self.full_component(0), &acc);
        assert!(
            self.subspace_contains(&acc, &closure),
            "fixed ideal must be closed under R_0"
        );
        acc
    }

    /// The commutative algebra R_0 / I with induced structure constants.
    pub fn fixed_point_quotient(&self) -> QuotientAlgebra {
        let ideal = self.fixed_ideal();
        QuotientAlgebra::new(self, &ideal)
    }
}

/// R_0 modulo an ideal subspace, with multiplication induced from R_0.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    field: FqField,
    /// coordinates of R_0 that survive (non-pivot columns of the ideal)
    survivors: Vec<usize>,
    table: Vec<Vec<Vector>>,
}

impl QuotientAlgebra {
    fn new(algebra: &GradedAlgebra, ideal: &Subspace) -> Self {
        assert_eq!(ideal.grade, 0);
        let field = algebra.field.clone();
        let pivots = linalg::pivot_columns(&field, &ideal.rows);
        let survivors: Vec<usize> =
            (0..algebra.grade_dims[0]).filter(|c| !pivots.contains(c)).collect();
        let dim = survivors.len();
        let reduce_to_quotient = |v: &Vector| -> Vector {
            let r = linalg::reduce(&field, &ideal.rows, v);
            survivors.iter().map(|&c| r[c].clone()).collect()
        };
        let mut table = vec![vec![vec![]; dim]; dim];
        for (a, &ca) in survivors.iter().enumerate() {
            for (b, &cb) in survivors.iter().enumerate() {
                let mut ea = vec![field.zero(); algebra.grade_dims[0]];
                ea[ca] = field.one();
                let mut eb = vec![field.zero(); algebra.grade_dims[0]];
                eb[cb] = field.one();
                let prod = algebra.mul(&algebra.extend(&ea, 0), &algebra.extend(&eb, 0));
                table[a][b] = reduce_to_quotient(&algebra.restrict(&prod, 0));
            }
        }
        QuotientAlgebra { field, survivors, table }
    }

    pub fn dim(&self) -> usize {
        self.survivors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.survivors.is_empty()
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (a, ua) in u.iter().enumerate() {
            for (b, vb) in v.iter().enumerate() {
                let scale = self.field.mul(ua, vb);
                for (o, t) in out.iter_mut().zip(&self.table[a][b]) {
                    let add = self.field.mul(&scale, t);
                    *o = self.field.add(o, &add);
                }
            }
        }
        out
    }
}

// ---- corpus constructors ----

impl GradedAlgebra {
    /// `F_q[t]/(t^p - a)` with deg t = 1: the Kummer algebra of parameter a.
    pub fn kummer(field: FqField, p: PrimeModulus, a: &FqElement) -> Result<Self> {
        if field.is_zero(a) {
            return Err(Error::Algebra("Kummer parameter must be nonzero".into()));
        }
        let pg = p.get() as usize;
        let names: Vec<String> = (0..pg).map(|i| format!("t{i}")).collect();
        let mut table = vec![vec![vec![]; pg]; pg];
        for i in 0..pg {
            for j in 0..pg {
                let mut v = vec![field.zero(); pg];
                if i + j < pg {
                    v[i + j] = field.one();
                } else {
                    v[i + j - pg] = a.clone();
                }
                table[i][j] = v;
            }
        }
        let mut unit = vec![field.zero(); pg];
        unit[0] = field.one();
        GradedAlgebra::from_table(p, field, vec![1; pg], names, unit, table)
    }

    /// `F_q[t]/(t^p - 1)`: the group algebra, the trivial torsor.
    pub fn group_algebra(field: FqField, p: PrimeModulus) -> Result<Self> {
        let one = field.one();
        Self::kummer(field, p, &one)
    }

    /// `F_q[t]/(t^m)` with deg t = 1: the cone grading on a truncated
    /// polynomial algebra.
    pub fn truncated_cone(field: FqField, p: PrimeModulus, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Algebra("truncation order must be positive".into()));
        }
        let pg = p.get() as usize;
        let mut grade_dims = vec![0usize; pg];
        // basis t^0 .. t^{m-1}, grouped by degree mod p
        let mut by_grade: Vec<Vec<usize>> = vec![vec![]; pg];
        for j in 0..m {
            by_grade[j % pg].push(j);
        }
        let mut global_of_power = vec![0usize; m];
        let mut names = Vec::with_capacity(m);
        let mut idx = 0usize;
        for (g, powers) in by_grade.iter().enumerate() {
            grade_dims[g] = powers.len();
            for &j in powers {
                global_of_power[j] = idx;
                names.push(format!("c{j}"));
                idx += 1;
            }
        }
        let mut table = vec![vec![vec![]; m]; m];
        for i in 0..m {
            for j in 0..m {
                let mut v = vec![field.zero(); m];
                if i + j < m {
                    v[global_of_power[i + j]] = field.one();
                }
                table[global_of_power[i]][global_of_power[j]] = v;
            }
        }
        let mut unit = vec![field.zero(); m];
        unit[global_of_power[0]] = field.one();
        GradedAlgebra::from_table(p, field, grade_dims, names, unit, table)
    }

    /// The direct product A x B with componentwise grading.
    pub fn direct_product(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<Self> {
        if a.p != b.p {
            return Err(Error::Algebra("direct product needs matching p".into()));
        }
        if a.field != b.field {
            return Err(Error::Algebra("direct product needs matching fields".into()));
        }
        let p = a.p.get() as usize;
        let field = a.field.clone();
        let mut grade_dims = vec![0usize; p];
        // global layout: per grade, A's basis then B's basis
        let mut map_a = vec![0usize; a.total_dim()];
        let mut map_b = vec![0usize; b.total_dim()];
        let mut names = Vec::new();
        let mut idx = 0usize;
        for g in 0..p {
            grade_dims[g] = a.grade_dims[g] + b.grade_dims[g];
            for i in a.component_range(g) {
                map_a[i] = idx;
                names.push(format!("l_{}", a.names[i]));
                idx += 1;
            }
            for i in b.component_range(g) {
                map_b[i] = idx;
                names.push(format!("r_{}", b.names[i]));
                idx += 1;
            }
        }
        let total = idx;
        let mut table = vec![vec![vec![field.zero(); total]; total]; total];
        for x in 0..a.total_dim() {
            for y in 0..a.total_dim() {
                let mut v = vec![field.zero(); total];
                for (i, c) in a.table[x][y].iter().enumerate() {
                    v[map_a[i]] = c.clone();
                }
                table[map_a[x]][map_a[y]] = v;
            }
        }
        for x in 0..b.total_dim() {
            for y in 0..b.total_dim() {
                let mut v = vec![field.zero(); total];
                for (i, c) in b.table[x][y].iter().enumerate() {
                    v[map_b[i]] = c.clone();
                }
                table[map_b[x]][map_b[y]] = v;
            }
        }
        let mut unit = vec![field.zero(); total];
        for (i, c) in a.unit.iter().enumerate() {
            unit[map_a[i]] = c.clone();
        }
        for (i, c) in b.unit.iter().enumerate() {
            unit[map_b[i]] = c.clone();
        }
        GradedAlgebra::from_table(a.p, field, grade_dims, names, unit, table)
    }
}

#[cfg(test)]
mod tests;
