//! Row-echelon linear algebra over F_q, enough for subspace arithmetic.

use crate::arith::{FqElement, FqField};

pub type Vector = Vec<FqElement>;

/// Reduced row echelon form; zero rows dropped, pivots are 1 and alone in
/// their column. The result is a canonical basis of the row space.
pub fn rref(field: &FqField, rows: Vec<Vector>) -> Vec<Vector> {
    let mut rows: Vec<Vector> = rows.into_iter().filter(|r| !is_zero(field, r)).collect();
    if rows.is_empty() {
        return rows;
    }
    let width = rows[0].len();
    let mut out: Vec<Vector> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..width {
        // find a row with nonzero entry at col
        let Some(idx) = rows.iter().position(|r| !field.is_zero(&r[col])) else {
            continue;
        };
        let mut pivot = rows.swap_remove(idx);
        let inv = field.inv(&pivot[col]).expect("nonzero pivot");
        for c in pivot.iter_mut() {
            *c = field.mul(c, &inv);
        }
        for r in rows.iter_mut() {
            let factor = r[col].clone();
            if field.is_zero(&factor) {
                continue;
            }
            for (a, b) in r.iter_mut().zip(&pivot) {
                let sub = field.mul(&factor, b);
                *a = field.sub(a, &sub);
            }
        }
        rows.retain(|r| !is_zero(field, r));
        // clear earlier rows at this column
        for r in out.iter_mut() {
            let factor = r[col].clone();
            if field.is_zero(&factor) {
                continue;
            }
            for (a, b) in r.iter_mut().zip(&pivot) {
                let sub = field.mul(&factor, b);
                *a = field.sub(a, &sub);
            }
        }
        out.push(pivot);
        pivot_cols.push(col);
        if rows.is_empty() {
            break;
        }
    }
    out
}

pub fn is_zero(field: &FqField, v: &Vector) -> bool {
    v.iter().all(|c| field.is_zero(c))
}

/// Reduce v against an RREF basis; the remainder is zero iff v lies in the
/// row space.
pub fn reduce(field: &FqField, basis: &[Vector], v: &Vector) -> Vector {
    let mut v = v.clone();
    for row in basis {
        let col = row.iter().position(|c| !field.is_zero(c)).expect("no zero rows in rref");
        let factor = v[col].clone();
        if field.is_zero(&factor) {
            continue;
        }
        for (a, b) in v.iter_mut().zip(row) {
            let sub = field.mul(&factor, b);
            *a = field.sub(a, &sub);
        }
    }
    v
}

pub fn contains(field: &FqField, basis: &[Vector], v: &Vector) -> bool {
    is_zero(field, &reduce(field, basis, v))
}

pub fn rank(basis: &[Vector]) -> usize {
    basis.len()
}

/// Pivot columns of an RREF basis.
pub fn pivot_columns(field: &FqField, basis: &[Vector]) -> Vec<usize> {
    basis
        .iter()
        .map(|row| row.iter().position(|c| !field.is_zero(c)).expect("no zero rows"))
        .collect()
}
