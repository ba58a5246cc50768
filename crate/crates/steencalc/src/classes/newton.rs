//! Universal symmetric-function arithmetic: for a rank-r bundle with Chern
//! roots x_1..x_r and a positive integer m, the elementary symmetric
//! functions of x_1^m, ..., x_r^m are universal integer polynomials in
//! e_1..e_r. They are computed here over exact rationals through the
//! power-sum recurrences, with integrality asserted at the end.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A polynomial in e_1..e_r with rational coefficients, keyed by exponent
/// vectors. The weight of a monomial counts e_i with weight i; everything of
/// weight above `max_weight` is dropped eagerly because it lands beyond the
/// ring truncation after substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    rank: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl SymPoly {
    pub fn zero(rank: usize) -> Self {
        SymPoly { rank, terms: BTreeMap::new() }
    }

    pub fn constant(rank: usize, c: i64) -> Self {
        let mut s = Self::zero(rank);
        if c != 0 {
            s.terms.insert(vec![0; rank], BigRational::from(BigInt::from(c)));
        }
        s
    }

    /// e_i as a polynomial (1-based); out-of-range i gives zero.
    pub fn elementary(rank: usize, i: usize) -> Self {
        let mut s = Self::zero(rank);
        if i >= 1 && i <= rank {
            let mut mono = vec![0u32; rank];
            mono[i - 1] = 1;
            s.terms.insert(mono, BigRational::one());
        }
        s
    }

    fn weight(mono: &[u32]) -> u32 {
        mono.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
    }

    pub fn add_assign(&mut self, other: &SymPoly) {
        for (m, c) in &other.terms {
            let entry = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn scaled(&self, c: &BigRational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.rank);
        }
        SymPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SymPoly, max_weight: u32) -> SymPoly {
        let mut out = SymPoly::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Vec<u32> = ma.iter().zip(mb).map(|(&a, &b)| a + b).collect();
                if Self::weight(&m) > max_weight {
                    continue;
                }
                let entry = out.terms.entry(m.clone()).or_insert_with(BigRational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    out.terms.remove(&m);
                }
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        // BigRational keeps a reduced, positive denominator.
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Integer terms (exponent vector, coefficient); panics unless integral.
    pub fn integer_terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.terms
            .iter()
            .map(|(m, c)| {
                assert!(c.denom().is_one(), "non-integral symmetric-function coefficient");
                (m.clone(), c.numer().clone())
            })
            .collect()
    }
}

/// Power sums p_1..p_upto of the roots, as polynomials in e_1..e_r, via
/// Newton's recurrence p_k = sum_{i<k} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k.
pub fn power_sums(rank: usize, upto: usize, max_weight: u32) -> Vec<SymPoly> {
    let mut ps: Vec<SymPoly> = Vec::with_capacity(upto + 1);
    ps.push(SymPoly::constant(rank, rank as i64)); // p_0 = r
    for k in 1..=upto {
        let mut acc = SymPoly::zero(rank);
        for i in 1..k {
            if i > rank {
                break;
            }
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let term = SymPoly::elementary(rank, i).mul(&ps[k - i], max_weight);
            acc.add_assign(&term.scaled(&BigRational::from(BigInt::from(sign))));
        }
        if k <= rank {
            let sign: i64 = if k % 2 == 1 { 1 } else { -1 };
            acc.add_assign(&SymPoly::constant(rank, sign * k as i64).mul(
                &SymPoly::elementary(rank, k),
                max_weight,
            ));
        }
        ps.push(acc);
    }
    ps
}

/// Elementary symmetric functions E_0..E_kmax of the m-th powers of the
/// roots, as integer polynomials in e_1..e_r. E_k has pure weight k*m.
pub fn elementary_of_power_roots(
    rank: usize,
    m: u32,
    kmax: usize,
    max_weight: u32,
) -> Vec<SymPoly> {
    let upto = (kmax as u32 * m) as usize;
    let ps = power_sums(rank, upto, max_weight);
    // q_i = p_{i*m} are the power sums of the m-th powers
    let mut es: Vec<SymPoly> = vec![SymPoly::constant(rank, 1)];
    for k in 1..=kmax {
        // k E_k = sum_{i=1..k} (-1)^(i-1) E_{k-i} q_i
        let mut acc = SymPoly::zero(rank);
        for i in 1..=k {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let q = &ps[i * m as usize];
            let term = es[k - i].mul(q, max_weight);
            acc.add_assign(&term.scaled(&BigRational::from(BigInt::from(sign))));
        }
        let k_inv = BigRational::new(BigInt::one(), BigInt::from(k as i64));
        let ek = acc.scaled(&k_inv);
        assert!(ek.is_integral(), "Newton transform produced a non-integral coefficient");
        es.push(ek);
    }
    es
}
