//! Dense Gaussian elimination over an abstract field.
//!
//! Used over K for order coordinates and over residue fields for rank
//! arguments. Matrices are small (at most 8 x 8 in practice).

use alloc::vec::Vec;

use crate::field::FieldElem;

/// Field operations with an explicit context, so that residue fields that
/// need their modulus can implement it too.
pub trait FieldOps {
    type Elem: Clone + PartialEq;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// The number field K itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct NumberField;

impl FieldOps for NumberField {
    type Elem = FieldElem;
    fn zero(&self) -> FieldElem {
        FieldElem::zero()
    }
    fn one(&self) -> FieldElem {
        FieldElem::one()
    }
    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a + b
    }
    fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a - b
    }
    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a * b
    }
    fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        a.inverse().ok()
    }
    fn is_zero(&self, a: &FieldElem) -> bool {
        a.is_zero()
    }
}

/// Row echelon form in place; returns the pivot columns and the determinant
/// factor accumulated from row swaps and pivots (meaningful for square input).
fn echelon<F: FieldOps>(f: &F, m: &mut [Vec<F::Elem>]) -> (Vec<usize>, F::Elem) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut det = f.one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&k| !f.is_zero(&m[k][c])) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            det = f.sub(&f.zero(), &det);
        }
        let pivot = m[r][c].clone();
        det = f.mul(&det, &pivot);
        let inv = f.inv(&pivot).expect("nonzero pivot");
        for k in c..cols {
            m[r][k] = f.mul(&m[r][k], &inv);
        }
        for k in 0..rows {
            if k != r && !f.is_zero(&m[k][c]) {
                let factor = m[k][c].clone();
                for col in c..cols {
                    let t = f.mul(&factor, &m[r][col]);
                    m[k][col] = f.sub(&m[k][col], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, det)
}

pub fn rank<F: FieldOps>(f: &F, m: &[Vec<F::Elem>]) -> usize {
    let mut work = m.to_vec();
    echelon(f, &mut work).0.len()
}

pub fn determinant<F: FieldOps>(f: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    let mut work = m.to_vec();
    let (pivots, det) = echelon(f, &mut work);
    if pivots.len() < n {
        f.zero()
    } else {
        det
    }
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<F: FieldOps>(f: &F, m: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = m.len();
    let mut aug: Vec<Vec<F::Elem>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..n).map(|c| if c == r { f.one() } else { f.zero() }));
            v
        })
        .collect();
    let (pivots, _) = echelon(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the right kernel `{ v : m v = 0 }`.
pub fn kernel<F: FieldOps>(f: &F, m: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut work = m.to_vec();
    let (pivots, _) = echelon(f, &mut work);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![f.zero(); cols];
        v[free] = f.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.sub(&f.zero(), &work[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Row vector times matrix.
pub fn vec_mat<F: FieldOps>(f: &F, v: &[F::Elem], m: &[Vec<F::Elem>]) -> Vec<F::Elem> {
    let cols = m[0].len();
    (0..cols)
        .map(|c| {
            v.iter()
                .zip(m)
                .fold(f.zero(), |acc, (x, row)| f.add(&acc, &f.mul(x, &row[c])))
        })
        .collect()
}
