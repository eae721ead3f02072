//! The standard order modulo 2.
//!
//! O/2O is a 4-dimensional algebra over F8 = Z[eta]/2 in which i and j
//! commute, so it is far from a matrix ring even though Q_Hur/2 Q_Hur is one.

use alloc::vec::Vec;

use super::mat::Mat2;
use super::ring::{build_residue_ring, Residue, ResidueRing};
use super::split::split_even;
use crate::error::Result;
use crate::ideal::IdealK;
use crate::linalg::rank;

/// An element of O/2O on the basis 1, i, j, ij.
pub type Dyadic = [Residue; 4];

fn f8() -> Result<ResidueRing> {
    Ok(build_residue_ring(&IdealK::from_int(2)?)?.components()[0].clone())
}

/// Product in O/2O; the signs of the quaternion product vanish modulo 2.
pub fn dyadic_mul(r: &ResidueRing, x: &Dyadic, y: &Dyadic) -> Dyadic {
    let e = r.eta();
    let e2 = r.mul(&e, &e);
    let m = |a: &Residue, b: &Residue| r.mul(a, b);
    let s = |a: Residue, b: Residue| r.add(&a, &b);
    let [a1, b1, c1, d1] = x;
    let [a2, b2, c2, d2] = y;
    [
        s(
            s(m(a1, a2), m(&e, &s(m(b1, b2), m(c1, c2)))),
            m(&e2, &m(d1, d2)),
        ),
        s(s(m(a1, b2), m(b1, a2)), m(&e, &s(m(d1, c2), m(c1, d2)))),
        s(s(m(a1, c2), m(c1, a2)), m(&e, &s(m(b1, d2), m(d1, b2)))),
        s(s(m(a1, d2), m(d1, a2)), s(m(b1, c2), m(c1, b2))),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicStructure {
    pub size: u64,
    pub nilpotent_count: u64,
    /// F8-dimensions of J, J^2, J^3 for the radical J.
    pub radical_dims: [usize; 3],
    pub commutative: bool,
    /// eta^8 = eta in F8.
    pub frobenius_fixes_eta: bool,
    /// (i - eta^4)^2 = (j - eta^4)^2 = 0.
    pub presentation_holds: bool,
}

fn span_dim(r: &ResidueRing, vectors: &[Dyadic]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Residue>> = vectors.iter().map(|v| v.to_vec()).collect();
    rank(r, &rows)
}

/// Greedy basis of the span of `vectors`.
fn basis_of(r: &ResidueRing, vectors: &[Dyadic]) -> Vec<Dyadic> {
    let mut basis: Vec<Dyadic> = Vec::new();
    for v in vectors {
        let mut trial = basis.clone();
        trial.push(*v);
        if span_dim(r, &trial) > basis.len() {
            basis = trial;
        }
        if basis.len() == 4 {
            break;
        }
    }
    basis
}

pub fn o_mod_2_structure() -> Result<DyadicStructure> {
    let r = f8()?;
    let zero = [r.zero(); 4];
    let basis: [Dyadic; 4] = core::array::from_fn(|k| {
        let mut v = zero;
        v[k] = r.one();
        v
    });
    let elements: Vec<Dyadic> = (0..r.size().pow(4))
        .map(|idx| core::array::from_fn(|k| r.element((idx >> (3 * k)) & 7)))
        .collect();
    let nilpotents: Vec<Dyadic> = elements
        .iter()
        .filter(|x| {
            let x2 = dyadic_mul(&r, x, x);
            dyadic_mul(&r, &x2, &x2) == zero
        })
        .copied()
        .collect();
    let j1 = basis_of(&r, &nilpotents);
    let j2: Vec<Dyadic> = j1
        .iter()
        .flat_map(|a| j1.iter().map(|b| dyadic_mul(&r, a, b)))
        .collect();
    let j3: Vec<Dyadic> = j2
        .iter()
        .flat_map(|a| j1.iter().map(|b| dyadic_mul(&r, a, b)))
        .collect();
    let commutative = basis.iter().all(|a| {
        basis
            .iter()
            .all(|b| dyadic_mul(&r, a, b) == dyadic_mul(&r, b, a))
    });
    let e = r.eta();
    let e4 = r.pow(&e, 4);
    let shifted = |k: usize| {
        let mut v = basis[k];
        v[0] = r.sub(&v[0], &e4);
        v
    };
    let presentation_holds = [1, 2].iter().all(|&k| {
        let v = shifted(k);
        dyadic_mul(&r, &v, &v) == zero
    });
    Ok(DyadicStructure {
        size: elements.len() as u64,
        nilpotent_count: nilpotents.len() as u64,
        radical_dims: [j1.len(), span_dim(&r, &j2), span_dim(&r, &j3)],
        commutative,
        frobenius_fixes_eta: r.pow(&e, 8) == e,
        presentation_holds,
    })
}

/// Anticommuting generators commute modulo 2, but Q_Hur/2 is a matrix ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnticommutingObstruction {
    /// Commutator of the images of g2 and g3 in M2(F8).
    pub commutator: Mat2,
    pub hurwitz_quotient_noncommutative: bool,
    pub standard_i_j_commute: bool,
}

impl AnticommutingObstruction {
    pub fn holds(&self) -> bool {
        self.hurwitz_quotient_noncommutative && self.standard_i_j_commute
    }
}

pub fn anticommuting_pair_obstruction() -> Result<AnticommutingObstruction> {
    let s = split_even(1)?;
    let c = &s.components()[0];
    let r = c.ring();
    let (a, b) = (c.image_g2(), c.image_g3());
    let commutator = a.mul(r, &b).sub(r, &b.mul(r, &a));
    let mut i = [r.zero(); 4];
    i[1] = r.one();
    let mut j = [r.zero(); 4];
    j[2] = r.one();
    Ok(AnticommutingObstruction {
        commutator,
        hurwitz_quotient_noncommutative: commutator != Mat2::zero(),
        standard_i_j_commute: dyadic_mul(r, &i, &j) == dyadic_mul(r, &j, &i),
    })
}
